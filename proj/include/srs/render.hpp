#pragma once

#include <string>
#include <vector>

#include "srs/geometry.hpp"
#include "srs/io.hpp"

namespace srs {

enum class FillKind { InRegion, Cutout, Unsettled };

struct SvgFill {
  std::vector<RationalPoint> polygon;  // counterclockwise
  FillKind kind = FillKind::Unsettled;
};

struct SvgOutline {
  FlaggedPolygon polygon;
  /// Edges created by clipping an unbounded cell to the window are not drawn.
  std::vector<bool> edge_visible;
};

struct SvgScene {
  RationalPoint lo{Rational(0), Rational(0)};
  RationalPoint hi{Rational(1), Rational(1)};
  long pixel_width = 800;
  FillKind background = FillKind::Unsettled;
  std::vector<SvgFill> fills;
  std::vector<SvgOutline> outlines;
};

/// Standalone SVG; throws EmptyWindow when the window has no area.
std::string render_svg(const SvgScene& scene);

/// White fill (clipped to `clip` and the window) and outline of one cutout cell.
void add_cutout(SvgScene& scene, const ConvexCell& cell, const ConvexCell* clip = nullptr);

/// Hull in black, cutouts of the listed cycles in white, everything else gray.
SvgScene scene_from_cutouts(const RationalPoint& lo, const RationalPoint& hi, const CutoutFile& file);

}  // namespace srs
