#include "srs/render.hpp"

#include <sstream>

#include "srs/error.hpp"

namespace srs {
namespace {

const char* fill_color(FillKind k) {
  switch (k) {
    case FillKind::InRegion: return "#000000";
    case FillKind::Cutout: return "#ffffff";
    case FillKind::Unsettled: return "#808080";
  }
  return "#808080";
}

// Fixed four-digit decimal of an exact rational, rounded half up.
std::string fixed4(const Rational& q) {
  BigInt scaled = floor_of(q * 10000 + Rational(1, 2));
  const bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() < 5) digits.insert(0, 5 - digits.size(), '0');
  std::string out = (neg ? "-" : "") + digits.substr(0, digits.size() - 4) + "." + digits.substr(digits.size() - 4);
  return out == "-0.0000" ? "0.0000" : out;
}

ConvexCell window_cell(const SvgScene& s) {
  ConvexCell box(2);
  box.add(LinearConstraint({Rational(1), Rational(0)}, -s.lo[0], Relation::Ge));
  box.add(LinearConstraint({Rational(-1), Rational(0)}, s.hi[0], Relation::Ge));
  box.add(LinearConstraint({Rational(0), Rational(1)}, -s.lo[1], Relation::Ge));
  box.add(LinearConstraint({Rational(0), Rational(-1)}, s.hi[1], Relation::Ge));
  return box;
}

// Closure of the cell's strict constraints, so clipped fills keep their boundary.
ConvexCell closure(const ConvexCell& c) {
  std::vector<LinearConstraint> cs;
  for (const auto& l : c.constraints())
    cs.emplace_back(l.normal(), l.offset(), l.relation() == Relation::Gt ? Relation::Ge : l.relation());
  return ConvexCell(c.dim(), std::move(cs));
}

bool on_window_border(const SvgScene& s, const RationalPoint& p, const RationalPoint& q) {
  for (int k = 0; k < 2; ++k) {
    if (p[k] == q[k] && (p[k] == s.lo[k] || p[k] == s.hi[k])) return true;
  }
  return false;
}

}  // namespace

std::string render_svg(const SvgScene& s) {
  if (s.lo.size() != 2 || s.hi.size() != 2 || s.lo[0] >= s.hi[0] || s.lo[1] >= s.hi[1] || s.pixel_width <= 0)
    throw Error(ErrorKind::EmptyWindow, "render window has no area");
  const Rational w(s.pixel_width);
  const Rational scale = w / (s.hi[0] - s.lo[0]);
  const Rational h_exact = (s.hi[1] - s.lo[1]) * scale;
  const auto px = [&](const RationalPoint& p) {
    return fixed4((p[0] - s.lo[0]) * scale) + "," + fixed4((s.hi[1] - p[1]) * scale);
  };
  const auto coord = [&](const RationalPoint& p, const char* xa, const char* ya) {
    return std::string(xa) + "=\"" + fixed4((p[0] - s.lo[0]) * scale) + "\" " + ya + "=\"" + fixed4((s.hi[1] - p[1]) * scale) + "\"";
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed4(w) << "\" height=\"" << fixed4(h_exact) << "\" viewBox=\"0 0 "
      << fixed4(w) << " " << fixed4(h_exact) << "\">\n";
  out << "<defs><clipPath id=\"window\"><rect x=\"0\" y=\"0\" width=\"" << fixed4(w) << "\" height=\"" << fixed4(h_exact)
      << "\"/></clipPath></defs>\n";
  out << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << fixed4(w) << "\" height=\"" << fixed4(h_exact) << "\" fill=\""
      << fill_color(s.background) << "\"/>\n";
  out << "<g clip-path=\"url(#window)\">\n";
  for (const auto& f : s.fills) {
    if (f.polygon.size() < 3) continue;
    out << "<polygon class=\"fill\" points=\"";
    for (std::size_t i = 0; i < f.polygon.size(); ++i) out << (i ? " " : "") << px(f.polygon[i]);
    out << "\" fill=\"" << fill_color(f.kind) << "\" stroke=\"none\"/>\n";
  }
  for (const auto& o : s.outlines) {
    const auto& p = o.polygon;
    for (std::size_t e = 0; e < p.edge_count(); ++e) {
      if (e < o.edge_visible.size() && !o.edge_visible[e]) continue;
      const auto& a = p.vertices[e];
      const auto& b = p.vertices[(e + 1) % p.vertices.size()];
      out << "<line class=\"" << (p.edge_contained[e] ? "solid" : "dotted") << "\" " << coord(a, "x1", "y1") << " "
          << coord(b, "x2", "y2") << " stroke=\"#c00000\" stroke-width=\"1.5\"";
      if (!p.edge_contained[e]) out << " stroke-dasharray=\"2,3\"";
      out << "/>\n";
    }
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      if (p.vertex_contained[i]) out << "<circle class=\"vertex\" " << coord(p.vertices[i], "cx", "cy") << " r=\"3\" fill=\"#c00000\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

void add_cutout(SvgScene& scene, const ConvexCell& cell, const ConvexCell* clip) {
  if (cell.dim() != 2) throw Error(ErrorKind::DimensionUnsupported, "render requires d = 2");
  if (cell_is_empty(cell)) return;
  ConvexCell region = closure(cell).intersect(window_cell(scene));
  if (clip) region = region.intersect(closure(*clip));
  if (!cell_is_empty(region)) {
    const auto fill = cell_vertices_2d(region);
    if (fill.shape == PolygonShape::Polygon) scene.fills.push_back({fill.vertices, FillKind::Cutout});
  }
  SvgOutline outline;
  try {
    outline.polygon = cell_vertices_2d(cell);
    outline.edge_visible.assign(outline.polygon.edge_count(), true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Unbounded) throw;
    const ConvexCell clipped = cell.intersect(window_cell(scene));
    if (cell_is_empty(clipped)) return;
    outline.polygon = cell_vertices_2d(clipped);
    const auto& v = outline.polygon.vertices;
    for (std::size_t i = 0; i < outline.polygon.edge_count(); ++i)
      outline.edge_visible.push_back(!on_window_border(scene, v[i], v[(i + 1) % v.size()]));
  }
  scene.outlines.push_back(std::move(outline));
}

SvgScene scene_from_cutouts(const RationalPoint& lo, const RationalPoint& hi, const CutoutFile& file) {
  SvgScene scene;
  scene.lo = lo;
  scene.hi = hi;
  if (lo.size() != 2 || hi.size() != 2 || lo[0] >= hi[0] || lo[1] >= hi[1])
    throw Error(ErrorKind::EmptyWindow, "render window has no area");
  std::optional<ConvexCell> hull_cell;
  if (!file.hull.empty()) {
    hull_cell = hull_cell_2d(file.hull);
    const auto clipped = hull_cell->intersect(window_cell(scene));
    if (!cell_is_empty(clipped)) {
      const auto poly = cell_vertices_2d(clipped);
      if (poly.shape == PolygonShape::Polygon) scene.fills.push_back({poly.vertices, FillKind::InRegion});
    }
  }
  for (const auto& rec : file.cells) {
    if (rec.verdict == Verdict::NonFinite) continue;
    const auto clipped = closure(rec.cell).intersect(window_cell(scene));
    if (cell_is_empty(clipped)) continue;
    const auto poly = cell_vertices_2d(clipped);
    if (poly.shape == PolygonShape::Polygon) scene.fills.push_back({poly.vertices, FillKind::InRegion});
  }
  for (const auto& pi : file.cycles) add_cutout(scene, cutout_polyhedron(pi), hull_cell ? &*hull_cell : nullptr);
  return scene;
}

}  // namespace srs
