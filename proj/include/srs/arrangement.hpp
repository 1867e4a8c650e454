#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "srs/geometry.hpp"
#include "srs/rational.hpp"

namespace srs {

/// One class of the arrangement clipped to the hull: the set of hull points
/// sharing a sign vector over the generator lines.
struct ArrangementClass {
  std::size_t id = 0;
  int dimension = 2;
  RationalPoint representative;
  /// Lines containing the whole class (empty for 2-dimensional classes).
  std::vector<std::size_t> zero_lines;
  /// Arrangement nodes in the closure of the class, sorted.
  std::vector<std::size_t> closure_nodes;
  std::vector<std::size_t> neighbors;
  bool touches_hull_boundary = false;
};

class Arrangement2D {
 public:
  const std::vector<CanonicalGenerator>& lines() const noexcept { return lines_; }
  const std::vector<ArrangementClass>& classes() const noexcept { return classes_; }
  const ArrangementClass& operator[](std::size_t i) const { return classes_.at(i); }
  std::size_t size() const noexcept { return classes_.size(); }

  const std::vector<RationalPoint>& nodes() const noexcept { return nodes_; }
  /// Lines through a node, sorted.
  const std::vector<std::size_t>& node_lines(std::size_t node) const { return node_lines_.at(node); }
  bool node_on_hull_boundary(std::size_t node) const { return node_on_boundary_.at(node); }
  const ConvexCell& hull() const noexcept { return hull_; }
  const std::vector<RationalPoint>& hull_vertices() const noexcept { return hull_vertices_; }

  bool adjacent(std::size_t a, std::size_t b) const;
  /// sgn(n.x + b) of the class over every line.
  std::vector<std::int8_t> signature(std::size_t cls) const;
  /// Exact cell of the class (equalities, strict signs of nearby lines, hull).
  ConvexCell class_cell(std::size_t cls) const;
  /// Lines through every common closure node of two adjacent classes; these
  /// are the only lines on which the two signatures can differ.
  std::vector<std::size_t> separating_lines(std::size_t a, std::size_t b) const;
  /// Class containing a hull point (linear scan); npos outside the hull.
  std::size_t locate(std::span<const Rational> point) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  friend Arrangement2D build_arrangement_2d(std::span<const CanonicalGenerator>, const ConvexCell&);

  std::vector<CanonicalGenerator> lines_;
  std::vector<ArrangementClass> classes_;
  std::vector<RationalPoint> nodes_;
  std::vector<std::vector<std::size_t>> node_lines_;
  std::vector<bool> node_on_boundary_;
  ConvexCell hull_{2};
  std::vector<RationalPoint> hull_vertices_;
};

/// Value n.x + b of a generator at a rational point.
Rational evaluate_generator(const CanonicalGenerator& g, std::span<const Rational> x);

Arrangement2D build_arrangement_2d(std::span<const CanonicalGenerator> generators, const ConvexCell& hull);

inline const RationalPoint& class_representative(const ArrangementClass& c) { return c.representative; }

}  // namespace srs
