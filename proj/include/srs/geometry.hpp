#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srs/lattice.hpp"
#include "srs/rational.hpp"

namespace srs {

enum class Relation { Eq, Ge, Gt };

/// normal . x + offset  {=, >=, >}  0, stored scaled to coprime integers.
/// Inequalities are only ever scaled by positive factors; equalities are
/// additionally sign-normalized so the first nonzero normal entry is positive.
class LinearConstraint {
 public:
  LinearConstraint(std::vector<Rational> normal, Rational offset, Relation relation);

  const std::vector<Rational>& normal() const noexcept { return normal_; }
  const Rational& offset() const noexcept { return offset_; }
  Relation relation() const noexcept { return relation_; }
  std::size_t dim() const noexcept { return normal_.size(); }
  bool is_strict() const noexcept { return relation_ == Relation::Gt; }

  /// A zero normal makes the constraint a constant; these report it.
  bool is_constant() const noexcept { return constant_; }
  bool constant_value() const noexcept { return constant_value_; }

  Rational evaluate(std::span<const Rational> x) const;
  bool holds(std::span<const Rational> x) const;
  /// The closed version (Gt relaxed to Ge).
  bool holds_closure(std::span<const Rational> x) const;

  LinearConstraint negated_strict() const;  // a.x+b >= 0  ->  -a.x-b > 0, and vice versa

  friend std::strong_ordering operator<=>(const LinearConstraint& a, const LinearConstraint& b);
  friend bool operator==(const LinearConstraint& a, const LinearConstraint& b);

 private:
  std::vector<Rational> normal_;
  Rational offset_;
  Relation relation_;
  bool constant_ = false;
  bool constant_value_ = true;
};

std::string format_constraint(const LinearConstraint& c);

/// Conjunction of linear constraints in R^d; the empty conjunction is R^d.
class ConvexCell {
 public:
  explicit ConvexCell(std::size_t dim) : dim_(dim) {}
  ConvexCell(std::size_t dim, std::vector<LinearConstraint> constraints);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LinearConstraint>& constraints() const noexcept { return constraints_; }
  /// True when some constraint normalized to a constant falsehood.
  bool trivially_false() const noexcept { return trivially_false_; }

  void add(const LinearConstraint& c);
  void add_all(std::span<const LinearConstraint> cs);
  ConvexCell intersect(const ConvexCell& other) const;

  friend bool operator==(const ConvexCell&, const ConvexCell&) = default;

 private:
  void canonicalize();

  std::size_t dim_;
  std::vector<LinearConstraint> constraints_;
  bool trivially_false_ = false;
};

/// Integer hyperplane normal . x + offset = 0 in canonical form.
struct CanonicalGenerator {
  std::vector<std::int64_t> normal;
  std::int64_t offset = 0;

  friend auto operator<=>(const CanonicalGenerator&, const CanonicalGenerator&) = default;
  friend bool operator==(const CanonicalGenerator&, const CanonicalGenerator&) = default;
};

CanonicalGenerator canonical_generator(std::span<const std::int64_t> normal, std::int64_t offset);
std::string format_generator(const CanonicalGenerator& g);

/// Primitive direction of a nonzero integer vector with positive first nonzero entry.
std::vector<std::int64_t> canonical_normal(std::span<const std::int64_t> normal);

/// The set of parameters for which `pi` is a cycle.
ConvexCell cutout_polyhedron(const Cycle& pi);

bool cell_contains(const ConvexCell& cell, std::span<const Rational> point);
bool cell_is_empty(const ConvexCell& cell);

/// A feasible point of the cell (strictly satisfying strict constraints), if any.
std::optional<RationalPoint> cell_interior_point(const ConvexCell& cell);

enum class PolygonShape { Polygon, Segment, Point };

/// Planar convex polygon with per-vertex and per-edge containment flags.
/// Edge i joins vertex i and vertex i+1 (cyclically).  A Segment has two
/// vertices and one edge; a Point has one vertex and no edges.
struct FlaggedPolygon {
  std::vector<RationalPoint> vertices;
  std::vector<bool> vertex_contained;
  std::vector<bool> edge_contained;
  PolygonShape shape = PolygonShape::Polygon;
  /// Whether the relative interior belongs to the set (always true for nonempty cells).
  bool interior_contained = true;

  std::size_t edge_count() const noexcept;
  friend bool operator==(const FlaggedPolygon&, const FlaggedPolygon&) = default;
};

FlaggedPolygon cell_vertices_2d(const ConvexCell& cell);

/// Counterclockwise convex hull of planar rational points; collinear points dropped.
std::vector<RationalPoint> convex_hull_2d(std::vector<RationalPoint> points);

/// Closed cell of a convex hull of rational points (d = 2 only; also handles segments/points).
ConvexCell hull_cell_2d(std::span<const RationalPoint> points);

}  // namespace srs
