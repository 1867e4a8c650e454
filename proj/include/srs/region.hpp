#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "srs/arrangement.hpp"
#include "srs/core.hpp"
#include "srs/geometry.hpp"

namespace srs {

/// Convex hull of finitely many interior parameters.
struct HullSpec {
  std::size_t dim = 0;
  /// Extreme points (for d = 2 counterclockwise; degenerate hulls allowed).
  std::vector<RationalPoint> vertices;
  /// Closed cell of the hull; populated for d = 2 only.
  ConvexCell cell{2};

  bool full_dimensional() const noexcept { return dim == 2 && vertices.size() >= 3; }
};

/// Validates interiority of every vertex; throws NotInterior otherwise.
HullSpec make_hull(std::vector<RationalPoint> points);
/// "x1,y1;x2,y2;..." or "(x1,y1),(x2,y2),...".
HullSpec parse_hull(std::string_view text);
/// Axis-parallel square [x, x+side] x [y, y+side].
HullSpec square_hull(const Rational& x, const Rational& y, const Rational& side);
std::string format_hull(const HullSpec& h);

enum class Provenance { RegionIteration, VertexUnion, UserSupplied };
const char* to_string(Provenance p);

struct RegionWitnesses {
  std::vector<LatticePoint> points;
  Provenance provenance = Provenance::UserSupplied;
};

/// Sorted images (a_2, ..., a_d, -m) for every floor value m of r.a over the hull.
std::vector<LatticePoint> tau_bar(const HullSpec& hull, const LatticePoint& a);
std::vector<LatticePoint> tau_bar_star(const HullSpec& hull, const LatticePoint& a);

inline const Rational kDefaultBlowup{4};

RegionWitnesses region_witnesses(const HullSpec& hull, const Rational& blowup_factor = kDefaultBlowup,
                                 std::size_t vertex_budget = kDefaultWitnessBudget);
RegionWitnesses vertex_union_witnesses(const HullSpec& hull, std::size_t budget = kDefaultWitnessBudget);

/// Lines a.r = m for a in V \ {0} and every integer m between the extremes of a.r over the hull.
std::vector<CanonicalGenerator> region_generators(const HullSpec& hull, const RegionWitnesses& witnesses);

/// tau-successors of a fixed witness set at a parameter, by index.  A point
/// whose image falls outside the set has successor npos.
class SuccessorGraph {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit SuccessorGraph(const RegionWitnesses& witnesses);

  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  const std::vector<std::size_t>& successors() const noexcept { return succ_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::optional<std::size_t> find(const LatticePoint& a) const;
  std::size_t zero_index() const noexcept { return zero_; }
  /// Indices of the points that are integer multiples of `normal`.
  std::vector<std::size_t> multiples_of(std::span<const std::int64_t> normal) const;

  /// Recomputes every successor at r.
  void recompute(const ParameterVector& r);
  /// Recomputes the listed successors at r; returns the tails whose successor changed.
  std::vector<std::size_t> recompute(const ParameterVector& r, std::span<const std::size_t> tails);

  friend bool operator==(const SuccessorGraph& a, const SuccessorGraph& b) { return a.succ_ == b.succ_; }

 private:
  std::size_t successor_of(const ParameterVector& r, std::size_t i) const;

  std::vector<LatticePoint> points_;
  std::unordered_map<LatticePoint, std::size_t, LatticePointHash> index_;
  std::unordered_map<LatticePoint, std::vector<std::size_t>, LatticePointHash> by_direction_;
  std::vector<std::size_t> succ_;
  std::size_t zero_ = npos;
};

/// Moves the graph from class `from` to the adjacent class `to`, recomputing
/// only the points that are multiples of a separating line's normal.
std::vector<std::size_t> update_edges(SuccessorGraph& graph, const Arrangement2D& arrangement, std::size_t from,
                                      std::size_t to);

/// Untreated neighbor of least dimension, then most treated neighbors, then
/// smallest representative; nullopt at a dead end.
std::optional<std::size_t> select_next_class(const Arrangement2D& arrangement, std::size_t current,
                                             const std::vector<bool>& treated);

struct GraphCycles {
  std::vector<Cycle> nontrivial;  // normalized, sorted
  bool trivial = false;           // the zero fixed point was reached
};

using SuccessorMap = std::unordered_map<LatticePoint, LatticePoint, LatticePointHash>;
GraphCycles graph_cycles(const SuccessorMap& successors, std::span<const LatticePoint> start);
GraphCycles graph_cycles(const SuccessorGraph& graph, std::span<const std::size_t> start);

struct CellRecord {
  ConvexCell cell{2};
  Verdict verdict = Verdict::Finite;
  RationalPoint probe;
  std::optional<Cycle> cycle;
};

struct RegionStats {
  std::size_t generators = 0;
  std::size_t classes = 0;
  std::size_t boundary_classes = 0;
  std::size_t incremental_steps = 0;
  std::size_t full_recomputes = 0;
  std::size_t passes = 0;
};

struct CutoutReport {
  HullSpec hull;
  std::size_t witness_count = 0;
  std::vector<Cycle> cycles;  // normalized, sorted
  std::optional<std::vector<CellRecord>> cells;
  RegionStats stats;
};

/// Finiteness of a hull point according to the report.
bool region_member(const CutoutReport& report, std::span<const Rational> point);

CutoutReport algorithm1(const HullSpec& hull);
CutoutReport algorithm2(const HullSpec& hull, const RegionWitnesses& witnesses);

}  // namespace srs
