#include "srs/region.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <unordered_set>

#include "srs/error.hpp"

namespace srs {
namespace {

std::vector<ParameterVector> vertex_parameters(const HullSpec& hull) {
  std::vector<ParameterVector> out;
  for (const auto& v : hull.vertices) out.emplace_back(v);
  return out;
}

std::pair<std::int64_t, std::int64_t> floor_range(const std::vector<ParameterVector>& rs, const LatticePoint& a) {
  std::int64_t lo = rs.front().floor_dot(a), hi = lo;
  for (std::size_t i = 1; i < rs.size(); ++i) {
    const std::int64_t f = rs[i].floor_dot(a);
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  return {lo, hi};
}

std::vector<LatticePoint> images(const LatticePoint& a, std::int64_t lo, std::int64_t hi) {
  std::vector<LatticePoint> out;
  for (std::int64_t m = hi;; --m) {
    std::vector<std::int64_t> c(a.coords().begin() + 1, a.coords().end());
    if (m == std::numeric_limits<std::int64_t>::min()) throw Error(ErrorKind::Overflow, "region image exceeds 64 bits");
    c.push_back(-m);
    out.emplace_back(std::move(c));
    if (m == lo) break;
  }
  return out;
}

void split_points(std::string_view text, std::vector<std::string>& groups) {
  std::string cur;
  bool paren = text.find('(') != std::string_view::npos;
  if (paren) {
    int depth = 0;
    for (char ch : text) {
      if (ch == '(') {
        if (depth++ == 0) cur.clear();
        continue;
      }
      if (ch == ')') {
        if (--depth == 0) groups.push_back(cur);
        if (depth < 0) throw Error(ErrorKind::Parse, "unbalanced parentheses in hull");
        continue;
      }
      if (depth > 0) cur += ch;
    }
    if (depth != 0) throw Error(ErrorKind::Parse, "unbalanced parentheses in hull");
  } else {
    for (char ch : text) {
      if (ch == ';') {
        groups.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) groups.push_back(cur);
  }
}

}  // namespace

HullSpec make_hull(std::vector<RationalPoint> points) {
  if (points.empty()) throw Error(ErrorKind::DegenerateHull, "hull needs at least one point");
  HullSpec h;
  h.dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != h.dim || h.dim == 0) throw Error(ErrorKind::DimensionMismatch, "hull points differ in dimension");
    if (!is_interior(p)) throw Error(ErrorKind::NotInterior, "hull vertex " + format_point(p) + " is not interior");
  }
  if (h.dim == 2) {
    h.vertices = convex_hull_2d(std::move(points));
    h.cell = hull_cell_2d(h.vertices);
  } else {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    h.vertices = std::move(points);
    h.cell = ConvexCell(h.dim);
  }
  return h;
}

HullSpec parse_hull(std::string_view text) {
  std::vector<std::string> groups;
  split_points(text, groups);
  std::vector<RationalPoint> pts;
  for (const auto& g : groups) {
    if (g.find_first_not_of(" \t") == std::string::npos) continue;
    pts.push_back(parse_rational_list(g));
  }
  return make_hull(std::move(pts));
}

HullSpec square_hull(const Rational& x, const Rational& y, const Rational& side) {
  return make_hull({{x, y}, {x + side, y}, {x + side, y + side}, {x, y + side}});
}

std::string format_hull(const HullSpec& h) {
  std::string s;
  for (const auto& v : h.vertices) {
    if (!s.empty()) s += ",";
    s += format_point(v);
  }
  return s;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::RegionIteration: return "RegionIteration";
    case Provenance::VertexUnion: return "VertexUnion";
    case Provenance::UserSupplied: return "UserSupplied";
  }
  return "?";
}

std::vector<LatticePoint> tau_bar(const HullSpec& hull, const LatticePoint& a) {
  const auto rs = vertex_parameters(hull);
  if (rs.empty()) throw Error(ErrorKind::DegenerateHull, "empty hull");
  auto [lo, hi] = floor_range(rs, a);
  auto out = images(a, lo, hi);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticePoint> tau_bar_star(const HullSpec& hull, const LatticePoint& a) {
  auto out = tau_bar(hull, -a);
  for (auto& p : out) p = -p;
  std::sort(out.begin(), out.end());
  return out;
}

RegionWitnesses region_witnesses(const HullSpec& hull, const Rational& blowup_factor, std::size_t vertex_budget) {
  const auto rs = vertex_parameters(hull);
  if (rs.empty()) throw Error(ErrorKind::DegenerateHull, "empty hull");
  std::size_t largest = 0;
  for (const auto& r : rs) largest = std::max(largest, witness_set(r, vertex_budget).size());
  const Rational limit_q = blowup_factor * Rational(static_cast<unsigned long>(largest));
  const std::size_t limit = std::min<std::size_t>(vertex_budget, floor_of(limit_q).get_ui());

  RegionWitnesses out;
  out.provenance = Provenance::RegionIteration;
  std::unordered_set<LatticePoint, LatticePointHash> seen;
  auto push = [&](LatticePoint p) {
    if (!seen.insert(p).second) return;
    out.points.push_back(std::move(p));
    if (out.points.size() > limit) {
      throw Error(ErrorKind::NonStationary, "region iteration exceeded " + std::to_string(limit) +
                                                " points (largest vertex set " + std::to_string(largest) + ")");
    }
  };
  for (auto& u : unit_witnesses(hull.dim)) push(std::move(u));
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    const LatticePoint a = out.points[i];
    auto [lo, hi] = floor_range(rs, a);
    for (auto& p : images(a, lo, hi)) push(std::move(p));
    const LatticePoint na = -a;
    auto [lo2, hi2] = floor_range(rs, na);
    for (auto& p : images(na, lo2, hi2)) push(-p);
  }
  return out;
}

RegionWitnesses vertex_union_witnesses(const HullSpec& hull, std::size_t budget) {
  RegionWitnesses out;
  out.provenance = Provenance::VertexUnion;
  std::unordered_set<LatticePoint, LatticePointHash> seen;
  for (const auto& r : vertex_parameters(hull)) {
    for (const auto& v : witness_set(r, budget).vertices) {
      if (seen.insert(v).second) out.points.push_back(v);
    }
  }
  return out;
}

std::vector<CanonicalGenerator> region_generators(const HullSpec& hull, const RegionWitnesses& witnesses) {
  const auto rs = vertex_parameters(hull);
  std::set<CanonicalGenerator> gens;
  for (const auto& a : witnesses.points) {
    if (a.is_zero()) continue;
    auto [lo, hi] = floor_range(rs, a);
    // ceil(max r.a) = -floor(min -r.a)
    auto [nlo, nhi] = floor_range(rs, -a);
    (void)nhi;
    const std::int64_t top = -nlo;
    for (std::int64_t m = lo; m <= std::max(hi, top); ++m) gens.insert(canonical_generator(a.coords(), -m));
  }
  return {gens.begin(), gens.end()};
}

SuccessorGraph::SuccessorGraph(const RegionWitnesses& witnesses) : points_(witnesses.points) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    index_.emplace(points_[i], i);
    if (points_[i].is_zero()) {
      zero_ = i;
      continue;
    }
    by_direction_[LatticePoint(canonical_normal(points_[i].coords()))].push_back(i);
  }
  succ_.assign(points_.size(), npos);
}

std::optional<std::size_t> SuccessorGraph::find(const LatticePoint& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> SuccessorGraph::multiples_of(std::span<const std::int64_t> normal) const {
  auto it = by_direction_.find(LatticePoint(canonical_normal(normal)));
  if (it == by_direction_.end()) return {};
  std::size_t lead = 0;
  while (normal[lead] == 0) ++lead;
  std::vector<std::size_t> out;
  for (std::size_t i : it->second) {
    const auto& a = points_[i];
    if (a[lead] % normal[lead] != 0) continue;
    const std::int64_t k = a[lead] / normal[lead];
    bool ok = true;
    for (std::size_t j = 0; j < normal.size() && ok; ++j) ok = a[j] == k * normal[j];
    if (ok) out.push_back(i);
  }
  return out;
}

std::size_t SuccessorGraph::successor_of(const ParameterVector& r, std::size_t i) const {
  auto it = index_.find(tau(r, points_[i]));
  return it == index_.end() ? npos : it->second;
}

void SuccessorGraph::recompute(const ParameterVector& r) {
  for (std::size_t i = 0; i < points_.size(); ++i) succ_[i] = successor_of(r, i);
}

std::vector<std::size_t> SuccessorGraph::recompute(const ParameterVector& r, std::span<const std::size_t> tails) {
  std::vector<std::size_t> changed;
  for (std::size_t i : tails) {
    const std::size_t s = successor_of(r, i);
    if (s != succ_[i]) {
      succ_[i] = s;
      changed.push_back(i);
    }
  }
  return changed;
}

std::vector<std::size_t> update_edges(SuccessorGraph& graph, const Arrangement2D& arrangement, std::size_t from,
                                      std::size_t to) {
  const auto lines = arrangement.separating_lines(from, to);
  std::vector<std::size_t> tails;
  for (std::size_t l : lines) {
    auto m = graph.multiples_of(arrangement.lines()[l].normal);
    tails.insert(tails.end(), m.begin(), m.end());
  }
  std::sort(tails.begin(), tails.end());
  tails.erase(std::unique(tails.begin(), tails.end()), tails.end());
  return graph.recompute(ParameterVector(arrangement[to].representative), tails);
}

std::optional<std::size_t> select_next_class(const Arrangement2D& arrangement, std::size_t current,
                                             const std::vector<bool>& treated) {
  std::optional<std::size_t> best;
  std::size_t best_count = 0;
  for (std::size_t n : arrangement[current].neighbors) {
    if (treated[n]) continue;
    std::size_t count = 0;
    for (std::size_t m : arrangement[n].neighbors) count += treated[m] ? 1 : 0;
    if (!best) {
      best = n;
      best_count = count;
      continue;
    }
    const auto& b = arrangement[*best];
    const auto& c = arrangement[n];
    bool better = false;
    if (c.dimension != b.dimension) {
      better = c.dimension < b.dimension;
    } else if (count != best_count) {
      better = count > best_count;
    } else {
      better = c.representative < b.representative;
    }
    if (better) {
      best = n;
      best_count = count;
    }
  }
  return best;
}

GraphCycles graph_cycles(const SuccessorGraph& graph, std::span<const std::size_t> start) {
  GraphCycles out;
  const auto& succ = graph.successors();
  std::vector<std::size_t> walk_of(graph.size(), SuccessorGraph::npos);
  std::size_t walk = 0;
  for (std::size_t s : start) {
    std::size_t x = s;
    while (x != SuccessorGraph::npos && walk_of[x] == SuccessorGraph::npos) {
      if (x == graph.zero_index()) {
        out.trivial = true;
        break;
      }
      walk_of[x] = walk;
      x = succ[x];
    }
    if (x != SuccessorGraph::npos && x != graph.zero_index() && walk_of[x] == walk) {
      Cycle c;
      std::size_t y = x;
      do {
        c.points.push_back(graph.points()[y]);
        y = succ[y];
      } while (y != x);
      out.nontrivial.push_back(c.normalized());
    }
    ++walk;
  }
  std::sort(out.nontrivial.begin(), out.nontrivial.end());
  out.nontrivial.erase(std::unique(out.nontrivial.begin(), out.nontrivial.end()), out.nontrivial.end());
  return out;
}

GraphCycles graph_cycles(const SuccessorMap& successors, std::span<const LatticePoint> start) {
  GraphCycles out;
  std::size_t walk = 0;
  std::unordered_map<LatticePoint, std::size_t, LatticePointHash> walk_of;
  for (const auto& s : start) {
    LatticePoint x = s;
    bool have = true;
    while (have && !walk_of.count(x)) {
      if (x.is_zero()) {
        out.trivial = true;
        have = false;
        break;
      }
      walk_of[x] = walk;
      auto it = successors.find(x);
      if (it == successors.end()) {
        have = false;
        break;
      }
      x = it->second;
    }
    if (have && !x.is_zero() && walk_of[x] == walk) {
      Cycle c;
      LatticePoint y = x;
      do {
        c.points.push_back(y);
        y = successors.at(y);
      } while (y != x);
      out.nontrivial.push_back(c.normalized());
    }
    ++walk;
  }
  std::sort(out.nontrivial.begin(), out.nontrivial.end());
  out.nontrivial.erase(std::unique(out.nontrivial.begin(), out.nontrivial.end()), out.nontrivial.end());
  return out;
}

bool region_member(const CutoutReport& report, std::span<const Rational> point) {
  if (report.cells) {
    for (const auto& c : *report.cells) {
      if (cell_contains(c.cell, point)) return c.verdict == Verdict::Finite;
    }
    throw Error(ErrorKind::Empty, "point " + format_point(point) + " lies in no cell");
  }
  for (const auto& pi : report.cycles) {
    if (cell_contains(cutout_polyhedron(pi), point)) return false;
  }
  return true;
}

namespace {

// Cycles currently present in the successor graph, maintained across updates.
class CycleTracker {
 public:
  explicit CycleTracker(const SuccessorGraph& g) : g_(g), owner_(g.size(), kNone), walk_of_(g.size(), kNone) {}

  void reset() {
    std::fill(owner_.begin(), owner_.end(), kNone);
    cycles_.clear();
    std::vector<std::size_t> all(g_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    search(all);
  }

  void update(const std::vector<std::size_t>& changed) {
    for (std::size_t t : changed) {
      const std::size_t c = owner_[t];
      if (c == kNone || cycles_[c].empty()) continue;
      for (std::size_t p : cycles_[c]) owner_[p] = kNone;
      cycles_[c].clear();
    }
    search(changed);
  }

  bool any() const {
    return std::any_of(cycles_.begin(), cycles_.end(), [](const auto& c) { return !c.empty(); });
  }

  std::vector<Cycle> current() const {
    std::vector<Cycle> out;
    for (const auto& c : cycles_) {
      if (c.empty()) continue;
      Cycle cy;
      for (std::size_t p : c) cy.points.push_back(g_.points()[p]);
      out.push_back(cy.normalized());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void search(const std::vector<std::size_t>& starts) {
    const auto& succ = g_.successors();
    const std::size_t first_walk = next_walk_;
    for (std::size_t s : starts) {
      const std::size_t walk = next_walk_++;
      std::size_t x = s;
      while (x != SuccessorGraph::npos && x != g_.zero_index() && owner_[x] == kNone) {
        if (walk_of_[x] != kNone && walk_of_[x] >= first_walk) break;
        walk_of_[x] = walk;
        x = succ[x];
      }
      if (x == SuccessorGraph::npos || x == g_.zero_index() || owner_[x] != kNone || walk_of_[x] != walk) continue;
      std::vector<std::size_t> members;
      std::size_t y = x;
      do {
        members.push_back(y);
        owner_[y] = cycles_.size();
        y = succ[y];
      } while (y != x);
      cycles_.push_back(std::move(members));
    }
  }

  const SuccessorGraph& g_;
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> walk_of_;
  std::size_t next_walk_ = 0;
  std::vector<std::vector<std::size_t>> cycles_;
};

bool line_meets_hull(const LinearConstraint& c, const std::vector<RationalPoint>& hull_vertices) {
  int pos = 0, neg = 0;
  for (const auto& v : hull_vertices) {
    const int s = sgn(c.evaluate(v));
    pos += s > 0;
    neg += s < 0;
  }
  const int k = static_cast<int>(hull_vertices.size());
  return pos != k && neg != k;
}

}  // namespace

CutoutReport algorithm2(const HullSpec& hull, const RegionWitnesses& witnesses) {
  if (hull.dim != 2) throw Error(ErrorKind::DimensionUnsupported, "algorithm2 needs d = 2");
  CutoutReport report;
  report.hull = hull;
  report.witness_count = witnesses.points.size();
  const auto gens = region_generators(hull, witnesses);
  const Arrangement2D A = build_arrangement_2d(gens, hull.cell);
  report.stats.generators = A.lines().size();
  report.stats.classes = A.size();

  SuccessorGraph graph(witnesses);
  CycleTracker tracker(graph);
  std::vector<bool> treated(A.size(), false);
  std::vector<ConvexCell> cutouts;
  auto covered = [&](const RationalPoint& p) {
    return std::any_of(cutouts.begin(), cutouts.end(), [&](const ConvexCell& c) { return cell_contains(c, p); });
  };
  auto treat = [&](std::size_t cls) {
    treated[cls] = true;
    if (!tracker.any()) return;
    const auto& rep = A[cls].representative;
    if (covered(rep)) return;
    Cycle pi = tracker.current().front();
    cutouts.push_back(cutout_polyhedron(pi));
    report.cycles.push_back(std::move(pi));
  };
  auto full = [&](std::size_t cls) {
    graph.recompute(ParameterVector(A[cls].representative));
    tracker.reset();
    ++report.stats.full_recomputes;
    treat(cls);
  };

  std::optional<std::size_t> current;
  for (const auto& c : A.classes()) {
    if (!c.touches_hull_boundary) continue;
    ++report.stats.boundary_classes;
    full(c.id);
    current = c.id;
  }
  std::size_t scan = 0;
  while (true) {
    std::optional<std::size_t> next;
    if (current) next = select_next_class(A, *current, treated);
    if (next) {
      tracker.update(update_edges(graph, A, *current, *next));
      ++report.stats.incremental_steps;
      treat(*next);
      current = next;
      continue;
    }
    while (scan < A.size() && treated[scan]) ++scan;
    if (scan == A.size()) break;
    // Dead end: restart at an untreated class next to the treated region if possible.
    std::size_t pick = scan;
    for (std::size_t i = scan; i < A.size(); ++i) {
      if (treated[i]) continue;
      const auto& nb = A[i].neighbors;
      if (std::any_of(nb.begin(), nb.end(), [&](std::size_t n) { return treated[n]; })) {
        pick = i;
        break;
      }
    }
    full(pick);
    current = pick;
  }
  for (auto& c : report.cycles) c = c.normalized();
  std::sort(report.cycles.begin(), report.cycles.end());
  report.cycles.erase(std::unique(report.cycles.begin(), report.cycles.end()), report.cycles.end());
  return report;
}

CutoutReport algorithm1(const HullSpec& hull) {
  if (hull.dim != 2) throw Error(ErrorKind::DimensionUnsupported, "algorithm1 is implemented for d = 2");
  CutoutReport report;
  report.hull = hull;
  report.cells.emplace();
  auto& cells = *report.cells;
  std::set<CanonicalGenerator> lines;
  std::set<LatticePoint> witness_union;
  while (true) {
    ++report.stats.passes;
    const Arrangement2D A = build_arrangement_2d(std::vector<CanonicalGenerator>(lines.begin(), lines.end()), hull.cell);
    report.stats.classes = A.size();
    report.stats.generators = A.lines().size();
    bool added = false;
    for (const auto& c : A.classes()) {
      const auto& rep = c.representative;
      if (std::any_of(cells.begin(), cells.end(), [&](const CellRecord& r) { return cell_contains(r.cell, rep); })) {
        continue;
      }
      const ParameterVector r(rep);
      const WitnessGraph g = witness_set(r);
      witness_union.insert(g.vertices.begin(), g.vertices.end());
      const ConvexCell full_cell = characteristic_cell(r, g);
      CellRecord rec;
      rec.cell = hull.cell;
      std::vector<LinearConstraint> kept;
      for (const auto& k : full_cell.constraints()) {
        if (!line_meets_hull(k, hull.vertices)) continue;
        kept.push_back(k);
        std::vector<std::int64_t> normal;
        for (const auto& q : k.normal()) normal.push_back(to_int64(q.get_num()));
        lines.insert(canonical_generator(normal, to_int64(k.offset().get_num())));
      }
      rec.cell.add_all(kept);
      rec.probe = rep;
      rec.cycle = first_nontrivial_cycle(g);
      rec.verdict = rec.cycle ? Verdict::NonFinite : Verdict::Finite;
      if (rec.cycle) {
        *rec.cycle = rec.cycle->normalized();
        report.cycles.push_back(*rec.cycle);
      }
      cells.push_back(std::move(rec));
      added = true;
    }
    if (!added) break;
  }
  report.witness_count = witness_union.size();
  std::sort(report.cycles.begin(), report.cycles.end());
  report.cycles.erase(std::unique(report.cycles.begin(), report.cycles.end()), report.cycles.end());
  return report;
}

}  // namespace srs
