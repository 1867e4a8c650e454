#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "srs/arrangement.hpp"
#include "srs/error.hpp"
#include "srs/region.hpp"
#include "srs/sampling.hpp"
#include "test_support.hpp"

using namespace srs;
using namespace srs::test;

namespace {

HullSpec centered_square(const char* x, const char* y, const char* side) {
  const Rational s = Q(side);
  return square_hull(Q(x) - s / 2, Q(y) - s / 2, s);
}

std::vector<LatticePoint> sorted(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool is_multiple(const LatticePoint& a, const std::vector<std::int64_t>& n) {
  // a = k * n for an integer k (n primitive)
  return a[0] * n[1] == a[1] * n[0];
}

}  // namespace

TEST_CASE("hull parsing and validation") {
  const auto h = parse_hull("(41/50,37/100),(93/100,37/100),(93/100,11/25),(41/50,11/25)");
  CHECK(h.full_dimensional());
  CHECK(h.vertices.size() == 4);
  CHECK(parse_hull("41/50,37/100;93/100,37/100;93/100,11/25;41/50,11/25").vertices == h.vertices);
  CHECK_THROWS_AS(parse_hull("1/2,1/2;1,0"), Error);
  CHECK_THROWS_AS(parse_hull("1/2;1"), Error);
  const auto pt = make_hull({P("-1/3", "1/3")});
  CHECK_FALSE(pt.full_dimensional());
}

TEST_CASE("tau_bar examples") {
  const auto seg = make_hull({P("0", "0"), P("1/2", "0")});
  CHECK(tau_bar(seg, {1, 0}) == std::vector<LatticePoint>{{0, 0}});
  const auto wide = make_hull({P("-1/2", "0"), P("1/2", "0")});
  CHECK(tau_bar(wide, {1, 0}) == std::vector<LatticePoint>{{0, 0}, {0, 1}});
  CHECK(tau_bar(wide, {0, 0}) == std::vector<LatticePoint>{{0, 0}});
  CHECK(tau_bar_star(wide, {1, 0}) == std::vector<LatticePoint>{{0, -1}, {0, 0}});
}

TEST_CASE("region witnesses of single-point hulls") {
  for (const char* r : {"0,0", "-1/3,1/3"}) {
    const auto p = ParameterVector::parse(r);
    const auto w = region_witnesses(make_hull({p.entries()}));
    CHECK(w.provenance == Provenance::RegionIteration);
    CHECK(sorted(w.points) == sorted(witness_set(p).vertices));
  }
}

TEST_CASE("region witnesses of the quadrangle contain each vertex set") {
  const auto h = parse_hull("41/50,37/100;93/100,37/100;93/100,11/25;41/50,11/25");
  const auto w = region_witnesses(h);
  CHECK(w.points.size() == 567);
  const std::set<LatticePoint> all(w.points.begin(), w.points.end());
  for (const auto& v : h.vertices) {
    for (const auto& a : witness_set(ParameterVector(v)).vertices) CHECK(all.count(a) == 1);
  }
  CHECK_THROWS_AS(region_witnesses(h, Rational(1, 10)), Error);
  const auto u = vertex_union_witnesses(h);
  CHECK(u.provenance == Provenance::VertexUnion);
}

TEST_CASE("region iteration on random small hulls") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coord(-110, 110);
  std::uniform_int_distribution<int> side_pick(0, 2);
  int done = 0;
  while (done < 20) {
    const Rational side = Rational(1) / (64 << side_pick(rng));
    const Rational x = Rational(coord(rng)) / 128, y = Rational(coord(rng) * 2) / 128;
    bool inside = true;
    for (int i = 0; i < 2 && inside; ++i)
      for (int j = 0; j < 2 && inside; ++j) inside = is_interior(std::vector<Rational>{x + i * side, y + j * side});
    if (!inside) continue;
    ++done;
    const auto hull = square_hull(x, y, side);
    CAPTURE(format_hull(hull));
    RegionWitnesses w;
    REQUIRE_NOTHROW(w = region_witnesses(hull));
    const std::set<LatticePoint> all(w.points.begin(), w.points.end());
    for (const auto& v : hull.vertices) {
      for (const auto& a : witness_set(ParameterVector(v)).vertices) CHECK(all.count(a) == 1);
    }
    const auto samples = sample_hull_points(hull, 30, done);
    std::uniform_int_distribution<std::size_t> which(0, w.points.size() - 1);
    for (int k = 0; k < 10; ++k) {
      const auto& a = w.points[which(rng)];
      const auto img = tau_bar(hull, a);
      const auto img_star = tau_bar_star(hull, a);
      for (const auto& p : samples) {
        const ParameterVector r(p);
        CHECK(std::binary_search(img.begin(), img.end(), tau(r, a)));
        CHECK(std::binary_search(img_star.begin(), img_star.end(), tau_star(r, a)));
        CHECK(all.count(tau(r, a)) == 1);
      }
      std::set<LatticePoint> at_vertices;
      Rational lo, hi;
      for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
        const ParameterVector r(hull.vertices[i]);
        at_vertices.insert(tau(r, a));
        const Rational v = r.dot(a);
        if (i == 0 || v < lo) lo = v;
        if (i == 0 || hi < v) hi = v;
      }
      for (const auto& b : at_vertices) CHECK(std::binary_search(img.begin(), img.end(), b));
      CHECK(img.size() == static_cast<std::size_t>(to_int64(floor_of(hi) - floor_of(lo)) + 1));
    }
  }
}

TEST_CASE("graph cycles") {
  SuccessorMap m;
  m[{1, 0}] = {0, 1};
  m[{0, 1}] = {1, 0};
  m[{1, 1}] = {1, 0};
  m[{0, 0}] = {0, 0};
  m[{2, 0}] = {0, 0};
  const std::vector<LatticePoint> start = {{1, 1}, {2, 0}};
  const auto c = graph_cycles(m, start);
  REQUIRE(c.nontrivial.size() == 1);
  CHECK(c.nontrivial[0] == cycle_of({{0, 1}, {1, 0}}));
  CHECK(c.trivial);
  const std::vector<LatticePoint> only_zero = {{2, 0}};
  const auto z = graph_cycles(m, only_zero);
  CHECK(z.nontrivial.empty());
  CHECK(z.trivial);
  const auto e = graph_cycles(m, std::vector<LatticePoint>{});
  CHECK(e.nontrivial.empty());
  CHECK_FALSE(e.trivial);
}

TEST_CASE("select_next_class prefers low dimension then treated neighbors") {
  const std::vector<CanonicalGenerator> g = {{{1, 0}, 0}, {{0, 1}, 0}};
  const auto hull = hull_cell_2d(std::vector<RationalPoint>{P("-1", "-1"), P("1", "-1"), P("1", "1"), P("-1", "1")});
  const auto arr = build_arrangement_2d(g, hull);
  const auto quadrant = arr.locate(P("1/2", "1/2"));
  std::vector<bool> treated(arr.size(), false);
  treated[quadrant] = true;
  const auto origin = arr.locate(P("0", "0"));
  CHECK(select_next_class(arr, quadrant, treated) == origin);
  treated[origin] = true;
  const auto right = arr.locate(P("1/2", "0"));
  const auto next = select_next_class(arr, quadrant, treated);
  REQUIRE(next);
  CHECK(arr[*next].dimension == 1);
  std::vector<bool> all(arr.size(), true);
  CHECK_FALSE(select_next_class(arr, quadrant, all));
  std::vector<bool> one(arr.size(), true);
  one[right] = false;
  CHECK(select_next_class(arr, quadrant, one) == right);
}

TEST_CASE("select_next_class ranks by dimension, treated neighbors, representative") {
  const std::vector<CanonicalGenerator> g = {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, -1}, {{2, -1}, 1}, {{1, 3}, 2}};
  const auto hull = hull_cell_2d(std::vector<RationalPoint>{P("-1", "-1"), P("1", "-1"), P("1", "1"), P("-1", "1")});
  const auto arr = build_arrangement_2d(g, hull);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<bool> treated(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) treated[i] = rng() % 3 == 0;
    const std::size_t cur = rng() % arr.size();
    std::optional<std::tuple<int, long, RationalPoint>> best_key;
    std::optional<std::size_t> best;
    for (std::size_t n : arr[cur].neighbors) {
      if (treated[n]) continue;
      long count = 0;
      for (std::size_t m : arr[n].neighbors) count += treated[m];
      std::tuple<int, long, RationalPoint> key{arr[n].dimension, -count, arr[n].representative};
      if (!best_key || key < *best_key) {
        best_key = key;
        best = n;
      }
    }
    CHECK(select_next_class(arr, cur, treated) == best);
  }
}

TEST_CASE("update_edges matches full recomputation over random adjacent steps") {
  const auto hull = parse_hull("41/50,37/100;93/100,37/100;93/100,11/25;41/50,11/25");
  const auto w = region_witnesses(hull);
  const auto arr = build_arrangement_2d(region_generators(hull, w), hull.cell);
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> any(0, arr.size() - 1);
  SuccessorGraph walk(w);
  std::size_t cur = any(rng);
  walk.recompute(ParameterVector(arr[cur].representative));
  std::size_t steps = 0, changed_total = 0;
  while (steps < 400) {
    const auto& nb = arr[cur].neighbors;
    REQUIRE_FALSE(nb.empty());
    const std::size_t to = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
    const auto changed = update_edges(walk, arr, cur, to);
    SuccessorGraph full(w);
    full.recompute(ParameterVector(arr[to].representative));
    CHECK(walk == full);
    const auto sep = arr.separating_lines(cur, to);
    for (std::size_t t : changed) {
      bool covered = false;
      for (std::size_t l : sep) covered = covered || is_multiple(walk.points()[t], arr.lines()[l].normal);
      CHECK(covered);
    }
    changed_total += changed.size();
    cur = to;
    ++steps;
    if (steps % 50 == 0) {
      cur = any(rng);
      walk.recompute(ParameterVector(arr[cur].representative));
    }
  }
  CHECK(changed_total > 0);
  CHECK_THROWS_AS(update_edges(walk, arr, cur, cur), Error);
}

TEST_CASE("update_edges from a face to an edge on a (1,1) line") {
  const auto hull = centered_square("1/2", "1/2", "1/100");
  RegionWitnesses w;
  w.points = {{0, 0}, {1, 1}, {2, 2}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {-1, -1}, {1, -1}, {-1, 1}};
  const std::vector<CanonicalGenerator> g = {{{1, 1}, -1}};
  const auto arr = build_arrangement_2d(g, hull.cell);
  const auto face = arr.locate(P("1/2", "99/200"));
  const auto edge = arr.locate(P("1/2", "1/2"));
  REQUIRE(arr.adjacent(face, edge));
  SuccessorGraph s(w);
  s.recompute(ParameterVector(arr[face].representative));
  const auto changed = update_edges(s, arr, face, edge);
  CHECK_FALSE(changed.empty());
  for (std::size_t t : changed) CHECK(is_multiple(s.points()[t], {1, 1}));
}

TEST_CASE("algorithm2 examples") {
  const auto corner = square_hull(Q("0"), Q("0"), Q("1/100"));
  CHECK(algorithm2(corner, region_witnesses(corner)).cycles.empty());
  // A square centered at the origin reaches negative parameters, where ((1,1)) is a cycle.
  const auto zero = centered_square("0", "0", "1/100");
  const auto r0 = algorithm2(zero, region_witnesses(zero));
  CHECK(std::find(r0.cycles.begin(), r0.cycles.end(), cycle_of({{1, 1}})) != r0.cycles.end());
  const auto agreement = check_against_oracle(r0, 100, 5);
  CHECK(agreement.agree == agreement.samples);
  const auto near = centered_square("-1/3", "1/3", "1/100");
  const auto r1 = algorithm2(near, region_witnesses(near));
  CHECK(std::find(r1.cycles.begin(), r1.cycles.end(), cycle_of({{0, 1}, {1, 0}})) != r1.cycles.end());
  for (const auto& p : sample_hull_points(near, 20, 3)) CHECK_FALSE(region_member(r1, p));
  const auto pt = make_hull({P("1/2", "1/2")});
  CHECK_THROWS_AS(algorithm2(pt, region_witnesses(pt)), Error);
}

TEST_CASE("algorithm2 on the quadrangle agrees with decide") {
  const auto hull = parse_hull("41/50,37/100;93/100,37/100;93/100,11/25;41/50,11/25");
  const auto rep = algorithm2(hull, region_witnesses(hull));
  CHECK_FALSE(rep.cycles.empty());
  for (const auto& c : rep.cycles) CHECK(c == c.normalized());
  const auto agreement = check_against_oracle(rep, 100, 42);
  CHECK(agreement.agree == agreement.samples);
  CHECK(agreement.non_finite > 0);
}

TEST_CASE("algorithm1 examples") {
  const auto tiny = centered_square("1/2", "1/2", "1/1000");
  const auto r = algorithm1(tiny);
  REQUIRE(r.cells);
  // The lines r1 = r2 and r1 + r2 = 1 cross at the center, so the square is not a single cell.
  CHECK(r.cells->size() == 7);
  for (const auto& c : *r.cells) CHECK(c.verdict == Verdict::Finite);
  const auto inner = square_hull(Q("1/2"), Q("1/2"), Q("1/1000"));
  const auto ri = algorithm1(inner);
  CHECK(ri.cells->size() == 4);
  const auto near = centered_square("-1/3", "1/3", "1/100");
  const auto rn = algorithm1(near);
  for (const auto& c : *rn.cells) CHECK(c.verdict == Verdict::NonFinite);
}

TEST_CASE("algorithm1 cells are disjoint and cover the hull") {
  const auto hull = square_hull(Q("7/8"), Q("1/2"), Q("1/64"));
  const auto r = algorithm1(hull);
  REQUIRE(r.cells);
  const auto& cells = *r.cells;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) CHECK(cell_is_empty(cells[i].cell.intersect(cells[j].cell)));
  for (const auto& p : sample_hull_points(hull, 500, 8)) {
    std::size_t holders = 0;
    for (const auto& c : cells) holders += cell_contains(c.cell, p);
    CHECK(holders == 1);
  }
  const auto r2 = algorithm2(hull, region_witnesses(hull));
  for (const auto& p : sample_hull_points(hull, 200, 9)) CHECK(region_member(r, p) == region_member(r2, p));
}
