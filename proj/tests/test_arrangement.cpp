#include <doctest.h>

#include <algorithm>
#include <random>

#include "srs/arrangement.hpp"
#include "srs/error.hpp"
#include "srs/region.hpp"
#include "test_support.hpp"

using namespace srs;
using namespace srs::test;

namespace {

ConvexCell square(const char* lo, const char* hi) {
  return hull_cell_2d(std::vector<RationalPoint>{P(lo, lo), P(hi, lo), P(hi, hi), P(lo, hi)});
}

std::size_t count_dim(const Arrangement2D& a, int d) {
  return static_cast<std::size_t>(
      std::count_if(a.classes().begin(), a.classes().end(), [d](const ArrangementClass& c) { return c.dimension == d; }));
}

void check_partition(const Arrangement2D& arr, const std::vector<RationalPoint>& pts) {
  for (const auto& p : pts) {
    const auto k = arr.locate(p);
    REQUIRE(k != Arrangement2D::npos);
    CHECK(cell_contains(arr.class_cell(k), p));
    std::size_t holders = 0;
    for (std::size_t i = 0; i < arr.size(); ++i) holders += cell_contains(arr.class_cell(i), p);
    CHECK(holders == 1);
  }
}

}  // namespace

TEST_CASE("two axes in a square give nine classes") {
  const std::vector<CanonicalGenerator> g = {{{1, 0}, 0}, {{0, 1}, 0}};
  const auto arr = build_arrangement_2d(g, square("-1", "1"));
  CHECK(arr.size() == 9);
  CHECK(count_dim(arr, 2) == 4);
  CHECK(count_dim(arr, 1) == 4);
  CHECK(count_dim(arr, 0) == 1);
  const auto origin = arr.locate(P("0", "0"));
  CHECK(arr[origin].dimension == 0);
  CHECK(arr[origin].representative == P("0", "0"));
  CHECK(arr[origin].neighbors.size() == 8);
}

TEST_CASE("line counts") {
  const auto h = square("-1", "1");
  const std::vector<CanonicalGenerator> diag = {{{1, 1}, 0}};
  CHECK(build_arrangement_2d(diag, h).size() == 3);
  CHECK(build_arrangement_2d({}, h).size() == 1);
  const std::vector<CanonicalGenerator> corner = {{{1, 1}, 2}};
  CHECK(build_arrangement_2d(corner, h).size() == 2);
  const std::vector<CanonicalGenerator> outside = {{{1, 0}, 5}};
  CHECK(build_arrangement_2d(outside, h).size() == 1);
}

TEST_CASE("representatives") {
  const auto tri = hull_cell_2d(std::vector<RationalPoint>{P("0", "0"), P("1", "0"), P("0", "1")});
  const auto whole = build_arrangement_2d({}, tri);
  CHECK(whole[0].representative == P("1/3", "1/3"));
  const std::vector<CanonicalGenerator> g = {{{0, 1}, 0}};
  const auto strip = build_arrangement_2d(g, square("-1", "1"));
  const auto seg = strip.locate(P("1/2", "0"));
  CHECK(strip[seg].dimension == 1);
  CHECK(strip[seg].representative == P("0", "0"));
  const std::vector<CanonicalGenerator> g2 = {{{2, 0}, -1}, {{0, 2}, -1}};
  const auto cross = build_arrangement_2d(g2, square("0", "1"));
  const auto node = cross.locate(P("1/2", "1/2"));
  CHECK(cross[node].dimension == 0);
  CHECK(cross[node].representative == P("1/2", "1/2"));
}

TEST_CASE("representatives satisfy their class signature") {
  const std::vector<CanonicalGenerator> g = {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 0}, {{1, -2}, 1}, {{3, 1}, -2}};
  const auto arr = build_arrangement_2d(g, square("-1", "1"));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& c = arr[i];
    CHECK(arr.locate(c.representative) == i);
    const auto sig = arr.signature(i);
    CHECK(static_cast<std::size_t>(std::count(sig.begin(), sig.end(), 0)) == c.zero_lines.size());
    CHECK(c.dimension == 2 - static_cast<int>(std::min<std::size_t>(2, c.zero_lines.size())));
  }
}

TEST_CASE("adjacency and separating lines") {
  const std::vector<CanonicalGenerator> g = {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, -1}, {{2, -1}, 1}};
  const auto arr = build_arrangement_2d(g, square("-1", "1"));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    CHECK_THROWS_AS(arr.separating_lines(i, i), Error);
    for (std::size_t j : arr[i].neighbors) {
      CHECK(arr.adjacent(j, i));
      const auto sep = arr.separating_lines(i, j);
      const auto si = arr.signature(i), sj = arr.signature(j);
      for (std::size_t l = 0; l < g.size(); ++l) {
        if (si[l] != sj[l]) CHECK(std::find(sep.begin(), sep.end(), l) != sep.end());
      }
    }
  }
}

TEST_CASE("classes partition the hull") {
  const std::vector<CanonicalGenerator> g = {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 0}, {{1, -1}, 0}, {{2, 1}, -1}, {{1, 3}, 1}};
  const auto arr = build_arrangement_2d(g, square("-1", "1"));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(-8, 8);
  std::vector<RationalPoint> pts;
  for (int i = 0; i < 1000; ++i) {
    RationalPoint p{Rational(pick(rng)) / 8, Rational(pick(rng)) / 8};
    pts.push_back(p);
  }
  check_partition(arr, pts);
  CHECK(arr.locate(P("2", "0")) == Arrangement2D::npos);
}

TEST_CASE("region arrangement on a small square partitions it") {
  const auto hull = square_hull(Q("7/8"), Q("1/2"), Q("1/64"));
  const auto w = region_witnesses(hull);
  const auto gens = region_generators(hull, w);
  const auto arr = build_arrangement_2d(gens, hull.cell);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> pick(0, 256);
  std::vector<RationalPoint> pts;
  for (int i = 0; i < 300; ++i) pts.push_back({Q("7/8") + Rational(pick(rng)) / 16384, Q("1/2") + Rational(pick(rng)) / 16384});
  check_partition(arr, pts);
}

TEST_CASE("degenerate hulls are rejected") {
  const auto seg = hull_cell_2d(std::vector<RationalPoint>{P("0", "0"), P("1", "0")});
  CHECK_THROWS_AS(build_arrangement_2d({}, seg), Error);
  ConvexCell open(2);
  open.add(LinearConstraint({Rational(1), Rational(0)}, Rational(0), Relation::Ge));
  CHECK_THROWS_AS(build_arrangement_2d({}, open), Error);
}
