#include <doctest.h>

#include <algorithm>

#include "srs/core.hpp"
#include "srs/error.hpp"
#include "test_support.hpp"

using namespace srs;
using namespace srs::test;

TEST_CASE("rational literals") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-3")) == "-3");
  CHECK_THROWS_AS(parse_rational("4/-2"), Error);
  CHECK(floor_of(Q("-1/3")) == -1);
  CHECK(ceil_of(Q("-1/3")) == 0);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(parse_integer_list("3, -2") == std::vector<std::int64_t>{3, -2});
}

TEST_CASE("parameter vectors") {
  const auto r = ParameterVector::parse("-1/3,1/3");
  CHECK(r.dim() == 2);
  CHECK(format_parameter(r) == "(-1/3,1/3)");
  CHECK(r.floor_dot(LatticePoint{1, 1}) == 0);
  CHECK(r.floor_dot(LatticePoint{-1, 0}) == 0);
  CHECK(r.floor_dot(LatticePoint{1, 0}) == -1);
  CHECK_THROWS_AS(ParameterVector::parse(""), Error);
}

TEST_CASE("tau examples") {
  CHECK(tau(ParameterVector::parse("1,-2/3"), {2, 1}) == LatticePoint{1, -1});
  CHECK(tau(ParameterVector::parse("-1/3,1/3"), {0, 1}) == LatticePoint{1, 0});
  CHECK(tau(ParameterVector::parse("5/7,-2"), {0, 0}) == LatticePoint{0, 0});
  CHECK_THROWS_AS(tau(ParameterVector::parse("1/2,1/2"), {1, 2, 3}), Error);
}

TEST_CASE("tau_star examples") {
  CHECK(tau_star(ParameterVector::parse("-1/3,1/3"), {0, 1}) == LatticePoint{1, -1});
  CHECK(tau_star(ParameterVector::parse("0,0"), {5, 7}) == LatticePoint{7, 0});
  CHECK(tau_star(ParameterVector::parse("3/4,1/9"), {0, 0}) == LatticePoint{0, 0});
}

TEST_CASE("tau and tau_star agree with the oracle") {
  for (const auto& e : frozen()["tau"]) {
    const auto r = param_from_json(e["r"]);
    const auto a = point_from_json(e["a"]);
    CHECK(tau(r, a) == point_from_json(e["tau"]));
    CHECK(tau_star(r, a) == point_from_json(e["tau_star"]));
  }
}

TEST_CASE("tau overflow is reported") {
  const auto r = ParameterVector::parse("1/2,1/2");
  const std::int64_t big = INT64_MAX;
  CHECK_THROWS_WITH_AS(tau(ParameterVector::parse("-3,-3"), {big, big}), doctest::Contains("Overflow"), Error);
  CHECK(tau(r, {big - 1, 1}) == LatticePoint{1, -(big / 2)});
}

TEST_CASE("orbit examples") {
  const auto o = orbit(ParameterVector::parse("-1/3,1/3"), {1, 1});
  CHECK(o.preperiod == std::vector<LatticePoint>{{1, 1}});
  CHECK(o.cycle == cycle_of({{1, 0}, {0, 1}}));
  const auto z = orbit(ParameterVector::parse("0,0"), {3, 4});
  CHECK(z.preperiod == std::vector<LatticePoint>{{3, 4}, {4, 0}});
  CHECK(z.cycle.is_trivial());
  const auto t = orbit(ParameterVector::parse("1/2,1/2"), {0, 0});
  CHECK(t.preperiod.empty());
  CHECK(t.cycle.is_trivial());
}

TEST_CASE("orbits agree with the oracle") {
  for (const auto& e : frozen()["orbits"]) {
    const auto o = orbit(param_from_json(e["r"]), point_from_json(e["a"]));
    CHECK(o.preperiod == points_from_json(e["preperiod"]));
    CHECK(o.cycle.points == points_from_json(e["cycle"]));
  }
}

TEST_CASE("orbit cap") {
  try {
    orbit(ParameterVector::parse("2,0"), {1, 1}, 20);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("interiority") {
  CHECK(is_interior(ParameterVector::parse("1/2,1/2")));
  CHECK_FALSE(is_interior(ParameterVector::parse("1,-2/3")));
  CHECK(is_interior(ParameterVector::parse("0,0")));
  CHECK_FALSE(is_interior(ParameterVector::parse("1/2,3/2")));
  CHECK(is_interior(ParameterVector::parse("1/2,149/100")));
  CHECK(is_interior(ParameterVector::parse("1/2")));
  CHECK_FALSE(is_interior(ParameterVector::parse("-1")));
  CHECK(is_interior(ParameterVector::parse("0,0,1/2")));
  CHECK_FALSE(is_interior(ParameterVector::parse("0,0,1")));
}

TEST_CASE("witness set examples") {
  const auto g0 = witness_set(ParameterVector::parse("0,0"));
  CHECK(g0.size() == 5);
  CHECK(g0.contains({0, 0}));
  const auto g = witness_set(ParameterVector::parse("-1/3,1/3"));
  CHECK(g.size() == 7);
  for (const LatticePoint& a : {LatticePoint{-1, 1}, LatticePoint{1, -1}}) CHECK(g.contains(a));
  for (const auto& u : unit_witnesses(2)) CHECK(g.contains(u));
  CHECK_THROWS_AS(witness_set(ParameterVector::parse("1,-2/3")), Error);
  CHECK_THROWS_AS(witness_set(ParameterVector::parse("92/93,16/31"), 100), Error);
}

TEST_CASE("witness sets and verdicts agree with the oracle") {
  for (const auto& e : frozen()["witness_sets"]) {
    const auto r = param_from_json(e["r"]);
    const auto g = witness_set(r);
    CHECK(g.size() == e["count"].get<std::size_t>());
    auto pts = g.vertices;
    std::sort(pts.begin(), pts.end());
    CHECK(pts == points_from_json(e["points"]));
    const auto d = decide_finiteness(r);
    CHECK(to_string(d.verdict) == e["verdict"].get<std::string>());
    if (d.witness_cycle) {
      CHECK_FALSE(d.witness_cycle->is_trivial());
      CHECK(d.witness_cycle->is_shift_compatible());
      const auto& pi = d.witness_cycle->points;
      for (std::size_t i = 0; i < pi.size(); ++i) CHECK(tau(r, pi[i]) == pi[(i + 1) % pi.size()]);
    }
  }
}

TEST_CASE("decide examples") {
  CHECK(decide_finiteness(ParameterVector::parse("1/2,1/2")).verdict == Verdict::Finite);
  const auto d = decide_finiteness(ParameterVector::parse("-1/3,1/3"));
  CHECK(d.verdict == Verdict::NonFinite);
  REQUIRE(d.witness_cycle);
  CHECK(format_cycle(*d.witness_cycle) == "((1,0),(0,1))");
  CHECK(decide_finiteness(ParameterVector::parse("265/266,1/4")).verdict == Verdict::NonFinite);
  CHECK(decide_finiteness(ParameterVector::parse("92/93,16/31")).verdict == Verdict::Finite);
  CHECK(decide_finiteness(ParameterVector::parse("911/914,391/457")).verdict == Verdict::NonFinite);
  CHECK(decide_finiteness(ParameterVector::parse("1/2")).verdict == Verdict::Finite);
  CHECK(decide_finiteness(ParameterVector::parse("-1/2")).verdict == Verdict::NonFinite);
}

TEST_CASE("characteristic cell") {
  const auto c0 = characteristic_cell(ParameterVector::parse("0,0"));
  CHECK(cell_contains(c0, P("0", "0")));
  CHECK_FALSE(cell_contains(c0, P("1/100", "0")));
  CHECK_FALSE(cell_contains(c0, P("0", "-1/100")));
  const auto r = ParameterVector::parse("1/2,1/2");
  CHECK(cell_contains(characteristic_cell(r), r.entries()));
}

TEST_CASE("points of the characteristic cell share the witness graph") {
  for (const char* text : {"1/2,1/2", "41/50,37/100", "-1/3,1/3", "93/100,11/25"}) {
    const auto r = ParameterVector::parse(text);
    const auto g = witness_set(r);
    const auto cell = characteristic_cell(r, g);
    const auto s = cell_interior_point(cell);
    REQUIRE(s);
    CHECK(cell_contains(cell, *s));
    CHECK(witness_set(ParameterVector(*s)).same_edges(g));
  }
}

TEST_CASE("first nontrivial cycle follows vertex order") {
  const auto g = witness_set(ParameterVector::parse("-1/3,1/3"));
  const auto c = first_nontrivial_cycle(g);
  REQUIRE(c);
  CHECK(*c == cycle_of({{1, 0}, {0, 1}}));
  CHECK_FALSE(first_nontrivial_cycle(witness_set(ParameterVector::parse("1/2,1/2"))));
}
