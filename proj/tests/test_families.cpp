#include <doctest.h>

#include <algorithm>

#include "srs/error.hpp"
#include "srs/families.hpp"
#include "test_support.hpp"

using namespace srs;
using namespace srs::test;

namespace {

std::vector<RationalPoint> pts(std::initializer_list<std::pair<const char*, const char*>> list) {
  std::vector<RationalPoint> out;
  for (auto [x, y] : list) out.push_back(P(x, y));
  return out;
}

std::vector<LinearConstraint> half_open_square_sides() {
  return {LinearConstraint({Rational(1), Rational(0)}, Rational(1), Relation::Ge),
          LinearConstraint({Rational(-1), Rational(0)}, Rational(0), Relation::Gt),
          LinearConstraint({Rational(0), Rational(1)}, Rational(0), Relation::Ge),
          LinearConstraint({Rational(0), Rational(-1)}, Rational(1), Relation::Gt)};
}

FlaggedPolygon half_open_square() {
  FlaggedPolygon p;
  p.vertices = pts({{"-1", "0"}, {"0", "0"}, {"0", "1"}, {"-1", "1"}});
  p.vertex_contained = {true, false, false, false};
  p.edge_contained = {true, false, false, true};
  return p;
}

}  // namespace

TEST_CASE("concat and shuffle") {
  using V = std::vector<int>;
  CHECK(concat(V{1, 2}, V{3, 4}) == V{1, 2, 3, 4});
  CHECK(concat(V{}, V{5}) == V{5});
  CHECK(concat(V{5}, V{}) == V{5});
  CHECK(shuffle(std::vector<V>{{1, 2}, {3}, {4, 5, 6}}) == V{1, 3, 4, 2, 5, 6});
  CHECK(shuffle(std::vector<V>{{7, 8}}) == V{7, 8});
  CHECK(shuffle(std::vector<V>{{}, {}}).empty());
}

TEST_CASE("family ranges") {
  CHECK(family_index_valid(FamilyId::C0, 2));
  CHECK_FALSE(family_index_valid(FamilyId::C0, 3));
  CHECK_FALSE(family_index_valid(FamilyId::C2, 0));
  CHECK(family_index_valid(FamilyId::C6, 1));
  CHECK_FALSE(family_index_valid(FamilyId::C1, 1));
  CHECK(parse_family("C4") == FamilyId::C4);
  CHECK_THROWS_AS(parse_family("C9"), Error);
  try {
    family_cycle(FamilyId::C2, 0);
    FAIL("expected InvalidIndex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidIndex);
  }
}

TEST_CASE("family cycle examples") {
  CHECK(family_points(FamilyId::C2, 1) == std::vector<LatticePoint>{{-2, 1}, {1, 1}, {1, -2}, {-2, 3}, {3, -2}});
  const auto c2 = family_cycle(FamilyId::C2, 1);
  CHECK_FALSE(c2.reordered);
  const auto r = ParameterVector::parse("93/100,153/100");
  for (std::size_t i = 0; i < c2.cycle.size(); ++i)
    CHECK(tau(r, c2.cycle.points[i]) == c2.cycle.points[(i + 1) % c2.cycle.size()]);
  const auto c6 = family_cycle(FamilyId::C6, 1);
  CHECK(c6.reordered);
  CHECK(c6.cycle == cycle_of({{-1, -1}, {-1, 1}, {1, 2}, {2, 1}, {1, -1}}));
}

TEST_CASE("expected polygons from the closed forms") {
  const auto c6 = expected_polygon(FamilyId::C6, 1);
  CHECK(c6.vertices == pts({{"2/3", "-1/3"}, {"1", "-1"}, {"4/3", "-2/3"}}));
  const auto c62 = expected_polygon(FamilyId::C6, 2);
  CHECK(c62.vertices.size() == 5);
  for (const auto& v : pts({{"5/6", "-1/3"}, {"1", "-1/2"}, {"8/7", "-3/7"}, {"9/8", "-3/8"}, {"6/7", "-2/7"}}))
    CHECK(std::find(c62.vertices.begin(), c62.vertices.end(), v) != c62.vertices.end());
  const auto c2 = expected_polygon(FamilyId::C2, 1);
  for (const auto& v : pts({{"2/3", "4/3"}, {"1", "3/2"}, {"6/5", "9/5"}, {"3/4", "3/2"}}))
    CHECK(std::find(c2.vertices.begin(), c2.vertices.end(), v) != c2.vertices.end());
  const auto c0 = expected_polygon(FamilyId::C0, 1);
  CHECK(c0.vertices.size() == 4);
  for (const auto& v : pts({{"3/4", "3/2"}, {"1", "5/3"}, {"7/6", "11/6"}, {"1", "2"}}))
    CHECK(std::find(c0.vertices.begin(), c0.vertices.end(), v) != c0.vertices.end());
}

TEST_CASE("equality certificate") {
  const auto sides = half_open_square_sides();
  CHECK(verify_equality_certificate(sides, half_open_square()).pass());
  auto missing = sides;
  missing.erase(missing.begin() + 1);
  const auto cert = verify_equality_certificate(missing, half_open_square());
  CHECK_FALSE(cert.pass());
  CHECK_FALSE(cert.checks[2].pass);
  std::vector<LinearConstraint> closed = {LinearConstraint({Rational(1), Rational(0)}, Rational(0), Relation::Ge),
                                          LinearConstraint({Rational(-1), Rational(0)}, Rational(1), Relation::Ge),
                                          LinearConstraint({Rational(0), Rational(1)}, Rational(0), Relation::Ge),
                                          LinearConstraint({Rational(0), Rational(-1)}, Rational(1), Relation::Ge)};
  FlaggedPolygon unit;
  unit.vertices = pts({{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}});
  unit.vertex_contained.assign(4, true);
  unit.edge_contained.assign(4, true);
  CHECK(verify_equality_certificate(closed, unit).pass());
  FlaggedPolygon wrong = unit;
  wrong.vertex_contained[2] = false;
  CHECK_FALSE(verify_equality_certificate(closed, wrong).pass());
}

TEST_CASE("every family member verifies") {
  for (const auto& [id, lo, hi] : {std::tuple{FamilyId::C0, 1, 2}, {FamilyId::C1, 2, 6}, {FamilyId::C2, 1, 6}, {FamilyId::C3, 2, 6},
                                   {FamilyId::C4, 2, 6}, {FamilyId::C5, 2, 6}, {FamilyId::C6, 1, 6}}) {
    for (int n = lo; n <= hi; ++n) {
      CAPTURE(to_string(id));
      CAPTURE(n);
      const auto rep = verify_family(id, n);
      CHECK(rep.certificate.pass());
      CHECK(rep.computed_matches);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("families agree with the oracle") {
  for (const auto& e : frozen()["families"]) {
    const auto id = parse_family(e["family"].get<std::string>());
    const int n = e["n"].get<int>();
    CAPTURE(e["family"].get<std::string>());
    CAPTURE(n);
    CHECK(family_points(id, n) == points_from_json(e["shuffled"]));
    const auto fc = family_cycle(id, n);
    CHECK(fc.cycle.points == points_from_json(e["cycle"]));
    CHECK(fc.reordered == e["reordered"].get<bool>());
    FlaggedPolygon oracle;
    for (const auto& v : e["vertices"]) oracle.vertices.push_back(P(v[0].get<std::string>().c_str(), v[1].get<std::string>().c_str()));
    oracle.vertex_contained = e["vertex_contained"].get<std::vector<bool>>();
    oracle.edge_contained = e["edge_contained"].get<std::vector<bool>>();
    oracle.shape = oracle.vertices.size() == 2 ? PolygonShape::Segment : PolygonShape::Polygon;
    CHECK(same_polygon(expected_polygon(id, n), oracle));
    CHECK(same_polygon(cell_vertices_2d(cutout_polyhedron(fc.cycle)), oracle));
  }
}
