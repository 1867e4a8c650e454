#include "srs/families.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "srs/error.hpp"

namespace srs {
namespace {

using Pts = std::vector<LatticePoint>;

Pts range(int lo, int hi, const std::function<LatticePoint(std::int64_t)>& f) {
  Pts out;
  for (int k = lo; k <= hi; ++k) out.push_back(f(k));
  return out;
}

Pts cat(std::initializer_list<Pts> parts) {
  Pts out;
  for (const auto& p : parts) out = concat(out, p);
  return out;
}

LatticePoint P(std::int64_t x, std::int64_t y) { return LatticePoint{x, y}; }

Pts from_pairs(std::initializer_list<std::pair<int, int>> pairs) {
  Pts out;
  for (auto [x, y] : pairs) out.push_back(P(x, y));
  return out;
}

RationalPoint Q(const Rational& x, const Rational& y) { return {x, y}; }
Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

FlaggedPolygon polygon(std::vector<RationalPoint> v, std::vector<bool> vf, std::vector<bool> ef) {
  FlaggedPolygon p;
  p.vertices = std::move(v);
  p.vertex_contained = std::move(vf);
  p.edge_contained = std::move(ef);
  p.shape = PolygonShape::Polygon;
  p.interior_contained = true;
  return p;
}

constexpr bool T = true;
constexpr bool F = false;

}  // namespace

FamilyId parse_family(std::string_view text) {
  static const std::map<std::string, FamilyId, std::less<>> ids = {
      {"C0", FamilyId::C0}, {"C1", FamilyId::C1}, {"C2", FamilyId::C2}, {"C3", FamilyId::C3},
      {"C4", FamilyId::C4}, {"C5", FamilyId::C5}, {"C6", FamilyId::C6}};
  auto it = ids.find(text);
  if (it == ids.end()) throw Error(ErrorKind::Parse, "unknown family '" + std::string(text) + "'");
  return it->second;
}

const char* to_string(FamilyId id) {
  static const char* names[] = {"C0", "C1", "C2", "C3", "C4", "C5", "C6"};
  return names[static_cast<int>(id)];
}

std::pair<int, int> family_range(FamilyId id) {
  switch (id) {
    case FamilyId::C0: return {1, 2};
    case FamilyId::C2:
    case FamilyId::C6: return {1, 0};
    default: return {2, 0};
  }
}

bool family_index_valid(FamilyId id, int n) {
  auto [lo, hi] = family_range(id);
  return n >= lo && (hi == 0 || n <= hi);
}

std::vector<LatticePoint> family_points(FamilyId id, int n) {
  if (!family_index_valid(id, n)) {
    throw Error(ErrorKind::InvalidIndex, std::string(to_string(id)) + "(" + std::to_string(n) + ") is outside the family range");
  }
  const std::int64_t m = n;
  switch (id) {
    case FamilyId::C0:
      if (n == 1) return from_pairs({{-3, 3}, {3, -2}, {-2, 1}, {1, 1}, {1, -2}, {-2, 3}, {3, -3}});
      return from_pairs({{-5, 1}, {1, 5}, {5, -3}, {-3, -3}, {-3, 5}, {5, 1}, {1, -5}, {-5, 2}, {2, 4},
                         {4, -4}, {-4, -1}, {-1, 5}, {5, -1}, {-1, -4}, {-4, 4}, {4, 2}, {2, -5}});
    case FamilyId::C1: {
      Pts a = cat({range(1, n, [&](auto k) { return P(-2 * m, 2 * k); }),
                   range(1, n - 1, [&](auto k) { return P(-2 * m + 2 * k, 2 * m); }),
                   range(1, n - 1, [&](auto k) { return P(2 * k - 1, 2 * m - 2 * k); }),
                   range(1, n, [&](auto k) { return P(2 * m - 1, -2 * k + 1); }),
                   range(1, n - 1, [&](auto k) { return P(2 * m - 2 * k - 1, -2 * m + 1); }),
                   range(1, n - 1, [&](auto k) { return P(-2 * k, -2 * m + 2 * k + 1); })});
      Pts b = cat({range(1, n - 1, [&](auto k) { return P(2 * k, 2 * m - 2 * k); }),
                   range(1, n, [&](auto k) { return P(2 * m, -2 * k + 1); }),
                   range(1, n - 1, [&](auto k) { return P(2 * m - 2 * k, -2 * m + 1); }),
                   range(1, n - 1, [&](auto k) { return P(-2 * k + 1, -2 * m + 2 * k + 1); }),
                   range(1, n, [&](auto k) { return P(-2 * m + 1, 2 * k); }),
                   range(1, n - 1, [&](auto k) { return P(-2 * m + 2 * k + 1, 2 * m); })});
      Pts c = cat({range(1, n - 1, [&](auto k) { return P(2 * m - 2 * k, -2 * m); }),
                   range(1, n - 1, [&](auto k) { return P(-2 * k + 1, -2 * m + 2 * k); }),
                   range(1, n, [&](auto k) { return P(-2 * m + 1, 2 * k - 1); }),
                   range(1, n - 1, [&](auto k) { return P(-2 * m + 2 * k + 1, 2 * m - 1); }),
                   range(1, n - 1, [&](auto k) { return P(2 * k, 2 * m - 2 * k - 1); }),
                   range(1, n, [&](auto k) { return P(2 * m, -2 * k); })});
      return shuffle<LatticePoint>({a, b, c});
    }
    case FamilyId::C2: {
      Pts a = cat({range(1, n + 1, [&](auto k) { return P(-2 * m, 2 * k - 1); }),
                   range(1, n - 1, [&](auto k) { return P(-2 * m + 2 * k, 2 * m + 1); })});
      Pts b = cat({range(1, n, [&](auto k) { return P(2 * k - 1, 2 * m - 2 * k + 1); }),
                   range(1, n, [&](auto k) { return P(2 * m + 1, -2 * k); })});
      Pts c = cat({range(1, n, [&](auto k) { return P(2 * m - 2 * k + 1, -2 * m); }),
                   range(1, n - 1, [&](auto k) { return P(-2 * k, -2 * m + 2 * k); })});
      return shuffle<LatticePoint>({a, b, c});
    }
    case FamilyId::C3: {
      Pts a = cat({{P(-2 * m - 1, 1)},
                   range(1, n, [&](auto k) { return P(-2 * m + 2 * k - 2, -2 * k); }),
                   range(1, n, [&](auto k) { return P(2 * k - 1, -2 * m - 1); })});
      Pts b = cat({{P(1, 2 * m + 1)},
                   range(1, n - 1, [&](auto k) { return P(-2 * k, 2 * m + 2); }),
                   {P(-2 * m, 2 * m + 1)},
                   range(1, n - 1, [&](auto k) { return P(-2 * m - 1, 2 * m - 2 * k + 1); })});
      Pts c = cat({{P(2 * m + 1, -2 * m)},
                   range(1, n - 1, [&](auto k) { return P(2 * m + 2, -2 * m + 2 * k); }),
                   range(1, n, [&](auto k) { return P(2 * m - 2 * k + 3, 2 * k - 1); })});
      return shuffle<LatticePoint>({a, b, c});
    }
    case FamilyId::C4: {
      Pts a = cat({{P(-2 * m - 1, 2)},
                   range(1, n, [&](auto k) { return P(-2 * m + 2 * k - 2, -2 * k + 1); }),
                   range(1, n - 1, [&](auto k) { return P(2 * k - 1, -2 * m); }),
                   {P(2 * m - 1, -2 * m + 1)},
                   range(1, n - 1, [&](auto k) { return P(2 * m, -2 * m + 2 * k + 1); }),
                   range(1, n, [&](auto k) { return P(2 * m - 2 * k + 1, 2 * k); }),
                   range(1, n - 1, [&](auto k) { return P(-2 * k, 2 * m + 1); }),
                   {P(-2 * m, 2 * m)},
                   range(1, n - 2, [&](auto k) { return P(-2 * m - 1, 2 * m - 2 * k); })});
      Pts b = cat({{P(2, 2 * m)},
                   range(1, n - 1, [&](auto k) { return P(-2 * k + 1, 2 * m + 1); }),
                   {P(-2 * m + 1, 2 * m)},
                   range(1, n - 1, [&](auto k) { return P(-2 * m, 2 * m - 2 * k); }),
                   range(1, n, [&](auto k) { return P(-2 * m + 2 * k - 1, -2 * k + 1); }),
                   range(1, n - 1, [&](auto k) { return P(2 * k, -2 * m); }),
                   {P(2 * m, -2 * m + 1)},
                   range(1, n - 1, [&](auto k) { return P(2 * m + 1, -2 * m + 2 * k + 1); }),
                   range(1, n - 1, [&](auto k) { return P(2 * m - 2 * k + 2, 2 * k); })});
      Pts c = cat({{P(2 * m, -2 * m)},
                   range(1, n - 1, [&](auto k) { return P(2 * m + 1, -2 * m + 2 * k); }),
                   range(1, n, [&](auto k) { return P(2 * m - 2 * k + 2, 2 * k - 1); }),
                   range(1, n - 1, [&](auto k) { return P(-2 * k + 1, 2 * m); }),
                   {P(-2 * m + 1, 2 * m - 1)},
                   range(1, n - 1, [&](auto k) { return P(-2 * m, 2 * m - 2 * k - 1); }),
                   range(1, n, [&](auto k) { return P(-2 * m + 2 * k - 1, -2 * k); }),
                   range(1, n - 1, [&](auto k) { return P(2 * k, -2 * m - 1); })});
      return shuffle<LatticePoint>({a, b, c});
    }
    case FamilyId::C5: {
      Pts a = cat({{P(-m - 1, 1)}, range(1, n - 1, [&](auto k) { return P(-m + k - 1, k + 2); })});
      Pts b = cat({{P(1, m + 1)}, range(1, n - 2, [&](auto k) { return P(k + 2, m - k + 1); }), {P(m + 1, 1)}});
      Pts c = cat({range(1, n - 1, [&](auto k) { return P(m - k + 2, -k - 1); }), {P(1, -m - 1)}});
      Pts d = range(1, n - 1, [&](auto k) { return P(-k - 1, -m + k - 1); });
      return shuffle<LatticePoint>({a, b, c, d});
    }
    case FamilyId::C6: {
      Pts a = cat({range(1, n, [&](auto k) { return P(-m + k - 1, -k); }), {P(1, -m)}});
      Pts b = cat({range(1, n, [&](auto k) { return P(-k, m - k + 1); }),
                   range(1, n, [&](auto k) { return P(m - k + 1, k + 1); })});
      Pts c = cat({range(1, n - 1, [&](auto k) { return P(k + 1, -m + k); }), {P(m + 1, 1)}});
      return shuffle<LatticePoint>({a, b, c});
    }
  }
  throw Error(ErrorKind::InvalidIndex, "unknown family");
}

FamilyCycle family_cycle(FamilyId id, int n) {
  FamilyCycle out;
  out.cycle.points = family_points(id, n);
  if (out.cycle.is_shift_compatible() && out.cycle.has_distinct_points()) return out;
  out.reordered = true;
  const auto& pts = out.cycle.points;
  const std::size_t len = pts.size();
  std::multimap<std::int64_t, std::size_t> by_head;
  for (std::size_t i = 0; i < len; ++i) by_head.emplace(pts[i][0], i);
  std::vector<std::size_t> path = {0};
  std::vector<bool> used(len, false);
  used[0] = true;
  std::function<bool()> dfs = [&]() -> bool {
    const std::int64_t tail = pts[path.back()][1];
    if (path.size() == len) return tail == pts[path.front()][0];
    auto [lo, hi] = by_head.equal_range(tail);
    for (auto it = lo; it != hi; ++it) {
      if (used[it->second]) continue;
      used[it->second] = true;
      path.push_back(it->second);
      if (dfs()) return true;
      path.pop_back();
      used[it->second] = false;
    }
    return false;
  };
  if (pts.front().dim() != 2 || !dfs()) {
    throw Error(ErrorKind::NoCompatibleOrder, std::string(to_string(id)) + "(" + std::to_string(n) +
                                                  ") has no shift-compatible order of " + std::to_string(len) + " points");
  }
  Cycle c;
  for (std::size_t i : path) c.points.push_back(pts[i]);
  out.cycle = std::move(c);
  return out;
}

FlaggedPolygon expected_polygon(FamilyId id, int n) {
  if (!family_index_valid(id, n)) {
    throw Error(ErrorKind::InvalidIndex, std::string(to_string(id)) + "(" + std::to_string(n) + ") is outside the family range");
  }
  const long m = n;
  const Rational one(1);
  switch (id) {
    case FamilyId::C0:
      if (n == 1) {
        return polygon({Q(frac(3, 4), frac(3, 2)), Q(one, frac(5, 3)), Q(frac(7, 6), frac(11, 6)), Q(one, Rational(2))},
                       {F, F, F, F}, {T, F, F, F});
      }
      return polygon({Q(frac(25, 26), frac(15, 26)), Q(one, frac(1, 2)), Q(frac(28, 27), frac(16, 27)), Q(one, frac(3, 5))},
                     {F, F, F, F}, {T, T, F, F});
    case FamilyId::C1: {
      const long a = 4 * m * m - 4 * m + 2, b = 4 * m * m - 2;
      return polygon({Q(one - frac(1, a), one + frac(2 * m - 1, a)), Q(one, one + frac(1, 2 * m - 1)),
                      Q(one + frac(1, b), one + frac(2 * m + 2, b)), Q(one, one + frac(1, 2 * m - 2))},
                     {F, F, F, F}, {F, F, F, F});
    }
    case FamilyId::C2: {
      if (n == 1) {
        return polygon({Q(frac(2, 3), frac(4, 3)), Q(one, frac(3, 2)), Q(frac(6, 5), frac(9, 5)), Q(frac(3, 4), frac(3, 2))},
                       {F, F, F, F}, {F, F, F, F});
      }
      const long a = 4 * m * m - 2 * m + 1, b = 4 * m * m + 2 * m - 1;
      return polygon({Q(one - frac(1, a), one + frac(2 * m - 1, a)), Q(one, one + frac(1, 2 * m)),
                      Q(one + frac(1, b), one + frac(2 * m + 2, b)), Q(one, one + frac(1, 2 * m - 1))},
                     {F, F, F, F}, {F, F, F, F});
    }
    case FamilyId::C3: {
      const long a = 4 * m * m + 6 * m - 1, b = 4 * m * m + 6 * m - 2;
      return polygon({Q(one - frac(1, a), one - frac(2 * m + 4, a)), Q(one, one - frac(1, 2 * m - 1)),
                      Q(one + frac(1, b), one - frac(2 * m + 3, b)), Q(one, one - frac(1, 2 * m))},
                     {T, T, T, T}, {T, T, T, T});
    }
    case FamilyId::C4: {
      if (n == 2) {
        return polygon({Q(frac(19, 20), frac(3, 5)), Q(frac(21, 22), frac(13, 22)), Q(one, frac(3, 5)),
                        Q(frac(22, 21), frac(13, 21)), Q(frac(20, 19), frac(12, 19)), Q(one, frac(2, 3))},
                       {T, T, F, F, F, F}, {T, T, F, F, F, T});
      }
      const long a = 4 * m * m + 4 * m - 4, b = 4 * m * m + 4 * m - 5;
      return polygon({Q(one - frac(1, a), one - frac(2 * m + 4, a)), Q(one, one - frac(1, 2 * m - 2)),
                      Q(one + frac(1, b), one - frac(2 * m + 3, b)), Q(one, one - frac(1, 2 * m - 1))},
                     {T, F, F, F}, {T, F, F, T});
    }
    case FamilyId::C5: {
      if (n == 2) {
        return polygon({Q(frac(10, 11), frac(4, 11)), Q(one, frac(1, 3)), Q(frac(11, 10), frac(2, 5)), Q(one, frac(1, 2))},
                       {T, F, T, T}, {T, T, T, T});
      }
      if (n == 3) {
        return polygon({Q(frac(14, 15), frac(4, 15)), Q(one, frac(1, 4)), Q(frac(19, 18), frac(5, 18)), Q(one, frac(1, 3))},
                       {F, F, F, F}, {T, T, F, F});
      }
      if (n == 4) {
        return polygon({Q(frac(22, 23), frac(5, 23)), Q(frac(23, 24), frac(5, 24)), Q(one, frac(1, 5)),
                        Q(frac(24, 23), frac(5, 23)), Q(one, frac(1, 4))},
                       {F, T, F, F, F}, {T, T, T, F, F});
      }
      const long a = m * m + m + 3, b = m * m + 2 * m, c = m * m + 2 * m - 1;
      return polygon({Q(one - frac(1, a), frac(m + 1, a)), Q(one - frac(1, b), frac(m + 1, b)), Q(one, frac(1, m + 1)),
                      Q(one + frac(1, c), frac(m + 1, c)), Q(one + frac(1, a), frac(m + 1, a)), Q(one, frac(1, m))},
                     {F, T, F, T, F, F}, {T, T, T, T, F, F});
    }
    case FamilyId::C6: {
      if (n == 1) {
        return polygon({Q(frac(2, 3), frac(-1, 3)), Q(one, Rational(-1)), Q(frac(4, 3), frac(-2, 3))}, {F, F, F}, {T, F, F});
      }
      const long a = m * m + 2, b = m * m + m + 1, c = m * m + 2 * m;
      return polygon({Q(one - frac(1, a), frac(-m, a)), Q(one, frac(-1, m)), Q(one + frac(1, b), frac(-(m + 1), b)),
                      Q(one + frac(1, c), frac(-(m + 1), c)), Q(one - frac(1, b), frac(-m, b))},
                     {F, F, F, F, F}, {T, F, F, F, F});
    }
  }
  throw Error(ErrorKind::InvalidIndex, "unknown family");
}

bool EqualityCertificate::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.pass; });
}

namespace {

struct Face {
  std::vector<RationalPoint> points;  // 1 point, or 2 endpoints, or all vertices (top face)
  bool contained;
  bool top;
  std::string name;
};

bool on_boundary(const LinearConstraint& h, const Face& f) {
  return std::all_of(f.points.begin(), f.points.end(), [&](const RationalPoint& p) { return sgn(h.evaluate(p)) == 0; });
}

std::vector<LinearConstraint> split_equalities(const std::vector<LinearConstraint>& hs) {
  std::vector<LinearConstraint> out;
  for (const auto& h : hs) {
    if (h.relation() != Relation::Eq) {
      out.push_back(h);
      continue;
    }
    out.emplace_back(h.normal(), h.offset(), Relation::Ge);
    std::vector<Rational> neg = h.normal();
    for (auto& q : neg) q = -q;
    out.emplace_back(neg, -h.offset(), Relation::Ge);
  }
  return out;
}

}  // namespace

EqualityCertificate verify_equality_certificate(const std::vector<LinearConstraint>& halfspaces_in, const FlaggedPolygon& poly) {
  for (const auto& h : halfspaces_in) {
    if (h.dim() != 2) throw Error(ErrorKind::DimensionUnsupported, "the certificate is planar");
  }
  if (poly.vertices.empty()) throw Error(ErrorKind::UnboundedPolygon, "polygon has no vertices");
  const auto hs = split_equalities(halfspaces_in);
  EqualityCertificate cert;
  auto fail = [&](int i, const std::string& why) {
    cert.checks[i].pass = false;
    if (!cert.checks[i].detail.empty()) cert.checks[i].detail += "; ";
    cert.checks[i].detail += why;
  };

  std::vector<Face> faces;
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool top = poly.shape == PolygonShape::Point;
    faces.push_back({{v[i]}, top ? poly.interior_contained : static_cast<bool>(poly.vertex_contained[i]), top,
                     "vertex " + format_point(v[i])});
  }
  for (std::size_t i = 0; i < poly.edge_count(); ++i) {
    const bool top = poly.shape == PolygonShape::Segment;
    faces.push_back({{v[i], v[(i + 1) % v.size()]}, static_cast<bool>(poly.edge_contained[i]), top,
                     "edge " + format_point(v[i]) + "-" + format_point(v[(i + 1) % v.size()])});
  }
  if (poly.shape == PolygonShape::Polygon) faces.push_back({v, poly.interior_contained, true, "interior"});

  // (i)
  for (const auto& p : v) {
    for (const auto& h : hs) {
      if (!h.holds_closure(p)) fail(0, format_point(p) + " violates " + format_constraint(h));
    }
  }
  // (ii)
  if (poly.shape != PolygonShape::Polygon) {
    std::vector<LinearConstraint> containing;
    for (const auto& h : hs) {
      if (std::all_of(v.begin(), v.end(), [&](const RationalPoint& p) { return h.holds(p); }) &&
          (poly.shape == PolygonShape::Point || sgn(h.evaluate(v[0]) - h.evaluate(v[1])) == 0)) {
        containing.push_back(h);
      }
    }
    std::vector<std::vector<LinearConstraint>> off_hull;
    if (poly.shape == PolygonShape::Segment) {
      const Rational dx = v[1][0] - v[0][0], dy = v[1][1] - v[0][1];
      LinearConstraint side({-dy, dx}, dy * v[0][0] - dx * v[0][1], Relation::Gt);
      off_hull.push_back({side});
      off_hull.push_back({LinearConstraint({dy, -dx}, -(dy * v[0][0] - dx * v[0][1]), Relation::Gt)});
    } else {
      const Rational& px = v[0][0];
      const Rational& py = v[0][1];
      off_hull.push_back({LinearConstraint({Rational(1), Rational(0)}, -px, Relation::Gt)});
      off_hull.push_back({LinearConstraint({Rational(-1), Rational(0)}, px, Relation::Gt)});
      off_hull.push_back({LinearConstraint({Rational(1), Rational(0)}, -px, Relation::Eq),
                          LinearConstraint({Rational(0), Rational(1)}, -py, Relation::Gt)});
      off_hull.push_back({LinearConstraint({Rational(1), Rational(0)}, -px, Relation::Eq),
                          LinearConstraint({Rational(0), Rational(-1)}, py, Relation::Gt)});
    }
    for (const auto& extra : off_hull) {
      ConvexCell c(2, containing);
      c.add_all(extra);
      if (!cell_is_empty(c)) fail(1, "the half-spaces containing the affine hull do not cut it out");
    }
  }
  for (const auto& f : faces) {
    // (iii)
    if (!f.contained) {
      const bool ok = std::any_of(hs.begin(), hs.end(), [&](const LinearConstraint& h) { return h.is_strict() && on_boundary(h, f); });
      if (!ok) fail(2, f.name + " is excluded by no open half-space");
    }
    if (f.contained && !f.top) {
      // (iv)
      const bool ok = std::any_of(hs.begin(), hs.end(), [&](const LinearConstraint& h) {
        return !h.is_strict() && on_boundary(h, f) &&
               std::any_of(v.begin(), v.end(), [&](const RationalPoint& p) { return sgn(h.evaluate(p)) != 0; });
      });
      if (!ok) fail(3, f.name + " is supported by no closed half-space");
    }
    if (f.contained) {
      // (v)
      for (const auto& h : hs) {
        if (h.is_strict() && on_boundary(h, f)) fail(4, f.name + " lies on the boundary of " + format_constraint(h));
      }
    }
  }
  return cert;
}

bool same_polygon(const FlaggedPolygon& a, const FlaggedPolygon& b) {
  if (a.shape != b.shape || a.vertices.size() != b.vertices.size() || a.interior_contained != b.interior_contained) return false;
  const std::size_t n = a.vertices.size();
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const std::size_t j = (i + s) % n;
      ok = a.vertices[i] == b.vertices[j] && a.vertex_contained[i] == b.vertex_contained[j];
      if (ok && i < a.edge_count()) ok = a.edge_contained[i] == b.edge_contained[a.shape == PolygonShape::Polygon ? j : 0];
    }
    if (ok) return true;
  }
  return false;
}

FamilyReport verify_family(FamilyId id, int n) {
  FamilyReport r;
  r.family = id;
  r.n = n;
  auto fc = family_cycle(id, n);
  r.cycle = fc.cycle;
  r.reordered = fc.reordered;
  const ConvexCell cell = cutout_polyhedron(r.cycle);
  r.expected = expected_polygon(id, n);
  r.certificate = verify_equality_certificate(cell.constraints(), r.expected);
  r.computed = cell_vertices_2d(cell);
  r.computed_matches = same_polygon(r.computed, r.expected);
  r.pass = r.certificate.pass() && r.computed_matches;
  return r;
}

}  // namespace srs
