#include "srs/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "simplex.hpp"
#include "srs/error.hpp"

namespace srs {
namespace {

Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

LinearConstraint::LinearConstraint(std::vector<Rational> normal, Rational offset, Relation relation)
    : normal_(std::move(normal)), offset_(std::move(offset)), relation_(relation) {
  // Scale to coprime integers: multiply by lcm of denominators, divide by gcd of numerators.
  BigInt l = offset_.get_den();
  for (const auto& q : normal_) l = lcm(l, q.get_den());
  BigInt g = 0;
  for (auto& q : normal_) {
    q *= l;
    g = gcd(g, q.get_num());
  }
  offset_ *= l;
  const bool zero_normal = (g == 0);
  g = gcd(g, offset_.get_num());
  if (zero_normal) {
    constant_ = true;
    const int s = sgn(offset_);
    switch (relation_) {
      case Relation::Eq: constant_value_ = (s == 0); break;
      case Relation::Ge: constant_value_ = (s >= 0); break;
      case Relation::Gt: constant_value_ = (s > 0); break;
    }
    offset_ = 0;
    return;
  }
  if (g != 1) {
    for (auto& q : normal_) q /= g;
    offset_ /= g;
  }
  if (relation_ == Relation::Eq) {
    for (const auto& q : normal_) {
      if (sgn(q) == 0) continue;
      if (sgn(q) < 0) {
        for (auto& r : normal_) r = -r;
        offset_ = -offset_;
      }
      break;
    }
  }
}

Rational LinearConstraint::evaluate(std::span<const Rational> x) const {
  if (x.size() != normal_.size()) throw Error(ErrorKind::DimensionMismatch, "constraint/point dimension");
  Rational v = offset_;
  for (std::size_t i = 0; i < normal_.size(); ++i) {
    if (sgn(normal_[i]) != 0) v += normal_[i] * x[i];
  }
  return v;
}

bool LinearConstraint::holds(std::span<const Rational> x) const {
  if (constant_) return constant_value_;
  const int s = sgn(evaluate(x));
  switch (relation_) {
    case Relation::Eq: return s == 0;
    case Relation::Ge: return s >= 0;
    case Relation::Gt: return s > 0;
  }
  return false;
}

bool LinearConstraint::holds_closure(std::span<const Rational> x) const {
  if (constant_) return constant_value_;
  const int s = sgn(evaluate(x));
  return relation_ == Relation::Eq ? s == 0 : s >= 0;
}

LinearConstraint LinearConstraint::negated_strict() const {
  std::vector<Rational> n = normal_;
  for (auto& q : n) q = -q;
  return LinearConstraint(std::move(n), -offset_, relation_ == Relation::Gt ? Relation::Ge : Relation::Gt);
}

std::strong_ordering operator<=>(const LinearConstraint& a, const LinearConstraint& b) {
  if (auto c = a.relation_ <=> b.relation_; c != 0) return c;
  if (a.normal_.size() != b.normal_.size()) return a.normal_.size() <=> b.normal_.size();
  for (std::size_t i = 0; i < a.normal_.size(); ++i) {
    const int c = cmp(a.normal_[i], b.normal_[i]);
    if (c != 0) return c <=> 0;
  }
  return cmp(a.offset_, b.offset_) <=> 0;
}

bool operator==(const LinearConstraint& a, const LinearConstraint& b) {
  return a.relation_ == b.relation_ && a.normal_ == b.normal_ && a.offset_ == b.offset_;
}

std::string format_constraint(const LinearConstraint& c) {
  std::string s;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (sgn(c.normal()[i]) == 0) continue;
    const Rational& q = c.normal()[i];
    if (!s.empty()) s += sgn(q) > 0 ? " + " : " - ";
    else if (sgn(q) < 0) s += "-";
    Rational mag = abs(q);
    if (mag != 1) s += format_rational(mag) + "*";
    s += "r" + std::to_string(i + 1);
  }
  if (s.empty()) s = "0";
  if (sgn(c.offset()) != 0) s += (sgn(c.offset()) > 0 ? " + " : " - ") + format_rational(abs(c.offset()));
  switch (c.relation()) {
    case Relation::Eq: return s + " = 0";
    case Relation::Ge: return s + " >= 0";
    case Relation::Gt: return s + " > 0";
  }
  return s;
}

ConvexCell::ConvexCell(std::size_t dim, std::vector<LinearConstraint> constraints) : dim_(dim) {
  for (const auto& c : constraints) {
    if (c.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "constraint dimension");
  }
  constraints_ = std::move(constraints);
  canonicalize();
}

void ConvexCell::add(const LinearConstraint& c) {
  if (c.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "constraint dimension");
  constraints_.push_back(c);
  canonicalize();
}

void ConvexCell::add_all(std::span<const LinearConstraint> cs) {
  for (const auto& c : cs) {
    if (c.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "constraint dimension");
    constraints_.push_back(c);
  }
  canonicalize();
}

ConvexCell ConvexCell::intersect(const ConvexCell& other) const {
  if (other.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "cell dimension");
  ConvexCell out(*this);
  out.trivially_false_ = trivially_false_ || other.trivially_false_;
  out.add_all(other.constraints_);
  return out;
}

void ConvexCell::canonicalize() {
  std::vector<LinearConstraint> kept;
  kept.reserve(constraints_.size());
  for (auto& c : constraints_) {
    if (c.is_constant()) {
      if (!c.constant_value()) trivially_false_ = true;
      continue;
    }
    kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  constraints_ = std::move(kept);
}

CanonicalGenerator canonical_generator(std::span<const std::int64_t> normal, std::int64_t offset) {
  std::int64_t g = 0;
  for (auto x : normal) g = std::gcd(g, x);
  if (g == 0) throw Error(ErrorKind::ZeroNormal, "canonical_generator of a zero normal");
  g = std::gcd(g, offset);
  CanonicalGenerator out;
  out.normal.assign(normal.begin(), normal.end());
  out.offset = offset;
  for (auto& x : out.normal) x /= g;
  out.offset /= g;
  auto first = std::find_if(out.normal.begin(), out.normal.end(), [](std::int64_t x) { return x != 0; });
  if (*first < 0) {
    for (auto& x : out.normal) x = -x;
    out.offset = -out.offset;
  }
  return out;
}

std::vector<std::int64_t> canonical_normal(std::span<const std::int64_t> normal) {
  return canonical_generator(normal, 0).normal;
}

std::string format_generator(const CanonicalGenerator& g) {
  std::string s = "((";
  for (std::size_t i = 0; i < g.normal.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.normal[i]);
  }
  return s + ")," + std::to_string(g.offset) + ")";
}

ConvexCell cutout_polyhedron(const Cycle& pi) {
  if (pi.points.empty()) throw Error(ErrorKind::ShiftIncompatible, "empty cycle");
  const std::size_t d = pi.dim();
  if (!pi.is_shift_compatible()) throw Error(ErrorKind::ShiftIncompatible, "cycle " + format_cycle(pi));
  std::vector<LinearConstraint> cs;
  const std::size_t n = pi.size();
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint& a = pi.points[i];
    const LatticePoint& b = pi.points[(i + 1) % n];
    std::vector<Rational> normal(d), neg(d);
    for (std::size_t j = 0; j < d; ++j) {
      normal[j] = Rational(static_cast<long>(a[j]));
      neg[j] = -normal[j];
    }
    const Rational bd(static_cast<long>(b[d - 1]));
    // 0 <= r.a + b_d  and  r.a + b_d < 1
    cs.emplace_back(normal, bd, Relation::Ge);
    cs.emplace_back(neg, 1 - bd, Relation::Gt);
  }
  return ConvexCell(d, std::move(cs));
}

bool cell_contains(const ConvexCell& cell, std::span<const Rational> point) {
  if (point.size() != cell.dim()) throw Error(ErrorKind::DimensionMismatch, "cell/point dimension");
  if (cell.trivially_false()) return false;
  return std::all_of(cell.constraints().begin(), cell.constraints().end(),
                     [&](const LinearConstraint& c) { return c.holds(point); });
}

bool cell_is_empty(const ConvexCell& cell) {
  if (cell.trivially_false()) return true;
  if (cell.constraints().empty()) return false;
  auto res = detail::maximize_strict_slack(cell);
  if (!res.closure_feasible) return true;
  return sgn(res.max_slack) <= 0;
}

std::optional<RationalPoint> cell_interior_point(const ConvexCell& cell) {
  if (cell.trivially_false()) return std::nullopt;
  if (cell.constraints().empty()) return RationalPoint(cell.dim(), Rational(0));
  auto res = detail::maximize_strict_slack(cell);
  if (!res.closure_feasible || sgn(res.max_slack) <= 0) return std::nullopt;
  return res.point;
}

std::size_t FlaggedPolygon::edge_count() const noexcept {
  switch (shape) {
    case PolygonShape::Point: return 0;
    case PolygonShape::Segment: return 1;
    case PolygonShape::Polygon: return vertices.size();
  }
  return 0;
}

std::vector<RationalPoint> convex_hull_2d(std::vector<RationalPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<RationalPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && sgn(cross(hull[k - 2], hull[k - 1], pts[i])) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sgn(cross(hull[k - 2], hull[k - 1], pts[i])) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

ConvexCell hull_cell_2d(std::span<const RationalPoint> points) {
  std::vector<RationalPoint> h = convex_hull_2d(std::vector<RationalPoint>(points.begin(), points.end()));
  ConvexCell cell(2);
  if (h.empty()) throw Error(ErrorKind::Empty, "hull of no points");
  auto edge_constraint = [](const RationalPoint& p, const RationalPoint& q, Relation rel) {
    // cross(q - p, x - p) >= 0  <=>  -(qy-py) x + (qx-px) y + [(qy-py) px - (qx-px) py] >= 0
    Rational dx = q[0] - p[0], dy = q[1] - p[1];
    return LinearConstraint({-dy, dx}, dy * p[0] - dx * p[1], rel);
  };
  if (h.size() == 1) {
    cell.add(LinearConstraint({Rational(1), Rational(0)}, -h[0][0], Relation::Eq));
    cell.add(LinearConstraint({Rational(0), Rational(1)}, -h[0][1], Relation::Eq));
    return cell;
  }
  if (h.size() == 2) {
    cell.add(edge_constraint(h[0], h[1], Relation::Eq));
    Rational dx = h[1][0] - h[0][0], dy = h[1][1] - h[0][1];
    // (x - p).(q - p) >= 0 and (x - q).(p - q) >= 0
    cell.add(LinearConstraint({dx, dy}, -(dx * h[0][0] + dy * h[0][1]), Relation::Ge));
    cell.add(LinearConstraint({-dx, -dy}, dx * h[1][0] + dy * h[1][1], Relation::Ge));
    return cell;
  }
  for (std::size_t i = 0; i < h.size(); ++i) cell.add(edge_constraint(h[i], h[(i + 1) % h.size()], Relation::Ge));
  return cell;
}

namespace {

// Clip a convex (possibly degenerate) polygon against normal.x + offset >= 0.
std::vector<RationalPoint> clip(const std::vector<RationalPoint>& poly, const LinearConstraint& c) {
  std::vector<RationalPoint> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  std::vector<Rational> val(n);
  for (std::size_t i = 0; i < n; ++i) val[i] = c.evaluate(poly[i]);
  if (n == 1) {
    if (sgn(val[0]) >= 0) out.push_back(poly[0]);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const int si = sgn(val[i]), sj = sgn(val[j]);
    if (si >= 0) out.push_back(poly[i]);
    if ((si > 0 && sj < 0) || (si < 0 && sj > 0)) {
      Rational t = val[i] / (val[i] - val[j]);
      out.push_back({poly[i][0] + t * (poly[j][0] - poly[i][0]), poly[i][1] + t * (poly[j][1] - poly[i][1])});
    }
  }
  return out;
}

std::vector<RationalPoint> simplify_ring(std::vector<RationalPoint> ring) {
  // Drop repeated and collinear points until stable.
  bool changed = true;
  while (changed && ring.size() > 1) {
    changed = false;
    std::vector<RationalPoint> next;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (ring[i] != ring[(i + 1) % ring.size()]) next.push_back(ring[i]);
    }
    if (next.empty()) next.push_back(ring.front());
    if (next.size() != ring.size()) changed = true;
    ring = std::move(next);
    if (ring.size() < 3) break;
    next.clear();
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto& prev = ring[(i + ring.size() - 1) % ring.size()];
      const auto& nxt = ring[(i + 1) % ring.size()];
      if (sgn(cross(prev, ring[i], nxt)) != 0) next.push_back(ring[i]);
    }
    if (next.size() != ring.size()) {
      changed = true;
      if (next.size() < 2) {
        // All collinear: keep the two extreme points.
        auto [lo, hi] = std::minmax_element(ring.begin(), ring.end());
        next = {*lo, *hi};
      }
      ring = std::move(next);
    }
  }
  if (ring.size() == 2 && ring[0] == ring[1]) ring.resize(1);
  return ring;
}

}  // namespace

FlaggedPolygon cell_vertices_2d(const ConvexCell& cell) {
  if (cell.dim() != 2) throw Error(ErrorKind::DimensionUnsupported, "cell_vertices_2d requires d = 2");
  if (cell_is_empty(cell)) throw Error(ErrorKind::Empty, "cell is empty");
  // A box strictly containing every vertex any two constraint lines can form.
  BigInt max_normal = 1, max_offset = 1;
  for (const auto& c : cell.constraints()) {
    for (const auto& q : c.normal()) max_normal = std::max<BigInt>(max_normal, abs(q.get_num()));
    max_offset = std::max<BigInt>(max_offset, abs(c.offset().get_num()));
  }
  const Rational bound(2 * max_normal * max_offset + 1);
  std::vector<RationalPoint> poly = {{-bound, -bound}, {bound, -bound}, {bound, bound}, {-bound, bound}};
  for (const auto& c : cell.constraints()) {
    if (c.relation() == Relation::Eq) {
      poly = clip(poly, LinearConstraint(c.normal(), c.offset(), Relation::Ge));
      std::vector<Rational> neg = c.normal();
      for (auto& q : neg) q = -q;
      poly = clip(poly, LinearConstraint(neg, -c.offset(), Relation::Ge));
    } else {
      poly = clip(poly, c);
    }
    poly = simplify_ring(std::move(poly));
    if (poly.empty()) throw Error(ErrorKind::Empty, "closure is empty");
  }
  for (const auto& p : poly) {
    if (abs(p[0]) == bound || abs(p[1]) == bound) throw Error(ErrorKind::Unbounded, "cell is unbounded");
  }
  // Start at the lowest (then leftmost) vertex, keep counterclockwise order.
  if (poly.size() >= 3) {
    auto start = std::min_element(poly.begin(), poly.end(), [](const RationalPoint& a, const RationalPoint& b) {
      return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
    });
    std::rotate(poly.begin(), start, poly.end());
  } else if (poly.size() == 2 && poly[1] < poly[0]) {
    std::swap(poly[0], poly[1]);
  }

  FlaggedPolygon out;
  out.vertices = poly;
  out.shape = poly.size() == 1 ? PolygonShape::Point : poly.size() == 2 ? PolygonShape::Segment : PolygonShape::Polygon;
  for (const auto& v : poly) out.vertex_contained.push_back(cell_contains(cell, v));
  for (std::size_t i = 0; i < out.edge_count(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    RationalPoint mid = {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
    out.edge_contained.push_back(cell_contains(cell, mid));
  }
  switch (out.shape) {
    case PolygonShape::Point: out.interior_contained = out.vertex_contained[0]; break;
    case PolygonShape::Segment: out.interior_contained = out.edge_contained[0]; break;
    case PolygonShape::Polygon: out.interior_contained = true; break;
  }
  return out;
}

}  // namespace srs
