#include "srs/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "srs/error.hpp"

namespace srs {
namespace {

constexpr std::size_t npos = Arrangement2D::npos;

struct Edge {
  std::size_t u, v;
  std::size_t line = npos;
  bool boundary = false;
};

Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Upper half-plane (including the positive x-axis) first, then by cross product.
bool angle_less(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  const bool ua = sgn(ay) > 0 || (sgn(ay) == 0 && sgn(ax) > 0);
  const bool ub = sgn(by) > 0 || (sgn(by) == 0 && sgn(bx) > 0);
  if (ua != ub) return ua;
  return sgn(ax * by - ay * bx) > 0;
}

std::vector<std::size_t> sorted_intersection(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Rational evaluate_generator(const CanonicalGenerator& g, std::span<const Rational> x) {
  if (x.size() != g.normal.size()) throw Error(ErrorKind::DimensionMismatch, "generator/point dimension");
  Rational v(static_cast<long>(g.offset));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (g.normal[i] != 0) v += Rational(static_cast<long>(g.normal[i])) * x[i];
  }
  return v;
}

bool Arrangement2D::adjacent(std::size_t a, std::size_t b) const {
  const auto& n = classes_.at(a).neighbors;
  return std::binary_search(n.begin(), n.end(), b);
}

std::vector<std::int8_t> Arrangement2D::signature(std::size_t cls) const {
  const auto& rep = classes_.at(cls).representative;
  std::vector<std::int8_t> s;
  s.reserve(lines_.size());
  for (const auto& g : lines_) s.push_back(static_cast<std::int8_t>(sgn(evaluate_generator(g, rep))));
  return s;
}

ConvexCell Arrangement2D::class_cell(std::size_t cls) const {
  const ArrangementClass& c = classes_.at(cls);
  ConvexCell cell = hull_;
  std::set<std::size_t> near;
  for (std::size_t n : c.closure_nodes) near.insert(node_lines_[n].begin(), node_lines_[n].end());
  std::vector<LinearConstraint> cs;
  for (std::size_t l : near) {
    const auto& g = lines_[l];
    std::vector<Rational> normal = {Rational(static_cast<long>(g.normal[0])), Rational(static_cast<long>(g.normal[1]))};
    Rational off(static_cast<long>(g.offset));
    if (std::binary_search(c.zero_lines.begin(), c.zero_lines.end(), l)) {
      cs.emplace_back(normal, off, Relation::Eq);
      continue;
    }
    if (sgn(evaluate_generator(g, c.representative)) < 0) {
      for (auto& q : normal) q = -q;
      off = -off;
    }
    cs.emplace_back(normal, off, Relation::Gt);
  }
  cell.add_all(cs);
  return cell;
}

std::vector<std::size_t> Arrangement2D::separating_lines(std::size_t a, std::size_t b) const {
  if (a == b || a >= classes_.size() || b >= classes_.size() || !adjacent(a, b)) {
    throw Error(ErrorKind::NotAdjacent, "classes " + std::to_string(a) + " and " + std::to_string(b));
  }
  const auto common = sorted_intersection(classes_[a].closure_nodes, classes_[b].closure_nodes);
  std::vector<std::size_t> lines = node_lines_[common.front()];
  for (std::size_t i = 1; i < common.size() && !lines.empty(); ++i) lines = sorted_intersection(lines, node_lines_[common[i]]);
  return lines;
}

std::size_t Arrangement2D::locate(std::span<const Rational> point) const {
  if (!cell_contains(hull_, point)) return npos;
  std::vector<std::size_t> zero;
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    if (sgn(evaluate_generator(lines_[l], point)) == 0) zero.push_back(l);
  }
  for (const auto& c : classes_) {
    if (c.zero_lines != zero) continue;
    bool ok = true;
    for (std::size_t n : c.closure_nodes) {
      for (std::size_t l : node_lines_[n]) {
        if (std::binary_search(zero.begin(), zero.end(), l)) continue;
        if (sgn(evaluate_generator(lines_[l], point)) != sgn(evaluate_generator(lines_[l], c.representative))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return c.id;
  }
  return npos;
}

Arrangement2D build_arrangement_2d(std::span<const CanonicalGenerator> generators, const ConvexCell& hull) {
  if (hull.dim() != 2) throw Error(ErrorKind::DimensionUnsupported, "arrangements are planar only");
  for (const auto& c : hull.constraints()) {
    if (c.relation() != Relation::Ge) throw Error(ErrorKind::DegenerateHull, "hull must be closed and full-dimensional");
  }
  FlaggedPolygon poly;
  try {
    poly = cell_vertices_2d(hull);
  } catch (const Error& e) {
    throw Error(ErrorKind::DegenerateHull, e.what());
  }
  if (poly.shape != PolygonShape::Polygon) throw Error(ErrorKind::DegenerateHull, "hull is not full-dimensional");

  Arrangement2D A;
  A.hull_ = hull;
  A.hull_vertices_ = poly.vertices;
  const auto& hv = A.hull_vertices_;
  const std::size_t k = hv.size();

  std::set<CanonicalGenerator> uniq;
  for (const auto& g : generators) {
    if (g.normal.size() != 2) throw Error(ErrorKind::DimensionMismatch, "generator dimension");
    uniq.insert(canonical_generator(g.normal, g.offset));
  }
  // Keep lines meeting the closed hull.
  std::vector<std::vector<Rational>> hull_vals;
  for (const auto& g : uniq) {
    std::vector<Rational> vals;
    int pos = 0, neg = 0;
    for (const auto& v : hv) {
      vals.push_back(evaluate_generator(g, v));
      if (sgn(vals.back()) > 0) ++pos;
      if (sgn(vals.back()) < 0) ++neg;
    }
    if (pos == static_cast<int>(k) || neg == static_cast<int>(k)) continue;
    A.lines_.push_back(g);
    hull_vals.push_back(std::move(vals));
  }
  const std::size_t L = A.lines_.size();

  std::map<RationalPoint, std::size_t> node_id;
  auto add_node = [&](const RationalPoint& p) {
    auto [it, fresh] = node_id.emplace(p, A.nodes_.size());
    if (fresh) A.nodes_.push_back(p);
    return it->second;
  };
  for (const auto& v : hv) add_node(v);

  std::vector<std::vector<std::size_t>> line_nodes(L);
  std::vector<std::size_t> boundary_candidates(k);
  for (std::size_t i = 0; i < k; ++i) boundary_candidates[i] = i;
  for (std::size_t l = 0; l < L; ++l) {
    const auto& f = hull_vals[l];
    std::vector<RationalPoint> pts;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = (i + 1) % k;
      if (sgn(f[i]) == 0) pts.push_back(hv[i]);
      if (sgn(f[i]) * sgn(f[j]) < 0) {
        const Rational t = f[i] / (f[i] - f[j]);
        pts.push_back({hv[i][0] + t * (hv[j][0] - hv[i][0]), hv[i][1] + t * (hv[j][1] - hv[i][1])});
      }
    }
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    for (const auto& p : {*lo, *hi}) {
      const std::size_t n = add_node(p);
      line_nodes[l].push_back(n);
      boundary_candidates.push_back(n);
    }
  }
  for (std::size_t i = 0; i < L; ++i) {
    const auto& gi = A.lines_[i];
    for (std::size_t j = i + 1; j < L; ++j) {
      const auto& gj = A.lines_[j];
      const __int128 det = static_cast<__int128>(gi.normal[0]) * gj.normal[1] - static_cast<__int128>(gi.normal[1]) * gj.normal[0];
      if (det == 0) continue;
      const BigInt n00(static_cast<long>(gi.normal[0])), n01(static_cast<long>(gi.normal[1]));
      const BigInt n10(static_cast<long>(gj.normal[0])), n11(static_cast<long>(gj.normal[1]));
      const BigInt bi(static_cast<long>(gi.offset)), bj(static_cast<long>(gj.offset));
      const BigInt D = n00 * n11 - n01 * n10;
      RationalPoint p = {Rational(BigInt(-bi * n11 + bj * n01), D), Rational(BigInt(-n00 * bj + n10 * bi), D)};
      p[0].canonicalize();
      p[1].canonicalize();
      if (!cell_contains(hull, p)) continue;
      const std::size_t n = add_node(p);
      line_nodes[i].push_back(n);
      line_nodes[j].push_back(n);
    }
  }
  const std::size_t N = A.nodes_.size();
  A.node_lines_.assign(N, {});
  for (std::size_t l = 0; l < L; ++l) {
    auto& ln = line_nodes[l];
    std::sort(ln.begin(), ln.end(), [&](std::size_t a, std::size_t b) { return A.nodes_[a] < A.nodes_[b]; });
    ln.erase(std::unique(ln.begin(), ln.end()), ln.end());
    for (std::size_t n : ln) A.node_lines_[n].push_back(l);
  }
  for (auto& nl : A.node_lines_) {
    std::sort(nl.begin(), nl.end());
    nl.erase(std::unique(nl.begin(), nl.end()), nl.end());
  }

  // Planar graph: hull boundary pieces plus clipped line pieces.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_id;
  std::vector<Edge> edges;
  auto add_edge = [&](std::size_t u, std::size_t v, std::size_t line, bool boundary) {
    auto key = std::minmax(u, v);
    auto [it, fresh] = edge_id.emplace(key, edges.size());
    if (fresh) edges.push_back({key.first, key.second, npos, false});
    Edge& e = edges[it->second];
    if (line != npos) e.line = line;
    e.boundary = e.boundary || boundary;
  };
  A.node_on_boundary_.assign(N, false);
  std::sort(boundary_candidates.begin(), boundary_candidates.end());
  boundary_candidates.erase(std::unique(boundary_candidates.begin(), boundary_candidates.end()), boundary_candidates.end());
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = hv[i];
    const auto& b = hv[(i + 1) % k];
    std::vector<std::size_t> on;
    for (std::size_t n : boundary_candidates) {
      if (sgn(cross(a, b, A.nodes_[n])) == 0) on.push_back(n);
    }
    std::sort(on.begin(), on.end(), [&](std::size_t x, std::size_t y) { return A.nodes_[x] < A.nodes_[y]; });
    for (std::size_t n : on) A.node_on_boundary_[n] = true;
    for (std::size_t j = 0; j + 1 < on.size(); ++j) add_edge(on[j], on[j + 1], npos, true);
  }
  for (std::size_t l = 0; l < L; ++l) {
    const auto& ln = line_nodes[l];
    for (std::size_t j = 0; j + 1 < ln.size(); ++j) add_edge(ln[j], ln[j + 1], l, false);
  }

  // Half-edge h = 2e is u->v, 2e+1 is v->u.
  const std::size_t H = 2 * edges.size();
  auto h_from = [&](std::size_t h) { return h % 2 == 0 ? edges[h / 2].u : edges[h / 2].v; };
  auto h_to = [&](std::size_t h) { return h % 2 == 0 ? edges[h / 2].v : edges[h / 2].u; };
  std::vector<std::vector<std::size_t>> out(N);
  for (std::size_t h = 0; h < H; ++h) out[h_from(h)].push_back(h);
  std::vector<std::size_t> pos_in_out(H);
  for (std::size_t n = 0; n < N; ++n) {
    auto& o = out[n];
    std::sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) {
      const auto& p = A.nodes_[n];
      const auto& qa = A.nodes_[h_to(a)];
      const auto& qb = A.nodes_[h_to(b)];
      return angle_less(qa[0] - p[0], qa[1] - p[1], qb[0] - p[0], qb[1] - p[1]);
    });
    for (std::size_t i = 0; i < o.size(); ++i) pos_in_out[o[i]] = i;
  }
  auto next_half = [&](std::size_t h) {
    const std::size_t v = h_to(h);
    const auto& o = out[v];
    const std::size_t twin = h ^ 1;
    return o[(pos_in_out[twin] + o.size() - 1) % o.size()];
  };

  std::vector<std::size_t> face_of_half(H, npos);
  std::vector<std::vector<std::size_t>> face_rings;
  std::vector<bool> seen(H, false);
  for (std::size_t h0 = 0; h0 < H; ++h0) {
    if (seen[h0]) continue;
    std::vector<std::size_t> ring;
    std::size_t h = h0;
    do {
      seen[h] = true;
      ring.push_back(h);
      h = next_half(h);
    } while (h != h0);
    Rational area = 0;
    for (std::size_t x : ring) {
      const auto& p = A.nodes_[h_from(x)];
      const auto& q = A.nodes_[h_to(x)];
      area += p[0] * q[1] - p[1] * q[0];
    }
    if (sgn(area) <= 0) continue;
    for (std::size_t x : ring) face_of_half[x] = face_rings.size();
    face_rings.push_back(std::move(ring));
  }

  auto& classes = A.classes_;
  for (const auto& ring : face_rings) {
    ArrangementClass c;
    c.id = classes.size();
    c.dimension = 2;
    std::vector<RationalPoint> corners;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const std::size_t prev = h_from(ring[(i + ring.size() - 1) % ring.size()]);
      const std::size_t cur = h_from(ring[i]);
      const std::size_t nxt = h_to(ring[i]);
      c.closure_nodes.push_back(cur);
      if (sgn(cross(A.nodes_[prev], A.nodes_[cur], A.nodes_[nxt])) != 0) corners.push_back(A.nodes_[cur]);
    }
    RationalPoint rep = {Rational(0), Rational(0)};
    for (const auto& p : corners) {
      rep[0] += p[0];
      rep[1] += p[1];
    }
    rep[0] /= static_cast<long>(corners.size());
    rep[1] /= static_cast<long>(corners.size());
    c.representative = std::move(rep);
    classes.push_back(std::move(c));
  }
  std::vector<std::size_t> edge_class(edges.size(), npos);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].line == npos) continue;
    ArrangementClass c;
    c.id = classes.size();
    c.dimension = 1;
    c.zero_lines = {edges[e].line};
    c.closure_nodes = {edges[e].u, edges[e].v};
    const auto& p = A.nodes_[edges[e].u];
    const auto& q = A.nodes_[edges[e].v];
    c.representative = {(p[0] + q[0]) / 2, (p[1] + q[1]) / 2};
    edge_class[e] = c.id;
    classes.push_back(std::move(c));
  }
  for (std::size_t n = 0; n < N; ++n) {
    const auto& z = A.node_lines_[n];
    if (z.empty()) continue;
    bool merged = false;
    if (z.size() == 1) {
      for (std::size_t h : out[n]) merged = merged || edges[h / 2].line == z.front();
    }
    if (merged) continue;
    ArrangementClass c;
    c.id = classes.size();
    c.dimension = 0;
    c.zero_lines = z;
    c.closure_nodes = {n};
    c.representative = A.nodes_[n];
    classes.push_back(std::move(c));
  }

  std::vector<std::vector<std::size_t>> node_classes(N);
  for (auto& c : classes) {
    std::sort(c.closure_nodes.begin(), c.closure_nodes.end());
    c.closure_nodes.erase(std::unique(c.closure_nodes.begin(), c.closure_nodes.end()), c.closure_nodes.end());
    for (std::size_t n : c.closure_nodes) {
      node_classes[n].push_back(c.id);
      c.touches_hull_boundary = c.touches_hull_boundary || A.node_on_boundary_[n];
    }
  }
  for (auto& c : classes) {
    for (std::size_t n : c.closure_nodes) {
      for (std::size_t o : node_classes[n]) {
        if (o != c.id) c.neighbors.push_back(o);
      }
    }
    std::sort(c.neighbors.begin(), c.neighbors.end());
    c.neighbors.erase(std::unique(c.neighbors.begin(), c.neighbors.end()), c.neighbors.end());
  }
  return A;
}

}  // namespace srs
