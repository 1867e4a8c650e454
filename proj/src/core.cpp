#include "srs/core.hpp"

#include <algorithm>
#include <limits>

#include "srs/error.hpp"

namespace srs {
namespace {

void check_dims(const ParameterVector& r, const LatticePoint& a) {
  if (r.dim() != a.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "parameter has dimension " + std::to_string(r.dim()) + ", point has " + std::to_string(a.dim()));
  }
}

std::int64_t floor_div128(__int128 n, std::int64_t d) {
  __int128 q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::Overflow, "floor(r.a) exceeds 64 bits");
  }
  return static_cast<std::int64_t>(q);
}

}  // namespace

ParameterVector::ParameterVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::DimensionMismatch, "parameter vector must have d >= 1");
  den_ = 1;
  for (auto& q : entries_) {
    q.canonicalize();
    den_ = lcm(den_, q.get_den());
  }
  num_.clear();
  for (const auto& q : entries_) num_.push_back(q.get_num() * (den_ / q.get_den()));
  small_ = fits_int64(den_) && std::all_of(num_.begin(), num_.end(), [](const BigInt& z) { return fits_int64(z); });
  if (small_) {
    den64_ = to_int64(den_);
    num64_.clear();
    for (const auto& z : num_) num64_.push_back(to_int64(z));
  }
}

ParameterVector ParameterVector::parse(std::string_view text) { return ParameterVector(parse_rational_list(text)); }

Rational ParameterVector::dot(const LatticePoint& a) const {
  check_dims(*this, a);
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] != 0) s += entries_[i] * Rational(static_cast<long>(a[i]));
  }
  return s;
}

std::int64_t ParameterVector::floor_dot(const LatticePoint& a) const {
  check_dims(*this, a);
  if (small_) {
    __int128 acc = 0;
    bool ok = true;
    for (std::size_t i = 0; i < dim() && ok; ++i) {
      const __int128 term = static_cast<__int128>(num64_[i]) * a[i];
      ok = !__builtin_add_overflow(acc, term, &acc);
    }
    if (ok) return floor_div128(acc, den64_);
  }
  BigInt acc = 0;
  for (std::size_t i = 0; i < dim(); ++i) acc += num_[i] * BigInt(static_cast<long>(a[i]));
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), acc.get_mpz_t(), den_.get_mpz_t());
  if (!fits_int64(q)) throw Error(ErrorKind::Overflow, "floor(r.a) exceeds 64 bits");
  return to_int64(q);
}

std::string format_parameter(const ParameterVector& r) { return format_point(r.entries()); }

LatticePoint tau(const ParameterVector& r, const LatticePoint& a) {
  const std::int64_t f = r.floor_dot(a);
  if (f == std::numeric_limits<std::int64_t>::min()) throw Error(ErrorKind::Overflow, "tau image exceeds 64 bits");
  std::vector<std::int64_t> out(a.coords().begin() + 1, a.coords().end());
  out.push_back(-f);
  return LatticePoint(std::move(out));
}

LatticePoint tau_star(const ParameterVector& r, const LatticePoint& a) { return -tau(r, -a); }

Orbit orbit(const ParameterVector& r, const LatticePoint& a, std::size_t cap) {
  check_dims(r, a);
  if (cap == 0) throw Error(ErrorKind::CapExceeded, "orbit cap must be positive");
  std::vector<LatticePoint> seq;
  std::unordered_map<LatticePoint, std::size_t, LatticePointHash> seen;
  LatticePoint x = a;
  for (std::size_t step = 0;; ++step) {
    auto [it, fresh] = seen.emplace(x, seq.size());
    if (!fresh) {
      Orbit out;
      out.preperiod.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(it->second));
      out.cycle.points.assign(seq.begin() + static_cast<std::ptrdiff_t>(it->second), seq.end());
      return out;
    }
    if (step >= cap) {
      throw Error(ErrorKind::CapExceeded, "no repeat within " + std::to_string(cap) + " steps from " +
                                              format_lattice_point(a));
    }
    seq.push_back(x);
    x = tau(r, x);
  }
}

bool is_interior(std::span<const Rational> r) {
  // c[k] is the coefficient of X^k.
  std::vector<Rational> c(r.begin(), r.end());
  c.emplace_back(1);
  while (c.size() > 1) {
    const std::size_t n = c.size() - 1;
    if (abs(c[0]) >= abs(c[n])) return false;
    std::vector<Rational> next(n);
    for (std::size_t k = 0; k < n; ++k) next[k] = c[n] * c[k + 1] - c[0] * c[n - k - 1];
    c = std::move(next);
  }
  return true;
}

std::optional<std::size_t> WitnessGraph::find(const LatticePoint& a) const {
  auto it = index.find(a);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

bool WitnessGraph::same_edges(const WitnessGraph& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    auto j = other.find(vertices[i]);
    if (!j) return false;
    if (other.vertices[other.tau_succ[*j]] != vertices[tau_succ[i]]) return false;
    if (other.vertices[other.tau_star_succ[*j]] != vertices[tau_star_succ[i]]) return false;
  }
  return true;
}

WitnessGraph witness_set(const ParameterVector& r, std::size_t budget) {
  if (!is_interior(r)) throw Error(ErrorKind::NotInterior, "parameter " + format_parameter(r) + " is not interior");
  WitnessGraph g;
  auto intern = [&](LatticePoint p) -> std::size_t {
    auto [it, fresh] = g.index.emplace(p, g.vertices.size());
    if (fresh) {
      if (g.vertices.size() >= budget) {
        throw Error(ErrorKind::ResourceLimit, "witness budget of " + std::to_string(budget) + " exceeded");
      }
      g.vertices.push_back(std::move(p));
    }
    return it->second;
  };
  for (auto& u : unit_witnesses(r.dim())) intern(std::move(u));
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const LatticePoint a = g.vertices[i];
    const std::size_t t = intern(tau(r, a));
    const std::size_t s = intern(tau_star(r, a));
    g.tau_succ.push_back(t);
    g.tau_star_succ.push_back(s);
  }
  return g;
}

const char* to_string(Verdict v) { return v == Verdict::Finite ? "Finite" : "NonFinite"; }

std::optional<Cycle> first_nontrivial_cycle(const WitnessGraph& g) {
  enum : std::uint8_t { Unknown, OnPath, Zero, Periodic };
  std::vector<std::uint8_t> state(g.size(), Unknown);
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (state[start] != Unknown) continue;
    path.clear();
    std::size_t v = start;
    while (state[v] == Unknown) {
      if (g.vertices[v].is_zero()) {
        state[v] = Zero;
        break;
      }
      state[v] = OnPath;
      path.push_back(v);
      v = g.tau_succ[v];
    }
    if (state[v] == OnPath) {
      auto pos = std::find(path.begin(), path.end(), v);
      Cycle c;
      for (auto it = pos; it != path.end(); ++it) c.points.push_back(g.vertices[*it]);
      return c;
    }
    const std::uint8_t fate = state[v];
    for (std::size_t p : path) state[p] = fate;
  }
  return std::nullopt;
}

FinitenessDecision decide_finiteness(const ParameterVector& r, std::size_t budget) {
  const WitnessGraph g = witness_set(r, budget);
  FinitenessDecision d;
  d.witness_count = g.size();
  d.witness_cycle = first_nontrivial_cycle(g);
  d.verdict = d.witness_cycle ? Verdict::NonFinite : Verdict::Finite;
  return d;
}

ConvexCell characteristic_cell(const ParameterVector& r, std::size_t budget) {
  return characteristic_cell(r, witness_set(r, budget));
}

ConvexCell characteristic_cell(const ParameterVector& r, const WitnessGraph& g) {
  const std::size_t d = r.dim();
  std::vector<LinearConstraint> cs;
  for (const auto& a : g.vertices) {
    if (a.is_zero()) continue;
    std::vector<Rational> normal(d), neg(d);
    for (std::size_t i = 0; i < d; ++i) {
      normal[i] = Rational(static_cast<long>(a[i]));
      neg[i] = -normal[i];
    }
    const Rational v = r.dot(a);
    const Rational f(floor_of(v));
    if (v == f) {
      cs.emplace_back(normal, -f, Relation::Eq);
    } else {
      cs.emplace_back(normal, -f, Relation::Gt);
      cs.emplace_back(neg, f + 1, Relation::Gt);
    }
  }
  return ConvexCell(d, std::move(cs));
}

}  // namespace srs
