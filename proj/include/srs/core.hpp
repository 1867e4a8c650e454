#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "srs/geometry.hpp"
#include "srs/lattice.hpp"
#include "srs/rational.hpp"

namespace srs {

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;
inline constexpr std::size_t kDefaultWitnessBudget = 10'000'000;

/// r in Q^d.  Entries are kept as reduced rationals together with a common
/// denominator so that floor(r.a) is one integer division.
class ParameterVector {
 public:
  ParameterVector() = default;
  explicit ParameterVector(std::vector<Rational> entries);
  ParameterVector(std::initializer_list<Rational> entries) : ParameterVector(std::vector<Rational>(entries)) {}

  static ParameterVector parse(std::string_view text);

  std::size_t dim() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  /// Exact r.a.
  Rational dot(const LatticePoint& a) const;
  /// floor(r.a) as int64; raises Overflow if it does not fit.
  std::int64_t floor_dot(const LatticePoint& a) const;

  friend bool operator==(const ParameterVector& a, const ParameterVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Rational> entries_;
  BigInt den_ = 1;
  std::vector<BigInt> num_;
  bool small_ = false;  // den_ and num_ fit in int64
  std::int64_t den64_ = 1;
  std::vector<std::int64_t> num64_;
};

std::string format_parameter(const ParameterVector& r);

LatticePoint tau(const ParameterVector& r, const LatticePoint& a);
LatticePoint tau_star(const ParameterVector& r, const LatticePoint& a);

struct Orbit {
  std::vector<LatticePoint> preperiod;
  Cycle cycle;
};

Orbit orbit(const ParameterVector& r, const LatticePoint& a, std::size_t cap = kDefaultOrbitCap);

/// Exact Schur stability of X^d + r_d X^{d-1} + ... + r_1.
bool is_interior(std::span<const Rational> r);
inline bool is_interior(const ParameterVector& r) { return is_interior(std::span<const Rational>(r.entries())); }

/// V_r with its tau and tau* successor indices.  vertices[0..2d) is V_0.
struct WitnessGraph {
  std::vector<LatticePoint> vertices;
  std::vector<std::size_t> tau_succ;
  std::vector<std::size_t> tau_star_succ;
  std::unordered_map<LatticePoint, std::size_t, LatticePointHash> index;

  std::size_t size() const noexcept { return vertices.size(); }
  bool contains(const LatticePoint& a) const { return index.count(a) != 0; }
  std::optional<std::size_t> find(const LatticePoint& a) const;
  /// Same vertices and both successor associations.
  bool same_edges(const WitnessGraph& other) const;
};

WitnessGraph witness_set(const ParameterVector& r, std::size_t budget = kDefaultWitnessBudget);

enum class Verdict { Finite, NonFinite };
const char* to_string(Verdict v);

struct FinitenessDecision {
  Verdict verdict = Verdict::Finite;
  std::optional<Cycle> witness_cycle;
  std::size_t witness_count = 0;
};

FinitenessDecision decide_finiteness(const ParameterVector& r, std::size_t budget = kDefaultWitnessBudget);

/// Walks the tau successors of a witness graph; the first nontrivial cycle
/// found (scanning vertices in index order) or nullopt.
std::optional<Cycle> first_nontrivial_cycle(const WitnessGraph& g);

ConvexCell characteristic_cell(const ParameterVector& r, std::size_t budget = kDefaultWitnessBudget);
/// P_r from an already computed witness graph of r.
ConvexCell characteristic_cell(const ParameterVector& r, const WitnessGraph& g);

}  // namespace srs
