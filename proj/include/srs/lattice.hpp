#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace srs {

/// A point of Z^d. Entries are 64-bit; every arithmetic path that produces
/// entries is overflow-checked and raises ErrorKind::Overflow instead of wrapping.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::size_t dim) : coords_(dim, 0) {}
  LatticePoint(std::initializer_list<std::int64_t> init) : coords_(init) {}
  explicit LatticePoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }
  const std::vector<std::int64_t>& vec() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  LatticePoint operator-() const;

  static LatticePoint zero(std::size_t dim) { return LatticePoint(dim); }
  /// e_i scaled by sign (+1 or -1).
  static LatticePoint unit(std::size_t dim, std::size_t i, int sign);

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

std::string format_lattice_point(const LatticePoint& p);

/// The signed unit vectors (+e_1, -e_1, ..., +e_d, -e_d).
std::vector<LatticePoint> unit_witnesses(std::size_t dim);

/// A tuple of lattice points read as a periodic orbit (a_1, ..., a_n).
struct Cycle {
  std::vector<LatticePoint> points;

  std::size_t size() const noexcept { return points.size(); }
  std::size_t dim() const noexcept { return points.empty() ? 0 : points.front().dim(); }
  bool is_trivial() const noexcept { return points.size() == 1 && points.front().is_zero(); }

  /// Tail of each point equals the head of its cyclic successor.
  bool is_shift_compatible() const;
  bool has_distinct_points() const;

  /// Rotation starting at the lexicographically smallest rotation.
  Cycle normalized() const;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

std::string format_cycle(const Cycle& c);

}  // namespace srs
