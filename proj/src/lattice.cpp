#include "srs/lattice.hpp"

#include <algorithm>
#include <limits>

#include "srs/error.hpp"

namespace srs {

bool LatticePoint::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
}

LatticePoint LatticePoint::operator-() const {
  LatticePoint out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords_[i] == std::numeric_limits<std::int64_t>::min()) throw Error(ErrorKind::Overflow, "negating lattice point");
    out.coords_[i] = -coords_[i];
  }
  return out;
}

LatticePoint LatticePoint::unit(std::size_t dim, std::size_t i, int sign) {
  LatticePoint out(dim);
  out.coords_[i] = sign < 0 ? -1 : 1;
  return out;
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::int64_t x : p.coords()) {
    std::uint64_t v = static_cast<std::uint64_t>(x);
    v ^= v >> 33;
    v *= 0xff51afd7ed558ccdULL;
    v ^= v >> 33;
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string format_lattice_point(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::vector<LatticePoint> unit_witnesses(std::size_t dim) {
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < dim; ++i) {
    out.push_back(LatticePoint::unit(dim, i, +1));
    out.push_back(LatticePoint::unit(dim, i, -1));
  }
  return out;
}

bool Cycle::is_shift_compatible() const {
  const std::size_t n = points.size();
  if (n == 0) return false;
  const std::size_t d = dim();
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint& a = points[i];
    const LatticePoint& b = points[(i + 1) % n];
    if (a.dim() != d || b.dim() != d) return false;
    for (std::size_t j = 1; j < d; ++j) {
      if (a[j] != b[j - 1]) return false;
    }
  }
  return true;
}

bool Cycle::has_distinct_points() const {
  std::vector<LatticePoint> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Cycle Cycle::normalized() const {
  const std::size_t n = points.size();
  if (n <= 1) return *this;
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = points[(s + k) % n];
      const auto& y = points[(best + k) % n];
      if (x < y) {
        best = s;
        break;
      }
      if (y < x) break;
    }
  }
  Cycle out;
  out.points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.points.push_back(points[(best + k) % n]);
  return out;
}

std::string format_cycle(const Cycle& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    if (i) s += ",";
    s += format_lattice_point(c.points[i]);
  }
  return s + ")";
}

}  // namespace srs
