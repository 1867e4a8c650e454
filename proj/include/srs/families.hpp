#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "srs/geometry.hpp"
#include "srs/lattice.hpp"

namespace srs {

enum class FamilyId { C0, C1, C2, C3, C4, C5, C6 };

FamilyId parse_family(std::string_view text);
const char* to_string(FamilyId id);
/// Smallest admissible n, and the largest (0 when unbounded).
std::pair<int, int> family_range(FamilyId id);
bool family_index_valid(FamilyId id, int n);

template <class T>
std::vector<T> concat(const std::vector<T>& s, const std::vector<T>& t) {
  std::vector<T> out = s;
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

template <class T>
std::vector<T> shuffle(const std::vector<std::vector<T>>& tuples) {
  std::vector<T> out;
  for (std::size_t i = 0;; ++i) {
    bool any = false;
    for (const auto& t : tuples) {
      if (i < t.size()) {
        out.push_back(t[i]);
        any = true;
      }
    }
    if (!any) break;
  }
  return out;
}

/// Points of the family cycle in shuffled order, before any reordering.
std::vector<LatticePoint> family_points(FamilyId id, int n);

struct FamilyCycle {
  Cycle cycle;
  bool reordered = false;
};

/// The shuffled points, reordered into the shift-compatible cyclic order if needed.
FamilyCycle family_cycle(FamilyId id, int n);

/// Closed-form polygon with containment flags.
FlaggedPolygon expected_polygon(FamilyId id, int n);

struct CertificateCheck {
  bool pass = true;
  std::string detail;
};

struct EqualityCertificate {
  std::array<CertificateCheck, 5> checks;  // conditions (i) .. (v)
  bool pass() const;
};

EqualityCertificate verify_equality_certificate(const std::vector<LinearConstraint>& halfspaces, const FlaggedPolygon& polygon);

struct FamilyReport {
  FamilyId family = FamilyId::C0;
  int n = 0;
  Cycle cycle;
  bool reordered = false;
  EqualityCertificate certificate;
  FlaggedPolygon expected;
  FlaggedPolygon computed;
  bool computed_matches = false;
  bool pass = false;
};

FamilyReport verify_family(FamilyId id, int n);

/// Same polygon up to the choice of starting vertex.
bool same_polygon(const FlaggedPolygon& a, const FlaggedPolygon& b);

}  // namespace srs
