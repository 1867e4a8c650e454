#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srs/core.hpp"
#include "srs/geometry.hpp"

namespace srs {

inline constexpr std::size_t kDefaultDecodeCap = 100'000;

struct CatalogTuple {
  std::int64_t n = 1, x = 0, y = 0, a1 = 0, a2 = 0;
  std::string source;  // "line L" or "line L, entry E"

  ParameterVector parameter() const;
  LatticePoint point() const { return LatticePoint{a1, a2}; }
};

std::string format_tuple(const CatalogTuple& t);

enum class CatalogStatus { Valid, MalformedRow, NotPeriodic, EmptyCell, ParameterOutsideCell };
const char* to_string(CatalogStatus s);

struct CatalogDiagnostic {
  std::string source;
  std::string text;
  std::string reason;
};

struct ParsedCatalog {
  std::vector<CatalogTuple> tuples;
  std::vector<CatalogDiagnostic> diagnostics;
};

/// Parenthesized tuples anywhere in the text; lines without parentheses are read as CSV rows.
ParsedCatalog parse_catalog(std::string_view text);

struct ValidationRecord {
  CatalogTuple tuple;
  CatalogStatus status = CatalogStatus::Valid;
  std::optional<std::size_t> period;
  std::optional<Cycle> cycle;
  std::string reason;
};

ValidationRecord decode_tuple(const CatalogTuple& t, std::size_t cap = kDefaultDecodeCap);

struct CatalogSummary {
  std::vector<ValidationRecord> records;
  std::vector<CatalogDiagnostic> malformed;
  std::size_t valid = 0, not_periodic = 0, empty_cell = 0, outside_cell = 0;
  std::size_t distinct_cells = 0;
  bool redundancy_checked = false;
  /// (i, j): the parameter of record i lies in the cutout cell of record j.
  std::vector<std::pair<std::size_t, std::size_t>> redundant_pairs;

  std::size_t well_formed() const { return records.size(); }
  double valid_fraction() const { return records.empty() ? 1.0 : static_cast<double>(valid) / records.size(); }
  /// Failures that make the catalog command exit nonzero.
  bool has_cell_failures() const { return empty_cell + outside_cell > 0; }
};

CatalogSummary verify_catalog(const ParsedCatalog& parsed, std::size_t cap = kDefaultDecodeCap, bool check_redundancy = false,
                              std::size_t threads = 1);

struct LandmarkEntry {
  std::string kind;  // "component" or "hole"
  ParameterVector r;
  Verdict expected = Verdict::Finite;
  FinitenessDecision decision;
  double seconds = 0;
  bool pass = false;
};

std::vector<ParameterVector> landmark_components();
std::vector<ParameterVector> landmark_holes();
std::vector<LandmarkEntry> landmark_report(std::size_t budget = kDefaultWitnessBudget, std::size_t threads = 1);

struct RegionCDescription {
  Rational K{1, 20};
  Rational L{1, 512};
  std::int64_t n_grid = 8192;
};

struct RegionCCells {
  ConvexCell c1{2};                    // x <= 1 - L
  ConvexCell c2{2};                    // open quadrangle near (1, 2)
  std::vector<RationalPoint> c2_vertices;
};

/// sqrt(2) L is replaced by 3/2 L.
RegionCCells region_c_cells(const RegionCDescription& desc);

struct GridSquare {
  std::int64_t x = 0, y = 0;  // square [x/n, (x+1)/n] x [y/n, (y+1)/n]
};

/// Grid squares of side 1/n_grid inside [x0, x1] x [y0, y1] that meet C = C1 \ C2.
std::vector<GridSquare> region_c_squares(const RegionCDescription& desc, const RationalPoint& window_lo,
                                         const RationalPoint& window_hi);

}  // namespace srs
