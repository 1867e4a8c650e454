#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "srs/catalog.hpp"
#include "srs/core.hpp"
#include "srs/families.hpp"
#include "srs/geometry.hpp"
#include "srs/region.hpp"

namespace srs {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const RationalPoint& p);
Json to_json(const LatticePoint& a);
Json to_json(const Cycle& pi);
Cycle cycle_from_json(const Json& j);

/// {"eq": [[a..., b], ...], "ge": [...], "gt": [...]}; each row means a.x + b (rel) 0.
Json to_json(const ConvexCell& cell);
ConvexCell cell_from_json(const Json& j);
Json to_json(const FlaggedPolygon& p);

Json to_json(const FinitenessDecision& d);
Json to_json(const CertificateCheck& c);
Json to_json(const FamilyReport& r);
Json to_json(const ValidationRecord& r);
Json to_json(const CatalogSummary& s);
Json to_json(const LandmarkEntry& e);

/// Header record followed by one record per cycle and, for cell-based runs, per cell.
std::string cutout_report_jsonl(const CutoutReport& report);

struct CutoutFile {
  std::vector<RationalPoint> hull;
  std::size_t witness_count = 0;
  std::vector<Cycle> cycles;
  std::vector<CellRecord> cells;
};
CutoutFile parse_cutout_jsonl(std::string_view text);

}  // namespace srs
