#include "srs/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <map>
#include <unordered_map>

#include "srs/error.hpp"
#include "srs/parallel.hpp"

namespace srs {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::string buf(s);
  if (s.starts_with("\xE2\x88\x92")) buf = "-" + std::string(s.substr(3));  // U+2212
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc() || p != buf.data() + buf.size() || buf.empty()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

void add_row(ParsedCatalog& out, std::string_view body, const std::string& source) {
  const auto fields = split(body, ',');
  std::string reason;
  std::vector<std::int64_t> vals;
  if (fields.size() != 5) {
    reason = std::to_string(fields.size()) + " fields";
  } else {
    for (auto f : fields) {
      auto v = parse_int(f);
      if (!v) {
        reason = "non-integer field '" + std::string(trim(f)) + "'";
        break;
      }
      vals.push_back(*v);
    }
    if (reason.empty() && vals[0] <= 0) reason = "n must be positive";
  }
  if (!reason.empty()) {
    out.diagnostics.push_back({source, "(" + std::string(body) + ")", reason});
    return;
  }
  out.tuples.push_back({vals[0], vals[1], vals[2], vals[3], vals[4], source});
}

}  // namespace

ParameterVector CatalogTuple::parameter() const {
  return ParameterVector({Rational(BigInt(static_cast<long>(x)), BigInt(static_cast<long>(n))),
                          Rational(BigInt(static_cast<long>(y)), BigInt(static_cast<long>(n)))});
}

std::string format_tuple(const CatalogTuple& t) {
  return "(" + std::to_string(t.n) + ", " + std::to_string(t.x) + ", " + std::to_string(t.y) + ", " + std::to_string(t.a1) +
         ", " + std::to_string(t.a2) + ")";
}

const char* to_string(CatalogStatus s) {
  switch (s) {
    case CatalogStatus::Valid: return "Valid";
    case CatalogStatus::MalformedRow: return "MalformedRow";
    case CatalogStatus::NotPeriodic: return "NotPeriodic";
    case CatalogStatus::EmptyCell: return "EmptyCell";
    case CatalogStatus::ParameterOutsideCell: return "ParameterOutsideCell";
  }
  return "?";
}

ParsedCatalog parse_catalog(std::string_view text) {
  ParsedCatalog out;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.find('(') == std::string_view::npos && t.find(')') == std::string_view::npos) {
      // CSV row; a header of non-numeric fields is skipped.
      const auto fields = split(t, ',');
      if (std::none_of(fields.begin(), fields.end(), [](std::string_view f) { return parse_int(f).has_value(); })) continue;
      add_row(out, t, "line " + std::to_string(line_no));
      continue;
    }
    std::size_t entry = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t open = t.find('(', pos);
      if (open == std::string_view::npos) break;
      const std::size_t close = t.find(')', open);
      ++entry;
      const std::string source = "line " + std::to_string(line_no) + ", entry " + std::to_string(entry);
      if (close == std::string_view::npos) {
        out.diagnostics.push_back({source, std::string(t.substr(open)), "unterminated tuple"});
        break;
      }
      add_row(out, t.substr(open + 1, close - open - 1), source);
      pos = close + 1;
    }
  }
  return out;
}

ValidationRecord decode_tuple(const CatalogTuple& t, std::size_t cap) {
  ValidationRecord rec;
  rec.tuple = t;
  const ParameterVector r = t.parameter();
  const LatticePoint a = t.point();
  Cycle pi;
  try {
    LatticePoint x = a;
    for (std::size_t k = 1; k <= cap; ++k) {
      x = tau(r, x);
      pi.points.push_back(x);
      if (x == a) {
        rec.period = k;
        break;
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow) throw;
    rec.status = CatalogStatus::NotPeriodic;
    rec.reason = "orbit leaves the 64-bit range";
    return rec;
  }
  if (!rec.period) {
    rec.status = CatalogStatus::NotPeriodic;
    rec.reason = "no return to a within " + std::to_string(cap) + " steps";
    return rec;
  }
  if (pi.is_trivial()) {
    rec.status = CatalogStatus::NotPeriodic;
    rec.reason = "trivial cycle";
    return rec;
  }
  rec.cycle = pi;
  const ConvexCell cell = cutout_polyhedron(pi);
  if (cell_is_empty(cell)) {
    rec.status = CatalogStatus::EmptyCell;
    rec.reason = "cutout cell is empty";
  } else if (!cell_contains(cell, r.entries())) {
    rec.status = CatalogStatus::ParameterOutsideCell;
    rec.reason = "parameter outside its cutout cell";
  } else {
    rec.status = CatalogStatus::Valid;
  }
  return rec;
}

CatalogSummary verify_catalog(const ParsedCatalog& parsed, std::size_t cap, bool check_redundancy, std::size_t threads) {
  CatalogSummary s;
  s.malformed = parsed.diagnostics;
  s.records.resize(parsed.tuples.size());
  parallel_for(parsed.tuples.size(), threads, [&](std::size_t i) { s.records[i] = decode_tuple(parsed.tuples[i], cap); });
  std::vector<std::size_t> valid;
  for (std::size_t i = 0; i < s.records.size(); ++i) {
    switch (s.records[i].status) {
      case CatalogStatus::Valid:
        ++s.valid;
        valid.push_back(i);
        break;
      case CatalogStatus::NotPeriodic: ++s.not_periodic; break;
      case CatalogStatus::EmptyCell: ++s.empty_cell; break;
      case CatalogStatus::ParameterOutsideCell: ++s.outside_cell; break;
      case CatalogStatus::MalformedRow: break;
    }
  }
  std::vector<ConvexCell> cells;
  cells.reserve(valid.size());
  for (std::size_t i : valid) cells.push_back(cutout_polyhedron(*s.records[i].cycle));
  {
    std::vector<ConvexCell> sorted_cells;
    std::vector<std::string> keys;
    for (const auto& c : cells) {
      std::string k;
      for (const auto& lc : c.constraints()) k += format_constraint(lc) + ";";
      keys.push_back(std::move(k));
    }
    std::sort(keys.begin(), keys.end());
    s.distinct_cells = static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
  }
  if (check_redundancy) {
    s.redundancy_checked = true;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> found(valid.size());
    parallel_for(valid.size(), threads, [&](std::size_t vi) {
      const auto r = s.records[valid[vi]].tuple.parameter();
      for (std::size_t vj = 0; vj < valid.size(); ++vj) {
        if (vi != vj && cell_contains(cells[vj], r.entries())) found[vi].emplace_back(valid[vi], valid[vj]);
      }
    });
    for (auto& f : found) s.redundant_pairs.insert(s.redundant_pairs.end(), f.begin(), f.end());
  }
  return s;
}

std::vector<ParameterVector> landmark_components() {
  static const char* list[] = {"1/2,1/2",         "152/157,193/157",  "313/315,239/210",   "167/168,255/224",
                               "314/317,359/317", "453/455,496/455",  "305/306,37/34",     "362/363,259/242",
                               "356/357,382/357", "358/359,384/359",  "1121/1124,601/562", "1375/1378,640/689",
                               "2061/2066,959/1033", "309/310,141/155", "1533/1538,699/769", "989/992,901/992",
                               "1127/1133,1009/1133", "1607/1612,691/806", "694/697,521/697", "92/93,16/31",
                               "537/539,67/539",  "304/305,38/305"};
  std::vector<ParameterVector> out;
  for (auto s : list) out.push_back(ParameterVector::parse(s));
  return out;
}

std::vector<ParameterVector> landmark_holes() {
  return {ParameterVector::parse("911/914,391/457"), ParameterVector::parse("2455/2463,2108/2463"),
          ParameterVector::parse("265/266,1/4")};
}

std::vector<LandmarkEntry> landmark_report(std::size_t budget, std::size_t threads) {
  std::vector<LandmarkEntry> entries;
  for (auto& r : landmark_components()) entries.push_back({"component", r, Verdict::Finite, {}, 0, false});
  for (auto& r : landmark_holes()) entries.push_back({"hole", r, Verdict::NonFinite, {}, 0, false});
  parallel_for(entries.size(), threads, [&](std::size_t i) {
    auto& e = entries[i];
    const auto t0 = std::chrono::steady_clock::now();
    e.decision = decide_finiteness(e.r, budget);
    e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    e.pass = e.decision.verdict == e.expected &&
             (e.expected == Verdict::Finite ||
              (e.decision.witness_cycle && !e.decision.witness_cycle->is_trivial() &&
               cell_contains(cutout_polyhedron(*e.decision.witness_cycle), e.r.entries())));
  });
  return entries;
}

RegionCCells region_c_cells(const RegionCDescription& desc) {
  RegionCCells out;
  const Rational one(1), two(2);
  const Rational s = Rational(3, 2) * desc.L;
  out.c1.add(LinearConstraint({Rational(-1), Rational(0)}, one - desc.L, Relation::Ge));
  out.c2_vertices = convex_hull_2d({{one - desc.K, two - desc.K},
                                    {one - desc.K + s, two - desc.K},
                                    {one - s, two - 2 * s},
                                    {one, two}});
  const auto& v = out.c2_vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    const Rational dx = q[0] - p[0], dy = q[1] - p[1];
    out.c2.add(LinearConstraint({-dy, dx}, dy * p[0] - dx * p[1], Relation::Gt));
  }
  return out;
}

std::vector<GridSquare> region_c_squares(const RegionCDescription& desc, const RationalPoint& lo, const RationalPoint& hi) {
  const auto cells = region_c_cells(desc);
  const Rational n(static_cast<long>(desc.n_grid));
  const std::int64_t x0 = to_int64(ceil_of(lo[0] * n)), x1 = to_int64(floor_of(hi[0] * n)) - 1;
  const std::int64_t y0 = to_int64(ceil_of(lo[1] * n)), y1 = to_int64(floor_of(hi[1] * n)) - 1;
  std::vector<GridSquare> out;
  for (std::int64_t x = x0; x <= x1; ++x) {
    const Rational left = Rational(static_cast<long>(x)) / n;
    if (left > 1 - desc.L) break;
    for (std::int64_t y = y0; y <= y1; ++y) {
      const Rational bottom = Rational(static_cast<long>(y)) / n;
      bool inside_c2 = true;
      for (int cx = 0; cx < 2 && inside_c2; ++cx) {
        for (int cy = 0; cy < 2 && inside_c2; ++cy) {
          RationalPoint corner = {left + Rational(cx) / n, bottom + Rational(cy) / n};
          inside_c2 = cell_contains(cells.c2, corner);
        }
      }
      if (!inside_c2) out.push_back({x, y});
    }
  }
  return out;
}

}  // namespace srs
