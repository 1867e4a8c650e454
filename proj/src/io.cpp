#include "srs/io.hpp"

#include <sstream>

#include "srs/error.hpp"

namespace srs {
namespace {

const char* relation_key(Relation r) {
  switch (r) {
    case Relation::Eq: return "eq";
    case Relation::Ge: return "ge";
    case Relation::Gt: return "gt";
  }
  return "ge";
}

Json parse_line(std::string_view line, std::size_t line_no) {
  try {
    return Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<std::int64_t>())));
  throw Error(ErrorKind::Parse, "expected a rational, got " + j.dump());
}

Json to_json(const RationalPoint& p) {
  Json out = Json::array();
  for (const auto& q : p) out.push_back(to_json(q));
  return out;
}

Json to_json(const LatticePoint& a) { return Json(a.vec()); }

Json to_json(const Cycle& pi) {
  Json out = Json::array();
  for (const auto& a : pi.points) out.push_back(to_json(a));
  return out;
}

Cycle cycle_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::Parse, "cycle must be a nonempty array");
  Cycle pi;
  for (const auto& p : j) {
    if (!p.is_array()) throw Error(ErrorKind::Parse, "cycle point must be an array");
    pi.points.emplace_back(p.get<std::vector<std::int64_t>>());
    if (pi.points.back().dim() != pi.points.front().dim()) throw Error(ErrorKind::DimensionMismatch, "cycle points differ in dimension");
  }
  return pi;
}

Json to_json(const ConvexCell& cell) {
  Json out = {{"eq", Json::array()}, {"ge", Json::array()}, {"gt", Json::array()}};
  for (const auto& c : cell.constraints()) {
    Json row = Json::array();
    for (const auto& a : c.normal()) row.push_back(to_json(a));
    row.push_back(to_json(c.offset()));
    out[relation_key(c.relation())].push_back(std::move(row));
  }
  return out;
}

ConvexCell cell_from_json(const Json& j) {
  std::vector<LinearConstraint> cs;
  std::size_t dim = 0;
  for (auto [key, rel] : {std::pair{"eq", Relation::Eq}, std::pair{"ge", Relation::Ge}, std::pair{"gt", Relation::Gt}}) {
    if (!j.contains(key)) continue;
    for (const auto& row : j.at(key)) {
      if (!row.is_array() || row.size() < 2) throw Error(ErrorKind::Parse, "constraint row too short");
      std::vector<Rational> normal;
      for (std::size_t i = 0; i + 1 < row.size(); ++i) normal.push_back(rational_from_json(row[i]));
      if (dim != 0 && normal.size() != dim) throw Error(ErrorKind::DimensionMismatch, "constraint rows differ in dimension");
      dim = normal.size();
      cs.emplace_back(std::move(normal), rational_from_json(row.back()), rel);
    }
  }
  return ConvexCell(dim == 0 ? 2 : dim, std::move(cs));
}

Json to_json(const FlaggedPolygon& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices) verts.push_back(to_json(v));
  const char* shape = p.shape == PolygonShape::Polygon ? "polygon" : p.shape == PolygonShape::Segment ? "segment" : "point";
  return {{"shape", shape},
          {"vertices", verts},
          {"vertex_contained", p.vertex_contained},
          {"edge_contained", p.edge_contained},
          {"interior_contained", p.interior_contained}};
}

Json to_json(const FinitenessDecision& d) {
  Json out = {{"verdict", to_string(d.verdict)}, {"witness_count", d.witness_count}};
  if (d.witness_cycle) out["cycle"] = to_json(*d.witness_cycle);
  return out;
}

Json to_json(const CertificateCheck& c) { return {{"pass", c.pass}, {"detail", c.detail}}; }

Json to_json(const FamilyReport& r) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v"};
  Json cert = Json::object();
  for (std::size_t i = 0; i < 5; ++i) cert[names[i]] = to_json(r.certificate.checks[i]);
  return {{"family", to_string(r.family)},
          {"n", r.n},
          {"cycle", to_json(r.cycle)},
          {"reordered", r.reordered},
          {"pass", r.pass},
          {"certificate", cert},
          {"polygon", to_json(r.expected)},
          {"computed_matches", r.computed_matches}};
}

Json to_json(const ValidationRecord& r) {
  const auto& t = r.tuple;
  Json out = {{"source", t.source}, {"tuple", {t.n, t.x, t.y, t.a1, t.a2}}, {"status", to_string(r.status)}};
  if (r.period) out["period"] = *r.period;
  if (r.cycle) out["cycle"] = to_json(*r.cycle);
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

Json to_json(const CatalogSummary& s) {
  Json malformed = Json::array();
  for (const auto& d : s.malformed) malformed.push_back({{"source", d.source}, {"text", d.text}, {"reason", d.reason}});
  Json out = {{"well_formed", s.well_formed()},
              {"malformed", s.malformed.size()},
              {"valid", s.valid},
              {"not_periodic", s.not_periodic},
              {"empty_cell", s.empty_cell},
              {"parameter_outside_cell", s.outside_cell},
              {"valid_fraction", s.valid_fraction()},
              {"distinct_cells", s.distinct_cells},
              {"malformed_rows", malformed}};
  if (s.redundancy_checked) {
    Json pairs = Json::array();
    for (auto [i, j] : s.redundant_pairs) pairs.push_back({s.records[i].tuple.source, s.records[j].tuple.source});
    out["redundant_pairs"] = pairs;
  }
  return out;
}

Json to_json(const LandmarkEntry& e) {
  Json out = {{"kind", e.kind},
              {"r", to_json(e.r.entries())},
              {"expected", to_string(e.expected)},
              {"decision", to_json(e.decision)},
              {"pass", e.pass}};
  return out;
}

std::string cutout_report_jsonl(const CutoutReport& report) {
  std::ostringstream out;
  Json hull = Json::array();
  for (const auto& v : report.hull.vertices) hull.push_back(to_json(v));
  const auto& st = report.stats;
  Json header = {{"hull", hull},
                 {"witness_count", report.witness_count},
                 {"stats",
                  {{"generators", st.generators},
                   {"classes", st.classes},
                   {"boundary_classes", st.boundary_classes},
                   {"incremental_steps", st.incremental_steps},
                   {"full_recomputes", st.full_recomputes},
                   {"passes", st.passes}}}};
  out << header.dump() << '\n';
  for (const auto& c : report.cycles) out << Json{{"cycle", to_json(c)}}.dump() << '\n';
  if (report.cells) {
    for (const auto& rec : *report.cells) {
      Json j = {{"cell", to_json(rec.cell)}, {"verdict", to_string(rec.verdict)}, {"probe", to_json(rec.probe)}};
      if (rec.cycle) j["cycle_of_cell"] = to_json(*rec.cycle);
      out << j.dump() << '\n';
    }
  }
  return out.str();
}

CutoutFile parse_cutout_jsonl(std::string_view text) {
  CutoutFile out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const Json j = parse_line(line, line_no);
    if (j.contains("hull")) {
      for (const auto& v : j.at("hull")) {
        RationalPoint p;
        for (const auto& q : v) p.push_back(rational_from_json(q));
        out.hull.push_back(std::move(p));
      }
      out.witness_count = j.value("witness_count", std::size_t{0});
    } else if (j.contains("cell")) {
      CellRecord rec;
      rec.cell = cell_from_json(j.at("cell"));
      rec.verdict = j.value("verdict", std::string("Finite")) == "NonFinite" ? Verdict::NonFinite : Verdict::Finite;
      if (j.contains("probe"))
        for (const auto& q : j.at("probe")) rec.probe.push_back(rational_from_json(q));
      if (j.contains("cycle_of_cell")) rec.cycle = cycle_from_json(j.at("cycle_of_cell"));
      out.cells.push_back(std::move(rec));
    } else if (j.contains("cycle")) {
      out.cycles.push_back(cycle_from_json(j.at("cycle")));
    } else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unrecognized record");
    }
  }
  return out;
}

}  // namespace srs
