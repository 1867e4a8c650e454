#include "srs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "srs/catalog.hpp"
#include "srs/error.hpp"
#include "srs/families.hpp"
#include "srs/io.hpp"
#include "srs/parallel.hpp"
#include "srs/render.hpp"
#include "srs/sampling.hpp"

namespace srs {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

ParameterVector parse_parameter(const std::string& text) {
  try {
    return ParameterVector::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--r: ") + e.what());
  }
}

std::string format_points(const std::vector<LatticePoint>& pts) {
  std::string s = "(";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + format_lattice_point(pts[i]);
  return s + ")";
}

struct SquareResult {
  HullSpec square;
  bool settled = false;
  std::string reason;
  std::vector<Cycle> cycles;
  std::size_t witness_count = 0;
};

void sweep_square(const HullSpec& sq, const Rational& blowup, const RunConfig& cfg, std::size_t depth,
                  std::vector<SquareResult>& results) {
  SquareResult r;
  r.square = sq;
  try {
    const auto w = region_witnesses(sq, blowup, cfg.witness_budget);
    const auto rep = algorithm2(sq, w);
    r.settled = true;
    r.cycles = rep.cycles;
    r.witness_count = rep.witness_count;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonStationary && depth < cfg.sweep_depth) {
      const Rational half = (sq.vertices[1][0] - sq.vertices[0][0]) / 2;
      const auto& o = sq.vertices[0];
      for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i)
          sweep_square(square_hull(o[0] + i * half, o[1] + j * half, half), blowup, cfg, depth + 1, results);
      return;
    }
    r.reason = to_string(e.kind());
  }
  results.push_back(std::move(r));
}

struct Context {
  RunConfig cfg;
  bool json = false;
  std::ostream& out;
  std::ostream& err;
};

int cmd_decide(Context& c, const std::string& rtext) {
  const auto r = parse_parameter(rtext);
  const auto d = decide_finiteness(r, c.cfg.witness_budget);
  if (c.json) {
    Json j = to_json(d);
    j["r"] = to_json(r.entries());
    c.out << j.dump() << '\n';
  } else {
    c.out << to_string(d.verdict);
    if (d.witness_cycle) c.out << " cycle=" << format_cycle(*d.witness_cycle);
    c.out << '\n';
  }
  return 0;
}

int cmd_orbit(Context& c, const std::string& rtext, const std::string& atext) {
  const auto r = parse_parameter(rtext);
  LatticePoint a;
  try {
    a = LatticePoint(parse_integer_list(atext));
  } catch (const Error& e) {
    throw UsageError(std::string("--a: ") + e.what());
  }
  if (a.dim() != r.dim()) throw UsageError("--a and --r differ in dimension");
  const auto o = orbit(r, a, c.cfg.orbit_cap);
  if (c.json) {
    Json pre = Json::array();
    for (const auto& p : o.preperiod) pre.push_back(to_json(p));
    c.out << Json{{"preperiod", pre}, {"cycle", to_json(o.cycle)}}.dump() << '\n';
  } else {
    c.out << "preperiod=" << format_points(o.preperiod) << " cycle=" << format_cycle(o.cycle) << '\n';
  }
  return 0;
}

int cmd_witnesses(Context& c, const std::string& rtext) {
  const auto r = parse_parameter(rtext);
  const auto g = witness_set(r, c.cfg.witness_budget);
  if (c.json) {
    Json pts = Json::array();
    for (const auto& v : g.vertices) pts.push_back(to_json(v));
    c.out << Json{{"count", g.size()}, {"points", pts}}.dump() << '\n';
  } else {
    c.out << "count=" << g.size() << '\n';
    for (const auto& v : g.vertices) c.out << format_lattice_point(v) << '\n';
  }
  return 0;
}

int cmd_region(Context& c, const std::string& hull_text, int algorithm, std::size_t grid, bool verify) {
  HullSpec hull;
  try {
    hull = parse_hull(hull_text);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw UsageError(std::string("--hull: ") + e.what());
    throw;
  }
  const Rational blowup = parse_rational(c.cfg.blowup_factor);
  const std::size_t threads = effective_threads(c.cfg);
  if (grid > 0) {
    RationalPoint lo = hull.vertices.front(), hi = lo;
    for (const auto& v : hull.vertices) {
      for (int k = 0; k < 2; ++k) {
        lo[k] = std::min(lo[k], v[k]);
        hi[k] = std::max(hi[k], v[k]);
      }
    }
    if (hi[0] - lo[0] != hi[1] - lo[1]) throw UsageError("--grid requires a square window");
    const Rational side = (hi[0] - lo[0]) / Rational(static_cast<long>(grid));
    std::vector<std::vector<SquareResult>> per(grid * grid);
    parallel_for(grid * grid, threads, [&](std::size_t k) {
      const auto i = static_cast<long>(k % grid), j = static_cast<long>(k / grid);
      HullSpec sq;
      try {
        sq = square_hull(lo[0] + i * side, lo[1] + j * side, side);
      } catch (const Error& e) {
        SquareResult r;
        r.square.vertices = {{lo[0] + i * side, lo[1] + j * side}};
        r.reason = to_string(e.kind());
        per[k].push_back(std::move(r));
        return;
      }
      sweep_square(sq, blowup, c.cfg, 0, per[k]);
    });
    std::vector<SquareResult> all;
    for (auto& v : per)
      for (auto& r : v) all.push_back(std::move(r));
    std::sort(all.begin(), all.end(), [](const SquareResult& a, const SquareResult& b) {
      const auto& p = a.square.vertices.front();
      const auto& q = b.square.vertices.front();
      return std::tie(p[1], p[0]) < std::tie(q[1], q[0]) ||
             (p == q && a.square.vertices.size() > 1 && b.square.vertices.size() > 1 &&
              a.square.vertices[1][0] < b.square.vertices[1][0]);
    });
    std::set<Cycle> cycles;
    std::size_t settled = 0, max_witness = 0;
    Json unsettled = Json::array();
    for (const auto& r : all) {
      if (r.settled) {
        ++settled;
        max_witness = std::max(max_witness, r.witness_count);
        cycles.insert(r.cycles.begin(), r.cycles.end());
      } else {
        Json sq = Json::array();
        for (const auto& v : r.square.vertices) sq.push_back(to_json(v));
        unsettled.push_back({{"square", sq}, {"reason", r.reason}});
      }
    }
    Json hull_json = Json::array();
    for (const auto& v : hull.vertices) hull_json.push_back(to_json(v));
    std::ostringstream jl;
    jl << Json{{"hull", hull_json},
               {"witness_count", max_witness},
               {"squares", all.size()},
               {"settled", settled},
               {"unsettled", unsettled}}
              .dump()
       << '\n';
    for (const auto& pi : cycles) jl << Json{{"cycle", to_json(pi)}}.dump() << '\n';
    write_output(c.cfg.out, jl.str(), c.out);
    if (!c.cfg.out.empty()) {
      c.out << "squares=" << all.size() << " settled=" << settled << " cycles=" << cycles.size() << '\n';
    }
    return unsettled.empty() ? 0 : 1;
  }

  CutoutReport rep;
  if (algorithm == 1) {
    rep = algorithm1(hull);
  } else {
    rep = algorithm2(hull, region_witnesses(hull, blowup, c.cfg.witness_budget));
  }
  write_output(c.cfg.out, cutout_report_jsonl(rep), c.out);
  int code = 0;
  std::ostream& summary = c.cfg.out.empty() ? c.err : c.out;
  summary << "algorithm=" << algorithm << " witnesses=" << rep.witness_count << " cycles=" << rep.cycles.size()
          << " classes=" << rep.stats.classes;
  if (rep.cells) summary << " cells=" << rep.cells->size();
  summary << '\n';
  if (verify) {
    const auto agreement = check_against_oracle(rep, c.cfg.sample_count, c.cfg.seed, threads);
    summary << "agreement=" << agreement.agree << "/" << agreement.samples << " nonfinite=" << agreement.non_finite << '\n';
    for (const auto& p : agreement.disagreements) summary << "disagree " << format_point(p) << '\n';
    if (!agreement.disagreements.empty()) code = 1;
  }
  return code;
}

int cmd_family(Context& c, const std::string& id_text, int n) {
  FamilyId id;
  try {
    id = parse_family(id_text);
  } catch (const Error& e) {
    throw UsageError(std::string("--id: ") + e.what());
  }
  if (!family_index_valid(id, n)) throw UsageError("--n outside the range of " + id_text);
  const auto rep = verify_family(id, n);
  if (c.json) {
    c.out << to_json(rep).dump() << '\n';
  } else {
    static const char* names[] = {"i", "ii", "iii", "iv", "v"};
    c.out << to_string(id) << "(" << n << ") " << (rep.pass ? "pass" : "FAIL") << " reordered=" << (rep.reordered ? "yes" : "no")
          << " cycle=" << format_cycle(rep.cycle) << '\n';
    for (std::size_t i = 0; i < 5; ++i) {
      const auto& ch = rep.certificate.checks[i];
      c.out << "  (" << names[i] << ") " << (ch.pass ? "pass" : "FAIL");
      if (!ch.detail.empty()) c.out << " " << ch.detail;
      c.out << '\n';
    }
    c.out << "  polygon";
    for (std::size_t i = 0; i < rep.expected.vertices.size(); ++i)
      c.out << " " << format_point(rep.expected.vertices[i]) << (rep.expected.vertex_contained[i] ? "*" : "");
    c.out << "\n  computed " << (rep.computed_matches ? "matches" : "DIFFERS") << '\n';
  }
  return rep.pass ? 0 : 1;
}

int cmd_catalog(Context& c, const std::string& file, bool redundancy) {
  const auto parsed = parse_catalog(read_file(file));
  const auto s = verify_catalog(parsed, kDefaultDecodeCap, redundancy, effective_threads(c.cfg));
  if (!c.cfg.out.empty()) {
    std::ostringstream jl;
    for (const auto& r : s.records) jl << to_json(r).dump() << '\n';
    write_output(c.cfg.out, jl.str(), c.out);
  }
  if (c.json) {
    c.out << to_json(s).dump() << '\n';
  } else {
    c.out << "well_formed=" << s.well_formed() << " malformed=" << s.malformed.size() << " valid=" << s.valid
          << " not_periodic=" << s.not_periodic << " empty_cell=" << s.empty_cell << " outside_cell=" << s.outside_cell
          << " distinct_cells=" << s.distinct_cells << '\n';
    for (const auto& d : s.malformed) c.out << "malformed " << d.source << " " << d.text << ": " << d.reason << '\n';
    for (const auto& r : s.records) {
      if (r.status != CatalogStatus::Valid)
        c.out << to_string(r.status) << " " << r.tuple.source << " " << format_tuple(r.tuple) << ": " << r.reason << '\n';
    }
    if (s.redundancy_checked) c.out << "redundant_pairs=" << s.redundant_pairs.size() << '\n';
  }
  return s.has_cell_failures() ? 1 : 0;
}

int cmd_landmarks(Context& c) {
  const auto entries = landmark_report(c.cfg.witness_budget, effective_threads(c.cfg));
  std::size_t passed = 0;
  for (const auto& e : entries) {
    passed += e.pass;
    if (c.json) {
      c.out << to_json(e).dump() << '\n';
    } else {
      c.out << (e.pass ? "pass " : "FAIL ") << e.kind << " " << format_parameter(e.r) << " " << to_string(e.decision.verdict)
            << " witnesses=" << e.decision.witness_count;
      if (e.decision.witness_cycle) c.out << " cycle=" << format_cycle(*e.decision.witness_cycle);
      c.out << '\n';
    }
  }
  if (!c.json) c.out << "passed " << passed << "/" << entries.size() << '\n';
  return passed == entries.size() ? 0 : 1;
}

int cmd_render(Context& c, const std::string& cutouts, const std::string& window) {
  std::vector<Rational> w;
  try {
    w = parse_rational_list(window);
  } catch (const Error& e) {
    throw UsageError(std::string("--window: ") + e.what());
  }
  if (w.size() != 4) throw UsageError("--window expects x0,y0,x1,y1");
  const auto file = parse_cutout_jsonl(read_file(cutouts));
  const auto scene = scene_from_cutouts({w[0], w[1]}, {w[2], w[3]}, file);
  write_output(c.cfg.out, render_svg(scene), c.out);
  return 0;
}

}  // namespace

std::size_t effective_threads(const RunConfig& cfg) {
  std::size_t width = cfg.parallel_width ? cfg.parallel_width : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SRS_ATLAS_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) width = std::min<std::size_t>(width, static_cast<std::size_t>(cap));
  }
  return width;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact shift radix system finiteness toolkit", "srs_atlas"};
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "key=value file with run settings");
  RunConfig cfg;
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON on stdout");
  app.add_option("--orbit-cap,--orbit_cap", cfg.orbit_cap, "Step cap for orbit")->check(CLI::PositiveNumber);
  app.add_option("--witness-budget,--witness_budget", cfg.witness_budget, "Vertex budget for witness sets")->check(CLI::PositiveNumber);
  app.add_option("--blowup,--blowup_factor", cfg.blowup_factor, "Blow-up factor for region witnesses");
  app.add_option("--samples,--sample_count", cfg.sample_count, "Sample count for verification")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Sampling seed");
  app.add_option("--threads,--parallel_width", cfg.parallel_width, "Parallel width (0: all cores)");
  app.add_option("--sweep-depth,--sweep_depth", cfg.sweep_depth, "Subdivision depth for the grid sweep");

  std::string r_text, a_text, hull_text, id_text, file, cutouts, window;
  int algorithm = 2, n = 0;
  std::size_t grid = 0;
  bool redundancy = false, verify = false;

  auto* decide = app.add_subcommand("decide", "Decide the finiteness property at r");
  decide->add_option("--r", r_text, "Parameter, comma separated rationals")->required();
  auto* orb = app.add_subcommand("orbit", "Orbit of a under tau_r");
  orb->add_option("--r", r_text)->required();
  orb->add_option("--a", a_text, "Lattice point, comma separated integers")->required();
  auto* wit = app.add_subcommand("witnesses", "Witness set of r");
  wit->add_option("--r", r_text)->required();
  auto* region = app.add_subcommand("region", "Cutouts covering a hull");
  region->add_option("--hull", hull_text, "Points x,y;x,y;...")->required();
  region->add_option("--algorithm", algorithm)->check(CLI::IsMember({1, 2}));
  region->add_option("--out", cfg.out, "JSONL output");
  region->add_option("--grid", grid, "Sweep the hull's bounding square in grid x grid squares");
  region->add_flag("--verify", verify, "Compare with decide at sampled points");
  auto* fam = app.add_subcommand("family", "Verify a cutout family member");
  fam->add_option("--id", id_text, "C0..C6")->required();
  fam->add_option("--n", n)->required();
  auto* cat = app.add_subcommand("catalog", "Validate a catalog of 5-tuples");
  cat->add_option("--file", file)->required();
  cat->add_flag("--check-redundancy", redundancy);
  cat->add_option("--out", cfg.out, "JSONL per-tuple records");
  auto* landmarks = app.add_subcommand("landmarks", "Check the listed components and holes");
  auto* render = app.add_subcommand("render", "SVG map of cutouts");
  render->add_option("--cutouts", cutouts, "JSONL from region")->required();
  render->add_option("--window", window, "x0,y0,x1,y1")->required();
  render->add_option("--out", cfg.out, "SVG output");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Context c{cfg, json, out, err};
  try {
    if (*decide) return cmd_decide(c, r_text);
    if (*orb) return cmd_orbit(c, r_text, a_text);
    if (*wit) return cmd_witnesses(c, r_text);
    if (*region) return cmd_region(c, hull_text, algorithm, grid, verify);
    if (*fam) return cmd_family(c, id_text, n);
    if (*cat) return cmd_catalog(c, file, redundancy);
    if (*landmarks) return cmd_landmarks(c);
    if (*render) return cmd_render(c, cutouts, window);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace srs
