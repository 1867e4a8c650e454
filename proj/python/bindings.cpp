#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "srs/catalog.hpp"
#include "srs/cli.hpp"
#include "srs/core.hpp"
#include "srs/error.hpp"
#include "srs/families.hpp"
#include "srs/io.hpp"
#include "srs/region.hpp"
#include "srs/render.hpp"

namespace py = pybind11;
using namespace srs;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

ParameterVector param(const std::string& r) { return ParameterVector::parse(r); }

LatticePoint point(const std::vector<std::int64_t>& a) { return LatticePoint(a); }

std::vector<std::int64_t> coords(const LatticePoint& a) { return {a.coords().begin(), a.coords().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact finiteness analysis for shift radix systems";

  static py::exception<Error> srs_error(m, "SrsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(srs_error.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "tau", [](const std::string& r, const std::vector<std::int64_t>& a) { return coords(tau(param(r), point(a))); },
      py::arg("r"), py::arg("a"));
  m.def(
      "orbit",
      [](const std::string& r, const std::vector<std::int64_t>& a, std::size_t cap) {
        const auto o = orbit(param(r), point(a), cap);
        std::vector<std::vector<std::int64_t>> pre, cyc;
        for (const auto& x : o.preperiod) pre.push_back(coords(x));
        for (const auto& x : o.cycle.points) cyc.push_back(coords(x));
        py::dict d;
        d["preperiod"] = pre;
        d["cycle"] = cyc;
        return d;
      },
      py::arg("r"), py::arg("a"), py::arg("cap") = kDefaultOrbitCap);
  m.def(
      "witness_set",
      [](const std::string& r, std::size_t budget) {
        std::vector<std::vector<std::int64_t>> pts;
        for (const auto& x : witness_set(param(r), budget).vertices) pts.push_back(coords(x));
        return pts;
      },
      py::arg("r"), py::arg("budget") = kDefaultWitnessBudget);
  m.def(
      "decide",
      [](const std::string& r, std::size_t budget) {
        py::gil_scoped_release release;
        const auto d = decide_finiteness(param(r), budget);
        py::gil_scoped_acquire acquire;
        return to_py(to_json(d));
      },
      py::arg("r"), py::arg("budget") = kDefaultWitnessBudget);
  m.def(
      "cutout_cell",
      [](const std::vector<std::vector<std::int64_t>>& cycle) {
        Cycle pi;
        for (const auto& a : cycle) pi.points.push_back(point(a));
        return to_py(to_json(cutout_polyhedron(pi)));
      },
      py::arg("cycle"));
  m.def(
      "cell_contains",
      [](const py::object& cell, const std::string& x) {
        const auto c = cell_from_json(Json::parse(py::str(py::module_::import("json").attr("dumps")(cell)).cast<std::string>()));
        return srs::cell_contains(c, parse_rational_list(x));
      },
      py::arg("cell"), py::arg("point"));
  m.def(
      "verify_family", [](const std::string& id, int n) { return to_py(to_json(srs::verify_family(parse_family(id), n))); },
      py::arg("family"), py::arg("n"));
  m.def(
      "verify_catalog",
      [](const std::string& text, bool check_redundancy, std::size_t threads) {
        CatalogSummary s;
        {
          py::gil_scoped_release release;
          s = srs::verify_catalog(parse_catalog(text), kDefaultDecodeCap, check_redundancy, threads);
        }
        return to_py(to_json(s));
      },
      py::arg("text"), py::arg("check_redundancy") = false, py::arg("threads") = 1);
  m.def(
      "region",
      [](const std::string& hull, int algorithm) {
        std::string out;
        {
          py::gil_scoped_release release;
          const auto h = parse_hull(hull);
          out = cutout_report_jsonl(algorithm == 1 ? algorithm1(h) : algorithm2(h, region_witnesses(h)));
        }
        return out;
      },
      py::arg("hull"), py::arg("algorithm") = 2);
  m.def(
      "render",
      [](const std::string& jsonl, const std::string& window) {
        const auto w = parse_rational_list(window);
        if (w.size() != 4) throw Error(ErrorKind::Parse, "window needs x0,y0,x1,y1");
        return render_svg(scene_from_cutouts({w[0], w[1]}, {w[2], w[3]}, parse_cutout_jsonl(jsonl)));
      },
      py::arg("cutouts"), py::arg("window"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = srs::run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
