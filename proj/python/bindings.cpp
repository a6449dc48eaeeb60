#include "tetra/codes.hpp"
#include "tetra/discrepancy.hpp"
#include "tetra/lattice.hpp"
#include "tetra/theta.hpp"
#include "tetra/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tetra;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

Rational rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

ParamPoint point(const py::sequence& s) {
  if (py::len(s) != 4) throw py::value_error("params must have four entries");
  return ParamPoint(rational(s[0]), rational(s[1]), rational(s[2]), rational(s[3]));
}

py::list collapsed(const std::vector<CollapsedTerm>& rows) {
  py::list out;
  for (const auto& r : rows) out.append(py::make_tuple(fraction(r.exponent), fraction(r.coefficient)));
  return out;
}

const Lattice& lattice(const std::string& name) {
  const Family& f = build_family();
  if (name == "L") return f.L;
  if (name == "L1") return f.L1;
  if (name == "L2") return f.L2;
  if (name == "M") return f.M;
  if (name == "L12") return f.L12;
  throw py::value_error("unknown lattice: " + name);
}

DeltaRoute route(const std::string& name) {
  if (name == "psi") return DeltaRoute::FromPsiKernel;
  if (name == "theta") return DeltaRoute::FromTheta;
  throw py::value_error("route must be 'psi' or 'theta'");
}

py::tuple tuple4(const std::array<std::int64_t, 4>& n) { return py::make_tuple(n[0], n[1], n[2], n[3]); }

py::dict certificate(const Certificate& c) {
  py::list params, sorted, terms;
  for (int i = 0; i < 4; ++i) {
    params.append(fraction(c.params[i]));
    sorted.append(fraction(c.sorted_params[i]));
  }
  for (const auto& t : c.terms) {
    py::dict d;
    d["exponent_vector"] = tuple4(t.exponent.n);
    d["polynomial"] = to_string(t.polynomial);
    d["value"] = fraction(t.value);
    terms.append(d);
  }
  py::dict d;
  d["params"] = params;
  d["sorted_params"] = sorted;
  d["permutation"] = c.permutation;
  d["budget"] = c.budget;
  d["min_exponent"] = c.min_exponent ? fraction(*c.min_exponent) : py::none();
  d["terms"] = terms;
  d["total"] = fraction(c.total);
  d["verdict"] = to_string(c.verdict);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice, code and theta-series computations";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "codes",
      [] {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : all_selfdual_codes())
          out.push_back({to_string(c.generators()[0]), to_string(c.generators()[1])});
        return out;
      },
      "Generators of the self-dual codes C1..C8 in balanced form.");

  m.def("orbits", [] { return orbit_partition(all_selfdual_codes()); },
        "K4 orbits on the self-dual codes, as 0-based index lists.");

  m.def("intersection_graph", [] { return intersection_graph(all_selfdual_codes()); },
        "Pairs of self-dual codes meeting in a line.");

  m.def(
      "exp_cmp",
      [](const std::array<std::int64_t, 4>& e, const std::array<std::int64_t, 4>& f) {
        return std::string(to_string(exp_cmp(ExponentVector(e[0], e[1], e[2], e[3]),
                                             ExponentVector(f[0], f[1], f[2], f[3]))));
      },
      py::arg("e"), py::arg("f"));

  m.def(
      "spectrum",
      [](const std::string& name, const py::sequence& params, std::int64_t budget) {
        return collapsed(series_collapse(rep_series(lattice(name), budget), point(params)));
      },
      py::arg("lattice"), py::arg("params"), py::arg("budget") = 40,
      "Representation numbers as (norm, count) pairs.");

  m.def(
      "delta",
      [](const py::sequence& params, std::int64_t budget, const std::string& r) {
        return collapsed(series_collapse(delta_series(budget, route(r)), point(params)));
      },
      py::arg("params"), py::arg("budget") = 40, py::arg("route") = "psi",
      "Collapsed discrepancy series as (exponent, coefficient) pairs.");

  m.def(
      "certify", [](const py::sequence& params, std::int64_t budget) { return certificate(certify(point(params), budget)); },
      py::arg("params"), py::arg("budget") = 40);

  m.def(
      "psi",
      [](const std::array<std::int64_t, 4>& v) { return psi({v[0], v[1], v[2], v[3]}).x; },
      py::arg("v"), "Psi: L1 -> L2 in eigen coordinates.");

  m.def(
      "verify",
      [](std::int64_t budget) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& r : run_anchors(budget)) out.emplace_back(r.anchor, r.passed, r.witness);
        return out;
      },
      py::arg("budget") = 40);
}
