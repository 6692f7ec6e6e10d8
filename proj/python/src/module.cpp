#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypostab/decay.hpp"
#include "hypostab/error.hpp"
#include "hypostab/hypo.hpp"
#include "hypostab/io.hpp"
#include "hypostab/reproduce.hpp"
#include "hypostab/rk.hpp"
#include "hypostab/stab.hpp"

namespace py = pybind11;
using hypostab::io::json;

namespace {

// Everything crosses the boundary as JSON text; the Python layer wraps it.

hypostab::MatrixExact matrix_arg(const std::string& text) {
  try {
    return hypostab::io::matrix_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw hypostab::Error(hypostab::ErrorKind::Parse, e.what());
  }
}

hypostab::StabilityFn scheme_arg(std::optional<unsigned> p, const std::optional<std::string>& tableau) {
  if (tableau) {
    try {
      return hypostab::stability_function(hypostab::io::tableau_from_json(json::parse(*tableau)));
    } catch (const json::parse_error& e) {
      throw hypostab::Error(hypostab::ErrorKind::Parse, e.what());
    }
  }
  if (!p) throw hypostab::Error(hypostab::ErrorKind::InvalidArgument, "give p or tableau");
  return hypostab::taylor_scheme(*p);
}

std::string hc_index(const std::string& matrix) {
  return hypostab::io::to_json(hypostab::hc_report(matrix_arg(matrix))).dump();
}

std::string det_leading(unsigned p) {
  const hypostab::Rational c = hypostab::closed_form_c(p);
  const auto d = hypostab::det_leading_term(hypostab::staircase(1 + p / 2), hypostab::taylor_scheme(p));
  json j = hypostab::io::to_json(d);
  j["p"] = p;
  j["N"] = 1 + p / 2;
  j["closed_form_c"] = hypostab::to_string(c);
  j["closed_form_equal"] = d.coeff == hypostab::Exact(c);
  return j.dump();
}

std::string stability_function(std::optional<unsigned> p, const std::optional<std::string>& tableau) {
  return hypostab::io::to_json(scheme_arg(p, tableau)).dump();
}

std::string sweep(std::optional<unsigned> p, const std::string& epsilon, std::size_t grid, long bits,
                  const std::optional<std::string>& matrix, const std::optional<std::string>& tableau,
                  bool keep_curve) {
  const auto r = scheme_arg(p, tableau);
  hypostab::MatrixExact l;
  if (matrix) {
    l = matrix_arg(*matrix);
  } else if (p) {
    l = hypostab::staircase(1 + *p / 2);
  } else {
    throw hypostab::Error(hypostab::ErrorKind::InvalidArgument, "a matrix is required with a tableau");
  }
  hypostab::SweepOptions so;
  so.precision_bits = bits;
  so.keep_curve = keep_curve;
  const auto res = hypostab::norm_sweep(l, r, hypostab::HpFloat::parse(epsilon, bits), grid, so);
  json j = hypostab::io::to_json(res);
  if (keep_curve) {
    json curve = json::array();
    for (const auto& c : res.curve) {
      curve.push_back({c.tau.to_scientific(20), c.norm.to_scientific(40), c.excess.to_scientific(12)});
    }
    j["curve"] = curve;
  }
  return j.dump();
}

std::string verdict(std::optional<unsigned> p, const std::optional<std::string>& tableau,
                    const std::vector<std::string>& matrices, bool family, long bits, std::size_t grid,
                    unsigned rounds) {
  const auto r = scheme_arg(p, tableau);
  std::vector<hypostab::MatrixExact> tests;
  for (const auto& m : matrices) tests.push_back(matrix_arg(m));
  if (family) {
    for (auto& m : hypostab::default_test_family()) tests.push_back(std::move(m));
  }
  if (tests.empty()) throw hypostab::Error(hypostab::ErrorKind::InvalidArgument, "no test matrices");
  hypostab::VerdictOptions vo;
  vo.precision_bits = bits;
  vo.grid_points = grid;
  vo.rounds = rounds;
  return hypostab::io::to_json(hypostab::strong_stability_verdict(r, tests, vo)).dump();
}

std::string decay_fit(const std::string& matrix, long bits, long log2_t_min, long log2_t_max, std::size_t points) {
  hypostab::DecayFitOptions fo;
  fo.precision_bits = bits;
  fo.log2_t_min = log2_t_min;
  fo.log2_t_max = log2_t_max;
  fo.points = points;
  return hypostab::io::to_json(hypostab::fit_short_time(matrix_arg(matrix), fo)).dump();
}

std::string lasm_check(unsigned p, unsigned m, std::size_t samples, std::uint64_t seed,
                       const std::vector<std::string>& extra, long bits) {
  hypostab::LasmOptions lo;
  lo.precision_bits = bits;
  std::vector<hypostab::MatrixExact> more;
  for (const auto& e : extra) more.push_back(matrix_arg(e));
  return hypostab::io::to_json(hypostab::lasm_property_check(p, m, samples, seed, more, lo)).dump();
}

std::string staircase(std::size_t n) { return hypostab::io::matrix_to_json(hypostab::staircase(n)).dump(); }

std::string reproduce(long bits, std::uint64_t seed, std::size_t grid, std::size_t lasm_samples) {
  hypostab::ReproduceOptions ro;
  ro.precision_bits = bits;
  ro.seed = seed;
  ro.grid_points = grid;
  ro.lasm_samples = lasm_samples;
  json rows = json::array();
  for (const auto& row : hypostab::reproduce_paper(ro)) {
    rows.push_back({{"check", row.id},
                    {"pass", row.pass},
                    {"expected", row.expected},
                    {"observed", row.observed},
                    {"reason", row.reason},
                    {"seconds", row.seconds}});
  }
  return rows.dump();
}

}  // namespace

PYBIND11_MODULE(_hypostab, m) {
  m.doc() = "JSON-level bindings; see the hypostab package for the Python API.";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&] { return py::object(py::exception<hypostab::Error>(m, "HypostabError", PyExc_ValueError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hypostab::Error& e) {
      const py::object& cls = error_type.get_stored();
      py::object inst = cls(e.what(), hypostab::to_string(e.kind()));
      PyErr_SetObject(cls.ptr(), inst.ptr());
    }
  });

  m.attr("DEFAULT_PRECISION_BITS") = hypostab::kDefaultPrecisionBits;

  m.def("hc_index", &hc_index, py::arg("matrix"));
  m.def("det_leading", &det_leading, py::arg("p"));
  m.def("closed_form_c", [](unsigned p) { return hypostab::to_string(hypostab::closed_form_c(p)); }, py::arg("p"));
  m.def("stability_function", &stability_function, py::arg("p") = py::none(), py::arg("tableau") = py::none());
  m.def("sweep", &sweep, py::arg("p"), py::arg("epsilon"), py::arg("grid"), py::arg("precision_bits"),
        py::arg("matrix") = py::none(), py::arg("tableau") = py::none(), py::arg("keep_curve") = false,
        py::call_guard<py::gil_scoped_release>());
  m.def("verdict", &verdict, py::arg("p"), py::arg("tableau"), py::arg("matrices"), py::arg("family"),
        py::arg("precision_bits"), py::arg("grid"), py::arg("rounds"), py::call_guard<py::gil_scoped_release>());
  m.def("decay_fit", &decay_fit, py::arg("matrix"), py::arg("precision_bits"), py::arg("log2_t_min"),
        py::arg("log2_t_max"), py::arg("points"), py::call_guard<py::gil_scoped_release>());
  m.def("lasm_check", &lasm_check, py::arg("p"), py::arg("m"), py::arg("samples"), py::arg("seed"),
        py::arg("extra"), py::arg("precision_bits"), py::call_guard<py::gil_scoped_release>());
  m.def("staircase", &staircase, py::arg("n"));
  m.def("reproduce", &reproduce, py::arg("precision_bits"), py::arg("seed"), py::arg("grid"),
        py::arg("lasm_samples"), py::call_guard<py::gil_scoped_release>());
}
