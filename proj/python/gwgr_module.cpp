#include "gwgr/charclass.hpp"
#include "gwgr/critical.hpp"
#include "gwgr/errors.hpp"
#include "gwgr/invariants.hpp"
#include "gwgr/report.hpp"
#include "gwgr/schubert.hpp"
#include "gwgr/sympoly.hpp"
#include "gwgr/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace gwgr;

namespace {

py::int_ to_py(const BigInt& v) {
  std::ostringstream os;
  os << v;
  return py::reinterpret_steal<py::int_>(PyLong_FromString(os.str().c_str(), nullptr, 10));
}

py::object to_py(const BigRational& q) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(q)),
                  to_py(boost::multiprecision::denominator(q)));
}

py::dict to_py(const PipelineResult& r) {
  py::dict d;
  d["pipeline"] = std::string(to_string(r.pipeline));
  d["value"] = to_py(r.value);
  d["residual"] = r.residual;
  d["error_bound"] = r.error_bound;
  d["exact"] = r.exact;
  return d;
}

std::vector<Pipeline> parse_pipelines(const std::vector<std::string>& names) {
  std::vector<Pipeline> out;
  for (const auto& n : names) {
    const auto p = parse_pipeline(n);
    if (!p) throw InputError("unknown pipeline '" + n + "'");
    out.push_back(*p);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_gwgr, m) {
  m.doc() = "Gromov invariants of maps from Riemann surfaces to Grassmannians";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<InputError> input_error(m, "InputError", error.ptr());
  static py::exception<ResultError> result_error(m, "ResultError", error.ptr());
  static py::exception<InvalidGrassmannian> invalid(m, "InvalidGrassmannian", input_error.ptr());
  static py::exception<DimensionMismatch> dimension(m, "DimensionMismatch", input_error.ptr());
  static py::exception<PipelineNotApplicable> not_applicable(m, "PipelineNotApplicable",
                                                             input_error.ptr());
  static py::exception<PrecisionBudgetExceeded> budget(m, "PrecisionBudgetExceeded",
                                                       input_error.ptr());
  static py::exception<NonIntegerResult> non_integer(m, "NonIntegerResult", result_error.ptr());
  static py::exception<CrossCheckMismatch> mismatch(m, "CrossCheckMismatch", result_error.ptr());
  static py::exception<ValidationFailure> validation(m, "ValidationFailure", result_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidGrassmannian& e) {
      py::set_error(invalid, e.what());
    } catch (const DimensionMismatch& e) {
      py::set_error(dimension, e.what());
    } catch (const PipelineNotApplicable& e) {
      py::set_error(not_applicable, e.what());
    } catch (const PrecisionBudgetExceeded& e) {
      py::set_error(budget, e.what());
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const NonIntegerResult& e) {
      py::set_error(non_integer, e.what());
    } catch (const CrossCheckMismatch& e) {
      py::set_error(mismatch, e.what());
    } catch (const ValidationFailure& e) {
      py::set_error(validation, e.what());
    } catch (const ResultError& e) {
      py::set_error(result_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;
  m.attr("MAX_FLOATING_KD") = kMaxFloatingKd;

  m.def(
      "invariant",
      [](int g, int d, int r, int k, std::vector<int> s, std::vector<std::string> pipelines,
         double tol) {
        const InvariantQuery q{g, d, r, k, std::move(s)};
        py::list out;
        for (const auto& res : invariant(q, parse_pipelines(pipelines), tol)) out.append(to_py(res));
        return out;
      },
      py::arg("g"), py::arg("d"), py::arg("r"), py::arg("k"), py::arg("s"),
      py::arg("pipelines") = std::vector<std::string>{}, py::arg("tol") = kDefaultTolerance,
      "Run the requested pipelines (all applicable ones by default) and cross-check them.");

  m.def(
      "invariant_json",
      [](int g, int d, int r, int k, std::vector<int> s, std::vector<std::string> pipelines,
         double tol) {
        const InvariantQuery q{g, d, r, k, std::move(s)};
        return to_json(make_record(q, invariant(q, parse_pipelines(pipelines), tol), tol)).dump();
      },
      py::arg("g"), py::arg("d"), py::arg("r"), py::arg("k"), py::arg("s"),
      py::arg("pipelines") = std::vector<std::string>{}, py::arg("tol") = kDefaultTolerance);

  m.def(
      "vafa_intriligator",
      [](int g, int d, int r, int k, std::vector<int> s, double tol) {
        return to_py(vafa_intriligator(InvariantQuery{g, d, r, k, std::move(s)}, tol));
      },
      py::arg("g"), py::arg("d"), py::arg("r"), py::arg("k"), py::arg("s"),
      py::arg("tol") = kDefaultTolerance);

  m.def("brute_force_r2", [](int d, int k, int n, double tol) { return to_py(brute_force_r2(d, k, n, tol)); },
        py::arg("d"), py::arg("k"), py::arg("n"), py::arg("tol") = kDefaultTolerance);
  m.def("closed_form_r2_g1", [](int d, int k, int n) { return to_py(closed_form_r2_g1(d, k, n)); },
        py::arg("d"), py::arg("k"), py::arg("n"));
  m.def("flip_pipeline_r2_g1", [](int d, int k, int n) { return to_py(flip_pipeline_r2_g1(d, k, n)); },
        py::arg("d"), py::arg("k"), py::arg("n"));
  m.def("projective_invariant", [](int g, int d, int k) { return to_py(projective_invariant(g, d, k)); },
        py::arg("g"), py::arg("d"), py::arg("k"));
  m.def("schubert_number",
        [](int r, int k, const std::vector<int>& s) { return to_py(schubert::intersection_number(r, k, s)); },
        py::arg("r"), py::arg("k"), py::arg("s"));

  m.def("binomial", [](std::int64_t n, std::int64_t k) { return to_py(binomial(n, k)); });

  m.def("lg_potential", [](int r, int k) { return lg_potential(r, k).to_string(); });
  m.def("lg_potential_via_log", [](int r, int k) { return lg_potential_via_log(r, k).to_string(); });
  m.def("relation_polys", [](int r, int k) {
    std::vector<std::string> out;
    for (const auto& y : relation_polys(r, k)) out.push_back(y.to_string());
    return out;
  });
  m.def("hessian_class", [](int r, int k) { return hessian_class(r, k).to_string(); });

  m.def("critical_points", [](int r, int k) {
    py::list out;
    for (const auto& p : enumerate_critical_points(r, k)) {
      py::list q, z;
      for (const auto& a : p.q) q.append(a.to_string());
      for (const auto& c : p.z) z.append(c.value());
      out.append(py::make_tuple(q, z));
    }
    return out;
  });

  m.def(
      "validate_critical_points",
      [](int r, int k, double tol) {
        const auto rep = validate_critical_points(r, k, tol);
        py::dict d;
        d["points"] = rep.points;
        d["max_gradient_residual"] = rep.max_gradient_residual;
        d["min_hessian_modulus"] = rep.min_hessian_modulus;
        d["worst_point"] = rep.worst_point;
        return d;
      },
      py::arg("r"), py::arg("k"), py::arg("tol") = kDefaultTolerance);

  m.def("theta_integral", [](int g, int k, int d) { return to_py(theta_integral(g, k, d)); },
        py::arg("g"), py::arg("k"), py::arg("d"));
  m.def("blowup_even_degree", [](int d, int k, int n) {
    return to_py(even_degree_diagonal_instance(d, k, n).evaluate());
  });
  m.def("blowup_wall", [](int d, int k, int n, int l) {
    return to_py(wall_crossing_instance(d, k, n, l).evaluate());
  });

  m.def(
      "table_csv", [](int d, int k, double tol) { return render_table_csv(make_table(d, k, tol)); },
      py::arg("d"), py::arg("k"), py::arg("tol") = kDefaultTolerance);

  m.def(
      "verify",
      [](const std::string& suite, std::optional<int> max_k, std::optional<int> max_d, double tol) {
        if (!is_known_suite(suite)) throw InputError("unknown suite '" + suite + "'");
        py::list out;
        for (const auto& c : run_suite(suite, VerifyOptions{max_k, max_d, tol})) {
          py::dict d;
          d["suite"] = c.suite;
          d["name"] = c.name;
          d["passed"] = c.passed;
          d["detail"] = c.detail;
          d["reproduce"] = c.reproduce;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("max_k") = py::none(), py::arg("max_d") = py::none(),
      py::arg("tol") = kDefaultTolerance);
}
