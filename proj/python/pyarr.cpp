#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arr/affine.hpp"
#include "arr/arrangement.hpp"
#include "arr/combinat.hpp"
#include "arr/error.hpp"
#include "arr/series.hpp"
#include "arr/verify.hpp"

namespace py = pybind11;
using namespace arr;

namespace {

py::object to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

py::object to_py(const Rational& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(Integer(v.get_num())), to_py(Integer(v.get_den())));
}

// Coefficients, constant term first.
py::list to_py(const QPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

py::list to_py(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

QPolynomial from_py(const py::sequence& coeffs) {
  std::vector<Rational> c;
  for (const auto& x : coeffs) c.push_back(parse_rational(py::str(x).cast<std::string>()));
  return QPolynomial(std::move(c));
}

EngineConfig config_with(unsigned threads) {
  EngineConfig cfg;
  cfg.threads = threads;
  return cfg;
}

QPolynomial chi_by(const Arrangement& a, const std::string& engine, unsigned threads) {
  EngineConfig cfg = config_with(threads);
  if (engine == "nbc") return chi_nbc(a, {}, cfg);
  if (engine == "nbc-linear") return chi_nbc_linear_algebra(a, {}, cfg);
  if (engine == "whitney") return chi_whitney(a, cfg);
  throw PreconditionError("unknown engine '" + engine + "'");
}

py::object count(const std::string& family, unsigned n, int a, int b) {
  if (family == "alternating-trees") return to_py(alternating_trees_formula(n));
  if (family == "lbs-trees") return to_py(count_local_binary_search_trees(n));
  if (family == "semiacyclic-tournaments") return to_py(count_semiacyclic_tournaments(n));
  if (family == "sleek-posets") return to_py(count_sleek_posets(n));
  if (family == "semiorders" || family == "semiorders-labelled") return to_py(count_semiorders(n, true));
  if (family == "semiorders-unlabelled") return to_py(count_semiorders(n, false));
  if (family == "graded-forests") return to_py(count_graded_forests(n, a, b));
  if (family == "forests") return to_py(count_forests_weighted(n));
  if (family == "semigeneric-chi") return to_py(semigeneric_chi_bruteforce(n));
  throw PreconditionError("unknown count family '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(pyarr, m) {
  m.doc() = "Characteristic polynomials and region counts of deformed Coxeter arrangements";

  static py::exception<CapExceeded> cap_exc(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapExceeded& e) {
      py::set_error(cap_exc, e.what());
    } catch (const PreconditionError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ConvergenceError& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  py::class_<Arrangement>(m, "Arrangement")
      .def_property_readonly("dim", &Arrangement::dim)
      .def_property_readonly("label", [](const Arrangement& a) { return a.label().to_string(); })
      .def("__len__", &Arrangement::size)
      .def("is_graphic", &Arrangement::is_graphic)
      .def("to_json", &arrangement_to_json)
      .def("__repr__", [](const Arrangement& a) {
        return "<Arrangement " + a.label().to_string() + ", dim " + std::to_string(a.dim()) + ", " +
               std::to_string(a.size()) + " hyperplanes>";
      });

  m.def(
      "build_family",
      [](const std::string& family, int n, int a, int b, int mult, const std::string& root_system) {
        return build_family(parse_family(family), n,
                            {.a = a, .b = b, .m = mult, .root_system = parse_root_system(root_system)});
      },
      py::arg("family"), py::arg("n"), py::arg("a") = 0, py::arg("b") = 0, py::arg("m") = 1,
      py::arg("root_system") = "A");
  m.def("arrangement_from_json", [](const std::string& text) { return arrangement_from_json(text); });

  m.def(
      "chi", [](const Arrangement& a, const std::string& engine, unsigned threads) { return to_py(chi_by(a, engine, threads)); },
      py::arg("arrangement"), py::arg("engine") = "nbc", py::arg("threads") = 1,
      "Characteristic polynomial in the ambient space, coefficients constant term first.");
  m.def(
      "regions",
      [](const Arrangement& a, const std::string& engine, unsigned threads) {
        if (engine == "geometric") {
          RegionReport r = regions_geometric(a, false, config_with(threads));
          return py::make_tuple(py::int_(r.regions), py::int_(r.bounded)).cast<py::tuple>();
        }
        QPolynomial poin = poincare_from_chi(chi_by(a, engine, threads), a.dim());
        return py::make_tuple(to_py(region_count(poin)), to_py(bounded_region_count(poin))).cast<py::tuple>();
      },
      py::arg("arrangement"), py::arg("engine") = "geometric", py::arg("threads") = 1,
      "(regions, bounded regions)");
  m.def("chi_finite_field", [](const Arrangement& a, unsigned p) { return to_py(chi_finite_field(a, p)); });
  m.def("admissible_primes", [](const Arrangement& a, std::size_t count) { return admissible_primes(a, count); });

  m.def("chi_operator", [](int a, int b, int n) { return to_py(chi_operator(a, b, n)); });
  m.def("chi_balanced", [](int a, int n) { return to_py(chi_balanced(a, n)); });
  m.def("chi_rootsystem", [](const std::string& r, int b, int n) {
    return to_py(chi_rootsystem(parse_root_system(r), b, n));
  });
  m.def("exceptional_chi", [](const std::string& which) {
    if (which == "F4") return to_py(exceptional_chi(ExceptionalChi::F4_02));
    if (which == "E6") return to_py(exceptional_chi(ExceptionalChi::E6_02));
    throw PreconditionError("exceptional_chi takes F4 or E6");
  });
  m.def(
      "check_root_location",
      [](const py::sequence& coeffs, const std::string& expected, double tol) {
        auto r = check_root_location(from_py(coeffs), parse_rational(expected), tol);
        py::dict d;
        d["roots"] = r.roots;
        d["max_deviation"] = r.max_deviation;
        d["symmetric"] = r.symmetric;
        d["functional_equation"] = r.functional_equation;
        d["passes"] = r.passes(tol);
        return d;
      },
      py::arg("coefficients"), py::arg("expected_real_part"), py::arg("tol") = 1e-8);

  m.def("solve_truncated_affine_egf", [](int a, int b, std::size_t order) {
    return to_py(integer_counts(solve_truncated_affine_egf(a, b, order)));
  });
  m.def("solve_semigeneric", [](std::size_t order) {
    auto s = solve_semigeneric(order);
    py::dict d;
    d["y"] = to_py(integer_counts(s.y));
    d["z"] = to_py(integer_counts(s.z));
    return d;
  });

  m.def("count", &count, py::arg("family"), py::arg("n"), py::arg("a") = 0, py::arg("b") = 2);

  m.def(
      "verify",
      [](const std::string& suite, unsigned threads) {
        py::list out;
        for (const auto& r : run_suite(suite, config_with(threads))) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["suite"] = r.suite;
          d["passed"] = r.passed;
          d["failures"] = r.failures;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("threads") = 1);
}
