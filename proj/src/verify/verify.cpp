#include "arr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "arr/affine.hpp"
#include "arr/arrangement.hpp"
#include "arr/combinat.hpp"
#include "arr/error.hpp"
#include "arr/series.hpp"

namespace arr {

namespace {

class Failures {
 public:
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream os;
    os << what << ": got " << show(got) << ", expected " << show(want);
    list_.push_back(os.str());
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) list_.push_back(what);
  }
  std::vector<std::string> take() { return std::move(list_); }

 private:
  static std::string show(const QPolynomial& p) { return p.to_string(); }
  static std::string show(const Integer& v) { return v.get_str(); }
  static std::string show(const Rational& v) { return to_string(v); }
  template <class T>
  static std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }

  std::vector<std::string> list_;
};

std::string tag(std::string_view what, int n) { return std::string(what) + " n=" + std::to_string(n); }

Integer regions_from_full(const QPolynomial& chi, std::size_t dim) { return region_count(poincare_from_chi(chi, dim)); }

Integer int_pow(long base, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<Integer> series_counts(const EgfSeries& f) { return integer_counts(f); }

std::string show_counts(const std::vector<Integer>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
  return s;
}

// Linial numbers five ways, then formula and operator alone up to n = 10.
std::vector<std::string> check_linial(const EngineConfig& cfg) {
  Failures f;
  const std::vector<Integer> small = {1, 2, 7, 36, 246};
  for (int n = 1; n <= 5; ++n) {
    const Integer& want = small[static_cast<std::size_t>(n - 1)];
    Arrangement a = build_family(Family::linial, n);
    f.equal(regions_from_full(chi_nbc(a, {}, cfg), a.dim()), want, tag("nbc", n));
    f.equal(regions_from_full(chi_whitney(a, cfg), a.dim()), want, tag("whitney", n));
    f.equal(Integer(static_cast<unsigned long>(regions_geometric(a, false, cfg).regions)), want, tag("geometric", n));
    f.equal(regions_from_paper_chi(chi_operator(0, 2, n), n), want, tag("operator", n));
    f.equal(count_alternating_trees(static_cast<unsigned>(n)), want, tag("alternating trees", n));
  }
  const std::vector<Integer> large = {2104, 21652, 260720, 3598120, 56010096};
  for (int n = 6; n <= 10; ++n) {
    const Integer& want = large[static_cast<std::size_t>(n - 6)];
    f.equal(alternating_trees_formula(static_cast<unsigned>(n)), want, tag("formula", n));
    f.equal(regions_from_paper_chi(chi_operator(0, 2, n), n), want, tag("operator", n));
  }
  return f.take();
}

std::vector<std::string> check_shi(const EngineConfig& cfg) {
  Failures f;
  for (int a = 1; a <= 3; ++a)
    for (int n = 1; n <= 6; ++n) {
      const Integer want = int_pow(a * n + 1, n - 1);
      const std::string where = "a=" + std::to_string(a) + " " + tag("", n).substr(1);
      f.equal(regions_from_paper_chi(chi_operator(a, a + 1, n), n), want, "operator " + where);
      if (n * (n - 1) * a > 18) continue;
      Arrangement arr = build_family(Family::ext_shi, n, {.a = a});
      f.equal(regions_from_full(chi_nbc(arr, {}, cfg), arr.dim()), want, "nbc " + where);
    }
  for (int n = 1; n <= 8; ++n)
    f.equal(chi_operator(1, 2, n), pow(QPolynomial::linear(Rational(n)), static_cast<unsigned>(n - 1)),
            tag("(q-n)^(n-1)", n));
  return f.take();
}

std::vector<std::string> check_balanced(const EngineConfig& cfg) {
  Failures f;
  const QPolynomial q = QPolynomial::monomial(Rational(1), 1);
  for (int a = 1; a <= 2; ++a)
    for (int n = 1; n <= 4; ++n) {
      Arrangement arr = build_family(Family::trunc_affine, n, {.a = a, .b = a});
      const QPolynomial want = chi_balanced(a, n) * q;
      const std::string where = "a=" + std::to_string(a) + " " + tag("", n).substr(1);
      f.equal(chi_nbc(arr, {}, cfg), want, "nbc " + where);
      f.equal(chi_whitney(arr, cfg), want, "whitney " + where);
    }
  for (int a = 1; a <= 3; ++a)
    for (int n = 1; n <= 7; ++n)
      f.equal(regions_from_paper_chi(chi_balanced(a, n), n), balanced_region_product(a, n),
              "product a=" + std::to_string(a) + " " + tag("", n).substr(1));
  return f.take();
}

std::vector<std::string> check_catalan(const EngineConfig& cfg) {
  Failures f;
  for (int n = 1; n <= 5; ++n) {
    Arrangement arr = build_family(Family::catalan0, n);
    f.equal(regions_from_full(chi_nbc(arr, {}, cfg), arr.dim()), factorial(n) * catalan(n), tag("n! C_n", n));
    StirlingRelation s = stirling_relation(static_cast<unsigned>(n));
    f.expect(s.holds(), tag("stirling relation", n) + ": " + s.lhs.get_str() + " vs " + s.rhs.get_str());
  }
  constexpr std::size_t order = 6;
  EgfSeries with_zero(order), without_zero(order);
  with_zero[0] = without_zero[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    const int k = static_cast<int>(n);
    Arrangement c0 = build_family(Family::catalan0, k);
    Arrangement c1 = build_family(Family::catalan, k);
    with_zero[n] = Rational(regions_from_full(chi_nbc(c0, {}, cfg), c0.dim()));
    without_zero[n] = Rational(regions_from_full(chi_nbc(c1, {}, cfg), c1.dim()));
  }
  // 1 - e^{-t}
  EgfSeries u = EgfSeries::constant(Rational(1), order) - exp(EgfSeries::x(order) * Rational(-1));
  EgfSeries composed = compose(with_zero, u);
  for (std::size_t n = 0; n <= order; ++n)
    f.equal(composed[n], without_zero[n], "egf identity coefficient " + std::to_string(n));
  return f.take();
}

std::vector<std::string> check_semigeneric(const EngineConfig& cfg) {
  Failures f;
  constexpr std::size_t order = 6;
  const std::vector<Integer> z_want = {1, 1, 3, 19, 195, 2831, 53703};
  const auto z = solve_semigeneric(order).z;
  const auto z_counts = series_counts(z);
  f.equal(show_counts(z_counts), show_counts(z_want), "z coefficients");

  for (unsigned n = 1; n <= 5; ++n)
    f.equal(semigeneric_regions_bruteforce(n), z_want[n], tag("bipartite brute force", static_cast<int>(n)));
  for (int n = 1; n <= 4; ++n) {
    Arrangement arr = build_family(Family::semigeneric, n);
    f.expect(verify_family_genericity(arr), tag("offsets not semigeneric", n));
    f.equal(Integer(static_cast<unsigned long>(regions_geometric(arr, false, cfg).regions)),
            z_want[static_cast<std::size_t>(n)], tag("geometric", n));
    f.equal(chi_nbc(arr, {}, cfg), semigeneric_chi_bruteforce(static_cast<unsigned>(n)), tag("nbc chi", n));
  }

  constexpr std::size_t chi_order = 5;
  std::vector<QPolynomial> chis = {QPolynomial::constant(Rational(1))};
  for (unsigned n = 1; n <= chi_order; ++n) chis.push_back(semigeneric_chi_bruteforce(n));
  for (long qv : {1L, 2L, -1L}) {
    EgfSeries lhs = chi_egf_from_f(z.truncated(chi_order), Rational(qv), chi_order);
    for (std::size_t n = 0; n <= chi_order; ++n)
      f.equal(lhs[n], chis[n](Rational(qv)), "chi egf q=" + std::to_string(qv) + " coefficient " + std::to_string(n));
  }
  return f.take();
}

std::vector<std::string> check_series(const EngineConfig&) {
  Failures f;
  const std::vector<std::pair<int, int>> pairs = {{0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 3}};
  constexpr std::size_t order = 10;
  for (auto [a, b] : pairs) {
    const std::string where = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    EgfSeries sol = solve_truncated_affine_egf(a, b, order);
    EgfSeries residual = truncated_affine_residual(a, b, sol);
    f.expect(residual == EgfSeries(order), "residual nonzero for " + where);
    for (int n = 1; n <= static_cast<int>(order); ++n)
      f.equal(sol[static_cast<std::size_t>(n)], Rational(regions_from_paper_chi(chi_operator(a, b, n), n)),
              "series vs operator " + where + " " + tag("", n).substr(1));
  }

  constexpr std::size_t tower_order = 8;
  for (auto [a, b] : {std::pair{0, 2}, std::pair{1, 2}}) {
    const std::string where = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    auto tower = qk_tower(a, b, 12, tower_order);
    EgfSeries ratio = divide(tower[11], tower[12]);
    EgfSeries target = solve_truncated_affine_egf(a, b, tower_order);
    f.equal(show_counts(series_counts(ratio)), show_counts(series_counts(target)), "q_k tower ratio " + where);
  }

  constexpr std::size_t chi_order = 6;
  for (auto [a, b] : pairs) {
    EgfSeries sol = solve_truncated_affine_egf(a, b, chi_order);
    for (long qv : {-1L, 1L, 3L}) {
      const Rational q(qv);
      EgfSeries chi = chi_egf_from_f(sol, q, chi_order);
      f.equal(chi[0], Rational(1), "chi egf constant term");
      for (int n = 1; n <= static_cast<int>(chi_order); ++n)
        f.equal(chi[static_cast<std::size_t>(n)], q * chi_operator(a, b, n)(q),
                "chi egf (" + std::to_string(a) + "," + std::to_string(b) + ") q=" + std::to_string(qv) + " " +
                    tag("", n).substr(1));
    }
  }
  return f.take();
}

std::vector<std::string> check_root_law(const EngineConfig&) {
  Failures f;
  double worst = 0;
  for (int b = 1; b <= 4; ++b)
    for (int a = 0; a < b; ++a) {
      if (a + b < 2) continue;
      for (int n = 2; n <= 8; ++n) {
        const std::string where =
            "(" + std::to_string(a) + "," + std::to_string(b) + ") " + tag("", n).substr(1);
        QPolynomial chi = chi_operator(a, b, n);
        auto report = check_root_location(chi, Rational((a + b - 1) * n) / 2, 1e-8);
        worst = std::max(worst, report.max_deviation);
        f.expect(report.passes(1e-8), "root law " + where + ": deviation " + std::to_string(report.max_deviation));
        f.equal(chi, poly_shift(chi_operator(0, b - a, n), a * n), "translation identity " + where);
      }
    }
  for (int a = 1; a <= 4; ++a)
    for (int n = 1; n <= 8; ++n)
      f.expect(balanced_factors_exactly(a, n),
               "balanced factorization a=" + std::to_string(a) + " " + tag("", n).substr(1));
  return f.take();
}

std::vector<std::string> check_rootsystems(const EngineConfig&) {
  Failures f;
  for (RootSystem r : {RootSystem::B, RootSystem::C, RootSystem::D, RootSystem::BC})
    for (int b = 1; b <= 4; ++b)  // k = 0, 1 in both parities
      for (int n = r == RootSystem::D ? 3 : 2; n <= 5; ++n) {
        const std::string where = std::string(to_string(r)) + " b=" + std::to_string(b) + " " + tag("", n).substr(1);
        QPolynomial chi = chi_rootsystem(r, b, n);
        auto report = check_root_location(chi, mean_root(chi), 1e-8);
        f.expect(report.passes(1e-8), "root law " + where + ": deviation " + std::to_string(report.max_deviation));
      }
  f.equal(exceptional_chi(ExceptionalChi::F4_alt), exceptional_chi(ExceptionalChi::F4_02), "F4 alternative form");
  f.equal(exceptional_chi(ExceptionalChi::E6_alt), exceptional_chi(ExceptionalChi::E6_02), "E6 alternative form");
  for (auto [which, name] : {std::pair{ExceptionalChi::F4_02, "F4"}, std::pair{ExceptionalChi::E6_02, "E6"}}) {
    QPolynomial chi = exceptional_chi(which);
    f.equal(mean_root(chi), Rational(6), std::string(name) + " mean root");
    auto report = check_root_location(chi, Rational(6), 1e-8);
    f.expect(report.passes(1e-8), std::string(name) + " root law: deviation " + std::to_string(report.max_deviation));
  }
  return f.take();
}

std::vector<std::string> check_finite_field(const EngineConfig& cfg) {
  Failures f;
  constexpr int n = 3;
  const std::vector<std::tuple<Family, const char*, QPolynomial>> cases = {
      {Family::linial, "linial", chi_operator(0, 2, n)},
      {Family::shi, "shi", chi_operator(1, 2, n)},
      {Family::catalan0, "catalan0", chi_balanced(2, n)},
  };
  for (const auto& [family, name, chi] : cases) {
    Arrangement arr = build_family(family, n);
    for (unsigned p : {11U, 13U, 17U}) {
      const Rational q(static_cast<unsigned long>(p));
      const Integer want = to_integer(q * chi(q));
      const std::string where = std::string(name) + " p=" + std::to_string(p);
      f.equal(chi_finite_field(arr, p, cfg), want, "point count " + where);
      f.equal(to_integer(chi_whitney(arr, cfg)(q)), want, "whitney " + where);
    }
  }
  return f.take();
}

std::vector<std::string> check_characterizations(const EngineConfig& cfg) {
  Failures f;
  for (int n = 1; n <= 5; ++n) {
    const auto un = static_cast<unsigned>(n);
    Arrangement linial = build_family(Family::linial, n);
    const Integer want = regions_from_full(chi_nbc(linial, {}, cfg), linial.dim());
    f.equal(count_sleek_posets(un), want, tag("sleek posets", n));
    f.equal(count_semiacyclic_tournaments(un, SemiacyclicTest::definition), want, tag("semiacyclic tournaments", n));
    f.equal(count_semiacyclic_tournaments(un, SemiacyclicTest::obstructions), want,
            tag("obstruction-free tournaments", n));
    f.equal(semiacyclic_test_disagreements(un), std::size_t{0}, tag("filter disagreements", n));
    f.equal(count_semiorders(un, false), catalan(n), tag("unlabelled semiorders", n));
    for (auto [a, b] : {std::pair{0, 2}, std::pair{1, 2}}) {
      Arrangement arr = build_family(Family::trunc_affine, n, {.a = a, .b = b});
      f.equal(count_graded_forests(un, a, b), regions_from_full(chi_nbc(arr, {}, cfg), arr.dim()),
              "graded forests (" + std::to_string(a) + "," + std::to_string(b) + ") " + tag("", n).substr(1));
    }
  }
  return f.take();
}

struct CheckDef {
  int id;
  const char* name;
  const char* suite;
  double budget_seconds;
  std::vector<std::string> (*run)(const EngineConfig&);
};

const std::vector<CheckDef>& checks() {
  static const std::vector<CheckDef> table = {
      {1, "linial numbers five ways", "linial", 120, check_linial},
      {2, "shi and extended shi", "shi", 60, check_shi},
      {3, "balanced case", "shi", 60, check_balanced},
      {4, "catalan suite", "catalan", 120, check_catalan},
      {5, "semigeneric suite", "semigeneric", 180, check_semigeneric},
      {6, "functional equations", "series", 60, check_series},
      {7, "root location", "roots", 60, check_root_law},
      {8, "root systems and exceptional data", "roots", 60, check_rootsystems},
      {9, "finite-field oracle", "oracle", 60, check_finite_field},
      {10, "characterization agreement", "linial", 300, check_characterizations},
  };
  return table;
}

CheckResult run(const CheckDef& def, const EngineConfig& config) {
  CheckResult result;
  result.id = def.id;
  result.name = def.name;
  result.suite = def.suite;
  result.budget_seconds = def.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    result.failures = def.run(config);
  } catch (const std::exception& e) {
    result.failures.push_back(std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.seconds > result.budget_seconds)
    result.failures.push_back("time budget exceeded: " + std::to_string(result.seconds) + " s");
  result.passed = result.failures.empty();
  return result;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"linial", "shi", "catalan", "semigeneric", "series", "roots", "oracle"};
}

std::vector<CheckResult> run_suite(std::string_view suite, const EngineConfig& config) {
  auto names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw PreconditionError("unknown suite '" + std::string(suite) + "'");
  std::vector<CheckResult> out;
  for (const auto& def : checks())
    if (suite == "all" || suite == def.suite) out.push_back(run(def, config));
  return out;
}

CheckResult run_check(int id, const EngineConfig& config) {
  for (const auto& def : checks())
    if (def.id == id) return run(def, config);
  throw PreconditionError("no acceptance check with id " + std::to_string(id));
}

}  // namespace arr
