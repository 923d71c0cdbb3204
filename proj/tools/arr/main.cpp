// arr: command-line front end.
//
// Exit codes: 0 success, 1 engine disagreement or failed check, 2 usage or
// precondition error, 3 size cap exceeded, 4 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arr/affine.hpp"
#include "arr/arrangement.hpp"
#include "arr/combinat.hpp"
#include "arr/error.hpp"
#include "arr/series.hpp"
#include "arr/verify.hpp"

using json = nlohmann::ordered_json;
using namespace arr;

namespace {

enum Exit { ok = 0, disagreement = 1, usage = 2, cap = 3, numerical = 4 };

struct Common {
  bool json_out = false;
  EngineConfig config;
};

struct FamilyArgs {
  std::string family;
  std::string file;
  int n = 0;
  int a = 0;
  int b = 0;
  int m = 1;
  std::string root_system = "A";
};

void add_family_flags(CLI::App* cmd, FamilyArgs& f) {
  cmd->add_option("--family", f.family, "braid, linial, shi, ext-shi, catalan, catalan0, trunc-affine, "
                                        "semigeneric, generic, rootsystem");
  cmd->add_option("--file", f.file, "arrangement JSON file");
  cmd->add_option("--n", f.n, "number of coordinates");
  cmd->add_option("--a", f.a);
  cmd->add_option("--b", f.b);
  cmd->add_option("--m", f.m, "offsets per pair (generic)");
  cmd->add_option("--root-system", f.root_system, "A, B, C, D or BC");
}

Arrangement load_arrangement(const FamilyArgs& f) {
  if (!f.file.empty()) {
    std::ifstream in(f.file);
    if (!in) throw PreconditionError("cannot read '" + f.file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return arrangement_from_json(buf.str());
  }
  if (f.family.empty()) throw PreconditionError("give --family or --file");
  return build_family(parse_family(f.family), f.n,
                      {.a = f.a, .b = f.b, .m = f.m, .root_system = parse_root_system(f.root_system)});
}

json poly_json(const QPolynomial& p) {
  json c = json::array();
  for (const auto& x : p.coefficients()) c.push_back(to_string(x));
  return c;
}

json roots_json(const std::vector<std::complex<double>>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back({r.real(), r.imag()});
  return out;
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.json_out)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

// chi ----------------------------------------------------------------------

struct ChiArgs {
  FamilyArgs family;
  std::string engine = "nbc";
};

QPolynomial run_chi_engine(const std::string& engine, const Arrangement& a, const EngineConfig& cfg) {
  if (engine == "nbc") return chi_nbc(a, {}, cfg);
  if (engine == "nbc-linear") return chi_nbc_linear_algebra(a, {}, cfg);
  if (engine == "whitney") return chi_whitney(a, cfg);
  throw PreconditionError("unknown chi engine '" + engine + "'");
}

int cmd_chi(const Common& c, const ChiArgs& args) {
  Arrangement a = load_arrangement(args.family);
  std::vector<std::string> engines =
      args.engine == "all" ? std::vector<std::string>{"whitney", "nbc", "nbc-linear"} : std::vector{args.engine};
  json j;
  j["command"] = "chi";
  j["arrangement"] = a.label().to_string();
  j["dim"] = a.dim();
  j["hyperplanes"] = a.size();
  j["results"] = json::array();
  std::ostringstream text;
  text << a.label().to_string() << " in dimension " << a.dim() << ", " << a.size() << " hyperplanes\n";
  std::vector<QPolynomial> chis;
  for (const auto& e : engines) {
    QPolynomial chi = run_chi_engine(e, a, c.config);
    QPolynomial poin = poincare_from_chi(chi, a.dim());
    json r;
    r["engine"] = e;
    r["chi"] = chi.to_string();
    r["chi_coefficients"] = poly_json(chi);
    r["poincare"] = poin.to_string();
    r["regions"] = to_string(region_count(poin));
    r["bounded"] = to_string(bounded_region_count(poin));
    j["results"].push_back(r);
    text << e << ": chi = " << chi.to_string() << "\n  Poin = " << poin.to_string()
         << "\n  regions = " << region_count(poin) << ", bounded = " << bounded_region_count(poin) << '\n';
    chis.push_back(std::move(chi));
  }
  bool agree = true;
  if (chis.size() > 1) {
    json verdicts = json::array();
    for (std::size_t i = 0; i < chis.size(); ++i)
      for (std::size_t k = i + 1; k < chis.size(); ++k) {
        bool same = chis[i] == chis[k];
        agree = agree && same;
        verdicts.push_back({{"pair", {engines[i], engines[k]}}, {"agree", same}});
        text << engines[i] << " vs " << engines[k] << ": " << (same ? "agree" : "DISAGREE") << '\n';
      }
    j["agreement"] = verdicts;
  }
  emit(c, j, text.str());
  return agree ? ok : disagreement;
}

// regions ------------------------------------------------------------------

int cmd_regions(const Common& c, const ChiArgs& args) {
  Arrangement a = load_arrangement(args.family);
  std::vector<std::string> engines = args.engine == "all" ? std::vector<std::string>{"geometric", "nbc", "whitney"}
                                                          : std::vector{args.engine};
  json j;
  j["command"] = "regions";
  j["arrangement"] = a.label().to_string();
  j["results"] = json::array();
  std::ostringstream text;
  std::vector<std::pair<Integer, Integer>> counts;
  for (const auto& e : engines) {
    Integer r, b;
    if (e == "geometric") {
      RegionReport rep = regions_geometric(a, false, c.config);
      r = static_cast<unsigned long>(rep.regions);
      b = static_cast<unsigned long>(rep.bounded);
    } else {
      QPolynomial poin = poincare_from_chi(run_chi_engine(e, a, c.config), a.dim());
      r = region_count(poin);
      b = bounded_region_count(poin);
    }
    j["results"].push_back({{"engine", e}, {"regions", to_string(r)}, {"bounded", to_string(b)}});
    text << a.label().to_string() << " [" << e << "]: regions = " << r << ", bounded = " << b << '\n';
    counts.emplace_back(r, b);
  }
  bool agree = std::all_of(counts.begin(), counts.end(), [&](const auto& x) { return x == counts.front(); });
  if (counts.size() > 1) {
    j["agree"] = agree;
    text << (agree ? "engines agree\n" : "engines DISAGREE\n");
  }
  emit(c, j, text.str());
  return agree ? ok : disagreement;
}

// count --------------------------------------------------------------------

struct CountArgs {
  std::string family;
  int n = 0;
  int a = 0;
  int b = 2;
  bool enumerate = false;
  bool csv = false;
};

// Returns the count (or polynomial) as text, plus a cross-check verdict.
std::pair<std::string, bool> count_one(const CountArgs& args, unsigned n) {
  const std::string& f = args.family;
  if (f == "alternating-trees") {
    Integer formula = alternating_trees_formula(n);
    if (!args.enumerate) return {formula.get_str(), true};
    return {formula.get_str(), count_alternating_trees(n) == formula};
  }
  if (f == "lbs-trees") return {count_local_binary_search_trees(n).get_str(), true};
  if (f == "semiacyclic-tournaments") {
    Integer v = count_semiacyclic_tournaments(n);
    return {v.get_str(), !args.enumerate || count_semiacyclic_tournaments(n, SemiacyclicTest::obstructions) == v};
  }
  if (f == "sleek-posets") return {count_sleek_posets(n).get_str(), true};
  if (f == "semiorders" || f == "semiorders-labelled") return {count_semiorders(n, true).get_str(), true};
  if (f == "semiorders-unlabelled") return {count_semiorders(n, false).get_str(), true};
  if (f == "graded-forests") return {count_graded_forests(n, args.a, args.b).get_str(), true};
  if (f == "forests") return {count_forests_weighted(n).to_string(), true};
  if (f == "semigeneric-chi") return {semigeneric_chi_bruteforce(n).to_string(), true};
  throw PreconditionError("unknown count family '" + f + "'");
}

int cmd_count(const Common& c, const CountArgs& args) {
  if (args.n < 0) throw PreconditionError("n must be nonnegative");
  if (args.csv) {
    bool all_ok = true;
    std::cout << "family,n,count\n";
    for (int n = 0; n <= args.n; ++n) {
      auto [value, checked] = count_one(args, static_cast<unsigned>(n));
      all_ok = all_ok && checked;
      std::cout << args.family << ',' << n << ',' << value << '\n';
    }
    return all_ok ? ok : disagreement;
  }
  auto [value, checked] = count_one(args, static_cast<unsigned>(args.n));
  json j{{"command", "count"}, {"family", args.family}, {"n", args.n}, {"count", value}};
  if (args.family == "graded-forests") {
    j["a"] = args.a;
    j["b"] = args.b;
  }
  if (args.enumerate) j["enumeration_agrees"] = checked;
  emit(c, j, args.family + " n=" + std::to_string(args.n) + ": " + value +
                 (args.enumerate ? (checked ? " (enumeration agrees)\n" : " (enumeration DISAGREES)\n") : "\n"));
  return checked ? ok : disagreement;
}

// series -------------------------------------------------------------------

struct SeriesArgs {
  std::string equation = "trunc-affine";
  int a = 0;
  int b = 2;
  std::size_t order = 10;
};

int cmd_series(const Common& c, const SeriesArgs& args) {
  EgfSeries f;
  std::string equation;
  if (args.equation == "trunc-affine") {
    f = solve_truncated_affine_egf(args.a, args.b, args.order);
    equation = "truncated-affine(" + std::to_string(args.a) + "," + std::to_string(args.b) + ")";
  } else if (args.equation == "semigeneric") {
    f = solve_semigeneric(args.order).z;
    equation = "semigeneric z";
  } else if (args.equation == "semigeneric-y") {
    f = solve_semigeneric(args.order).y;
    equation = "semigeneric y";
  } else {
    throw PreconditionError("unknown equation '" + args.equation + "'");
  }
  auto counts = integer_counts(f);
  json j{{"equation", equation}, {"order", args.order}, {"counts", json::array()}};
  std::string text = equation + ", n!·a_n for n = 0.." + std::to_string(args.order) + ":\n";
  for (const auto& v : counts) {
    j["counts"].push_back(v.get_str());
    text += " " + v.get_str();
  }
  emit(c, j, text + "\n");
  return ok;
}

// roots --------------------------------------------------------------------

struct RootsArgs {
  std::string family = "trunc-affine";
  int a = 0;
  int b = 2;
  int n = 2;
  std::string root_system = "B";
  std::string which = "F4";
  double tol = 1e-8;
};

int cmd_roots(const Common& c, const RootsArgs& args) {
  QPolynomial chi;
  Rational expected;
  if (args.family == "trunc-affine") {
    chi = args.a == args.b ? chi_balanced(args.a, args.n) : chi_operator(args.a, args.b, args.n);
    expected = Rational((args.a + args.b - 1) * args.n) / 2;
  } else if (args.family == "rootsystem") {
    chi = chi_rootsystem(parse_root_system(args.root_system), args.b, args.n);
    expected = mean_root(chi);
  } else if (args.family == "exceptional") {
    if (args.which != "F4" && args.which != "E6") throw PreconditionError("--which must be F4 or E6");
    chi = exceptional_chi(args.which == "F4" ? ExceptionalChi::F4_02 : ExceptionalChi::E6_02);
    expected = mean_root(chi);
  } else {
    throw PreconditionError("unknown roots family '" + args.family + "'");
  }
  if (chi.degree() < 1) throw PreconditionError("polynomial " + chi.to_string() + " has no roots");
  auto report = check_root_location(chi, expected, args.tol);
  const bool pass = report.passes(args.tol);
  json j;
  j["command"] = "roots";
  j["polynomial"] = chi.to_string();
  j["roots"] = roots_json(report.roots);
  j["expected_real_part"] = to_string(expected);
  j["max_deviation"] = report.max_deviation;
  j["symmetric"] = report.symmetric;
  j["functional_equation"] = report.functional_equation;
  j["pass"] = pass;
  std::ostringstream text;
  text.precision(12);
  text << "chi = " << chi.to_string() << "\nexpected real part " << to_string(expected) << '\n';
  for (const auto& r : report.roots) text << "  " << r.real() << (r.imag() < 0 ? " - " : " + ") << std::abs(r.imag()) << "i\n";
  text << "max deviation " << report.max_deviation << ", symmetric " << report.symmetric << ", functional equation "
       << report.functional_equation << '\n'
       << (pass ? "pass\n" : "FAIL\n");
  emit(c, j, text.str());
  return pass ? ok : disagreement;
}

// chi-closed ---------------------------------------------------------------

int cmd_chi_closed(const Common& c, const RootsArgs& args) {
  const std::string& f = args.family;
  QPolynomial chi;
  std::string form;
  if (f == "linial") {
    chi = chi_operator(0, 2, args.n);
    form = "type A, R^n/(1,..,1)";
  } else if (f == "shi") {
    chi = chi_operator(1, 2, args.n);
    form = "type A, R^n/(1,..,1)";
  } else if (f == "ext-shi") {
    chi = chi_operator(args.a, args.a + 1, args.n);
    form = "type A, R^n/(1,..,1)";
  } else if (f == "balanced") {
    chi = chi_balanced(args.a, args.n);
    form = "type A, R^n/(1,..,1)";
  } else if (f == "trunc-affine") {
    chi = args.a == args.b ? chi_balanced(args.a, args.n) : chi_operator(args.a, args.b, args.n);
    form = "type A, R^n/(1,..,1)";
  } else if (f == "rootsystem") {
    chi = chi_rootsystem(parse_root_system(args.root_system), args.b, args.n);
    form = "R^n";
  } else if (f == "exceptional") {
    chi = exceptional_chi(args.which == "E6" ? ExceptionalChi::E6_02 : ExceptionalChi::F4_02);
    form = "R^n";
  } else {
    throw PreconditionError("unknown closed-form family '" + f + "'");
  }
  const std::size_t dim = static_cast<std::size_t>(chi.degree());
  QPolynomial poin = poincare_from_chi(chi, dim);
  json j{{"command", "chi-closed"},          {"family", f},
         {"space", form},                     {"chi", chi.to_string()},
         {"chi_coefficients", poly_json(chi)}, {"regions", to_string(region_count(poin))},
         {"bounded", to_string(bounded_region_count(poin))}};
  std::ostringstream text;
  text << "chi = " << chi.to_string() << "  (" << form << ")\nregions = " << region_count(poin)
       << ", bounded = " << bounded_region_count(poin) << '\n';
  emit(c, j, text.str());
  return ok;
}

// oracle -------------------------------------------------------------------

struct OracleArgs {
  FamilyArgs family;
  std::vector<unsigned> primes;
  std::size_t auto_primes = 3;
};

int cmd_oracle(const Common& c, const OracleArgs& args) {
  Arrangement a = load_arrangement(args.family);
  std::vector<unsigned> primes = args.primes;
  if (primes.empty()) primes = admissible_primes(a, args.auto_primes, 2, c.config);
  QPolynomial chi = chi_nbc(a, {}, c.config);
  json j;
  j["command"] = "oracle";
  j["arrangement"] = a.label().to_string();
  j["chi"] = chi.to_string();
  j["results"] = json::array();
  std::ostringstream text;
  text << a.label().to_string() << ": chi = " << chi.to_string() << '\n';
  bool agree = true;
  for (unsigned p : primes) {
    Integer count = chi_finite_field(a, p, c.config);
    Integer predicted = to_integer(chi(Rational(static_cast<unsigned long>(p))));
    bool same = count == predicted;
    agree = agree && same;
    j["results"].push_back(
        {{"prime", p}, {"points", count.get_str()}, {"chi_at_p", predicted.get_str()}, {"agree", same}});
    text << "p = " << p << ": points " << count << ", chi(p) " << predicted << (same ? "" : "  DISAGREE") << '\n';
  }
  emit(c, j, text.str());
  return agree ? ok : disagreement;
}

// verify -------------------------------------------------------------------

int cmd_verify(const Common& c, const std::string& suite) {
  auto results = run_suite(suite, c.config);
  json j;
  j["command"] = "verify";
  j["suite"] = suite;
  j["checks"] = json::array();
  bool all = true;
  std::ostringstream text;
  for (const auto& r : results) {
    all = all && r.passed;
    j["checks"].push_back({{"id", r.id}, {"name", r.name}, {"suite", r.suite}, {"pass", r.passed}, {"failures", r.failures}});
    text << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.name << '\n';
    for (const auto& f : r.failures) text << "     " << f << '\n';
  }
  j["pass"] = all;
  emit(c, j, text.str());
  return all ? ok : disagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic polynomials and region counts of deformed Coxeter arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  common.config.threads = threads_from_environment();
  app.add_flag("--json", common.json_out, "machine-readable output");
  app.add_option("--threads", common.config.threads, "worker threads (default ARR_THREADS or 1)");
  app.add_option("--whitney-cap", common.config.whitney_cap);
  app.add_option("--geometric-cap", common.config.geometric_cap);
  app.add_option("--central-subsets-cap", common.config.central_subsets_cap);
  app.add_option("--ff-max-dim", common.config.ff_max_dim);
  app.add_option("--ff-max-prime", common.config.ff_max_prime);

  int status = ok;

  ChiArgs chi_args;
  auto* chi = app.add_subcommand("chi", "characteristic and Poincare polynomials");
  add_family_flags(chi, chi_args.family);
  chi->add_option("--engine", chi_args.engine, "whitney, nbc, nbc-linear or all");
  chi->callback([&] { status = cmd_chi(common, chi_args); });

  ChiArgs region_args;
  region_args.engine = "geometric";
  auto* regions = app.add_subcommand("regions", "region and bounded-region counts");
  add_family_flags(regions, region_args.family);
  regions->add_option("--engine", region_args.engine, "geometric, nbc, whitney or all");
  regions->callback([&] { status = cmd_regions(common, region_args); });

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "count combinatorial objects");
  count->add_option("--family", count_args.family,
                    "alternating-trees, lbs-trees, semiacyclic-tournaments, sleek-posets, semiorders, "
                    "semiorders-labelled, semiorders-unlabelled, graded-forests, forests, semigeneric-chi")
      ->required();
  count->add_option("--n", count_args.n)->required();
  count->add_option("--a", count_args.a);
  count->add_option("--b", count_args.b);
  count->add_flag("--enumerate", count_args.enumerate, "cross-check the count by a second method");
  count->add_flag("--csv", count_args.csv, "table for 0..n as CSV");
  count->callback([&] { status = cmd_count(common, count_args); });

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "solve a generating-function equation");
  series->add_option("--equation", series_args.equation, "trunc-affine, semigeneric or semigeneric-y");
  series->add_option("--a", series_args.a);
  series->add_option("--b", series_args.b);
  series->add_option("--order", series_args.order);
  series->callback([&] { status = cmd_series(common, series_args); });

  RootsArgs roots_args;
  auto* roots = app.add_subcommand("roots", "root location of closed-form polynomials");
  roots->add_option("--family", roots_args.family, "trunc-affine, rootsystem or exceptional");
  roots->add_option("--a", roots_args.a);
  roots->add_option("--b", roots_args.b);
  roots->add_option("--n", roots_args.n);
  roots->add_option("--root-system", roots_args.root_system);
  roots->add_option("--which", roots_args.which, "F4 or E6");
  roots->add_option("--tol", roots_args.tol);
  roots->callback([&] { status = cmd_roots(common, roots_args); });

  RootsArgs closed_args;
  auto* closed = app.add_subcommand("chi-closed", "closed-form characteristic polynomials");
  closed->add_option("--family", closed_args.family,
                     "linial, shi, ext-shi, balanced, trunc-affine, rootsystem or exceptional")
      ->required();
  closed->add_option("--a", closed_args.a);
  closed->add_option("--b", closed_args.b);
  closed->add_option("--n", closed_args.n);
  closed->add_option("--root-system", closed_args.root_system);
  closed->add_option("--which", closed_args.which, "F4 or E6");
  closed->callback([&] { status = cmd_chi_closed(common, closed_args); });

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "finite-field point counts against chi(p)");
  add_family_flags(oracle, oracle_args.family);
  oracle->add_option("--prime", oracle_args.primes, "primes to count over (default: smallest admissible)");
  oracle->add_option("--primes", oracle_args.auto_primes, "how many admissible primes when --prime is absent");
  oracle->callback([&] { status = cmd_oracle(common, oracle_args); });

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run acceptance checks");
  verify->add_option("--suite", suite, "all, linial, shi, catalan, semigeneric, series, roots or oracle");
  verify->callback([&] { status = cmd_verify(common, suite); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  } catch (const CapExceeded& e) {
    std::cerr << "arr: " << e.what() << '\n';
    return cap;
  } catch (const ConvergenceError& e) {
    std::cerr << "arr: " << e.what() << '\n';
    return numerical;
  } catch (const PreconditionError& e) {
    std::cerr << "arr: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "arr: " << e.what() << '\n';
    return disagreement;
  }
  return status;
}
