#include <doctest.h>

#include "arr/arrangement.hpp"
#include "arr/error.hpp"

using namespace arr;

namespace {

const QPolynomial q = QPolynomial::monomial(Rational(1), 1);

// Points of F_p^d off every hyperplane, by plain enumeration.
long naive_point_count(const Arrangement& a, long p) {
  const std::size_t d = a.dim();
  std::vector<long> x(d, 0);
  long count = 0;
  for (;;) {
    bool off = true;
    for (const auto& h : a.hyperplanes()) {
      long s = -h.offset.get_num().get_si();
      for (std::size_t i = 0; i < d; ++i) s += h.normal[i].get_num().get_si() * x[i];
      if (((s % p) + p) % p == 0) {
        off = false;
        break;
      }
    }
    count += off;
    std::size_t k = 0;
    while (k < d && ++x[k] == p) x[k++] = 0;
    if (k == d) break;
  }
  return count;
}

// The monic degree-d polynomial through (p_i, value_i), i = 0..d-1.
QPolynomial interpolate_monic(const std::vector<long>& xs, const std::vector<long>& ys, std::size_t d) {
  QPolynomial leading = QPolynomial::monomial(Rational(1), d);
  QPolynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPolynomial basis = QPolynomial::constant(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= QPolynomial::linear(Rational(xs[j]));
      denom *= xs[i] - xs[j];
    }
    Rational rest = Rational(ys[i]) - leading(Rational(xs[i]));
    out += basis * (rest / denom);
  }
  return out + leading;
}

QPolynomial brute_chi(const Arrangement& a, std::vector<long> primes) {
  primes.resize(a.dim());
  std::vector<long> counts;
  for (long p : primes) counts.push_back(naive_point_count(a, p));
  return interpolate_monic(primes, counts, a.dim());
}

Hyperplane hp(std::vector<long> normal, long offset) {
  Hyperplane h;
  for (long v : normal) h.normal.emplace_back(v);
  h.offset = offset;
  return h;
}

}  // namespace

TEST_CASE("family construction") {
  CHECK(build_family(Family::braid, 4).size() == 6);
  CHECK(build_family(Family::shi, 4).size() == 12);
  CHECK(build_family(Family::catalan0, 3).size() == 9);
  CHECK(build_family(Family::ext_shi, 3, {.a = 2}).size() == 12);
  CHECK(build_family(Family::trunc_affine, 3, {.a = 1, .b = 3}).size() == 9);
  CHECK(build_family(Family::generic, 3, {.m = 2}).size() == 6);
  CHECK(build_family(Family::rootsystem, 2, {.a = 0, .b = 2, .root_system = RootSystem::B}).size() == 4);
  CHECK(build_family(Family::linial, 3).is_graphic());
  CHECK_FALSE(build_family(Family::rootsystem, 2, {.a = 0, .b = 2, .root_system = RootSystem::B}).is_graphic());
  CHECK(verify_family_genericity(build_family(Family::semigeneric, 4)));
  CHECK(verify_family_genericity(build_family(Family::generic, 4, {.m = 2})));
  CHECK_THROWS_AS(build_family(Family::trunc_affine, 3, {.a = 0, .b = 1}), PreconditionError);
  CHECK(parse_family("ext-shi") == Family::ext_shi);
  CHECK_THROWS_AS(parse_family("nonsense"), PreconditionError);
}

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(Arrangement(2, {hp({1, 0, 0}, 0)}), PreconditionError);
  CHECK_THROWS_AS(Arrangement(2, {hp({0, 0}, 1)}), PreconditionError);
  CHECK_THROWS_AS(Arrangement(2, {hp({1, -1}, 1), hp({2, -2}, 2)}), PreconditionError);
  CHECK_NOTHROW(Arrangement(2, {hp({1, -1}, 1), hp({2, -2}, 1)}));
}

TEST_CASE("poincare conversions") {
  QPolynomial chi{0, 9, -6, 1};  // shi, n = 3
  QPolynomial poin = poincare_from_chi(chi, 3);
  CHECK(poin == QPolynomial{1, 6, 9});
  CHECK(chi_from_poincare(poin, 3) == chi);
  CHECK(region_count(poin) == 16);
  CHECK(bounded_region_count(poin) == 4);
  CHECK(reduce_diagonal(chi) == QPolynomial{9, -6, 1});
}

TEST_CASE("engines agree with point counting") {
  const std::vector<long> primes = {11, 13, 17, 19, 23};
  std::vector<Arrangement> cases = {
      build_family(Family::braid, 3),
      build_family(Family::linial, 3),
      build_family(Family::shi, 3),
      build_family(Family::catalan, 3),
      build_family(Family::catalan0, 3),
      build_family(Family::ext_shi, 3, {.a = 2}),
      build_family(Family::linial, 4),
      build_family(Family::shi, 4),
      build_family(Family::rootsystem, 3, {.a = 0, .b = 2, .root_system = RootSystem::B}),
      build_family(Family::rootsystem, 3, {.a = 1, .b = 2, .root_system = RootSystem::D}),
      // a non-graphic, non-central example: three lines in general position plus a parallel
      Arrangement(2, {hp({1, 0}, 0), hp({0, 1}, 0), hp({1, 1}, 1), hp({1, 0}, 2)}),
  };
  for (const auto& a : cases) {
    CAPTURE(a.label().to_string());
    QPolynomial want = brute_chi(a, primes);
    CHECK(chi_nbc(a) == want);
    CHECK(chi_nbc_linear_algebra(a) == want);
    CHECK(chi_whitney(a) == want);
    RegionReport geo = regions_geometric(a);
    QPolynomial poin = poincare_from_chi(want, a.dim());
    CHECK(Integer(static_cast<unsigned long>(geo.regions)) == region_count(poin));
    CHECK(Integer(static_cast<unsigned long>(geo.bounded)) == bounded_region_count(poin));
  }
}

TEST_CASE("generic and semigeneric arrangements") {
  // three lines in general position in the plane x_1 + x_2 + x_3 = 0
  Arrangement g = build_family(Family::generic, 3);
  QPolynomial want = brute_chi(g, {101, 103, 107});
  CHECK(chi_nbc(g) == want);
  CHECK(region_count(poincare_from_chi(want, 3)) == 7);
  Arrangement s = build_family(Family::semigeneric, 3);
  CHECK(region_count(poincare_from_chi(chi_nbc(s), 3)) == 19);
  CHECK(regions_geometric(s).regions == 19);
}

TEST_CASE("nbc order independence and threads") {
  Arrangement a = build_family(Family::catalan, 4);
  std::vector<std::size_t> reversed(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) reversed[i] = a.size() - 1 - i;
  EngineConfig cfg;
  cfg.threads = 4;
  QPolynomial base = chi_nbc(a);
  CHECK(chi_nbc(a, reversed) == base);
  CHECK(chi_nbc(a, {}, cfg) == base);
  CHECK(chi_whitney(a, cfg) == base);
  CHECK(region_count(poincare_from_chi(base, 4)) == 183);
}

TEST_CASE("caps") {
  Arrangement big = build_family(Family::catalan0, 5);  // 30 hyperplanes
  CHECK_THROWS_AS(chi_whitney(big), CapExceeded);
  CHECK_THROWS_AS(regions_geometric(big), CapExceeded);
  CHECK_NOTHROW(chi_nbc(big));
}

TEST_CASE("finite field admissibility") {
  Arrangement a = build_family(Family::catalan0, 3);
  CHECK(prime_inadmissible_reason(a, 2).has_value());
  CHECK(prime_inadmissible_reason(a, 4).has_value());
  CHECK_FALSE(prime_inadmissible_reason(a, 11).has_value());
  CHECK(chi_finite_field(build_family(Family::linial, 3), 11) == 1001);
  CHECK_THROWS_AS(chi_finite_field(a, 2), PreconditionError);
  CHECK_THROWS_AS(chi_finite_field(build_family(Family::linial, 5), 11), PreconditionError);
  auto primes = admissible_primes(a, 3, 2);
  REQUIRE(primes.size() == 3);
  for (unsigned p : primes) CHECK(chi_finite_field(a, p) == to_integer(chi_nbc(a)(Rational(p))));
}

TEST_CASE("central subsets") {
  Arrangement a = build_family(Family::braid, 3);
  std::size_t central = 0, total = 0;
  central_subsets(a, [&](const CentralSubsetReport& r) {
    ++total;
    central += r.central;
  });
  CHECK(total == 8);
  CHECK(central == 8);
  // x_1 - x_2 = 0 and x_1 - x_2 = 1 never meet
  Arrangement s(2, {hp({1, -1}, 0), hp({1, -1}, 1)});
  std::size_t s_central = 0;
  central_subsets(s, [&](const CentralSubsetReport& r) { s_central += r.central; });
  CHECK(s_central == 3);
}

TEST_CASE("json round trip") {
  Arrangement a = build_family(Family::ext_shi, 3, {.a = 2});
  Arrangement b = arrangement_from_json(arrangement_to_json(a));
  CHECK(b.dim() == a.dim());
  CHECK(b.size() == a.size());
  CHECK(chi_nbc(b) == chi_nbc(a));
  CHECK_THROWS_AS(arrangement_from_json("{\"dim\": 2, \"hyperplanes\": [{\"normal\": [\"1\"], \"offset\": \"0\"}]}"),
                  PreconditionError);
}
