#include <doctest.h>

#include "arr/error.hpp"
#include "arr/series.hpp"

using namespace arr;

namespace {
std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
}

TEST_CASE("exp and log are inverse") {
  EgfSeries x = EgfSeries::x(8);
  EgfSeries e = exp(x);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(e[n] == 1);
  EgfSeries f = EgfSeries::constant(Rational(1), 8) + x * Rational(3) + multiply(x, x);
  CHECK(exp(log(f)) == f);
}

TEST_CASE("series calculus") {
  EgfSeries x = EgfSeries::x(6);
  // d/dx e^{2x} = 2 e^{2x}
  EgfSeries e2 = exp(x * Rational(2));
  CHECK(differentiate(e2).truncated(5) == (e2 * Rational(2)).truncated(5));
  CHECK(differentiate(integrate(e2)).truncated(5) == e2.truncated(5));
  // e^{e^x - 1}: Bell numbers
  EgfSeries bell = compose(exp(x), exp(x) - EgfSeries::constant(Rational(1), 6));
  CHECK(integer_counts(bell) == ints({1, 1, 2, 5, 15, 52, 203}));
  // (1 - x)^{-1} has EGF coefficients n!
  EgfSeries geo = divide(EgfSeries::constant(Rational(1), 6), EgfSeries::constant(Rational(1), 6) - x);
  CHECK(integer_counts(geo) == ints({1, 1, 2, 6, 24, 120, 720}));
  CHECK(power(geo, Rational(-1)) == EgfSeries::constant(Rational(1), 6) - x);
  CHECK(negate_argument(e2)[3] == -8);
  CHECK_THROWS_AS(divide(geo, x), PreconditionError);
}

TEST_CASE("truncated affine equations") {
  CHECK(integer_counts(solve_truncated_affine_egf(0, 2, 7)) == ints({1, 1, 2, 7, 36, 246, 2104, 21652}));
  CHECK(integer_counts(solve_truncated_affine_egf(1, 2, 6)) == ints({1, 1, 3, 16, 125, 1296, 16807}));
  CHECK(integer_counts(solve_truncated_affine_egf(2, 2, 5)) == ints({1, 1, 4, 30, 336, 5040}));
  for (auto [a, b] : {std::pair{0, 2}, std::pair{1, 3}})
    CHECK(solve_truncated_affine_egf(a, b, 9) == solve_truncated_affine_egf(b, a, 9));
  auto f = solve_truncated_affine_egf(1, 3, 10);
  CHECK(truncated_affine_residual(1, 3, f) == EgfSeries(10));
  CHECK_THROWS_AS(solve_truncated_affine_egf(0, 1, 4), PreconditionError);
}

TEST_CASE("semigeneric equations") {
  auto s = solve_semigeneric(6);
  CHECK(integer_counts(s.z) == ints({1, 1, 3, 19, 195, 2831, 53703}));
  // y (2 - e^{xy}) = 1
  EgfSeries x = EgfSeries::x(6);
  EgfSeries lhs = multiply(s.y, EgfSeries::constant(Rational(2), 6) - exp(multiply(x, s.y)));
  CHECK(lhs == EgfSeries::constant(Rational(1), 6));
}

TEST_CASE("chi series") {
  auto f = solve_truncated_affine_egf(1, 2, 5);
  // coefficient n at q is q (q - n)^{n-1}
  auto chi = chi_egf_from_f(f, Rational(5), 5);
  CHECK(chi[3] == 20);
  CHECK(chi[2] == 15);
  auto zero = chi_egf_from_f(f, Rational(0), 5);
  CHECK(zero == EgfSeries::constant(Rational(1), 5));
}

TEST_CASE("q_k tower") {
  auto tower = qk_tower(0, 2, 12, 8);
  REQUIRE(tower.size() == 13);
  // q_0 = e^{-x} when a = 0
  CHECK(tower[0] == exp(EgfSeries::x(8) * Rational(-1)));
  CHECK(divide(tower[11], tower[12]) == solve_truncated_affine_egf(0, 2, 8));
}
