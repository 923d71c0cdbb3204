#include <doctest.h>

#include <cmath>

#include "arr/error.hpp"
#include "arr/exactmath.hpp"

using namespace arr;

namespace {
const QPolynomial q = QPolynomial::monomial(Rational(1), 1);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_string(parse_rational("4/6")) == "2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
  CHECK(to_integer(parse_rational("12/3")) == 4);
  CHECK_THROWS(to_integer(Rational(1, 2)));
}

TEST_CASE("polynomial arithmetic") {
  QPolynomial p{-1, 0, 1};  // q^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == 8);
  CHECK((QPolynomial::linear(Rational(1)) * QPolynomial::linear(Rational(-1))) == p);
  CHECK(p.derivative() == QPolynomial{0, 2});
  CHECK((p - p).is_zero());
  CHECK(QPolynomial().degree() == -1);
  CHECK(pow(q - QPolynomial::constant(Rational(1)), 3) == QPolynomial{-1, 3, -3, 1});
}

TEST_CASE("shift and composition") {
  // p(q - 2) for p = q^2
  CHECK(poly_shift(q * q, 2) == QPolynomial{4, -4, 1});
  CHECK(poly_shift(poly_shift(q * q * q, 3), -3) == q * q * q);
  CHECK(compose_linear(q * q, Rational(-1), Rational(4)) == QPolynomial{16, -8, 1});
}

TEST_CASE("division and gcd") {
  QPolynomial a{-6, 11, -6, 1};  // (q-1)(q-2)(q-3)
  auto [quot, rem] = divmod(a, QPolynomial::linear(Rational(2)));
  CHECK(rem.is_zero());
  CHECK(quot == QPolynomial{3, -4, 1});
  CHECK(gcd(a, QPolynomial{2, -3, 1}) == QPolynomial{2, -3, 1});
  CHECK_THROWS_AS(divmod(a, QPolynomial()), PreconditionError);
}

TEST_CASE("squarefree factorization") {
  QPolynomial p = pow(QPolynomial::linear(Rational(1)), 3) * QPolynomial::linear(Rational(-2)) * Rational(5);
  auto factors = squarefree_factorization(p);
  QPolynomial rebuilt = QPolynomial::constant(p.leading());
  for (const auto& f : factors) rebuilt *= pow(f.factor, static_cast<unsigned>(f.multiplicity));
  CHECK(rebuilt == p);
  CHECK(factors.size() == 2);
}

TEST_CASE("rank and consistency") {
  auto m = RationalMatrix::from_rows({{Rational(1), Rational(-1), Rational(0)},
                                      {Rational(0), Rational(1), Rational(-1)},
                                      {Rational(1), Rational(0), Rational(-1)}});
  CHECK(rank(m) == 2);
  std::vector<Rational> good{Rational(1), Rational(2), Rational(3)}, bad{Rational(1), Rational(2), Rational(4)};
  CHECK(linear_system_consistent(m, good));
  CHECK_FALSE(linear_system_consistent(m, bad));
}

TEST_CASE("row echelon insert and pop") {
  RowEchelon e(3);
  std::vector<Rational> u{Rational(1), Rational(-1), Rational(0)}, v{Rational(0), Rational(1), Rational(-1)},
      w{Rational(1), Rational(0), Rational(-1)};
  CHECK(e.insert(u));
  CHECK(e.insert(v));
  CHECK_FALSE(e.insert(w));
  CHECK(e.rank() == 2);
  e.pop();
  CHECK(e.insert(w));
  CHECK(e.rank() == 2);
}

TEST_CASE("combinatorial numbers") {
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 2) == 0);
  CHECK(stirling_cycle(4, 2) == 11);
  CHECK(stirling_cycle(5, 1) == 24);
  CHECK(catalan(6) == 132);
  std::vector<unsigned> parts{2, 1, 1};
  CHECK(multinomial(parts) == 12);
}

TEST_CASE("complex roots") {
  // q^2 - 3q + 3 has roots (3 +- i sqrt 3)/2
  auto roots = poly_complex_roots(QPolynomial{3, -3, 1});
  REQUIRE(roots.size() == 2);
  for (auto r : roots) {
    CHECK(std::abs(r.real() - 1.5) < 1e-12);
    CHECK(std::abs(std::abs(r.imag()) - std::sqrt(3.0) / 2) < 1e-12);
  }
  // repeated roots come back exactly
  auto repeated = poly_complex_roots(pow(QPolynomial::linear(Rational(4)), 5));
  REQUIRE(repeated.size() == 5);
  for (auto r : repeated) CHECK(std::abs(r - std::complex<double>(4, 0)) < 1e-12);
}
