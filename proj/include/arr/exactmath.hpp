#pragma once

// Exact arithmetic backbone: GMP-backed integers and rationals, dense
// univariate polynomials over Q, rational matrices, and a few standard
// combinatorial numbers.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arr {

using Integer = mpz_class;
/// Always canonical: lowest terms, positive denominator, zero is 0/1.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);
/// Converts an integral rational to Integer; throws PreconditionError otherwise.
Integer to_integer(const Rational& value);

// ---------------------------------------------------------------------------
// QPolynomial

/// Dense polynomial in one variable with rational coefficients.
/// coeffs[i] multiplies q^i; no trailing zeros are stored.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs);
  QPolynomial(std::initializer_list<long> coeffs);

  static QPolynomial constant(const Rational& c);
  static QPolynomial monomial(const Rational& c, std::size_t degree);
  /// q - root
  static QPolynomial linear(const Rational& root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Zero beyond the degree.
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  Rational operator()(const Rational& q) const;
  std::complex<long double> evaluate(std::complex<long double> q) const;

  QPolynomial derivative() const;
  bool has_integer_coefficients() const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);
  QPolynomial& operator*=(const Rational& scalar);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend QPolynomial operator*(QPolynomial a, const Rational& s) { return a *= s; }
  friend QPolynomial operator*(const Rational& s, QPolynomial a) { return a *= s; }
  QPolynomial operator-() const;

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in variable `var`, highest degree first.
  std::string to_string(char var = 'q') const;
  /// Coefficients lowest degree first, as "p/q" strings.
  std::vector<std::string> coefficient_strings() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

/// p(q - steps); negative steps shift the other way.
QPolynomial poly_shift(const QPolynomial& p, long steps);
/// p(scale * q + offset).
QPolynomial compose_linear(const QPolynomial& p, const Rational& scale, const Rational& offset);
QPolynomial pow(const QPolynomial& p, unsigned exponent);
/// Quotient and remainder; throws PreconditionError on a zero divisor.
std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& numerator, const QPolynomial& divisor);
/// Monic gcd (zero when both inputs are zero).
QPolynomial gcd(QPolynomial a, QPolynomial b);

struct SquarefreeFactor {
  QPolynomial factor;  // monic, squarefree
  int multiplicity;
};
/// p = lc(p) * prod factor^multiplicity, factors pairwise coprime.
std::vector<SquarefreeFactor> squarefree_factorization(const QPolynomial& p);

// ---------------------------------------------------------------------------
// Linear algebra

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  RationalMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact rank over Q.
std::size_t rank(const RationalMatrix& m);
/// True iff m x = rhs has a rational solution; throws on length mismatch.
bool linear_system_consistent(const RationalMatrix& m, std::span<const Rational> rhs);

/// Row-echelon basis that grows one vector at a time and can drop the most
/// recently inserted vector. Each stored row has a unit pivot and zeros in
/// the pivot columns of all earlier rows.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t width) : width_(width) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Residual of v after elimination against the stored rows.
  std::vector<Rational> reduce(std::span<const Rational> v) const;
  /// Inserts v if it is independent; returns whether it was inserted.
  bool insert(std::span<const Rational> v);
  void pop();

 private:
  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Combinatorial numbers

Integer factorial(unsigned n);
Integer binomial(long n, long k);  // zero outside 0 <= k <= n
Integer stirling_cycle(unsigned n, unsigned k);
Integer catalan(unsigned n);
/// n! / prod k_i!
Integer multinomial(std::span<const unsigned> parts);

// ---------------------------------------------------------------------------
// Root finding

/// All complex roots with multiplicity. Squarefree parts are separated
/// exactly, solved by Aberth-Ehrlich iteration in double precision, then
/// Newton-polished in extended precision. Throws ConvergenceError when a
/// root misses the residual bound |p(r)| < tol * (1 + max|coeff|).
std::vector<std::complex<double>> poly_complex_roots(const QPolynomial& p, double tol = 1e-10);

}  // namespace arr
