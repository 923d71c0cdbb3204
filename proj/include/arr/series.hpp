#pragma once

// Truncated exponential generating functions over Q and fixpoint solvers
// for the functional equations satisfied by region-count series.

#include <string>
#include <vector>

#include "arr/exactmath.hpp"

namespace arr {

/// sum_{n=0}^{order} a_n x^n / n!, known modulo x^{order+1}.
class EgfSeries {
 public:
  EgfSeries() : EgfSeries(0) {}
  /// Zero series of the given order.
  explicit EgfSeries(std::size_t order);
  /// coeffs[n] = a_n; order = coeffs.size() - 1 (coeffs must be non-empty).
  explicit EgfSeries(std::vector<Rational> coeffs);

  static EgfSeries constant(const Rational& c, std::size_t order);
  /// The series x.
  static EgfSeries x(std::size_t order);
  /// Builds the series from ordinary coefficients c_n (a_n = n! c_n).
  static EgfSeries from_ordinary(const std::vector<Rational>& ordinary);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  Rational& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// a_n / n!
  Rational ordinary(std::size_t n) const;

  EgfSeries truncated(std::size_t order) const;

  EgfSeries& operator+=(const EgfSeries& other);
  EgfSeries& operator-=(const EgfSeries& other);
  EgfSeries& operator*=(const Rational& s);
  friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
  friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }
  friend EgfSeries operator*(EgfSeries a, const Rational& s) { return a *= s; }
  friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b);
  friend bool operator==(const EgfSeries& a, const EgfSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

// Truncated EGF calculus. Binary operations return the smaller order.
EgfSeries multiply(const EgfSeries& a, const EgfSeries& b);
/// a / b; needs b(0) != 0.
EgfSeries divide(const EgfSeries& a, const EgfSeries& b);
/// Needs f(0) = 0.
EgfSeries exp(const EgfSeries& f);
/// Needs f(0) = 1.
EgfSeries log(const EgfSeries& f);
/// Antiderivative with zero constant term; order grows by one.
EgfSeries integrate(const EgfSeries& f);
/// Order shrinks by one (order-0 input gives the zero series of order 0).
EgfSeries differentiate(const EgfSeries& f);
/// f(g(x)); needs g(0) = 0.
EgfSeries compose(const EgfSeries& f, const EgfSeries& g);
EgfSeries power(const EgfSeries& f, unsigned k);
/// f^alpha = exp(alpha log f); needs f(0) = 1.
EgfSeries power(const EgfSeries& f, const Rational& alpha);
/// x * f(x)
EgfSeries times_x(const EgfSeries& f);
/// f(-x)
EgfSeries negate_argument(const EgfSeries& f);

// ---------------------------------------------------------------------------
// Functional-equation solvers

/// Region-count series f of the truncated affine family (a, b): f(0) = 1 and
///   a != b:  f^{b-a} = exp(x (f^a - f^b) / (1 - f)),
///   a == b:  f = 1 + x f^a.
/// Needs a, b >= 0 and a + b >= 2.
EgfSeries solve_truncated_affine_egf(int a, int b, std::size_t order);

/// Residual of the defining equation of solve_truncated_affine_egf, written
/// through the geometric sums (1 - f^k)/(1 - f) = 1 + f + ... + f^{k-1}:
///   f^a exp(-x S_a(f)) - f^b exp(-x S_b(f))  (a != b),  f - 1 - x f^a  (a == b).
EgfSeries truncated_affine_residual(int a, int b, const EgfSeries& f);

struct SemigenericSeries {
  EgfSeries y;  // 1 = y (2 - e^{x y})
  EgfSeries z;  // z'/z = y^2, z(0) = 1
};
SemigenericSeries solve_semigeneric(std::size_t order);

/// q_0 ... q_kmax with q_k' = -sum_{r=0}^k q_{r-a} q_{k-r-b}, q_k(0) = 1 and
/// q_j = 1 for j < 0.
std::vector<EgfSeries> qk_tower(int a, int b, std::size_t kmax, std::size_t order);

/// exp(-q log f(-x)) = f(-x)^{-q}; needs f(0) = 1.
EgfSeries chi_egf_from_f(const EgfSeries& f, const Rational& q, std::size_t order);

/// The EGF coefficients a_n as integers (the counts a series enumerates);
/// throws PreconditionError if some entry is not integral.
std::vector<Integer> integer_counts(const EgfSeries& f);

}  // namespace arr
