#pragma once

// Closed forms for characteristic polynomials of truncated affine
// arrangements x_i - x_j in {-a+1, ..., b-1} (and their root-system
// analogues), and checks on where their roots lie.
//
// Type-A polynomials here use the paper's convention: chi_n^{ab} lives in
// the (n-1)-dimensional space x_1 + ... + x_n = 0, so it has degree n-1 and
// equals the full R^n polynomial divided by q.

#include <complex>
#include <optional>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/exactmath.hpp"

namespace arr {

/// Applies a polynomial in the shift S: f(q) -> f(q-1), i.e.
/// (sum_k c_k S^k) p = sum_k c_k p(q - k).
QPolynomial apply_shift_polynomial(const QPolynomial& in_s, const QPolynomial& p);

/// prefactor * prod_i F_i(S)^{e_i}, a polynomial operator in S.
struct OperatorExpr {
  struct Factor {
    QPolynomial in_s;  // integer coefficients, variable S
    unsigned exponent = 1;
  };
  Rational prefactor{1};
  std::vector<Factor> factors;

  /// The operator as a single polynomial in S.
  QPolynomial expand() const;
  /// prefactor * prod F_i(1)^{e_i}.
  Rational value_at_one() const;
  QPolynomial apply(const QPolynomial& p) const;
};

/// 1 + S^step + S^{2 step} + ... + S^{top} (top a multiple of step).
QPolynomial stepped_sum(unsigned step, unsigned top);

/// (b-a)^{-n} (S^a + ... + S^{b-1})^n q^{n-1}; needs 0 <= a < b, n >= 1.
QPolynomial chi_operator(int a, int b, int n);
/// (q+1-an)(q+2-an)...(q+n-1-an); needs a >= 1, n >= 1.
QPolynomial chi_balanced(int a, int n);
/// The three equivalent expansions of chi_operator (which = 1, 2, 3):
///   1: r^{-n} sum over phi: [n] -> {a..b-1} of (q - sum phi)^{n-1}
///   2: r^{-n} sum_{s,l} (-1)^l C(n,l) C(s+n-rl-1, n-1) (q-s-an)^{n-1}
///   3: r^{-n} sum over compositions n_1+..+n_r = n of multinomials
/// with r = b - a.
QPolynomial chi_corollary_form(int a, int b, int n, int which);
/// Region count (-1)^{n-1} chi(-1) of the type-A polynomial of degree n-1.
Integer regions_from_paper_chi(const QPolynomial& chi, int n);
/// an (an-1) ... (an-n+2): region count in the balanced case.
Integer balanced_region_product(int a, int n);

/// The operator for A^{0,b}(R), b = 2k+1 or 2k+2, normalized by 1/F(1),
/// together with its base polynomial q^n or (q-1)^n.
struct RootSystemOperator {
  OperatorExpr op;
  QPolynomial base;
};
RootSystemOperator rootsystem_operator(RootSystem r, int b, int n);
/// Characteristic polynomial of A^{0,b}(R) in R^n for R = B, C, D, BC;
/// b >= 1 (b = 1 gives q^n), n >= 2 (n >= 3 for D).
QPolynomial chi_rootsystem(RootSystem r, int b, int n);

enum class ExceptionalChi { F4_02, E6_02, F4_alt, E6_alt };
QPolynomial exceptional_chi(ExceptionalChi which);

/// Mean of the roots, -c_{d-1} / (d c_d).
Rational mean_root(const QPolynomial& p);
/// p(q) == (-1)^deg p(2 center - q), checked exactly.
bool functional_equation_holds(const QPolynomial& p, const Rational& center);

struct RootLocationReport {
  QPolynomial polynomial;
  std::vector<std::complex<double>> roots;
  Rational expected_real_part;
  double max_deviation = 0;
  /// Roots match their point reflections 2c - r within tolerance.
  bool symmetric = false;
  /// Exact check of p(q) = (-1)^deg p(2c - q).
  bool functional_equation = false;
  bool passes(double tol) const { return max_deviation < tol && symmetric && functional_equation; }
};
RootLocationReport check_root_location(const QPolynomial& p, const Rational& expected_real_part, double tol = 1e-8);

/// chi_balanced(a, n) divided exactly by q - (an - k), k = 1..n-1, leaves 1.
bool balanced_factors_exactly(int a, int n);

}  // namespace arr
