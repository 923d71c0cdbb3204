#include <algorithm>
#include <cmath>

#include "arr/affine.hpp"
#include "arr/error.hpp"

namespace arr {

Rational mean_root(const QPolynomial& p) {
  if (p.degree() < 1) throw PreconditionError("mean_root needs degree >= 1");
  const auto d = static_cast<std::size_t>(p.degree());
  return -p.coeff(d - 1) / (Rational(static_cast<unsigned long>(d)) * p.leading());
}

bool functional_equation_holds(const QPolynomial& p, const Rational& center) {
  QPolynomial reflected = compose_linear(p, Rational(-1), 2 * center);
  if (p.degree() % 2 == 1) reflected = -reflected;
  return reflected == p;
}

RootLocationReport check_root_location(const QPolynomial& p, const Rational& expected_real_part, double tol) {
  RootLocationReport report;
  report.polynomial = p;
  report.expected_real_part = expected_real_part;
  report.roots = poly_complex_roots(p);
  const double c = expected_real_part.get_d();
  for (const auto& r : report.roots) report.max_deviation = std::max(report.max_deviation, std::abs(r.real() - c));

  // Greedy matching of each root with the reflection of an unused one.
  std::vector<bool> used(report.roots.size());
  report.symmetric = true;
  for (const auto& r : report.roots) {
    const std::complex<double> mirror = 2.0 * c - r;
    std::size_t best = report.roots.size();
    double best_distance = 0;
    for (std::size_t j = 0; j < report.roots.size(); ++j) {
      if (used[j]) continue;
      double distance = std::abs(report.roots[j] - mirror);
      if (best == report.roots.size() || distance < best_distance) {
        best = j;
        best_distance = distance;
      }
    }
    if (best == report.roots.size() || best_distance > tol * (1 + std::abs(r))) {
      report.symmetric = false;
      break;
    }
    used[best] = true;
  }
  report.functional_equation = functional_equation_holds(p, expected_real_part);
  return report;
}

bool balanced_factors_exactly(int a, int n) {
  QPolynomial rest = chi_balanced(a, n);
  for (int k = 1; k <= n - 1; ++k) {
    auto [quotient, remainder] = divmod(rest, QPolynomial::linear(Rational(a * n - k)));
    if (!remainder.is_zero()) return false;
    rest = std::move(quotient);
  }
  return rest == QPolynomial::constant(Rational(1));
}

}  // namespace arr
