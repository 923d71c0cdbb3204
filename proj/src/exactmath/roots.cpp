#include <algorithm>
#include <cmath>
#include <numbers>

#include "arr/error.hpp"
#include "arr/exactmath.hpp"

namespace arr {

namespace {

using cld = std::complex<long double>;

struct DoublePoly {
  std::vector<long double> c;  // lowest degree first

  cld eval(cld z) const {
    cld acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  }
  cld eval_derivative(cld z) const {
    cld acc = 0;
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + static_cast<long double>(k) * c[k];
    return acc;
  }
};

DoublePoly to_double(const QPolynomial& p) {
  DoublePoly d;
  d.c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) d.c.push_back(static_cast<long double>(x.get_d()));
  return d;
}

// Aberth-Ehrlich simultaneous iteration on a monic squarefree polynomial.
std::vector<cld> aberth(const DoublePoly& p) {
  const std::size_t m = p.c.size() - 1;
  const long double center = -p.c[m - 1] / static_cast<long double>(m);
  // Fujiwara-style bound on |root - center| from the coefficients.
  long double radius = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    long double a = std::fabs(p.c[m - i]);
    if (a > 0) radius = std::max(radius, std::pow(a, 1.0L / static_cast<long double>(i)));
  }
  radius = std::max<long double>(radius, 1.0L) + std::fabs(center);

  std::vector<cld> z(m);
  for (std::size_t k = 0; k < m; ++k) {
    long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(m) + 0.4L;
    z[k] = cld(center, 0) + std::polar(radius, angle);
  }

  for (int iter = 0; iter < 2000; ++iter) {
    long double biggest = 0;
    for (std::size_t k = 0; k < m; ++k) {
      cld value = p.eval(z[k]);
      if (value == cld(0)) continue;
      cld ratio = value / p.eval_derivative(z[k]);
      cld repulsion = 0;
      for (std::size_t j = 0; j < m; ++j)
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      cld step = ratio / (1.0L - ratio * repulsion);
      z[k] -= step;
      biggest = std::max(biggest, std::abs(step) / (1 + std::abs(z[k])));
    }
    if (biggest < 1e-17L) break;
  }
  return z;
}

cld newton_polish(const DoublePoly& p, cld z) {
  for (int iter = 0; iter < 8; ++iter) {
    cld d = p.eval_derivative(z);
    if (d == cld(0)) break;
    cld step = p.eval(z) / d;
    z -= step;
    if (std::abs(step) <= 1e-19L * (1 + std::abs(z))) break;
  }
  return z;
}

}  // namespace

std::vector<std::complex<double>> poly_complex_roots(const QPolynomial& p, double tol) {
  if (p.degree() < 1) throw PreconditionError("poly_complex_roots: degree must be at least 1");

  QPolynomial monic_p = p * (Rational(1) / p.leading());
  const DoublePoly full = to_double(monic_p);
  long double scale = 1;
  for (long double c : full.c) scale = std::max(scale, 1 + std::fabs(c));

  std::vector<std::complex<double>> roots;
  for (const auto& [factor, multiplicity] : squarefree_factorization(p)) {
    std::vector<cld> found;
    if (factor.degree() == 1) {
      found.emplace_back(static_cast<long double>(Rational(-factor.coeff(0)).get_d()), 0);
    } else {
      DoublePoly g = to_double(factor);
      found = aberth(g);
      for (auto& z : found) z = newton_polish(g, z);
    }
    for (const auto& z : found) {
      long double residual = std::abs(full.eval(z));
      if (!(residual < static_cast<long double>(tol) * scale))
        throw ConvergenceError("root finder did not converge for " + p.to_string() + " (residual " +
                               std::to_string(static_cast<double>(residual)) + ")");
      for (int k = 0; k < multiplicity; ++k)
        roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace arr
