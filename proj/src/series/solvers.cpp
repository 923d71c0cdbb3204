#include <algorithm>
#include <cstdlib>

#include "arr/error.hpp"
#include "arr/series.hpp"

namespace arr {

namespace {

// 1 + f + ... + f^{k-1}; the zero series when k == 0.
EgfSeries geometric_sum(const EgfSeries& f, unsigned k) {
  EgfSeries sum(f.order());
  EgfSeries term = EgfSeries::constant(Rational(1), f.order());
  for (unsigned j = 0; j < k; ++j) {
    sum += term;
    term = multiply(term, f);
  }
  return sum;
}

void check_affine_params(int a, int b) {
  if (a < 0 || b < 0) throw PreconditionError("truncated affine family needs a, b >= 0");
  if (a + b < 2) throw PreconditionError("truncated affine family needs a + b >= 2");
}

// One application of the right-hand side. Every coefficient of the result
// up to degree m+1 depends only on coefficients of f up to degree m.
EgfSeries affine_step(int a, int b, const EgfSeries& f) {
  const std::size_t order = f.order();
  if (a == b) return EgfSeries::constant(Rational(1), order) + times_x(power(f, static_cast<unsigned>(a)));
  const unsigned lo = static_cast<unsigned>(std::min(a, b));
  const unsigned span = static_cast<unsigned>(std::abs(b - a));
  // (f^a - f^b)/(1 - f) = f^lo (1 + ... + f^{span-1}) up to sign, which
  // cancels against f^{b-a} on the left.
  EgfSeries inner = times_x(multiply(power(f, lo), geometric_sum(f, span)));
  inner *= Rational(1, span);
  return exp(inner);
}

}  // namespace

EgfSeries solve_truncated_affine_egf(int a, int b, std::size_t order) {
  check_affine_params(a, b);
  EgfSeries f = EgfSeries::constant(Rational(1), order);
  for (std::size_t it = 0; it <= order; ++it) f = affine_step(a, b, f);
  if (!(affine_step(a, b, f) == f)) throw ConvergenceError("truncated affine fixpoint did not settle");
  return f;
}

EgfSeries truncated_affine_residual(int a, int b, const EgfSeries& f) {
  check_affine_params(a, b);
  const std::size_t order = f.order();
  if (a == b) {
    return f - EgfSeries::constant(Rational(1), order) - times_x(power(f, static_cast<unsigned>(a)));
  }
  auto side = [&](int k) {
    EgfSeries e = times_x(geometric_sum(f, static_cast<unsigned>(k)));
    e *= Rational(-1);
    return multiply(power(f, static_cast<unsigned>(k)), exp(e));
  };
  return side(a) - side(b);
}

SemigenericSeries solve_semigeneric(std::size_t order) {
  const EgfSeries one = EgfSeries::constant(Rational(1), order);
  const EgfSeries two = EgfSeries::constant(Rational(2), order);
  EgfSeries y = one;
  for (std::size_t it = 0; it <= order; ++it) y = divide(one, two - exp(times_x(y)));
  EgfSeries z = exp(integrate(multiply(y, y)).truncated(order));
  return {std::move(y), std::move(z)};
}

std::vector<EgfSeries> qk_tower(int a, int b, std::size_t kmax, std::size_t order) {
  if (a < 0 || b < 0) throw PreconditionError("qk_tower needs a, b >= 0");
  const EgfSeries one = EgfSeries::constant(Rational(1), order);
  std::vector<EgfSeries> q;
  q.reserve(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    EgfSeries current = one;
    auto get = [&](long j) -> const EgfSeries& {
      if (j < 0) return one;
      if (static_cast<std::size_t>(j) == k) return current;
      return q[static_cast<std::size_t>(j)];
    };
    for (std::size_t it = 0; it <= order; ++it) {
      EgfSeries rhs(order);
      for (long r = 0; r <= static_cast<long>(k); ++r)
        rhs += multiply(get(r - a), get(static_cast<long>(k) - r - b));
      rhs *= Rational(-1);
      current = one + integrate(rhs).truncated(order);
    }
    q.push_back(std::move(current));
  }
  return q;
}

EgfSeries chi_egf_from_f(const EgfSeries& f, const Rational& q, std::size_t order) {
  if (f.order() < order) throw PreconditionError("chi_egf_from_f: series order too small");
  if (f[0] != 1) throw PreconditionError("chi_egf_from_f: f(0) must be 1");
  EgfSeries l = log(negate_argument(f.truncated(order)));
  l *= -q;
  return exp(l);
}

}  // namespace arr
