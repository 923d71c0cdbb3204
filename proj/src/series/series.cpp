#include <algorithm>

#include "arr/error.hpp"
#include "arr/series.hpp"

namespace arr {

namespace {

// Internally all products and transcendental operations work on ordinary
// coefficients c_n = a_n / n!.
std::vector<Rational> to_ordinary(const EgfSeries& f, std::size_t order) {
  std::vector<Rational> c(order + 1);
  Integer fact = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    c[n] = f[n] / Rational(fact);
  }
  return c;
}

std::vector<Rational> ordinary_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t order = std::min(a.size(), b.size()) - 1;
  std::vector<Rational> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

EgfSeries::EgfSeries(std::size_t order) : coeffs_(order + 1) {}

EgfSeries::EgfSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("EgfSeries needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

EgfSeries EgfSeries::constant(const Rational& c, std::size_t order) {
  EgfSeries s(order);
  s[0] = c;
  return s;
}

EgfSeries EgfSeries::x(std::size_t order) {
  EgfSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

EgfSeries EgfSeries::from_ordinary(const std::vector<Rational>& ordinary) {
  std::vector<Rational> a(ordinary.size());
  Integer fact = 1;
  for (std::size_t n = 0; n < ordinary.size(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    a[n] = ordinary[n] * Rational(fact);
  }
  return EgfSeries(std::move(a));
}

Rational EgfSeries::ordinary(std::size_t n) const { return coeffs_.at(n) / Rational(factorial(static_cast<unsigned>(n))); }

EgfSeries EgfSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw PreconditionError("cannot extend a truncated series");
  return EgfSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

EgfSeries& EgfSeries::operator+=(const EgfSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

EgfSeries& EgfSeries::operator-=(const EgfSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

EgfSeries& EgfSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) { return multiply(a, b); }

EgfSeries multiply(const EgfSeries& a, const EgfSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  return EgfSeries::from_ordinary(ordinary_product(to_ordinary(a, order), to_ordinary(b, order)));
}

EgfSeries divide(const EgfSeries& a, const EgfSeries& b) {
  if (b[0] == 0) throw PreconditionError("divide: divisor has zero constant term");
  const std::size_t order = std::min(a.order(), b.order());
  auto ca = to_ordinary(a, order);
  auto cb = to_ordinary(b, order);
  std::vector<Rational> h(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = ca[n];
    for (std::size_t k = 0; k < n; ++k) acc -= h[k] * cb[n - k];
    h[n] = acc / cb[0];
  }
  return EgfSeries::from_ordinary(h);
}

EgfSeries exp(const EgfSeries& f) {
  if (f[0] != 0) throw PreconditionError("exp: argument has nonzero constant term");
  const std::size_t order = f.order();
  auto c = to_ordinary(f, order);
  std::vector<Rational> g(order + 1);
  g[0] = 1;
  // n g_n = sum_{k=1}^n k c_k g_{n-k}
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<unsigned long>(k)) * c[k] * g[n - k];
    g[n] = acc / Rational(static_cast<unsigned long>(n));
  }
  return EgfSeries::from_ordinary(g);
}

EgfSeries log(const EgfSeries& f) {
  if (f[0] != 1) throw PreconditionError("log: argument must have constant term 1");
  const std::size_t order = f.order();
  auto g = to_ordinary(f, order);
  std::vector<Rational> c(order + 1);
  // n c_n = n g_n - sum_{k=1}^{n-1} k c_k g_{n-k}
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = Rational(static_cast<unsigned long>(n)) * g[n];
    for (std::size_t k = 1; k < n; ++k) acc -= Rational(static_cast<unsigned long>(k)) * c[k] * g[n - k];
    c[n] = acc / Rational(static_cast<unsigned long>(n));
  }
  return EgfSeries::from_ordinary(c);
}

EgfSeries integrate(const EgfSeries& f) {
  std::vector<Rational> a(f.order() + 2);
  for (std::size_t n = 0; n <= f.order(); ++n) a[n + 1] = f[n];
  return EgfSeries(std::move(a));
}

EgfSeries differentiate(const EgfSeries& f) {
  if (f.order() == 0) return EgfSeries(0);
  std::vector<Rational> a(f.coefficients().begin() + 1, f.coefficients().end());
  return EgfSeries(std::move(a));
}

EgfSeries compose(const EgfSeries& f, const EgfSeries& g) {
  if (g[0] != 0) throw PreconditionError("compose: inner series has nonzero constant term");
  const std::size_t order = std::min(f.order(), g.order());
  auto cf = to_ordinary(f, order);
  auto cg = to_ordinary(g, order);
  std::vector<Rational> acc(order + 1);
  for (std::size_t k = order + 1; k-- > 0;) {
    acc = ordinary_product(acc, cg);
    acc[0] += cf[k];
  }
  return EgfSeries::from_ordinary(acc);
}

EgfSeries power(const EgfSeries& f, unsigned k) {
  const std::size_t order = f.order();
  auto base = to_ordinary(f, order);
  std::vector<Rational> result(order + 1);
  result[0] = 1;
  while (k > 0) {
    if (k & 1U) result = ordinary_product(result, base);
    k >>= 1U;
    if (k > 0) base = ordinary_product(base, base);
  }
  return EgfSeries::from_ordinary(result);
}

EgfSeries power(const EgfSeries& f, const Rational& alpha) {
  if (f[0] != 1) throw PreconditionError("power: rational exponent needs constant term 1");
  return exp(log(f) * alpha);
}

EgfSeries times_x(const EgfSeries& f) {
  // x * sum a_n x^n/n! = sum n a_{n-1} x^n/n!
  EgfSeries out(f.order());
  for (std::size_t n = 1; n <= f.order(); ++n) out[n] = Rational(static_cast<unsigned long>(n)) * f[n - 1];
  return out;
}

EgfSeries negate_argument(const EgfSeries& f) {
  EgfSeries out = f;
  for (std::size_t n = 1; n <= f.order(); n += 2) out[n] = -out[n];
  return out;
}

std::vector<Integer> integer_counts(const EgfSeries& f) {
  std::vector<Integer> out;
  out.reserve(f.order() + 1);
  for (const auto& c : f.coefficients()) out.push_back(to_integer(c));
  return out;
}

}  // namespace arr
