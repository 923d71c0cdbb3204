#include <algorithm>
#include <ostream>
#include <sstream>

#include "arr/error.hpp"
#include "arr/exactmath.hpp"

namespace arr {

namespace {
const Rational kZero{0};
}

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

QPolynomial::QPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPolynomial QPolynomial::constant(const Rational& c) { return QPolynomial(std::vector<Rational>{c}); }

QPolynomial QPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return QPolynomial(std::move(coeffs));
}

QPolynomial QPolynomial::linear(const Rational& root) { return QPolynomial(std::vector<Rational>{-root, Rational(1)}); }

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& QPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const Rational& QPolynomial::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

Rational QPolynomial::operator()(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::complex<long double> QPolynomial::evaluate(std::complex<long double> q) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    // mpq -> long double through the double conversion loses nothing at
    // the coefficient sizes used here (well below 2^53).
    acc = acc * q + static_cast<long double>(it->get_d());
  }
  return acc;
}

QPolynomial QPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return QPolynomial(std::move(d));
}

bool QPolynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string QPolynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || k == 0) os << arr::to_string(mag);
    if (k >= 1) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::vector<std::string> QPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(arr::to_string(c));
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.to_string(); }

QPolynomial compose_linear(const QPolynomial& p, const Rational& scale, const Rational& offset) {
  QPolynomial inner(std::vector<Rational>{offset, scale});
  QPolynomial acc;
  auto coeffs = p.coefficients();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc *= inner;
    acc += QPolynomial::constant(coeffs[k]);
  }
  return acc;
}

QPolynomial poly_shift(const QPolynomial& p, long steps) { return compose_linear(p, Rational(1), Rational(-steps)); }

QPolynomial pow(const QPolynomial& p, unsigned exponent) {
  QPolynomial result = QPolynomial::constant(Rational(1));
  QPolynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& numerator, const QPolynomial& divisor) {
  if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> rem(numerator.coefficients().begin(), numerator.coefficients().end());
  const int dd = divisor.degree();
  const int nd = numerator.degree();
  if (nd < dd) return {QPolynomial{}, numerator};
  std::vector<Rational> quot(static_cast<std::size_t>(nd - dd + 1));
  const Rational& lead = divisor.leading();
  for (int k = nd - dd; k >= 0; --k) {
    Rational factor = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * divisor.coeff(static_cast<std::size_t>(j));
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

namespace {
QPolynomial monic(QPolynomial p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}
}  // namespace

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

std::vector<SquarefreeFactor> squarefree_factorization(const QPolynomial& p) {
  // Yun's algorithm over a field of characteristic zero.
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  QPolynomial f = monic(p);
  QPolynomial df = f.derivative();
  QPolynomial a = gcd(f, df);
  QPolynomial b = divmod(f, a).first;
  QPolynomial c = divmod(df, a).first;
  QPolynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    QPolynomial g = gcd(b, d);
    if (g.degree() >= 1) out.push_back({g, i});
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace arr
