#include "arr/affine.hpp"
#include "arr/error.hpp"

namespace arr {

namespace {

void check_unbalanced(int a, int b, int n) {
  if (a < 0 || a >= b) throw PreconditionError("the operator formula needs 0 <= a < b; use chi_balanced for a = b");
  if (n < 1) throw PreconditionError("n must be at least 1");
}

QPolynomial power_q(const QPolynomial& shifted_base, int exponent) {
  return pow(shifted_base, static_cast<unsigned>(exponent));
}

// (q - c)^{n-1}
QPolynomial shifted_power(const Rational& c, int n) { return power_q(QPolynomial::linear(c), n - 1); }

Rational inverse_power(int r, int n) {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n));
  return Rational(1) / Rational(d);
}

}  // namespace

QPolynomial apply_shift_polynomial(const QPolynomial& in_s, const QPolynomial& p) {
  QPolynomial out;
  for (int k = 0; k <= in_s.degree(); ++k) {
    const Rational& c = in_s.coeff(static_cast<std::size_t>(k));
    if (c != 0) out += poly_shift(p, k) * c;
  }
  return out;
}

QPolynomial OperatorExpr::expand() const {
  QPolynomial total = QPolynomial::constant(prefactor);
  for (const auto& f : factors) total *= pow(f.in_s, f.exponent);
  return total;
}

Rational OperatorExpr::value_at_one() const {
  Rational v = prefactor;
  for (const auto& f : factors) {
    Rational base = f.in_s(Rational(1));
    for (unsigned e = 0; e < f.exponent; ++e) v *= base;
  }
  return v;
}

QPolynomial OperatorExpr::apply(const QPolynomial& p) const { return apply_shift_polynomial(expand(), p); }

QPolynomial stepped_sum(unsigned step, unsigned top) {
  if (step == 0 || top % step != 0) throw PreconditionError("stepped_sum: top must be a multiple of step");
  std::vector<Rational> c(top + 1);
  for (unsigned k = 0; k <= top; k += step) c[k] = 1;
  return QPolynomial(std::move(c));
}

QPolynomial chi_operator(int a, int b, int n) {
  check_unbalanced(a, b, n);
  OperatorExpr op;
  op.prefactor = inverse_power(b - a, n);
  std::vector<Rational> s(static_cast<std::size_t>(b));
  for (int k = a; k < b; ++k) s[static_cast<std::size_t>(k)] = 1;
  op.factors.push_back({QPolynomial(std::move(s)), static_cast<unsigned>(n)});
  QPolynomial chi = op.apply(QPolynomial::monomial(Rational(1), static_cast<std::size_t>(n - 1)));
  if (!chi.has_integer_coefficients()) throw Error("operator formula produced non-integral coefficients: " + chi.to_string());
  return chi;
}

QPolynomial chi_balanced(int a, int n) {
  if (a < 1) throw PreconditionError("the balanced formula needs a >= 1");
  if (n < 1) throw PreconditionError("n must be at least 1");
  QPolynomial chi = QPolynomial::constant(Rational(1));
  for (int k = 1; k <= n - 1; ++k) chi *= QPolynomial::linear(Rational(a * n - k));
  return chi;
}

QPolynomial chi_corollary_form(int a, int b, int n, int which) {
  check_unbalanced(a, b, n);
  const int r = b - a;
  QPolynomial sum;
  switch (which) {
    case 1: {
      // Odometer over phi: [n] -> {a..b-1}.
      std::vector<int> phi(static_cast<std::size_t>(n), a);
      for (;;) {
        long total = 0;
        for (int v : phi) total += v;
        sum += shifted_power(Rational(total), n);
        std::size_t k = 0;
        while (k < phi.size() && ++phi[k] == b) phi[k++] = a;
        if (k == phi.size()) break;
      }
      break;
    }
    case 2: {
      for (int s = 0; s <= n * (r - 1); ++s)
        for (int l = 0; l <= n; ++l) {
          Integer weight = binomial(n, l) * binomial(s + n - r * l - 1, n - 1);
          if (weight == 0) continue;
          if (l % 2 == 1) weight = -weight;
          sum += shifted_power(Rational(s + a * n), n) * Rational(weight);
        }
      break;
    }
    case 3: {
      // Compositions n_1 + ... + n_r = n; part j carries value a + j.
      std::vector<unsigned> parts(static_cast<std::size_t>(r), 0);
      auto rec = [&](auto&& self, std::size_t j, int left) -> void {
        if (j + 1 == parts.size()) {
          parts[j] = static_cast<unsigned>(left);
          long shift = 0;
          for (std::size_t i = 0; i < parts.size(); ++i) shift += static_cast<long>(a + static_cast<int>(i)) * parts[i];
          sum += shifted_power(Rational(shift), n) * Rational(multinomial(parts));
          return;
        }
        for (int m = 0; m <= left; ++m) {
          parts[j] = static_cast<unsigned>(m);
          self(self, j + 1, left - m);
        }
      };
      rec(rec, 0, n);
      break;
    }
    default: throw PreconditionError("corollary form must be 1, 2 or 3");
  }
  return sum * inverse_power(r, n);
}

Integer regions_from_paper_chi(const QPolynomial& chi, int n) {
  Integer v = to_integer(chi(Rational(-1)));
  return (n - 1) % 2 == 0 ? v : Integer(-v);
}

Integer balanced_region_product(int a, int n) {
  Integer r = 1;
  for (int k = 0; k <= n - 2; ++k) r *= a * n - k;
  return r;
}

}  // namespace arr
