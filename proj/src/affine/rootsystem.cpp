#include "arr/affine.hpp"
#include "arr/error.hpp"

namespace arr {

namespace {

// 1 + S + ... + S^{2k}
QPolynomial plain(unsigned k) { return stepped_sum(1, 2 * k); }

}  // namespace

RootSystemOperator rootsystem_operator(RootSystem r, int b, int n) {
  if (b < 1) throw PreconditionError("root-system formulas need b >= 1 (a = 0)");
  if (r == RootSystem::A) throw PreconditionError("type A uses chi_operator");
  if (n < 2) throw PreconditionError("root-system formulas need n >= 2");
  if (r == RootSystem::D && n < 3) throw PreconditionError("D_n formulas need n >= 3");
  const bool even = b % 2 == 0;
  const unsigned k = static_cast<unsigned>(even ? (b - 2) / 2 : (b - 1) / 2);
  const unsigned un = static_cast<unsigned>(n);

  RootSystemOperator out;
  auto& f = out.op.factors;
  // Even b: (1+S^2+..+S^{2k}), (1+S^2+..+S^{4k+2}), base (q-1)^n.
  // Odd b:  (1+S+..+S^{2k}),   (1+S^2+..+S^{4k}),   base q^n.
  const QPolynomial small = even ? stepped_sum(2, 2 * k) : plain(k);
  const QPolynomial large = even ? stepped_sum(2, 4 * k + 2) : stepped_sum(2, 4 * k);
  switch (r) {
    case RootSystem::B:
    case RootSystem::C:
      f.push_back({small, 2});
      f.push_back({large, un - 1});
      break;
    case RootSystem::D:
      if (even) f.push_back({stepped_sum(2, 2), 1});
      f.push_back({small, 4});
      f.push_back({large, un - 3});
      break;
    case RootSystem::BC:
      f.push_back({small, 1});
      f.push_back({large, un});
      break;
    case RootSystem::A: break;
  }
  std::erase_if(f, [](const OperatorExpr::Factor& x) { return x.exponent == 0; });
  out.op.prefactor = 1 / out.op.value_at_one();
  out.base = pow(even ? QPolynomial::linear(Rational(1)) : QPolynomial::monomial(Rational(1), 1), un);
  return out;
}

QPolynomial chi_rootsystem(RootSystem r, int b, int n) {
  auto ro = rootsystem_operator(r, b, n);
  QPolynomial chi = ro.op.apply(ro.base);
  if (chi.leading() != 1) throw Error("normalized root-system polynomial is not monic: " + chi.to_string());
  return chi;
}

QPolynomial exceptional_chi(ExceptionalChi which) {
  auto power_sum = [](std::initializer_list<std::pair<long, long>> terms, unsigned degree) {
    QPolynomial s;
    for (auto [weight, root] : terms) s += pow(QPolynomial::linear(Rational(root)), degree) * Rational(weight);
    return s;
  };
  switch (which) {
    case ExceptionalChi::F4_02: return QPolynomial{2917, -1368, 258, -24, 1};
    case ExceptionalChi::E6_02: return QPolynomial{212002, -140076, 40185, -6480, 630, -36, 1};
    case ExceptionalChi::F4_alt:
      return power_sum({{1, 1}, {3, 5}, {3, 7}, {1, 11}}, 4) * Rational(1, 8) - QPolynomial::constant(Rational(48));
    case ExceptionalChi::E6_alt:
      return power_sum({{61, 1}, {352, 4}, {91, 5}, {91, 7}, {352, 8}, {61, 11}}, 6) * Rational(1, 1008) -
             QPolynomial::constant(Rational(210));
  }
  throw PreconditionError("unknown exceptional polynomial");
}

}  // namespace arr
