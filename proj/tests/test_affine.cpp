#include <doctest.h>

#include "arr/affine.hpp"
#include "arr/error.hpp"

using namespace arr;

namespace {
const QPolynomial q = QPolynomial::monomial(Rational(1), 1);
QPolynomial lin(long root) { return QPolynomial::linear(Rational(root)); }
}  // namespace

TEST_CASE("operator formula") {
  CHECK(chi_operator(1, 2, 3) == pow(lin(3), 2));
  CHECK(chi_operator(0, 2, 3) == QPolynomial{3, -3, 1});
  CHECK(chi_operator(0, 2, 2) == lin(1));
  CHECK_THROWS_AS(chi_operator(2, 2, 3), PreconditionError);
  for (int n = 1; n <= 6; ++n)
    for (int b = 1; b <= 4; ++b)
      for (int a = 0; a < b; ++a) {
        if (a + b < 2) continue;
        for (int which = 1; which <= 3; ++which) CHECK(chi_corollary_form(a, b, n, which) == chi_operator(a, b, n));
      }
}

TEST_CASE("balanced formula") {
  CHECK(chi_balanced(1, 3) == lin(1) * lin(2));
  CHECK(chi_balanced(2, 3) == lin(4) * lin(5));
  CHECK(regions_from_paper_chi(chi_balanced(2, 3), 3) == 30);
  CHECK(balanced_region_product(2, 3) == 30);
  CHECK(chi_balanced(1, 2) == lin(1));
  CHECK(balanced_factors_exactly(3, 6));
}

TEST_CASE("closed forms match the arrangement engines") {
  for (int n = 2; n <= 4; ++n)
    for (auto [a, b] : {std::pair{0, 2}, std::pair{1, 2}, std::pair{0, 3}, std::pair{1, 3}}) {
      Arrangement arr = build_family(Family::trunc_affine, n, {.a = a, .b = b});
      if (arr.size() > 18) continue;
      CHECK(chi_operator(a, b, n) * q == chi_nbc(arr));
    }
}

TEST_CASE("root-system formulas") {
  for (int n = 2; n <= 4; ++n) CHECK(chi_rootsystem(RootSystem::B, 1, n) == pow(q, static_cast<unsigned>(n)));
  CHECK_THROWS_AS(chi_rootsystem(RootSystem::D, 2, 2), PreconditionError);
  // (1/27)(1 + S + S^2)(1 + S^2 + S^4)^2 q^2
  auto ro = rootsystem_operator(RootSystem::BC, 3, 2);
  CHECK(ro.op.prefactor == Rational(1, 27));
  for (RootSystem r : {RootSystem::B, RootSystem::C, RootSystem::D, RootSystem::BC})
    for (int b = 2; b <= 4; ++b)
      for (int n = r == RootSystem::D ? 3 : 2; n <= 3; ++n) {
        Arrangement arr = build_family(Family::rootsystem, n, {.a = 0, .b = b, .root_system = r});
        CHECK(chi_rootsystem(r, b, n) == chi_nbc(arr));
      }
}

TEST_CASE("exceptional polynomials") {
  CHECK(exceptional_chi(ExceptionalChi::F4_02).coeff(2) == 258);
  CHECK(exceptional_chi(ExceptionalChi::E6_02).coeff(0) == 212002);
  CHECK(exceptional_chi(ExceptionalChi::F4_alt) == exceptional_chi(ExceptionalChi::F4_02));
  CHECK(exceptional_chi(ExceptionalChi::E6_alt) == exceptional_chi(ExceptionalChi::E6_02));
  CHECK(mean_root(exceptional_chi(ExceptionalChi::E6_02)) == 6);
}

TEST_CASE("root location") {
  auto r = check_root_location(chi_operator(0, 2, 3), Rational(3, 2));
  CHECK(r.max_deviation < 1e-10);
  CHECK(r.passes(1e-8));
  auto repeated = check_root_location(chi_operator(1, 2, 4), Rational(4));
  CHECK(repeated.max_deviation == 0);
  // a polynomial whose roots are off the line
  auto off = check_root_location(lin(1) * lin(3), Rational(2));
  CHECK_FALSE(off.passes(1e-8));
  CHECK(off.symmetric);
  CHECK(functional_equation_holds(chi_operator(0, 3, 5), Rational(5)));
  CHECK_FALSE(functional_equation_holds(lin(1) * lin(4), Rational(2)));
}
