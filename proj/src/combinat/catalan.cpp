#include "arr/arrangement.hpp"
#include "arr/combinat.hpp"
#include "arr/error.hpp"

namespace arr {

namespace {

Integer regions(Family family, unsigned n) {
  if (n == 0) return 1;
  Arrangement a = build_family(family, static_cast<int>(n));
  return region_count(poincare_from_chi(chi_nbc(a), a.dim()));
}

}  // namespace

StirlingRelation stirling_relation(unsigned n) {
  if (n > 7) throw CapExceeded("stirling_relation_cap", 7, n);
  StirlingRelation out;
  out.lhs = regions(Family::catalan0, n);
  out.rhs = 0;
  for (unsigned k = 0; k <= n; ++k) {
    Integer c = stirling_cycle(n, k);
    if (c != 0) out.rhs += c * regions(Family::catalan, k);
  }
  return out;
}

}  // namespace arr
