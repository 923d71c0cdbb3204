#include <vector>

#include "arr/exactmath.hpp"

namespace arr {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer stirling_cycle(unsigned n, unsigned k) {
  if (k > n) return 0;
  // c(m, j) = c(m-1, j-1) + (m-1) c(m-1, j), one row at a time.
  std::vector<Integer> row(n + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = m; j >= 1; --j) row[j] = row[j - 1] + (m - 1) * row[j];
    row[0] = 0;
  }
  return row[k];
}

Integer catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

Integer multinomial(std::span<const unsigned> parts) {
  unsigned total = 0;
  for (unsigned p : parts) total += p;
  Integer r = factorial(total);
  for (unsigned p : parts) r /= factorial(p);
  return r;
}

}  // namespace arr
