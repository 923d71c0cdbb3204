#include <numeric>

#include "arr/combinat.hpp"
#include "arr/error.hpp"

namespace arr {

QPolynomial count_forests_weighted(unsigned n, const std::vector<std::vector<Integer>>& multiplicity) {
  if (n > 8) throw CapExceeded("forests_cap", 8, n);
  if (multiplicity.size() != n) throw PreconditionError("multiplicity table must be n x n");
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < n; ++i) {
    if (multiplicity[i].size() != n) throw PreconditionError("multiplicity table must be n x n");
    for (unsigned j = i + 1; j < n; ++j) {
      if (multiplicity[i][j] != multiplicity[j][i]) throw PreconditionError("multiplicity table must be symmetric");
      if (multiplicity[i][j] < 0) throw PreconditionError("multiplicities must be nonnegative");
      if (multiplicity[i][j] != 0) pairs.emplace_back(i, j);
    }
  }

  std::vector<Integer> by_size(n == 0 ? 1 : n, 0);
  std::vector<unsigned> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto dfs = [&](auto&& self, std::size_t next, std::size_t edges, const Integer& weight) -> void {
    by_size[edges] += weight;
    for (std::size_t e = next; e < pairs.size(); ++e) {
      auto [i, j] = pairs[e];
      const unsigned ci = comp[i], cj = comp[j];
      if (ci == cj) continue;
      std::vector<unsigned> saved(comp);
      for (auto& c : comp)
        if (c == cj) c = ci;
      self(self, e + 1, edges + 1, weight * multiplicity[i][j]);
      comp = std::move(saved);
    }
  };
  dfs(dfs, 0, 0, Integer(1));
  std::vector<Rational> coeffs;
  for (const auto& c : by_size) coeffs.emplace_back(c);
  return QPolynomial(std::move(coeffs));
}

QPolynomial count_forests_weighted(unsigned n, long uniform_multiplicity) {
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(uniform_multiplicity)));
  for (unsigned i = 0; i < n; ++i) m[i][i] = 0;
  return count_forests_weighted(n, m);
}

}  // namespace arr
