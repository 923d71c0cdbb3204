#include <cstdint>
#include <vector>

#include "arr/combinat.hpp"
#include "arr/error.hpp"

namespace arr {

namespace {

void check_cap(const char* what, unsigned n, unsigned cap) {
  if (n > cap) throw CapExceeded(what, cap, n);
}

// Fills `edges` with the tree on {0..m-1} encoded by a Pruefer sequence.
void pruefer_decode(const std::vector<unsigned>& seq, unsigned m, std::vector<std::pair<unsigned, unsigned>>& edges,
                    std::vector<unsigned>& degree) {
  edges.clear();
  degree.assign(m, 1);
  for (unsigned s : seq) ++degree[s];
  for (unsigned s : seq) {
    unsigned leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, s);
    --degree[leaf];
    --degree[s];
  }
  unsigned u = m, v = m;
  for (unsigned k = 0; k < m; ++k)
    if (degree[k] == 1) (u == m ? u : v) = k;
  edges.emplace_back(u, v);
}

}  // namespace

Integer alternating_trees_formula(unsigned n) {
  if (n == 0) return 1;
  Integer sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), k + 1, n - 1);
    sum += binomial(n, k) * power;
  }
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  if (!mpz_divisible_p(sum.get_mpz_t(), two_n.get_mpz_t())) throw Error("alternating tree formula is not integral");
  return sum / two_n;
}

Integer count_alternating_trees(unsigned n) {
  check_cap("alternating_trees_cap", n, 8);
  if (n == 0) return 1;
  const unsigned m = n + 1;
  std::vector<unsigned> seq(m - 2, 0);
  std::vector<std::pair<unsigned, unsigned>> edges;
  std::vector<unsigned> degree, lo(m), hi(m);
  std::uint64_t count = 0;
  for (;;) {
    pruefer_decode(seq, m, edges, degree);
    // Each vertex records whether it has a smaller and a larger neighbour.
    std::fill(lo.begin(), lo.end(), 0);
    std::fill(hi.begin(), hi.end(), 0);
    for (auto [u, v] : edges) {
      if (u > v) std::swap(u, v);
      hi[u] = 1;
      lo[v] = 1;
    }
    bool alternating = true;
    for (unsigned k = 0; k < m && alternating; ++k) alternating = !(lo[k] && hi[k]);
    if (alternating) ++count;

    std::size_t pos = 0;
    while (pos < seq.size() && ++seq[pos] == m) seq[pos++] = 0;
    if (pos == seq.size()) break;
  }
  return Integer(static_cast<unsigned long>(count));
}

Integer count_local_binary_search_trees(unsigned n) {
  check_cap("lbs_trees_cap", n, 10);
  if (n == 0) return 1;
  const std::uint32_t full = (1U << n) - 1;
  // rooted[mask][r]: trees on vertex set `mask` with root r.
  // left_of[mask][r]: subtrees that may hang left of r (empty or root < r).
  std::vector<std::vector<std::uint64_t>> rooted(full + 1, std::vector<std::uint64_t>(n));
  std::vector<std::vector<std::uint64_t>> left_of(full + 1, std::vector<std::uint64_t>(n));
  std::vector<std::vector<std::uint64_t>> right_of(full + 1, std::vector<std::uint64_t>(n));
  for (unsigned r = 0; r < n; ++r) left_of[0][r] = right_of[0][r] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (unsigned r = 0; r < n; ++r) {
      if (!((mask >> r) & 1U)) continue;
      const std::uint32_t rest = mask & ~(1U << r);
      std::uint64_t total = 0;
      for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        total += left_of[sub][r] * right_of[rest & ~sub][r];
        if (sub == 0) break;
      }
      rooted[mask][r] = total;
    }
    for (unsigned r = 0; r < n; ++r) {
      std::uint64_t below = 0, above = 0;
      for (unsigned c = 0; c < n; ++c) {
        if (!((mask >> c) & 1U)) continue;
        if (c < r) below += rooted[mask][c];
        if (c > r) above += rooted[mask][c];
      }
      left_of[mask][r] = below;
      right_of[mask][r] = above;
    }
  }
  std::uint64_t count = 0;
  for (unsigned r = 0; r < n; ++r) count += rooted[full][r];
  return Integer(static_cast<unsigned long>(count));
}

}  // namespace arr
