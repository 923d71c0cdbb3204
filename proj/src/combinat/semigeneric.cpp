#include <algorithm>
#include <cstdint>

#include "arr/combinat.hpp"
#include "arr/error.hpp"

namespace arr {

namespace {

struct GraphStats {
  bool bipartite = true;
  unsigned edges = 0;
  unsigned components = 0;
  unsigned blocks = 0;
};

// Components, 2-colourability and blocks (Hopcroft-Tarjan lowpoints; a
// bridge is a block of its own, an isolated vertex is not a block).
GraphStats analyse(unsigned n, const std::vector<std::vector<unsigned>>& adj) {
  GraphStats s;
  std::vector<int> colour(n, -1), disc(n, -1), low(n, 0);
  int clock = 0;
  auto dfs = [&](auto&& self, unsigned x, int parent) -> void {
    disc[x] = low[x] = clock++;
    for (unsigned y : adj[x]) {
      if (colour[y] == -1) {
        colour[y] = 1 - colour[x];
      } else if (colour[y] == colour[x]) {
        s.bipartite = false;
      }
      if (disc[y] == -1) {
        self(self, y, static_cast<int>(x));
        low[x] = std::min(low[x], low[y]);
        // The edge x-y closes a block when nothing below y reaches above x.
        if (low[y] >= disc[x]) ++s.blocks;
      } else if (static_cast<int>(y) != parent) {
        low[x] = std::min(low[x], disc[y]);
      }
    }
  };
  for (unsigned v = 0; v < n; ++v) {
    s.edges += static_cast<unsigned>(adj[v].size());
    if (disc[v] != -1) continue;
    ++s.components;
    colour[v] = 0;
    dfs(dfs, v, -1);
  }
  s.edges /= 2;
  return s;
}

template <class Fn>
void each_bipartite_graph(unsigned n, Fn&& visit) {
  if (n > 6) throw CapExceeded("semigeneric_bruteforce_cap", 6, n);
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<unsigned>> adj(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((mask >> e) & 1U) {
        adj[pairs[e].first].push_back(pairs[e].second);
        adj[pairs[e].second].push_back(pairs[e].first);
      }
    GraphStats s = analyse(n, adj);
    if (s.bipartite) visit(s);
  }
}

}  // namespace

QPolynomial semigeneric_chi_bruteforce(unsigned n) {
  std::vector<Integer> coeffs(n + 1, 0);
  each_bipartite_graph(n, [&](const GraphStats& s) {
    Integer term = Integer(1) << s.blocks;
    coeffs[s.components] += (s.edges % 2 == 0) ? term : Integer(-term);
  });
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  return QPolynomial(std::move(c));
}

Integer semigeneric_regions_bruteforce(unsigned n) {
  Integer sum = 0;
  each_bipartite_graph(n, [&](const GraphStats& s) {
    Integer term = Integer(1) << s.blocks;
    sum += ((s.edges + s.components) % 2 == 0) ? term : Integer(-term);
  });
  return (n % 2 == 0) ? sum : Integer(-sum);
}

}  // namespace arr
