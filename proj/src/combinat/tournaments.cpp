#include <array>

#include "arr/combinat.hpp"
#include "arr/error.hpp"

namespace arr {

namespace {

unsigned pair_index(unsigned n, unsigned i, unsigned j) {
  // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

Tournament::Tournament(unsigned n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n > 11) throw PreconditionError("tournaments are limited to 11 vertices");
}

bool Tournament::beats(unsigned i, unsigned j) const {
  if (i == j) return false;
  if (i < j) return (bits_ >> pair_index(n_, i, j)) & 1U;
  return !((bits_ >> pair_index(n_, j, i)) & 1U);
}

bool is_semiacyclic(const Tournament& t) {
  const unsigned n = t.size();
  std::vector<unsigned> path;
  std::vector<bool> used(n);
  // Cycles are rooted at their smallest vertex; the closing edge back to the
  // root is always a descent.
  bool found = false;
  auto extend = [&](auto&& self, unsigned root, unsigned at, int balance) -> void {
    for (unsigned next = root + 1; next < n && !found; ++next) {
      if (used[next] || !t.beats(at, next)) continue;
      int b = balance + (at < next ? 1 : -1);
      if (t.beats(next, root) && b - 1 >= 0) {
        found = true;
        return;
      }
      used[next] = true;
      self(self, root, next, b);
      used[next] = false;
    }
  };
  for (unsigned root = 0; root < n && !found; ++root) {
    used[root] = true;
    extend(extend, root, root, 0);
    used[root] = false;
  }
  return !found;
}

bool avoids_ascending_obstructions(const Tournament& t) {
  const unsigned n = t.size();
  auto cycle = [&](std::initializer_list<unsigned> c) {
    const unsigned* v = c.begin();
    const std::size_t m = c.size();
    for (std::size_t k = 0; k < m; ++k)
      if (!t.beats(v[k], v[(k + 1) % m])) return false;
    return true;
  };
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      for (unsigned c = b + 1; c < n; ++c) {
        if (cycle({a, b, c})) return false;
        for (unsigned d = c + 1; d < n; ++d)
          if (cycle({a, c, b, d}) || cycle({a, d, b, c}) || cycle({a, b, d, c}) || cycle({a, c, d, b})) return false;
      }
  return true;
}

Integer count_semiacyclic_tournaments(unsigned n, SemiacyclicTest test) {
  if (n > 6) throw CapExceeded("tournaments_cap", 6, n);
  const unsigned pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  unsigned long count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    Tournament t(n, bits);
    bool ok = test == SemiacyclicTest::definition ? is_semiacyclic(t) : avoids_ascending_obstructions(t);
    if (ok) ++count;
  }
  return Integer(count);
}

std::size_t semiacyclic_test_disagreements(unsigned n) {
  if (n > 6) throw CapExceeded("tournaments_cap", 6, n);
  const unsigned pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t bad = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    Tournament t(n, bits);
    if (is_semiacyclic(t) != avoids_ascending_obstructions(t)) ++bad;
  }
  return bad;
}

}  // namespace arr
