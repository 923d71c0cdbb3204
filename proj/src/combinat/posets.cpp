#include <algorithm>
#include <array>
#include <optional>
#include <numeric>
#include <set>

#include "arr/arrangement.hpp"
#include "arr/combinat.hpp"
#include "arr/error.hpp"

namespace arr {

namespace {

bool bit(std::uint32_t mask, unsigned k) { return (mask >> k) & 1U; }

// Relations among the elements listed in `v`, as (i,j) index pairs with v[i] < v[j].
template <std::size_t K>
std::uint32_t induced_pattern(const Poset& p, const std::array<unsigned, K>& v) {
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      if (i != j && p.less(v[i], v[j])) code |= 1U << (i * K + j);
  return code;
}

constexpr std::uint32_t rel(std::size_t i, std::size_t j) { return 1U << (i * 4 + j); }

}  // namespace

Poset::Poset(unsigned n, std::vector<std::uint32_t> above) : n_(n), above_(std::move(above)) {
  if (n > 32 || above_.size() != n) throw PreconditionError("poset relation has the wrong size");
  for (unsigned i = 0; i < n; ++i) {
    if (bit(above_[i], i)) throw PreconditionError("poset relation is not irreflexive");
    if (above_[i] >> n) throw PreconditionError("poset relation names an element out of range");
    for (unsigned j = 0; j < n; ++j)
      if (bit(above_[i], j) && (above_[j] & ~above_[i]))
        throw PreconditionError("poset relation is not transitive");
  }
}

std::vector<Poset> all_posets(unsigned n) {
  if (n > 6) throw CapExceeded("posets_cap", 6, n);
  // Add element k below a down-set D and above an up-set U with D < U.
  std::vector<std::vector<std::uint32_t>> current{{}};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<std::vector<std::uint32_t>> next;
    const std::uint32_t all = (1U << k) - 1;
    for (const auto& above : current) {
      std::vector<std::uint32_t> below(k, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
          if (bit(above[i], j)) below[j] |= 1U << i;
      for (std::uint32_t down = 0; down <= all; ++down) {
        bool down_closed = true;
        for (unsigned i = 0; i < k && down_closed; ++i)
          if (bit(down, i)) down_closed = (below[i] & ~down) == 0;
        if (!down_closed) continue;
        for (std::uint32_t up = 0; up <= all; ++up) {
          if (up & down) continue;
          std::uint32_t up_closure = up;
          for (unsigned i = 0; i < k; ++i)
            if (bit(up, i)) up_closure |= above[i];
          if (up_closure != up) continue;
          bool ok = true;
          // Transitivity through k: D < U must already hold.
          for (unsigned i = 0; i < k && ok; ++i)
            if (bit(down, i)) ok = (above[i] & up) == up;
          if (!ok) continue;
          std::vector<std::uint32_t> grown(above);
          for (unsigned i = 0; i < k; ++i)
            if (bit(down, i)) grown[i] |= 1U << k;
          grown.push_back(up);
          next.push_back(std::move(grown));
        }
      }
    }
    current = std::move(next);
  }
  std::vector<Poset> out;
  out.reserve(current.size());
  for (auto& above : current) out.emplace_back(n, std::move(above));
  return out;
}

bool is_naturally_labelled(const Poset& p) {
  for (unsigned i = 0; i < p.size(); ++i)
    if (p.above()[i] & ((1U << i) - 1)) return false;
  return true;
}

bool is_semiorder(const Poset& p) {
  const unsigned n = p.size();
  // 2+2: x<y, z<w, and no other comparabilities among the four.
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      for (unsigned z = 0; z < n; ++z)
        for (unsigned w = 0; w < n; ++w) {
          if (!p.less(z, w) || z == x || z == y || w == x || w == y) continue;
          if (!p.comparable(x, z) && !p.comparable(x, w) && !p.comparable(y, z) && !p.comparable(y, w)) return false;
        }
    }
  // 3+1: chain x<y<z and w incomparable to all three.
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      for (unsigned z = 0; z < n; ++z) {
        if (!p.less(y, z)) continue;
        for (unsigned w = 0; w < n; ++w) {
          if (w == x || w == y || w == z) continue;
          if (!p.comparable(w, x) && !p.comparable(w, y) && !p.comparable(w, z)) return false;
        }
      }
    }
  return true;
}

bool is_sleek(const Poset& p) {
  if (!is_naturally_labelled(p)) return false;
  const unsigned n = p.size();
  // Index positions 0..3 stand for a < b < c < d.
  const std::uint32_t forbidden[] = {
      rel(0, 2) | rel(1, 3),
      rel(0, 3) | rel(1, 2),
      rel(0, 1) | rel(1, 3) | rel(0, 3),
      rel(0, 2) | rel(2, 3) | rel(0, 3),
  };
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      for (unsigned c = b + 1; c < n; ++c)
        for (unsigned d = c + 1; d < n; ++d) {
          std::uint32_t code = induced_pattern<4>(p, {a, b, c, d});
          for (std::uint32_t f : forbidden)
            if (code == f) return false;
        }
  return true;
}

Poset canonical_form(const Poset& p) {
  const unsigned n = p.size();
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<std::uint32_t>> best;
  do {
    std::vector<std::uint32_t> image(n, 0);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        if (p.less(i, j)) image[perm[i]] |= 1U << perm[j];
    if (!best || image < *best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Poset(n, std::move(*best));
}

Integer count_sleek_posets(unsigned n) {
  unsigned long count = 0;
  for (const auto& p : all_posets(n))
    if (is_sleek(p)) ++count;
  return Integer(count);
}

Integer count_semiorders(unsigned n, bool labelled) {
  if (!labelled && n > 5) throw CapExceeded("unlabelled_semiorders_cap", 5, n);
  if (labelled) {
    unsigned long count = 0;
    for (const auto& p : all_posets(n))
      if (is_semiorder(p)) ++count;
    return Integer(count);
  }
  std::set<Poset> classes;
  for (const auto& p : all_posets(n))
    if (is_semiorder(p)) classes.insert(canonical_form(p));
  return Integer(static_cast<unsigned long>(classes.size()));
}

std::vector<Poset> semiorders_from_catalan_regions(unsigned n) {
  if (n > 5) throw CapExceeded("catalan_regions_cap", 5, n);
  if (n == 0) return {Poset(0, {})};
  Arrangement a = build_family(Family::catalan, static_cast<int>(n));
  auto report = regions_geometric(a, true, EngineConfig{.geometric_cap = 20});
  std::set<Poset> found;
  for (const auto& signs : *report.sign_vectors) {
    std::vector<std::uint32_t> above(n, 0);
    for (std::size_t h = 0; h < a.size(); ++h) {
      const auto& hp = a[h];
      unsigned i = n, j = n;
      for (unsigned k = 0; k < n; ++k) {
        if (hp.normal[k] == 1) i = k;
        if (hp.normal[k] == -1) j = k;
      }
      // Hyperplane x_i - x_j = c with c = +-1.
      if (hp.offset == 1 && signs[h] > 0) above[j] |= 1U << i;   // x_i > x_j + 1
      if (hp.offset == -1 && signs[h] < 0) above[i] |= 1U << j;  // x_j > x_i + 1
    }
    found.insert(Poset(n, std::move(above)));
  }
  return {found.begin(), found.end()};
}

}  // namespace arr
