#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "arr/combinat.hpp"
#include "arr/error.hpp"

using namespace arr;

namespace {
std::vector<Integer> first(auto&& f, unsigned upto) {
  std::vector<Integer> out;
  for (unsigned n = 0; n <= upto; ++n) out.push_back(f(n));
  return out;
}
std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("alternating and local binary search trees") {
  const auto linial = ints({1, 1, 2, 7, 36, 246, 2104, 21652});
  CHECK(first(alternating_trees_formula, 7) == linial);
  CHECK(first(count_alternating_trees, 7) == linial);
  CHECK(first(count_local_binary_search_trees, 7) == linial);
  CHECK_THROWS_AS(count_alternating_trees(9), CapExceeded);
}

TEST_CASE("tournaments") {
  // the two cyclic triangles: 0->1->2->0 has two ascents, 0->2->1->0 one
  unsigned found = 0;
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    Tournament t(3, bits);
    if (t.beats(0, 1) && t.beats(1, 2) && t.beats(2, 0)) {
      CHECK_FALSE(is_semiacyclic(t));
      ++found;
    }
    if (t.beats(1, 0) && t.beats(2, 1) && t.beats(0, 2)) {
      CHECK(is_semiacyclic(t));
      ++found;
    }
  }
  CHECK(found == 2);
  CHECK(first([](unsigned n) { return count_semiacyclic_tournaments(n); }, 5) == ints({1, 1, 2, 7, 36, 246}));
  for (unsigned n = 0; n <= 5; ++n) CHECK(semiacyclic_test_disagreements(n) == 0);
}

TEST_CASE("posets") {
  // numbers of labelled posets
  std::vector<std::size_t> sizes;
  for (unsigned n = 0; n <= 4; ++n) sizes.push_back(all_posets(n).size());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 3, 19, 219});
  CHECK(first(count_sleek_posets, 5) == ints({1, 1, 2, 7, 36, 246}));
  CHECK(first([](unsigned n) { return count_semiorders(n, true); }, 5) == ints({1, 1, 3, 19, 183, 2371}));
  CHECK(first([](unsigned n) { return count_semiorders(n, false); }, 5) == ints({1, 1, 2, 5, 14, 42}));

  // 2 + 2 is not a semiorder: 0 < 1, 2 < 3
  Poset two_two(4, {1U << 1, 0, 1U << 3, 0});
  CHECK_FALSE(is_semiorder(two_two));
  Poset chain(3, {0b110, 0b100, 0});
  CHECK(is_semiorder(chain));
  CHECK(is_naturally_labelled(chain));
  CHECK(canonical_form(Poset(2, {0, 1})) == canonical_form(Poset(2, {0b10, 0})));
}

TEST_CASE("semiorders from catalan regions") {
  for (unsigned n = 1; n <= 4; ++n) {
    auto derived = semiorders_from_catalan_regions(n);
    std::vector<Poset> filtered;
    for (const auto& p : all_posets(n))
      if (is_semiorder(p)) filtered.push_back(p);
    std::sort(derived.begin(), derived.end());
    std::sort(filtered.begin(), filtered.end());
    CHECK(derived == filtered);
  }
}

TEST_CASE("graded forests") {
  CHECK(first([](unsigned n) { return count_graded_forests(n, 0, 2); }, 5) == ints({1, 1, 2, 7, 36, 246}));
  CHECK(first([](unsigned n) { return count_graded_forests(n, 1, 2); }, 5) == ints({1, 1, 3, 16, 125, 1296}));
  CHECK(first([](unsigned n) { return count_graded_forests(n, 2, 2); }, 4) == ints({1, 1, 4, 30, 336}));
  // (2n+1)^{n-1}
  CHECK(count_graded_forests(4, 2, 3) == 729);
  // a larger level window changes nothing
  CHECK(count_graded_forests(4, 0, 2, 9) == 36);
}

TEST_CASE("weighted forests") {
  CHECK(count_forests_weighted(3) == QPolynomial{1, 3, 3});
  CHECK(count_forests_weighted(4)(Rational(1)) == 38);
  // every forest on 4 vertices with uniform multiplicity 1: 16 trees, 38 forests total
  CHECK(count_forests_weighted(4).coeff(3) == 16);
}

TEST_CASE("semigeneric brute force") {
  CHECK(first(semigeneric_regions_bruteforce, 5) == ints({1, 1, 3, 19, 195, 2831}));
  CHECK(semigeneric_chi_bruteforce(2) == QPolynomial{0, -2, 1});
}

TEST_CASE("stirling relation") {
  for (unsigned n = 1; n <= 5; ++n) CHECK(stirling_relation(n).holds());
  CHECK(stirling_relation(4).lhs == 336);
}
