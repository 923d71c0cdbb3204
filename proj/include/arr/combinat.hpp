#pragma once

// Enumerators for the combinatorial families that are equinumerous with
// regions of braid-arrangement deformations, together with the
// forbidden-substructure tests that characterize them.
//
// Vertices and poset elements are 0-based here; every labelled statement
// ("a < b < c") refers to the natural order of those indices.

#include <cstdint>
#include <optional>
#include <vector>

#include "arr/exactmath.hpp"

namespace arr {

// ---------------------------------------------------------------------------
// Trees

/// 2^{-n} sum_k C(n,k) (k+1)^{n-1}; 1 for n = 0.
Integer alternating_trees_formula(unsigned n);
/// Labelled trees on {0..n} in which every vertex is smaller than all its
/// neighbours or larger than all of them. Enumerates Pruefer sequences;
/// throws CapExceeded for n > 8.
Integer count_alternating_trees(unsigned n);
/// Labelled plane binary trees on {0..n-1} where a left child is smaller and
/// a right child is larger than its parent. Throws CapExceeded for n > 10.
Integer count_local_binary_search_trees(unsigned n);

// ---------------------------------------------------------------------------
// Tournaments

class Tournament {
 public:
  /// bits: one orientation bit per pair i < j in lexicographic pair order;
  /// set means i -> j.
  Tournament(unsigned n, std::uint64_t bits);
  unsigned size() const noexcept { return n_; }
  bool beats(unsigned i, unsigned j) const;

 private:
  unsigned n_;
  std::uint64_t bits_;
};

/// No directed cycle c_1 -> ... -> c_m -> c_1 has at least as many ascents
/// (c_{i-1} < c_i, with c_0 = c_m) as descents.
bool is_semiacyclic(const Tournament& t);
/// Same property through the five ascending 3- and 4-cycles on a < b < c < d:
/// (a,b,c), (a,c,b,d), (a,d,b,c), (a,b,d,c), (a,c,d,b).
bool avoids_ascending_obstructions(const Tournament& t);

enum class SemiacyclicTest { definition, obstructions };
/// Throws CapExceeded for n > 6.
Integer count_semiacyclic_tournaments(unsigned n, SemiacyclicTest test = SemiacyclicTest::definition);
/// Number of tournaments on n vertices where the two tests disagree.
std::size_t semiacyclic_test_disagreements(unsigned n);

// ---------------------------------------------------------------------------
// Posets

class Poset {
 public:
  /// above[i] = bitmask of j with i < j. Throws PreconditionError unless the
  /// relation is irreflexive and transitive.
  Poset(unsigned n, std::vector<std::uint32_t> above);
  unsigned size() const noexcept { return n_; }
  bool less(unsigned i, unsigned j) const { return (above_[i] >> j) & 1U; }
  bool comparable(unsigned i, unsigned j) const { return less(i, j) || less(j, i); }
  const std::vector<std::uint32_t>& above() const noexcept { return above_; }
  friend bool operator==(const Poset&, const Poset&) = default;
  friend auto operator<=>(const Poset&, const Poset&) = default;

 private:
  unsigned n_;
  std::vector<std::uint32_t> above_;
};

/// Every labelled poset on n elements. Throws CapExceeded for n > 6.
std::vector<Poset> all_posets(unsigned n);
/// i <_P j implies i < j.
bool is_naturally_labelled(const Poset& p);
/// No induced 2+2 and no induced 3+1.
bool is_semiorder(const Poset& p);
/// Naturally labelled and free of the four labelled patterns on a < b < c < d:
/// {a<c, b<d}, {a<d, b<c}, a<b<d with c isolated, a<c<d with b isolated.
bool is_sleek(const Poset& p);
/// Canonical form under all relabellings (smallest relation image).
Poset canonical_form(const Poset& p);

Integer count_sleek_posets(unsigned n);
/// Labelled semiorders for n <= 6, isomorphism classes for n <= 5.
Integer count_semiorders(unsigned n, bool labelled);
/// Semiorders read off the regions of x_i - x_j = +-1: i > j iff x_i > x_j + 1.
/// Sorted and deduplicated. Throws CapExceeded for n > 5.
std::vector<Poset> semiorders_from_catalan_regions(unsigned n);

// ---------------------------------------------------------------------------
// Forests

/// Grounded graded forests of type (a, b) on n vertices without broken
/// circuits for the lexicographic order on (u, t, v) triples. Levels are
/// searched in [0, level_cap]; the default cap (n-1) max(a-1, b-1, 1) is
/// provably large enough. Throws CapExceeded for n > 6.
Integer count_graded_forests(unsigned n, int a, int b, std::optional<unsigned> level_cap = std::nullopt);
unsigned default_graded_level_cap(unsigned n, int a, int b);

/// sum over forests F on n vertices of prod_{ij in F} m_ij q^{|F|}.
/// multiplicity must be symmetric n x n. Throws CapExceeded for n > 8.
QPolynomial count_forests_weighted(unsigned n, const std::vector<std::vector<Integer>>& multiplicity);
QPolynomial count_forests_weighted(unsigned n, long uniform_multiplicity = 1);

// ---------------------------------------------------------------------------
// Semigeneric and Catalan relations

/// sum over bipartite graphs G on n vertices of (-1)^e(G) 2^b(G) q^c(G),
/// b = number of blocks. Throws CapExceeded for n > 6.
QPolynomial semigeneric_chi_bruteforce(unsigned n);
/// (-1)^n sum_G (-1)^{e+c} 2^b.
Integer semigeneric_regions_bruteforce(unsigned n);

struct StirlingRelation {
  Integer lhs;  // regions of x_i - x_j = -1, 0, 1 on n coordinates
  Integer rhs;  // sum_k c(n,k) * regions of x_i - x_j = -1, 1 on k coordinates
  bool holds() const { return lhs == rhs; }
};
StirlingRelation stirling_relation(unsigned n);

}  // namespace arr
