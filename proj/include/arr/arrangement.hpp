#pragma once

// Rational affine hyperplane arrangements and four independent engines for
// their characteristic polynomial and region counts:
//   * Whitney sums over central subsets,
//   * enumeration of subsets without broken central circuits (NBC),
//   * incremental sign-vector insertion with exact LP feasibility,
//   * point counting over a finite field.
//
// Deformations of the braid arrangement live in R^n, not in the sum-zero
// hyperplane. Every normal is e_i - e_j, so each flat contains the diagonal
// and chi in R^n is q times the characteristic polynomial in R^{n-1}; see
// reduce_diagonal().

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arr/config.hpp"
#include "arr/exactmath.hpp"

namespace arr {

struct Hyperplane {
  std::vector<Rational> normal;  // nonzero, length = ambient dimension
  Rational offset;               // normal . x = offset
};

enum class Family {
  braid,
  linial,
  shi,
  ext_shi,       // x_i - x_j in {-a+1, ..., a}
  catalan,       // x_i - x_j = -1, 1
  catalan0,      // x_i - x_j = -1, 0, 1
  trunc_affine,  // x_i - x_j in {-a+1, ..., b-1}
  semigeneric,   // x_i - x_j = a_i for all i != j
  generic,       // x_i - x_j = a_ij^(1..m)
  rootsystem,    // <alpha, x> in {-a+1, ..., b-1}, alpha positive roots
  custom,
};

enum class RootSystem { A, B, C, D, BC };

std::string_view to_string(Family f);
std::string_view to_string(RootSystem r);
/// Accepts the names above plus hyphenated spellings ("trunc-affine").
Family parse_family(std::string_view name);
RootSystem parse_root_system(std::string_view name);

struct FamilyParams {
  int a = 0;
  int b = 0;
  int m = 1;  // offsets per pair for generic
  RootSystem root_system = RootSystem::A;
};

struct FamilyTag {
  Family family = Family::custom;
  int n = 0;
  FamilyParams params;
  /// e.g. "linial", "trunc_affine(0,2)", "rootsystem(B,0,3)".
  std::string to_string() const;
};

class Arrangement {
 public:
  Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes, FamilyTag label = {});

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return hyperplanes_.size(); }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
  const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
  const FamilyTag& label() const noexcept { return label_; }

  /// Every normal is proportional to some e_i - e_j.
  bool is_graphic() const;
  /// All normals and offsets are integers.
  bool has_integer_data() const;

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hyperplanes_;
  FamilyTag label_;
};

/// Builds a named family in R^n. Type-A deformations use coordinates
/// x_1..x_n; B/C/D/BC root systems use the positive roots {e_i +- e_j, e_i},
/// {e_i +- e_j, 2e_i}, {e_i +- e_j} and their union.
Arrangement build_family(Family family, int n, const FamilyParams& params = {});

/// Checks the combinatorial genericity claim behind the semigeneric and
/// generic families: a cycle of hyperplanes x_u - x_v = c is central exactly
/// when the family's characterization says so. Returns false on mismatch.
bool verify_family_genericity(const Arrangement& a);

// ---------------------------------------------------------------------------
// Polynomials

/// Poin(q) = (-q)^d chi(-1/q) read off coefficientwise.
QPolynomial poincare_from_chi(const QPolynomial& chi, std::size_t dim);
QPolynomial chi_from_poincare(const QPolynomial& poin, std::size_t dim);
/// chi / q for arrangements whose flats all contain the diagonal.
/// Throws PreconditionError when q does not divide chi.
QPolynomial reduce_diagonal(const QPolynomial& chi_full);
/// r = Poin(1).
Integer region_count(const QPolynomial& poin);
/// b = (-1)^rank Poin(-1), rank = deg Poin (relatively bounded regions).
Integer bounded_region_count(const QPolynomial& poin);

// ---------------------------------------------------------------------------
// Engines

/// Whitney sum chi(q) = sum_I (-1)^|I| q^{d - rk I} over central subsets.
/// Throws CapExceeded above config.whitney_cap hyperplanes.
QPolynomial chi_whitney(const Arrangement& a, const EngineConfig& config = {});

/// Poin(q) = sum q^|I| over acyclic subsets without broken central circuits,
/// for the linear order `order` (order[k] is the k-th smallest hyperplane;
/// empty means index order). Returns chi in the ambient dimension.
QPolynomial chi_nbc(const Arrangement& a, std::span<const std::size_t> order = {}, const EngineConfig& config = {});
/// Same, forcing the general linear-algebra path even for graphic input.
QPolynomial chi_nbc_linear_algebra(const Arrangement& a, std::span<const std::size_t> order = {},
                                   const EngineConfig& config = {});

struct RegionReport {
  std::size_t regions = 0;
  std::size_t bounded = 0;
  /// One entry per region, +1/-1 per hyperplane, when requested.
  std::optional<std::vector<std::vector<std::int8_t>>> sign_vectors;
};

/// Regions as feasible open sign vectors, built by inserting hyperplanes one
/// at a time and deciding each split with an exact rational LP. Bounded
/// means bounded modulo the common lineality space.
RegionReport regions_geometric(const Arrangement& a, bool keep_sign_vectors = false, const EngineConfig& config = {});

/// Why `p` cannot be used for point counting, or nullopt if it can.
std::optional<std::string> prime_inadmissible_reason(const Arrangement& a, unsigned p, const EngineConfig& config = {});
/// The first `count` admissible primes >= start.
std::vector<unsigned> admissible_primes(const Arrangement& a, std::size_t count, unsigned start = 2,
                                        const EngineConfig& config = {});
/// #{x in F_p^d : h_i(x) != a_i for all i}, by brute force.
Integer chi_finite_field(const Arrangement& a, unsigned p, const EngineConfig& config = {});

struct CentralSubsetReport {
  std::vector<std::size_t> subset;
  std::size_t rank = 0;  // rank of the normals
  bool central = false;
};
/// Visits every subset (in lexicographic DFS order, starting with the empty set).
void central_subsets(const Arrangement& a, const std::function<void(const CentralSubsetReport&)>& visit,
                     const EngineConfig& config = {});

// ---------------------------------------------------------------------------
// JSON file format

/// {"dim": d, "hyperplanes": [{"normal": ["1","-1"], "offset": "1"}, ...], "label": "custom"}
Arrangement arrangement_from_json(std::string_view text);
std::string arrangement_to_json(const Arrangement& a);

}  // namespace arr
