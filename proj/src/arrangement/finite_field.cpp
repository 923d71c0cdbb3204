#include <algorithm>

#include "arr/arrangement.hpp"
#include "arr/error.hpp"

namespace arr {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Calls visit(subset) for every k-subset of {0..n-1}.
template <class Fn>
bool each_subset(std::size_t n, std::size_t k, Fn&& visit) {
  std::vector<std::size_t> idx(k);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> bool {
    if (pos == k) return visit(idx);
    for (std::size_t i = from; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      if (!self(self, pos + 1, i + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0, 0);
}

// Reduction mod p preserves the intersection lattice when p divides no
// nonzero minor of the augmented matrix [h_i | a_i]: then every subset keeps
// both its rank and its augmented rank.
std::optional<std::string> minor_obstruction(const Arrangement& a, unsigned p) {
  const std::size_t cols = a.dim() + 1;
  std::vector<std::vector<Rational>> aug;
  for (const auto& h : a.hyperplanes()) {
    auto row = h.normal;
    row.push_back(h.offset);
    aug.push_back(std::move(row));
  }
  std::optional<std::string> reason;
  const Integer prime(p);
  for (std::size_t k = 1; k <= std::min(aug.size(), cols) && !reason; ++k) {
    each_subset(aug.size(), k, [&](const std::vector<std::size_t>& rows) {
      return each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
        std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) m[r][c] = aug[rows[r]][cs[c]];
        Integer det = to_integer(determinant(std::move(m)));
        if (det != 0 && mpz_divisible_p(det.get_mpz_t(), prime.get_mpz_t())) {
          reason = "p = " + std::to_string(p) + " divides the nonzero " + std::to_string(k) + "x" +
                   std::to_string(k) + " minor " + det.get_str();
          return false;
        }
        return true;
      });
    });
  }
  return reason;
}

}  // namespace

std::optional<std::string> prime_inadmissible_reason(const Arrangement& a, unsigned p, const EngineConfig& config) {
  if (!is_prime(p)) return std::to_string(p) + " is not prime";
  if (a.dim() > config.ff_max_dim)
    return "ambient dimension " + std::to_string(a.dim()) + " exceeds the point-count limit " +
           std::to_string(config.ff_max_dim);
  if (p > config.ff_max_prime)
    return "p = " + std::to_string(p) + " exceeds the point-count limit " + std::to_string(config.ff_max_prime);
  if (!a.has_integer_data()) return "normals and offsets must be integers";
  Integer max_offset = 0;
  for (const auto& h : a.hyperplanes()) max_offset = std::max<Integer>(max_offset, abs(h.offset.get_num()));
  if (Integer(p) <= 2 * max_offset) return "p must exceed twice the largest offset " + max_offset.get_str();
  return minor_obstruction(a, p);
}

std::vector<unsigned> admissible_primes(const Arrangement& a, std::size_t count, unsigned start,
                                        const EngineConfig& config) {
  std::vector<unsigned> out;
  for (unsigned p = std::max(start, 2U); out.size() < count && p <= config.ff_max_prime; ++p)
    if (is_prime(p) && !prime_inadmissible_reason(a, p, config)) out.push_back(p);
  return out;
}

Integer chi_finite_field(const Arrangement& a, unsigned p, const EngineConfig& config) {
  if (auto why = prime_inadmissible_reason(a, p, config)) throw PreconditionError("finite-field count: " + *why);
  const std::size_t d = a.dim();
  std::vector<std::vector<long>> normals;
  std::vector<long> offsets;
  const long mod = static_cast<long>(p);
  auto reduce = [&](const Rational& r) { return (Integer(r.get_num() % mod).get_si() + mod) % mod; };
  for (const auto& h : a.hyperplanes()) {
    std::vector<long> row;
    for (const auto& c : h.normal) row.push_back(reduce(c));
    normals.push_back(std::move(row));
    offsets.push_back(reduce(h.offset));
  }
  std::vector<long> x(d, 0);
  Integer count = 0;
  for (;;) {
    bool avoids = true;
    for (std::size_t i = 0; i < normals.size() && avoids; ++i) {
      long s = 0;
      for (std::size_t c = 0; c < d; ++c) s += normals[i][c] * x[c];
      avoids = s % mod != offsets[i];
    }
    if (avoids) ++count;
    std::size_t c = 0;
    while (c < d && ++x[c] == mod) x[c++] = 0;
    if (c == d) break;
  }
  return count;
}

}  // namespace arr
