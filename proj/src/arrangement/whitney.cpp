#include <cstdint>

#include "arr/arrangement.hpp"
#include "arr/error.hpp"
#include "parallel.hpp"

namespace arr {

namespace {

// counts[k] = sum of (-1)^|I| over central I of rank k whose smallest element is `first`.
std::vector<std::int64_t> whitney_branch(const Arrangement& a, const std::vector<std::vector<Rational>>& rows,
                                         std::size_t first) {
  const std::size_t d = a.dim();
  std::vector<std::int64_t> counts(d + 1);
  RowEchelon echelon(d + 1);

  // Adds row j if the subset stays central. Returns -1 when it would not,
  // else whether the row raised the rank.
  auto try_add = [&](std::size_t j) -> int {
    auto r = echelon.reduce(rows[j]);
    bool normal_zero = true;
    for (std::size_t k = 0; k < d; ++k)
      if (r[k] != 0) {
        normal_zero = false;
        break;
      }
    if (normal_zero) return r[d] == 0 ? 0 : -1;
    echelon.insert(rows[j]);
    return 1;
  };

  auto recurse = [&](auto&& self, std::size_t start, std::size_t size) -> void {
    counts[echelon.rank()] += (size % 2 == 0) ? 1 : -1;
    for (std::size_t j = start; j < rows.size(); ++j) {
      int added = try_add(j);
      if (added < 0) continue;
      self(self, j + 1, size + 1);
      if (added > 0) echelon.pop();
    }
  };
  if (try_add(first) >= 0) recurse(recurse, first + 1, 1);
  return counts;
}

}  // namespace

QPolynomial chi_whitney(const Arrangement& a, const EngineConfig& config) {
  if (a.size() > config.whitney_cap)
    throw CapExceeded("whitney_cap", static_cast<long long>(config.whitney_cap), static_cast<long long>(a.size()),
                      "use the nbc engine");
  const std::size_t d = a.dim();
  std::vector<std::vector<Rational>> rows;
  for (const auto& h : a.hyperplanes()) {
    auto row = h.normal;
    row.push_back(h.offset);
    rows.push_back(std::move(row));
  }
  auto parts = detail::run_tasks<std::vector<std::int64_t>>(
      a.size(), config.threads, [&](std::size_t first) { return whitney_branch(a, rows, first); });

  std::vector<Rational> chi(d + 1);
  chi[d] = 1;  // the empty subset
  for (const auto& counts : parts)
    for (std::size_t k = 0; k <= d; ++k) chi[d - k] += Rational(static_cast<long>(counts[k]));
  return QPolynomial(std::move(chi));
}

}  // namespace arr
