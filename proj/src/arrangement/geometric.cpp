#include <algorithm>
#include <optional>

#include "arr/arrangement.hpp"
#include "arr/error.hpp"
#include "simplex.hpp"

namespace arr {

namespace {

struct Region {
  std::vector<std::int8_t> signs;
  std::vector<Rational> witness;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0) s += a[k] * b[k];
  return s;
}

// Is there x with sigma_i (h_i.x - a_i) > 0 for the first signs.size()
// hyperplanes? Solves max delta s.t. sigma_i (h_i.x - a_i) >= delta,
// delta <= 1, shifted by x = w + y and delta = delta0 + delta' so that
// y = 0, delta' = 0 is feasible.
std::optional<std::vector<Rational>> open_cell_point(const Arrangement& a, const std::vector<std::int8_t>& signs,
                                                     const std::vector<Rational>& w) {
  const std::size_t d = a.dim();
  const std::size_t k = signs.size();
  std::vector<Rational> slack(k);
  Rational delta0 = 1;
  for (std::size_t i = 0; i < k; ++i) {
    slack[i] = signs[i] * (dot(a[i].normal, w) - a[i].offset);
    delta0 = std::min(delta0, slack[i]);
  }
  if (delta0 > 0) return w;

  // Variables: y+ (d), y- (d), delta'.
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> row(2 * d + 1);
    for (std::size_t c = 0; c < d; ++c) {
      row[c] = -signs[i] * a[i].normal[c];
      row[d + c] = signs[i] * a[i].normal[c];
    }
    row[2 * d] = 1;
    A.push_back(std::move(row));
    rhs.push_back(slack[i] - delta0);
  }
  std::vector<Rational> cap(2 * d + 1);
  cap[2 * d] = 1;
  A.push_back(std::move(cap));
  rhs.push_back(1 - delta0);
  std::vector<Rational> objective(2 * d + 1);
  objective[2 * d] = 1;

  auto lp = detail::maximize_from_origin(A, rhs, objective);
  if (delta0 + lp.optimum <= 0) return std::nullopt;
  std::vector<Rational> x = w;
  for (std::size_t c = 0; c < d; ++c) x[c] += lp.z[c] - lp.z[d + c];
  return x;
}

// Bounded modulo the lineality space: no direction y keeps every
// sigma_i h_i.y >= 0 with one of them positive.
bool relatively_bounded(const Arrangement& a, const std::vector<std::int8_t>& signs) {
  const std::size_t d = a.dim();
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> rhs;
  std::vector<Rational> objective(2 * d);
  for (std::size_t i = 0; i < signs.size(); ++i) {
    std::vector<Rational> row(2 * d);
    for (std::size_t c = 0; c < d; ++c) {
      row[c] = signs[i] * a[i].normal[c];
      row[d + c] = -row[c];
    }
    for (std::size_t c = 0; c < 2 * d; ++c) objective[c] += row[c];
    std::vector<Rational> neg(row);
    for (auto& x : neg) x = -x;
    A.push_back(std::move(neg));
    rhs.push_back(0);
    A.push_back(std::move(row));
    rhs.push_back(1);
  }
  return detail::maximize_from_origin(A, rhs, objective).optimum == 0;
}

}  // namespace

RegionReport regions_geometric(const Arrangement& a, bool keep_sign_vectors, const EngineConfig& config) {
  if (a.size() > config.geometric_cap)
    throw CapExceeded("geometric_cap", static_cast<long long>(config.geometric_cap), static_cast<long long>(a.size()),
                      "use the nbc engine");
  std::vector<Region> regions{{{}, std::vector<Rational>(a.dim())}};
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::vector<Region> next;
    next.reserve(regions.size() * 2);
    for (auto& r : regions) {
      Rational value = dot(a[k].normal, r.witness) - a[k].offset;
      for (std::int8_t side : {std::int8_t{1}, std::int8_t{-1}}) {
        Region child{r.signs, r.witness};
        child.signs.push_back(side);
        if (value * side > 0) {
          next.push_back(std::move(child));
        } else if (auto x = open_cell_point(a, child.signs, r.witness)) {
          child.witness = std::move(*x);
          next.push_back(std::move(child));
        }
      }
    }
    regions = std::move(next);
  }

  RegionReport report;
  report.regions = regions.size();
  for (const auto& r : regions)
    if (relatively_bounded(a, r.signs)) ++report.bounded;
  if (keep_sign_vectors) {
    std::vector<std::vector<std::int8_t>> signs;
    for (auto& r : regions) signs.push_back(std::move(r.signs));
    std::sort(signs.begin(), signs.end());
    report.sign_vectors = std::move(signs);
  }
  return report;
}

}  // namespace arr
