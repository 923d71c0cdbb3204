#pragma once

#include <vector>

#include "arr/exactmath.hpp"

namespace arr::detail {

struct LpSolution {
  Rational optimum;
  std::vector<Rational> z;
};

/// max c.z subject to A z <= rhs, z >= 0, where rhs >= 0 so that z = 0 is
/// feasible. Dense exact tableau with Bland's rule. Throws Error if the
/// objective is unbounded.
LpSolution maximize_from_origin(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& rhs,
                                const std::vector<Rational>& c);

}  // namespace arr::detail
