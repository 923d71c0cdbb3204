#include "simplex.hpp"

#include "arr/error.hpp"

namespace arr::detail {

LpSolution maximize_from_origin(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& rhs,
                                const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  const std::size_t width = n + m + 1;  // structural, slack, right-hand side
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rhs[i] < 0) throw PreconditionError("simplex start needs a nonnegative right-hand side");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = rhs[i];
    basis[i] = n + i;
  }
  // Objective row holds -c; a negative entry marks an improving column.
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw Error("linear program is unbounded");

    Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpSolution out;
  out.optimum = t[m][width - 1];
  out.z.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) out.z[basis[i]] = t[i][width - 1];
  return out;
}

}  // namespace arr::detail
