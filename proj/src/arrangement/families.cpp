#include <algorithm>
#include <map>

#include "arr/arrangement.hpp"
#include "arr/error.hpp"

namespace arr {

namespace {

std::vector<Rational> unit_difference(int n, int i, int j) {
  std::vector<Rational> v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i)] = 1;
  v[static_cast<std::size_t>(j)] = -1;
  return v;
}

// x_i - x_j = c for every i < j and every c in [lo, hi].
std::vector<Hyperplane> pair_interval(int n, long lo, long hi) {
  std::vector<Hyperplane> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (long c = lo; c <= hi; ++c) out.push_back({unit_difference(n, i, j), Rational(c)});
  return out;
}

Integer power_of(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

std::vector<Hyperplane> semigeneric_hyperplanes(int n, const Integer& base) {
  std::vector<Hyperplane> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back({unit_difference(n, i, j), Rational(power_of(base, static_cast<unsigned long>(i + 1)))});
  return out;
}

std::vector<Hyperplane> generic_hyperplanes(int n, int m, const Integer& base) {
  std::vector<Hyperplane> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < m; ++k) {
        unsigned long e = static_cast<unsigned long>(i * n + (j + 1)) * static_cast<unsigned long>(m) +
                          static_cast<unsigned long>(k);
        out.push_back({unit_difference(n, i, j), Rational(power_of(base, e))});
      }
  return out;
}

std::vector<std::vector<Rational>> positive_roots(RootSystem r, int n) {
  std::vector<std::vector<Rational>> roots;
  auto unit = [&](int i, long scale) {
    std::vector<Rational> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = scale;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      roots.push_back(unit_difference(n, i, j));
      if (r != RootSystem::A) {
        auto v = unit_difference(n, i, j);
        v[static_cast<std::size_t>(j)] = 1;
        roots.push_back(std::move(v));
      }
    }
  for (int i = 0; i < n; ++i) {
    if (r == RootSystem::B || r == RootSystem::BC) roots.push_back(unit(i, 1));
    if (r == RootSystem::C || r == RootSystem::BC) roots.push_back(unit(i, 2));
  }
  return roots;
}

void check_interval(int a, int b) {
  if (a < 0 || b < 0) throw PreconditionError("family parameters a, b must be nonnegative");
  if (a + b < 2) throw PreconditionError("family parameters need a + b >= 2");
}

// Graphic view of a hyperplane: x_u - x_v = offset with u < v.
struct Edge {
  std::size_t u, v;
  Rational offset;
};

std::optional<std::vector<Edge>> graphic_edges(const Arrangement& a) {
  if (!a.is_graphic()) return std::nullopt;
  std::vector<Edge> edges;
  for (const auto& h : a.hyperplanes()) {
    std::size_t u = a.dim(), v = a.dim();
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (h.normal[k] != 0) (u == a.dim() ? u : v) = k;
    Rational scale = h.normal[u];
    edges.push_back({u, v, h.offset / scale});
  }
  return edges;
}

}  // namespace

Arrangement build_family(Family family, int n, const FamilyParams& params) {
  if (n < 1) throw PreconditionError("family size n must be at least 1");
  FamilyTag tag{family, n, params};
  const std::size_t dim = static_cast<std::size_t>(n);
  switch (family) {
    case Family::braid: return Arrangement(dim, pair_interval(n, 0, 0), tag);
    case Family::linial: return Arrangement(dim, pair_interval(n, 1, 1), tag);
    case Family::shi: return Arrangement(dim, pair_interval(n, 0, 1), tag);
    case Family::ext_shi:
      if (params.a < 1) throw PreconditionError("ext_shi needs a >= 1");
      return Arrangement(dim, pair_interval(n, -params.a + 1, params.a), tag);
    case Family::catalan: {
      std::vector<Hyperplane> hs;
      for (auto& h : pair_interval(n, -1, 1))
        if (h.offset != 0) hs.push_back(std::move(h));
      return Arrangement(dim, std::move(hs), tag);
    }
    case Family::catalan0: return Arrangement(dim, pair_interval(n, -1, 1), tag);
    case Family::trunc_affine:
      check_interval(params.a, params.b);
      return Arrangement(dim, pair_interval(n, -params.a + 1, params.b - 1), tag);
    case Family::semigeneric:
    case Family::generic: {
      if (family == Family::generic && params.m < 1) throw PreconditionError("generic needs m >= 1");
      // Powers of a base stand in for offsets independent over Q; the claim
      // is checked and the base raised until it holds.
      for (Integer base = 2; base <= 1 << 16; base *= 2) {
        Arrangement arr(dim,
                        family == Family::semigeneric ? semigeneric_hyperplanes(n, base)
                                                      : generic_hyperplanes(n, params.m, base),
                        tag);
        if (verify_family_genericity(arr)) return arr;
      }
      throw Error("could not realize a generic offset choice");
    }
    case Family::rootsystem: {
      check_interval(params.a, params.b);
      if (params.root_system == RootSystem::D && n < 2) throw PreconditionError("D_n needs n >= 2");
      std::vector<Hyperplane> hs;
      std::vector<std::vector<Rational>> seen;
      for (const auto& root : positive_roots(params.root_system, n))
        for (long c = -params.a + 1; c <= params.b - 1; ++c) {
          // In BC, 2x_i = 2c and x_i = c are the same hyperplane; keep one.
          std::vector<Rational> key = root;
          Rational pivot = *std::find_if(root.begin(), root.end(), [](const Rational& x) { return x != 0; });
          for (auto& x : key) x /= pivot;
          key.push_back(Rational(c) / pivot);
          if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
          seen.push_back(std::move(key));
          hs.push_back({root, Rational(c)});
        }
      return Arrangement(dim, std::move(hs), tag);
    }
    case Family::custom: break;
  }
  throw PreconditionError("family '" + std::string(to_string(family)) + "' cannot be built from parameters");
}

bool verify_family_genericity(const Arrangement& a) {
  auto edges = graphic_edges(a);
  if (!edges) return false;
  const std::size_t n = a.dim();
  // Each distinct offset value is read as a formal symbol: the semigeneric
  // offset a_i is shared by every x_i - x_j, generic offsets are all
  // distinct. A cycle must be central exactly when its formal sum cancels.
  std::map<Rational, std::size_t, decltype([](const Rational& x, const Rational& y) { return cmp(x, y) < 0; })> symbols;
  std::vector<std::size_t> symbol_of;
  for (const auto& h : a.hyperplanes()) symbol_of.push_back(symbols.emplace(h.offset, symbols.size()).first->second);
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < edges->size(); ++e) {
    incident[(*edges)[e].u].push_back(e);
    incident[(*edges)[e].v].push_back(e);
  }

  // Walk every simple cycle (start = smallest vertex) and compare numeric
  // centrality with cancellation of the formal sum.
  std::vector<Rational> formal(symbols.size());
  std::vector<bool> on_path(n);
  std::vector<bool> edge_used(edges->size());
  Rational sum = 0;
  bool ok = true;
  auto dfs = [&](auto&& self, std::size_t start, std::size_t at) -> void {
    for (std::size_t e : incident[at]) {
      if (!ok || edge_used[e]) continue;
      const auto& edge = (*edges)[e];
      std::size_t next = edge.u == at ? edge.v : edge.u;
      if (next < start) continue;
      // Traversing u -> v adds x_u - x_v = offset / scale.
      Rational step = edge.u == at ? Rational(1) : Rational(-1);
      step /= a[e].normal[edge.u];
      sum += step * a[e].offset;
      formal[symbol_of[e]] += step;
      edge_used[e] = true;
      if (next == start) {
        bool formal_zero = std::all_of(formal.begin(), formal.end(), [](const Rational& c) { return c == 0; });
        if ((sum == 0) != formal_zero) ok = false;
      } else if (!on_path[next]) {
        on_path[next] = true;
        self(self, start, next);
        on_path[next] = false;
      }
      edge_used[e] = false;
      formal[symbol_of[e]] -= step;
      sum -= step * a[e].offset;
    }
  };
  for (std::size_t s = 0; s < n && ok; ++s) {
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  return ok;
}

}  // namespace arr
