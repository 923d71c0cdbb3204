#include <algorithm>
#include <cstdint>
#include <numeric>

#include "arr/arrangement.hpp"
#include "arr/error.hpp"
#include "parallel.hpp"

namespace arr {

namespace {

// Subsets are grown by adding hyperplanes in decreasing position. A node S
// with smallest position m survives iff no hyperplane at a position below m
// contains the flat of S; otherwise S and every extension of it contain a
// broken central circuit. Surviving nodes are exactly the NBC sets.

std::vector<std::size_t> resolve_order(const Arrangement& a, std::span<const std::size_t> order) {
  std::vector<std::size_t> out(a.size());
  if (order.empty()) {
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  if (order.size() != a.size()) throw PreconditionError("nbc order must list every hyperplane once");
  std::vector<bool> seen(a.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= a.size() || seen[order[k]]) throw PreconditionError("nbc order is not a permutation");
    seen[order[k]] = true;
    out[k] = order[k];
  }
  return out;
}

using Counts = std::vector<std::int64_t>;

// Graphic arrangements: x_u - x_v = c. A set is independent iff it is a
// forest and central iff potentials exist; both are tracked by labelling
// every vertex with its component and its potential inside the component.
template <class T>
class GraphicNbc {
 public:
  GraphicNbc(std::size_t n, std::vector<std::size_t> u, std::vector<std::size_t> v, std::vector<T> off)
      : n_(n), u_(std::move(u)), v_(std::move(v)), off_(std::move(off)) {}

  Counts branch(std::size_t top) const {
    State s(n_);
    Counts counts(n_ + 1);
    merge(s, top);
    visit(s, top, 1, counts);
    return counts;
  }

 private:
  struct State {
    explicit State(std::size_t n) : comp(n), pot(n) { std::iota(comp.begin(), comp.end(), 0); }
    std::vector<std::size_t> comp;
    std::vector<T> pot;
  };

  bool contains_flat(const State& s, std::size_t j) const {
    return s.comp[u_[j]] == s.comp[v_[j]] && s.pot[u_[j]] - s.pot[v_[j]] == off_[j];
  }

  void merge(State& s, std::size_t j) const {
    const std::size_t keep = s.comp[u_[j]], gone = s.comp[v_[j]];
    const T shift = s.pot[u_[j]] - off_[j] - s.pot[v_[j]];
    for (std::size_t w = 0; w < n_; ++w)
      if (s.comp[w] == gone) {
        s.comp[w] = keep;
        s.pot[w] += shift;
      }
  }

  void visit(State& s, std::size_t m, std::size_t size, Counts& counts) const {
    for (std::size_t j = m; j-- > 0;)
      if (contains_flat(s, j)) return;
    ++counts[size];
    for (std::size_t next = 0; next < m; ++next) {
      if (s.comp[u_[next]] == s.comp[v_[next]]) continue;
      State child = s;
      merge(child, next);
      visit(child, next, size + 1, counts);
    }
  }

  std::size_t n_;
  std::vector<std::size_t> u_, v_;
  std::vector<T> off_;
};

class LinearNbc {
 public:
  LinearNbc(std::size_t d, std::vector<std::vector<Rational>> rows) : d_(d), rows_(std::move(rows)) {}

  Counts branch(std::size_t top) const {
    RowEchelon echelon(d_ + 1);
    Counts counts(d_ + 1);
    echelon.insert(rows_[top]);
    visit(echelon, top, 1, counts);
    return counts;
  }

 private:
  bool normal_zero(const std::vector<Rational>& r) const {
    for (std::size_t k = 0; k < d_; ++k)
      if (r[k] != 0) return false;
    return true;
  }

  void visit(RowEchelon& echelon, std::size_t m, std::size_t size, Counts& counts) const {
    std::vector<char> addable(m);
    for (std::size_t j = m; j-- > 0;) {
      auto r = echelon.reduce(rows_[j]);
      if (normal_zero(r)) {
        if (r[d_] == 0) return;  // H_j contains the flat
      } else {
        addable[j] = 1;
      }
    }
    ++counts[size];
    for (std::size_t next = 0; next < m; ++next) {
      if (!addable[next]) continue;
      echelon.insert(rows_[next]);
      visit(echelon, next, size + 1, counts);
      echelon.pop();
    }
  }

  std::size_t d_;
  std::vector<std::vector<Rational>> rows_;
};

template <class Engine>
QPolynomial finish(const Engine& engine, std::size_t count, std::size_t d, unsigned threads) {
  auto parts = detail::run_tasks<Counts>(count, threads, [&](std::size_t top) { return engine.branch(top); });
  std::vector<Rational> poin(d + 1);
  poin[0] = 1;
  for (const auto& c : parts)
    for (std::size_t k = 0; k <= d; ++k) poin[k] += Rational(static_cast<long>(c[k]));
  return chi_from_poincare(QPolynomial(std::move(poin)), d);
}

QPolynomial linear_path(const Arrangement& a, const std::vector<std::size_t>& order, const EngineConfig& config) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t idx : order) {
    auto row = a[idx].normal;
    row.push_back(a[idx].offset);
    rows.push_back(std::move(row));
  }
  return finish(LinearNbc(a.dim(), std::move(rows)), a.size(), a.dim(), config.threads);
}

}  // namespace

QPolynomial chi_nbc_linear_algebra(const Arrangement& a, std::span<const std::size_t> order,
                                   const EngineConfig& config) {
  return linear_path(a, resolve_order(a, order), config);
}

QPolynomial chi_nbc(const Arrangement& a, std::span<const std::size_t> order, const EngineConfig& config) {
  const auto ord = resolve_order(a, order);
  if (!a.is_graphic()) return linear_path(a, ord, config);

  const std::size_t n = a.dim();
  std::vector<std::size_t> u, v;
  std::vector<Rational> off;
  for (std::size_t idx : ord) {
    const auto& h = a[idx];
    std::size_t first = n, second = n;
    for (std::size_t k = 0; k < n; ++k)
      if (h.normal[k] != 0) (first == n ? first : second) = k;
    u.push_back(first);
    v.push_back(second);
    off.push_back(h.offset / h.normal[first]);
  }
  // Potentials are sums of at most n offsets, so 2^40 leaves ample headroom.
  const Rational limit(Integer(1) << 40);
  bool small = std::all_of(off.begin(), off.end(), [&](const Rational& c) { return c.get_den() == 1 && abs(c) <= limit; });
  if (small) {
    std::vector<std::int64_t> off64;
    for (const auto& c : off) off64.push_back(c.get_num().get_si());
    return finish(GraphicNbc<std::int64_t>(n, u, v, std::move(off64)), a.size(), n, config.threads);
  }
  return finish(GraphicNbc<Rational>(n, u, v, std::move(off)), a.size(), n, config.threads);
}

}  // namespace arr
