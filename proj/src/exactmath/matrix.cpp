#include "arr/error.hpp"
#include "arr/exactmath.hpp"

namespace arr {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw PreconditionError("matrix entry count does not match rows*cols");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw PreconditionError("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return RationalMatrix(rows.size(), cols, std::move(entries));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

namespace {

// Gaussian elimination with partial pivoting on |entry|; returns the rank.
std::size_t eliminate(RationalMatrix& m, std::size_t pivot_cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < pivot_cols && rank < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t r = rank; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      if (best == m.rows() || abs(m(r, col)) > abs(m(best, col))) best = r;
    }
    if (best == m.rows()) continue;
    if (best != rank)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(best, c), m(rank, c));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      Rational factor = m(r, col) / m(rank, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return eliminate(work, work.cols());
}

bool linear_system_consistent(const RationalMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows())
    throw PreconditionError("right-hand side has " + std::to_string(rhs.size()) + " entries, matrix has " +
                            std::to_string(m.rows()) + " rows");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  return rank(m) == rank(aug);
}

std::vector<Rational> RowEchelon::reduce(std::span<const Rational> v) const {
  std::vector<Rational> out(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (out[p] == 0) continue;
    Rational factor = out[p];
    const auto& row = rows_[i];
    for (std::size_t c = 0; c < width_; ++c)
      if (row[c] != 0) out[c] -= factor * row[c];
  }
  return out;
}

bool RowEchelon::insert(std::span<const Rational> v) {
  if (v.size() != width_) throw PreconditionError("row width mismatch");
  auto r = reduce(v);
  std::size_t p = 0;
  while (p < width_ && r[p] == 0) ++p;
  if (p == width_) return false;
  Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

void RowEchelon::pop() {
  rows_.pop_back();
  pivots_.pop_back();
}

}  // namespace arr
