#ifndef COVERLRC_MATRIX_HPP
#define COVERLRC_MATRIX_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "coverlrc/gf.hpp"

namespace coverlrc {

/// Dense matrix over a Field, row-major, entries stored as canonical indices.
/// Doubles as generator matrix and as n x n array word.
class Matrix {
 public:
  Matrix(const Field& f, size_t rows, size_t cols) : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(const Field& f, size_t n) {
    Matrix out(f, n, n);
    for (size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  uint32_t& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
  uint32_t operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  FieldElement at(size_t r, size_t c) const { return field_.element((*this)(r, c)); }

  std::span<const uint32_t> row(size_t r) const { return {a_.data() + r * cols_, cols_}; }
  std::span<uint32_t> row(size_t r) { return {a_.data() + r * cols_, cols_}; }

  bool is_zero() const {
    for (uint32_t v : a_)
      if (v != 0) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const { return combine(o, /*subtract=*/false); }
  Matrix operator-(const Matrix& o) const { return combine(o, /*subtract=*/true); }

  bool operator==(const Matrix& o) const {
    return field_.same(o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix out(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  Matrix select_columns(const std::vector<size_t>& cols) const {
    Matrix out(field_, rows_, cols.size());
    for (size_t r = 0; r < rows_; ++r)
      for (size_t i = 0; i < cols.size(); ++i) out(r, i) = (*this)(r, cols[i]);
    return out;
  }

 private:
  Matrix combine(const Matrix& o, bool subtract) const {
    if (!field_.same(o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix dimension or field mismatch");
    Matrix out(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
      out.a_[i] = subtract ? field_.sub(a_[i], o.a_[i]) : field_.add(a_[i], o.a_[i]);
    return out;
  }

  Field field_;
  size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

/// In-place reduction to row echelon form (reduced); returns the rank.
inline size_t row_reduce(Matrix& m) {
  const Field& f = m.field();
  size_t rank = 0;
  for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
    const uint32_t scale = f.inv(m(rank, col));
    for (size_t c = col; c < m.cols(); ++c) m(rank, c) = f.mul(m(rank, c), scale);
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col) == 0) continue;
      const uint32_t factor = m(r, col);
      for (size_t c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(rank, c)));
    }
    ++rank;
  }
  return rank;
}

inline size_t rank_of(Matrix m) { return row_reduce(m); }

/// Basis of the row space: the first rank rows of the reduced form.
inline Matrix row_basis(Matrix m) {
  const size_t rank = row_reduce(m);
  Matrix out(m.field(), rank, m.cols());
  for (size_t r = 0; r < rank; ++r)
    for (size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

enum class SolveOutcome { unique, underdetermined, inconsistent };

struct LinearSolve {
  SolveOutcome outcome;
  std::vector<uint32_t> solution;  // populated iff unique
};

/// Solve A x = b (A: n_eq x n_var). Rank deficiency of A takes precedence
/// over inconsistency in the reported outcome.
inline LinearSolve solve_linear(const Matrix& a, std::span<const uint32_t> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const Field& f = a.field();
  const size_t n_eq = a.rows(), n_var = a.cols();
  Matrix aug(f, n_eq, n_var + 1);
  for (size_t r = 0; r < n_eq; ++r) {
    for (size_t c = 0; c < n_var; ++c) aug(r, c) = a(r, c);
    aug(r, n_var) = b[r];
  }
  size_t rank = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < n_var && rank < n_eq; ++col) {
    size_t pivot = rank;
    while (pivot < n_eq && aug(pivot, col) == 0) ++pivot;
    if (pivot == n_eq) continue;
    if (pivot != rank)
      for (size_t c = 0; c <= n_var; ++c) std::swap(aug(pivot, c), aug(rank, c));
    const uint32_t scale = f.inv(aug(rank, col));
    for (size_t c = col; c <= n_var; ++c) aug(rank, c) = f.mul(aug(rank, c), scale);
    for (size_t r = 0; r < n_eq; ++r) {
      if (r == rank || aug(r, col) == 0) continue;
      const uint32_t factor = aug(r, col);
      for (size_t c = col; c <= n_var; ++c) aug(r, c) = f.sub(aug(r, c), f.mul(factor, aug(rank, c)));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < n_var) return {SolveOutcome::underdetermined, {}};
  for (size_t r = rank; r < n_eq; ++r)
    if (aug(r, n_var) != 0) return {SolveOutcome::inconsistent, {}};
  std::vector<uint32_t> x(n_var, 0);
  for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = aug(i, n_var);
  return {SolveOutcome::unique, std::move(x)};
}

}  // namespace coverlrc

#endif  // COVERLRC_MATRIX_HPP
