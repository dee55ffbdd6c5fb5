#pragma once

// Exact Gauss-Jordan elimination over a field.  Pivoting is the first
// nonzero entry in column order; with exact arithmetic there is nothing to
// gain from magnitude pivoting and the fixed rule makes every reduction,
// rank, basis and inverse reproducible bit for bit.

#include <optional>
#include <vector>

#include "matrix.hpp"

namespace drz {

template <FieldScalar S>
struct RrefResult {
  Matrix<S> reduced;
  int rank;
  std::vector<int> pivots;   // pivot column indices, increasing
  Matrix<S> transform;       // transform * input == reduced
};

template <FieldScalar S>
RrefResult<S> rref_rank(const Matrix<S>& a) {
  const int m = a.rows(), n = a.cols();
  Matrix<S> r = a;
  Matrix<S> t = Matrix<S>::identity(m, a.domain());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    for (int i = row; i < m; ++i)
      if (!r(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < n; ++j) std::swap(r(row, j), r(piv, j));
      for (int j = 0; j < m; ++j) std::swap(t(row, j), t(piv, j));
    }
    S inv = invert_scalar(r(row, col));
    for (int j = 0; j < n; ++j) r(row, j) = inv * r(row, j);
    for (int j = 0; j < m; ++j) t(row, j) = inv * t(row, j);
    for (int i = 0; i < m; ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      S f = r(i, col);
      for (int j = 0; j < n; ++j) r(i, j) = r(i, j) - f * r(row, j);
      for (int j = 0; j < m; ++j) t(i, j) = t(i, j) - f * t(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult<S>{std::move(r), static_cast<int>(pivots.size()),
                       std::move(pivots), std::move(t)};
}

template <FieldScalar S>
int rank(const Matrix<S>& a) {
  return rref_rank(a).rank;
}

// Solve a*X = b column-wise; free variables are set to zero so the result
// is unique.  Returns nullopt when the system is inconsistent.
template <FieldScalar S>
std::optional<Matrix<S>> solve_right(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows())
    throw DimensionMismatch("solve_right: row counts differ");
  if (a.domain() != b.domain()) throw DomainMismatch("solve_right");
  RrefResult<S> rr = rref_rank(a);
  Matrix<S> c = rr.transform * b;
  for (int i = rr.rank; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (!c(i, j).is_zero()) return std::nullopt;
  Matrix<S> x(a.cols(), b.cols(), a.domain());
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < b.cols(); ++j) x(rr.pivots[i], j) = c(i, j);
  return x;
}

template <FieldScalar S>
Matrix<S> inverse(const Matrix<S>& a) {
  if (!a.is_square())
    throw NotSquare("inverse of a non-square matrix");
  RrefResult<S> rr = rref_rank(a);
  if (rr.rank != a.rows())
    throw Singular("matrix of rank " + std::to_string(rr.rank) + " < " +
                   std::to_string(a.rows()));
  return rr.transform;
}

template <FieldScalar S>
bool is_invertible(const Matrix<S>& a) {
  return a.is_square() && rank(a) == a.rows();
}

// Pivot columns of a, in index order.
template <FieldScalar S>
Matrix<S> column_space_basis(const Matrix<S>& a) {
  RrefResult<S> rr = rref_rank(a);
  Matrix<S> b(a.rows(), rr.rank, a.domain());
  for (int k = 0; k < rr.rank; ++k)
    for (int i = 0; i < a.rows(); ++i) b(i, k) = a(i, rr.pivots[k]);
  return b;
}

// Standard rref free-variable vectors, in free-column index order.
template <FieldScalar S>
Matrix<S> null_space_basis(const Matrix<S>& a) {
  RrefResult<S> rr = rref_rank(a);
  std::vector<int> free_cols;
  {
    std::size_t p = 0;
    for (int j = 0; j < a.cols(); ++j) {
      if (p < rr.pivots.size() && rr.pivots[p] == j)
        ++p;
      else
        free_cols.push_back(j);
    }
  }
  Matrix<S> b(a.cols(), static_cast<int>(free_cols.size()), a.domain());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    b(free_cols[k], static_cast<int>(k)) = S::one(a.domain());
    for (int i = 0; i < rr.rank; ++i)
      b(rr.pivots[i], static_cast<int>(k)) = -rr.reduced(i, free_cols[k]);
  }
  return b;
}

}  // namespace drz
