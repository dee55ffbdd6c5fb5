#pragma once

// Dense exact matrices over a scalar domain.  Row-major storage, value
// semantics, pure free-function arithmetic.  Zero-column matrices are legal
// (they arise as empty bases); the text file format only carries sizes >= 1.

#include <string>
#include <vector>

#include "errors.hpp"
#include "scalars.hpp"

namespace drz {

template <Scalar S>
class Matrix {
 public:
  Matrix(int rows, int cols, const Domain& dom)
      : rows_(rows), cols_(cols), dom_(dom),
        e_(static_cast<std::size_t>(rows) * cols, S::zero(dom)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix size");
  }

  static Matrix identity(int n, const Domain& dom) {
    Matrix m(n, n, dom);
    for (int i = 0; i < n; ++i) m(i, i) = S::one(dom);
    return m;
  }

  static Matrix from_entries(int rows, int cols, const Domain& dom,
                             std::vector<S> entries) {
    if (entries.size() != static_cast<std::size_t>(rows) * cols)
      throw DimensionMismatch("entry count does not match matrix shape");
    Matrix m(rows, cols, dom);
    m.e_ = std::move(entries);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Domain& domain() const { return dom_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool is_zero() const {
    for (const S& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && dom_ == o.dom_ && e_ == o.e_;
  }

  const std::vector<S>& entries() const { return e_; }

 private:
  int rows_, cols_;
  Domain dom_;
  std::vector<S> e_;
};

namespace detail {
template <Scalar S>
void require_same_shape(const Matrix<S>& a, const Matrix<S>& b,
                        const char* op) {
  if (a.domain() != b.domain())
    throw DomainMismatch(std::string(op) + ": " + a.domain().tag() + " vs " +
                         b.domain().tag());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
}
}  // namespace detail

template <Scalar S>
Matrix<S> operator+(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_shape(a, b, "add");
  Matrix<S> c(a.rows(), a.cols(), a.domain());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <Scalar S>
Matrix<S> operator-(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_shape(a, b, "sub");
  Matrix<S> c(a.rows(), a.cols(), a.domain());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <Scalar S>
Matrix<S> operator-(const Matrix<S>& a) {
  Matrix<S> c(a.rows(), a.cols(), a.domain());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

template <Scalar S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.domain() != b.domain())
    throw DomainMismatch("mul: " + a.domain().tag() + " vs " +
                         b.domain().tag());
  if (a.cols() != b.rows())
    throw DimensionMismatch("mul: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " times " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  Matrix<S> c(a.rows(), b.cols(), a.domain());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j)
        c(i, j) = c(i, j) + aik * b(k, j);
    }
  return c;
}

template <Scalar S>
Matrix<S> operator*(const S& s, const Matrix<S>& a) {
  Matrix<S> c(a.rows(), a.cols(), a.domain());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

template <Scalar S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> c(a.cols(), a.rows(), a.domain());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(j, i) = a(i, j);
  return c;
}

// e-th power by repeated squaring, a^0 = I.
template <Scalar S>
Matrix<S> mat_pow(const Matrix<S>& a, unsigned long e) {
  if (!a.is_square())
    throw NotSquare("mat_pow on " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()));
  Matrix<S> r = Matrix<S>::identity(a.rows(), a.domain());
  Matrix<S> base = a;
  while (e > 0) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

// Column concatenation [a | b].
template <Scalar S>
Matrix<S> hcat(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.domain() != b.domain()) throw DomainMismatch("hcat");
  if (a.rows() != b.rows()) throw DimensionMismatch("hcat");
  Matrix<S> c(a.rows(), a.cols() + b.cols(), a.domain());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

template <Scalar S>
Matrix<S> zero_like(const Matrix<S>& a) {
  return Matrix<S>(a.rows(), a.cols(), a.domain());
}

template <Scalar S>
Matrix<S> one_like(const Matrix<S>& a) {
  if (!a.is_square()) throw NotSquare("one_like of a non-square matrix");
  return Matrix<S>::identity(a.rows(), a.domain());
}

// Scalars participate in the same generic ring-element interface.
inline Rational zero_like(const Rational& x) { return Rational::zero(x.domain()); }
inline Rational one_like(const Rational& x) { return Rational::one(x.domain()); }
inline Fp zero_like(const Fp& x) { return Fp::zero(x.domain()); }
inline Fp one_like(const Fp& x) { return Fp::one(x.domain()); }
inline Zn zero_like(const Zn& x) { return Zn::zero(x.domain()); }
inline Zn one_like(const Zn& x) { return Zn::one(x.domain()); }
inline Int zero_like(const Int& x) { return Int::zero(x.domain()); }
inline Int one_like(const Int& x) { return Int::one(x.domain()); }

template <class T>
concept RingElem = requires(const T& a, const T& b) {
  { a + b } -> std::same_as<T>;
  { a - b } -> std::same_as<T>;
  { a * b } -> std::same_as<T>;
  { -a } -> std::same_as<T>;
  { a == b } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::same_as<T>;
  { one_like(a) } -> std::same_as<T>;
};

template <RingElem T>
bool is_zero_elem(const T& a) {
  return a == zero_like(a);
}

template <RingElem T>
bool is_idempotent(const T& a) {
  return a * a == a;
}

}  // namespace drz
