#pragma once

// Drazin inversion of square matrices over an exact field.
//
// The inverse is computed through the Fitting decomposition: with
// k = ind(a) (rank stabilization of successive powers), F^n splits as
// col(a^k) (+) null(a^k); both summands are a-invariant, a acts invertibly
// on the first and nilpotently on the second, and a^D is the inverse of the
// invertible part extended by zero.  Every output is re-validated against
// the defining axioms before it is returned.

#include <optional>
#include <string>

#include "linalg.hpp"
#include "matrix.hpp"

namespace drz {

template <class T>
struct DrazinResult {
  T d;          // a^D
  int index;    // ind(a); 0 exactly when a is invertible
  T pi;         // spectral idempotent 1 - a*a^D
  int witness;  // smallest m >= 1 with (a - a^2 d)^m = 0
};

// Defining axioms: b commutes with a, b*a*b = b, and a - a^2*b is nilpotent
// within `bound` (n for n x n matrices, |R| for table rings, ceil(log2 n)
// for Z_n).
template <RingElem T>
bool is_drazin_pair(const T& a, const T& b, int bound) {
  if (!(a * b == b * a)) return false;
  if (!(b * a * b == b)) return false;
  T w = a - a * a * b;
  T p = w;
  for (int m = 1; m <= bound; ++m) {
    if (is_zero_elem(p)) return true;
    p = p * w;
  }
  return false;
}

template <RingElem T>
bool is_nilpotent_elem(const T& a, int bound) {
  T p = a;
  for (int m = 1; m <= bound; ++m) {
    if (is_zero_elem(p)) return true;
    p = p * a;
  }
  return false;
}

// Smallest m >= 1 with (a - a^2 b)^m = 0, or nullopt if none within bound.
template <RingElem T>
std::optional<int> nilpotency_witness(const T& a, const T& b, int bound) {
  T w = a - a * a * b;
  T p = w;
  for (int m = 1; m <= bound; ++m) {
    if (is_zero_elem(p)) return m;
    p = p * w;
  }
  return std::nullopt;
}

// Definitional index of a given its (validated) Drazin inverse d: the
// smallest m >= 0 with a^m = a^{m+1} d.  Equals 0 exactly for units and,
// for m >= 1, the nilpotency index of a - a^2 d.
template <RingElem T>
int definitional_index(const T& a, const T& d, int bound) {
  T pw = one_like(a);
  for (int m = 0; m <= bound; ++m) {
    if (pw == pw * a * d) return m;
    pw = pw * a;
  }
  throw InternalCheckFailure("definitional index exceeded nilpotency bound");
}

// ind(a): smallest k >= 0 with rank(a^k) = rank(a^{k+1}), a^0 = I.
template <FieldScalar S>
int drazin_index(const Matrix<S>& a) {
  if (!a.is_square()) throw NotSquare("drazin_index");
  const int n = a.rows();
  Matrix<S> pw = Matrix<S>::identity(n, a.domain());
  int prev = n;
  for (int k = 0; k <= n; ++k) {
    Matrix<S> next = pw * a;
    int rk = rank(next);
    if (rk == prev) return k;
    prev = rk;
    pw = std::move(next);
  }
  // Ranks strictly decrease until they stabilize, so k <= n always hits.
  throw InternalCheckFailure("rank sequence failed to stabilize");
}

template <FieldScalar S>
DrazinResult<Matrix<S>> drazin(const Matrix<S>& a) {
  if (!a.is_square()) throw NotSquare("drazin");
  const int n = a.rows();
  const Domain& dom = a.domain();
  const int k = drazin_index(a);

  Matrix<S> ak = mat_pow(a, static_cast<unsigned long>(k));
  Matrix<S> u = column_space_basis(ak);   // n x r
  Matrix<S> v = null_space_basis(ak);     // n x (n-r)
  const int r = u.cols();
  Matrix<S> s = hcat(u, v);
  Matrix<S> sinv = inverse(s);            // Fitting: s is invertible
  Matrix<S> b = sinv * a * s;

  // b must be block diagonal diag(core, nil) with the core invertible.
  Matrix<S> core(r, r, dom);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) core(i, j) = b(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i < r) != (j < r) && !b(i, j).is_zero())
        throw InternalCheckFailure("Fitting basis did not block-diagonalize");

  Matrix<S> dblock(n, n, dom);
  if (r > 0) {
    Matrix<S> core_inv = inverse(core);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) dblock(i, j) = core_inv(i, j);
  }
  Matrix<S> d = s * dblock * sinv;

  if (!is_drazin_pair(a, d, n))
    throw InternalCheckFailure("drazin output failed the defining axioms");
  DrazinResult<Matrix<S>> res{
      d, k, Matrix<S>::identity(n, dom) - a * d,
      *nilpotency_witness(a, d, n == 0 ? 1 : n)};
  return res;
}

// Group inverse a^#: the Drazin inverse when ind(a) <= 1.
template <FieldScalar S>
std::optional<Matrix<S>> group_inverse(const Matrix<S>& a) {
  DrazinResult<Matrix<S>> r = drazin(a);
  if (r.index > 1) return std::nullopt;
  return r.d;
}

}  // namespace drz
