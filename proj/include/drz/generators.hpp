#pragma once

// Seeded construction of random invertibles, idempotents, projectors and
// precondition-satisfying idempotent pairs.
//
// All randomness flows through SplitMix64 (Steele, Lea & Flood's mixing
// constants), a fixed 64-bit generator chosen so that identical GenSpecs
// produce identical objects on every platform.  Trial i of a campaign uses
// the derived stream mix(seed, i), which makes parallel and sequential
// execution emit the same trial set.

#include <cstdint>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "matrix.hpp"

namespace drz {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound); the modulo bias is irrelevant at the
  // bounds used here and keeps the reduction trivially portable.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  long integer_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x632be59bd9b4e019ull * (index + 1)));
  return g.next();
}

struct GenSpec {
  Domain domain;
  int n;                  // matrix dimension
  int r;                  // target rank, 0 <= r <= n
  std::uint64_t seed;
  long entry_bound = 5;   // magnitude cap for rational/integer sampling
};

inline constexpr int kRetryCap = 1000;

namespace detail {

template <FieldScalar S>
S random_entry(SplitMix64& g, const Domain& dom, long bound);

template <>
inline Fp random_entry<Fp>(SplitMix64& g, const Domain& dom, long) {
  return Fp(g.below(dom.modulus()), dom.modulus());
}

template <>
inline Rational random_entry<Rational>(SplitMix64& g, const Domain&,
                                       long bound) {
  return Rational(g.integer_in(-bound, bound));
}

template <FieldScalar S>
Matrix<S> random_matrix(SplitMix64& g, const Domain& dom, int rows, int cols,
                        long bound) {
  Matrix<S> m(rows, cols, dom);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_entry<S>(g, dom, bound);
  return m;
}

}  // namespace detail

template <FieldScalar S>
Matrix<S> random_invertible(const GenSpec& spec) {
  SplitMix64 g(spec.seed);
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Matrix<S> m = detail::random_matrix<S>(g, spec.domain, spec.n, spec.n,
                                           spec.entry_bound);
    if (rank(m) == spec.n) return m;
  }
  throw RetryLimitExceeded("no invertible matrix found in " +
                           std::to_string(kRetryCap) + " draws");
}

// P = S diag(I_r, 0) S^{-1}: exactly idempotent, exactly rank r, and the
// conjugation reaches every similarity class.
template <FieldScalar S>
Matrix<S> random_idempotent(const GenSpec& spec) {
  if (spec.r < 0 || spec.r > spec.n)
    throw DimensionMismatch("idempotent rank outside [0, n]");
  Matrix<S> s = random_invertible<S>(spec);
  Matrix<S> diag(spec.n, spec.n, spec.domain);
  for (int i = 0; i < spec.r; ++i) diag(i, i) = S::one(spec.domain);
  Matrix<S> p = s * diag * inverse(s);
  if (!(p * p == p) || rank(p) != spec.r)
    throw InternalCheckFailure("idempotent construction failed");
  return p;
}

// Orthogonal projector over Q: P = B (B^T B)^{-1} B^T for a full-column-rank
// integer matrix B.  Pᵀ = P and P² = P hold exactly.
inline Matrix<Rational> random_projector(const GenSpec& spec) {
  if (spec.domain.kind() != DomainKind::Rationals)
    throw UnsupportedDomain("projectors require the rationals");
  if (spec.r == 0) return Matrix<Rational>(spec.n, spec.n, spec.domain);
  SplitMix64 g(spec.seed);
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Matrix<Rational> b = detail::random_matrix<Rational>(
        g, spec.domain, spec.n, spec.r, spec.entry_bound);
    if (rank(b) != spec.r) continue;
    Matrix<Rational> bt = transpose(b);
    Matrix<Rational> p = b * inverse(bt * b) * bt;
    if (!(p * p == p) || !(transpose(p) == p))
      throw InternalCheckFailure("projector construction failed");
    return p;
  }
  throw RetryLimitExceeded("no full-column-rank B found");
}

enum class PairKind {
  Commuting,                // simultaneous conjugates of 0/1 diagonals
  AnnihilatingProjectors,   // pq = qp = 0, projectors over Q
  NilpotentCondition,       // (p+q)(p-q)^pi nilpotent
  Unrestricted,             // two independent idempotent draws
};

namespace detail {

inline std::vector<int> random_permutation(SplitMix64& g, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[static_cast<int>(g.below(i + 1))]);
  return perm;
}

template <FieldScalar S>
Matrix<S> coordinate_projector(const std::vector<int>& coords, int n,
                               const Domain& dom) {
  Matrix<S> p(n, n, dom);
  for (int c : coords) p(c, c) = S::one(dom);
  return p;
}

}  // namespace detail

// Commuting projector pairs over Q: 0/1 diagonals on possibly overlapping
// coordinate sets, conjugated by a permutation.  Used for the positive side
// of projector biconditionals where pq = qp but pq may be nonzero.
inline std::pair<Matrix<Rational>, Matrix<Rational>> commuting_projector_pair(
    const GenSpec& spec) {
  if (spec.domain.kind() != DomainKind::Rationals)
    throw UnsupportedDomain("projectors require the rationals");
  SplitMix64 g(spec.seed);
  std::vector<int> perm = detail::random_permutation(g, spec.n);
  std::vector<int> pc, qc;
  for (int i = 0; i < spec.n; ++i) {
    if (g.below(2)) pc.push_back(perm[i]);
    if (g.below(2)) qc.push_back(perm[i]);
  }
  return {detail::coordinate_projector<Rational>(pc, spec.n, spec.domain),
          detail::coordinate_projector<Rational>(qc, spec.n, spec.domain)};
}

template <FieldScalar S>
std::pair<Matrix<S>, Matrix<S>> special_pairs(PairKind kind,
                                              const GenSpec& spec) {
  SplitMix64 g(spec.seed);
  switch (kind) {
    case PairKind::Commuting: {
      GenSpec s = spec;
      s.seed = g.next();
      Matrix<S> t = random_invertible<S>(s);
      Matrix<S> tinv = inverse(t);
      Matrix<S> d1(spec.n, spec.n, spec.domain), d2(spec.n, spec.n, spec.domain);
      for (int i = 0; i < spec.n; ++i) {
        if (g.below(2)) d1(i, i) = S::one(spec.domain);
        if (g.below(2)) d2(i, i) = S::one(spec.domain);
      }
      Matrix<S> p = t * d1 * tinv, q = t * d2 * tinv;
      if (!(p * q == q * p))
        throw InternalCheckFailure("commuting construction failed");
      return {p, q};
    }
    case PairKind::AnnihilatingProjectors: {
      if (spec.domain.kind() != DomainKind::Rationals)
        throw UnsupportedDomain("annihilating projectors require the rationals");
      std::vector<int> perm = detail::random_permutation(g, spec.n);
      int rp = static_cast<int>(g.below(spec.n + 1));
      int rq = static_cast<int>(g.below(spec.n - rp + 1));
      std::vector<int> pc(perm.begin(), perm.begin() + rp);
      std::vector<int> qc(perm.begin() + rp, perm.begin() + rp + rq);
      Matrix<S> p = detail::coordinate_projector<S>(pc, spec.n, spec.domain);
      Matrix<S> q = detail::coordinate_projector<S>(qc, spec.n, spec.domain);
      if (!(p * q).is_zero() || !(q * p).is_zero())
        throw InternalCheckFailure("annihilating construction failed");
      return {p, q};
    }
    case PairKind::NilpotentCondition: {
      // Prefer pairs with p - q invertible: then (p-q)^pi = 0 and the
      // nilpotency condition is vacuous.  Complementary ranks make such
      // pairs common.  In characteristic 2, p = q gives p + q = 0.
      for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        GenSpec sp = spec, sq = spec;
        sp.seed = g.next();
        sq.seed = g.next();
        sq.r = spec.n - spec.r;
        Matrix<S> p = random_idempotent<S>(sp);
        Matrix<S> q = random_idempotent<S>(sq);
        if (is_invertible(p - q)) return {p, q};
        if (spec.domain.characteristic() == 2) return {p, p};
      }
      throw RetryLimitExceeded("no pair with p - q invertible found");
    }
    case PairKind::Unrestricted: {
      GenSpec sp = spec, sq = spec;
      sp.r = static_cast<int>(g.below(spec.n + 1));
      sq.r = static_cast<int>(g.below(spec.n + 1));
      sp.seed = g.next();
      sq.seed = g.next();
      return {random_idempotent<S>(sp), random_idempotent<S>(sq)};
    }
  }
  throw Error("unreachable pair kind");
}

// Unrestricted projector pairs over Q (negative side of the projector
// biconditionals: generic draws rarely commute).
inline std::pair<Matrix<Rational>, Matrix<Rational>> random_projector_pair(
    const GenSpec& spec) {
  SplitMix64 g(spec.seed);
  GenSpec sp = spec, sq = spec;
  sp.r = static_cast<int>(g.below(spec.n + 1));
  sq.r = static_cast<int>(g.below(spec.n + 1));
  sp.seed = g.next();
  sq.seed = g.next();
  return {random_projector(sp), random_projector(sq)};
}

}  // namespace drz
