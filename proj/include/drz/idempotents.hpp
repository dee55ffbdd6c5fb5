#pragma once

// Closed-form Drazin-inverse identities for idempotent pairs.
//
// Throughout, p and q are idempotents of a ring context and dd denotes
// (p-q)^D.  Each operation computes its result from the closed form alone
// and then re-validates it against the defining axioms; a violation is
// never repaired silently but surfaces as IdentityViolation carrying the
// label of the failed equation, which fuzz harnesses record as findings.

#include <array>
#include <optional>
#include <string>

#include "rings.hpp"

namespace drz {

namespace detail {
inline void ensure(bool ok, const std::string& equation) {
  if (!ok) throw IdentityViolation(equation);
}
}  // namespace detail

// Validated pair of idempotents bound to its ring context.
template <RingContext C>
struct IdempotentPair {
  const C* ctx;
  typename C::Elem p, q;
};

template <RingContext C>
IdempotentPair<C> make_idempotent_pair(const C& ctx, typename C::Elem p,
                                       typename C::Elem q) {
  if (!is_idempotent(p))
    throw NonIdempotentInput("p is not idempotent: " + ctx.describe(p));
  if (!is_idempotent(q))
    throw NonIdempotentInput("q is not idempotent: " + ctx.describe(q));
  return IdempotentPair<C>{&ctx, std::move(p), std::move(q)};
}

namespace detail {
// (p-q)^D, or the calculus-level error when it does not exist.
template <RingContext C>
DrazinResult<typename C::Elem> drazin_of(const C& ctx,
                                         const typename C::Elem& a,
                                         const char* what) {
  auto r = ctx.drazin(a);
  if (!r)
    throw drz::NotDrazinInvertible(std::string(what) + " = " + ctx.describe(a) +
                                   " is not Drazin invertible");
  return *r;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// F, G, H and their relations.
// ---------------------------------------------------------------------------

template <class T>
struct IdempotentTriple {
  T F;  // p (p-q)^D  =  (p-q)^D (1-q)
  T G;  // (p-q)^D p  =  (1-q) (p-q)^D
  T H;  // (p-q)^D (p-q)
};

template <RingContext C>
IdempotentTriple<typename C::Elem> fgh(const IdempotentPair<C>& pr) {
  using detail::ensure;
  const auto& [ctx, p, q] = pr;
  const auto one = ctx->one();
  const auto dd = detail::drazin_of(*ctx, p - q, "p-q").d;

  IdempotentTriple<typename C::Elem> t{p * dd, dd * p, dd * (p - q)};
  ensure(is_idempotent(t.F), "T3.2.F-idempotent");
  ensure(is_idempotent(t.G), "T3.2.G-idempotent");
  ensure(is_idempotent(t.H), "T3.2.H-idempotent");
  ensure(t.F == dd * (one - q), "T3.2.1");
  ensure(t.G == (one - q) * dd, "T3.2.2");
  ensure(t.H == (p - q) * dd, "T3.2.H-commutes");
  return t;
}

// Relations obtained by swapping the roles of p and q.
template <RingContext C>
void check_corollary_3_3(const IdempotentPair<C>& pr) {
  using detail::ensure;
  const auto& [ctx, p, q] = pr;
  const auto one = ctx->one();
  const auto dd = detail::drazin_of(*ctx, p - q, "p-q").d;
  const auto t = fgh(pr);
  ensure(q * dd == dd * (one - p), "C3.3.1");
  ensure(dd * q == (one - p) * dd, "C3.3.2");
  ensure(q * t.H == t.H * q, "C3.3.3");
  ensure(t.G * (one - q) == (one - q) * t.F, "C3.3.4");
}

template <RingContext C>
void check_theorem_3_4(const IdempotentPair<C>& pr) {
  using detail::ensure;
  const auto& [ctx, p, q] = pr;
  const auto t = fgh(pr);
  ensure(t.F * p == p * t.G, "T3.4.1a");
  ensure(p * t.G == p * t.H, "T3.4.1b");
  ensure(p * t.H == t.H * p, "T3.4.1c");
  ensure(q * t.H * q == q * t.H, "T3.4.2a");
  ensure(q * t.H == t.H * q, "T3.4.2b");
  ensure(t.H * q == t.H * q * t.H, "T3.4.2c");
}

// ---------------------------------------------------------------------------
// Drazin inverses derived from (p-q)^D.
// ---------------------------------------------------------------------------

template <class T>
struct DifferenceFamily {
  T one_minus_pqp;  // [(p-q)^D]^2 p + 1 - p
  T p_minus_pqp;    // [(p-q)^D]^2 p = p [(p-q)^D]^2
  T p_minus_pq;     // p [(p-q)^D]^3
  T p_minus_qp;     // [(p-q)^D]^3 p
  T one_minus_pq;   // 1 - p + [(p-q)^D]^2 [p + pq(1-p)]
                    //   + [sum_{i<k} (p-q)^pi (p-q)^{2i}] pq (p-1)
};

template <RingContext C>
DifferenceFamily<typename C::Elem> derived_from_difference(
    const IdempotentPair<C>& pr) {
  using detail::ensure;
  using T = typename C::Elem;
  const auto& [ctx, p, q] = pr;
  const T one = ctx->one();
  const auto dres = detail::drazin_of(*ctx, p - q, "p-q");
  const T& dd = dres.d;
  const T dd2 = dd * dd;
  const T dd3 = dd2 * dd;
  const T pi = one - (p - q) * dd;

  DifferenceFamily<T> f{
      dd2 * p + one - p,
      dd2 * p,
      p * dd3,
      dd3 * p,
      ctx->zero(),
  };
  // Truncated geometric sum over even powers, empty when ind(p-q) = 0.
  T sum = ctx->zero();
  {
    const T sq = (p - q) * (p - q);
    T pw = one;
    for (int i = 0; i < dres.index; ++i) {
      sum = sum + pi * pw;
      pw = pw * sq;
    }
  }
  f.one_minus_pq =
      one - p + dd2 * (p + p * q * (one - p)) + sum * (p * q * (p - one));

  const int bound = ctx->nil_bound();
  ensure(is_drazin_pair(one - p * q * p, f.one_minus_pqp, bound), "T3.5.1.axioms");
  ensure(is_drazin_pair(p - p * q * p, f.p_minus_pqp, bound), "T3.5.2.axioms");
  ensure(f.p_minus_pqp == p * dd2, "T3.5.2.symmetry");
  ensure(is_drazin_pair(p - p * q, f.p_minus_pq, bound), "T3.5.3.axioms");
  ensure(is_drazin_pair(p - q * p, f.p_minus_qp, bound), "T3.5.4.axioms");
  ensure(is_drazin_pair(one - p * q, f.one_minus_pq, bound), "T3.5.5.axioms");
  return f;
}

template <class T>
struct ComplementFamily {
  T pqp;  // [(1-p-q)^D]^2 p = p [(1-p-q)^D]^2
  T pq;   // [(1-p-q)^D]^4 pq
};

template <RingContext C>
ComplementFamily<typename C::Elem> derived_from_complement(
    const IdempotentPair<C>& pr) {
  using detail::ensure;
  using T = typename C::Elem;
  const auto& [ctx, p, q] = pr;
  const T one = ctx->one();
  const T dc = detail::drazin_of(*ctx, one - p - q, "1-p-q").d;
  const T c2 = dc * dc;
  ComplementFamily<T> f{c2 * p, c2 * c2 * (p * q)};
  const int bound = ctx->nil_bound();
  ensure(f.pqp == p * c2, "T3.6.1.symmetry");
  ensure(is_drazin_pair(p * q * p, f.pqp, bound), "T3.6.1.axioms");
  ensure(is_drazin_pair(p * q, f.pq, bound), "T3.6.2.axioms");
  return f;
}

// ---------------------------------------------------------------------------
// Identities for the product pq.
// ---------------------------------------------------------------------------

template <class T>
struct ProductIdentities {
  T pq_d;              // (pq)^D = (pqp)^D - p ((1-q)(1-p))^D
  bool drazin_is_qp;   // (pq)^D = qp
  bool commutes;       // pq = qp; equal to drazin_is_qp by the biconditional
};

template <RingContext C>
ProductIdentities<typename C::Elem> product_identities(
    const IdempotentPair<C>& pr) {
  using detail::ensure;
  using T = typename C::Elem;
  const auto& [ctx, p, q] = pr;
  const T one = ctx->one();
  const T dpqp = detail::drazin_of(*ctx, p * q * p, "pqp").d;
  const T dw = detail::drazin_of(*ctx, (one - q) * (one - p), "(1-q)(1-p)").d;

  ProductIdentities<T> r{dpqp - p * dw, false, false};
  const int bound = ctx->nil_bound();
  ensure(is_drazin_pair(p * q, r.pq_d, bound), "T3.7.2.axioms");
  r.drazin_is_qp = r.pq_d == q * p;
  r.commutes = p * q == q * p;
  ensure(r.drazin_is_qp == r.commutes, "T3.7.1");
  ensure(r.pq_d * (p * q) == dpqp * (p * q), "T3.7.3");
  return r;
}

// (p-q)^D from the products 1-pq and p+q-pq alone.
template <RingContext C>
typename C::Elem difference_from_products(const IdempotentPair<C>& pr) {
  using detail::ensure;
  using T = typename C::Elem;
  const auto& [ctx, p, q] = pr;
  const T one = ctx->one();
  const T d1 = detail::drazin_of(*ctx, one - p * q, "1-pq").d;
  const T d2 = detail::drazin_of(*ctx, p + q - p * q, "p+q-pq").d;
  T res = d1 * (p - p * q) + d2 * (p * q - q);
  ensure(is_drazin_pair(p - q, res, ctx->nil_bound()), "T3.8.axioms");
  return res;
}

// ---------------------------------------------------------------------------
// Projector criteria in a *-reducing ring.
// ---------------------------------------------------------------------------

template <class C>
concept InvolutiveRing = RingContext<C> && requires(const C& c,
                                                    const typename C::Elem& e) {
  { c.star(e) } -> std::same_as<typename C::Elem>;
  { c.star_reducing() } -> std::convertible_to<bool>;
};

// Matrix ring with transpose as the involution.  Transpose is *-reducing
// over the rationals (A^T A = 0 forces A = 0 via diagonal sums of squares)
// but not over prime fields, where isotropic columns exist.
template <FieldScalar S>
struct InvolutiveMatrixRing : MatrixRing<S> {
  using Elem = Matrix<S>;
  InvolutiveMatrixRing(int n, const Domain& dom) : MatrixRing<S>(n, dom) {}
  Elem star(const Elem& a) const { return transpose(a); }
  bool star_reducing() const {
    return this->domain().kind() == DomainKind::Rationals;
  }
};

struct ProjectorCriteria {
  bool difference_fixed;   // (p-q)^D = p-q
  bool commutes;           // pq = qp
  bool sum_fixed;          // (p+q)^D = p+q
  bool annihilates;        // pq = qp = 0
};

template <InvolutiveRing C>
ProjectorCriteria projector_criteria(const IdempotentPair<C>& pr) {
  using detail::ensure;
  const auto& [ctx, p, q] = pr;
  if (!ctx->star_reducing())
    throw NotStarReducing("the involution is not *-reducing here");
  const auto ch = p.domain().characteristic();
  if (ch == 2 || ch == 3)
    throw SixNotInvertible("6 vanishes in characteristic " + std::to_string(ch));
  if (!(ctx->star(p) == p))
    throw NotAProjector("p != p*: " + ctx->describe(p));
  if (!(ctx->star(q) == q))
    throw NotAProjector("q != q*: " + ctx->describe(q));

  const auto ddiff = detail::drazin_of(*ctx, p - q, "p-q").d;
  const auto dsum = detail::drazin_of(*ctx, p + q, "p+q").d;
  ProjectorCriteria r{ddiff == p - q, p * q == q * p, dsum == p + q,
                      is_zero_elem(p * q) && is_zero_elem(q * p)};
  ensure(r.difference_fixed == r.commutes, "T3.9.1");
  ensure(r.sum_fixed == r.annihilates, "T3.9.2");
  return r;
}

// ---------------------------------------------------------------------------
// The sum p+q from the difference, under the nilpotency condition.
// ---------------------------------------------------------------------------

template <class T>
struct SumViaDifference {
  T sum_d;         // (p-q)^D (p+q) (p-q)^D
  T diff_d;        // (p+q)^D (p-q) (p+q)^D; equals (p-q)^D
  T common_pi;     // (p-q)^pi = (p+q)^pi
  T diff_via_fgh;  // F + G - H; equals (p-q)^D
  T sum_via_fgh;   // (2G - H)(F + G - H); equals (p+q)^D
};

template <RingContext C>
SumViaDifference<typename C::Elem> sum_via_difference(
    const IdempotentPair<C>& pr) {
  using detail::ensure;
  using T = typename C::Elem;
  const auto& [ctx, p, q] = pr;
  const T one = ctx->one();
  const auto dres = detail::drazin_of(*ctx, p - q, "p-q");
  const T& dd = dres.d;
  const T pi = one - (p - q) * dd;
  const int bound = ctx->nil_bound();

  const T w = (p + q) * pi;
  if (!is_nilpotent_elem(w, bound))
    throw PreconditionViolated("(p+q)(p-q)^pi = " + ctx->describe(w) +
                               " is not nilpotent");

  const T F = p * dd, G = dd * p, H = dd * (p - q);
  SumViaDifference<T> r{dd * (p + q) * dd, ctx->zero(), pi, F + G - H,
                        ctx->zero()};
  r.diff_d = r.sum_d * (p - q) * r.sum_d;
  r.sum_via_fgh = (G + G - H) * (F + G - H);

  ensure(is_drazin_pair(p + q, r.sum_d, bound), "T3.10.1.axioms");
  ensure(r.diff_d == dd, "T3.10.2");
  ensure(one - (p + q) * r.sum_d == pi, "T3.10.3");
  ensure(r.diff_via_fgh == dd, "T3.10.4");
  ensure(r.sum_via_fgh == r.sum_d, "T3.10.5");
  return r;
}

// Whether the hypothesis of the sum formula holds for this pair.
template <RingContext C>
bool sum_condition_holds(const IdempotentPair<C>& pr) {
  const auto& [ctx, p, q] = pr;
  const auto dres = detail::drazin_of(*ctx, p - q, "p-q");
  const auto pi = ctx->one() - (p - q) * dres.d;
  return is_nilpotent_elem((p + q) * pi, ctx->nil_bound());
}

// ---------------------------------------------------------------------------
// The difference from corner elements p-qp and q-qp.
// ---------------------------------------------------------------------------

template <class T>
struct CornerResult {
  T diff_d;                  // (p-q)^2 ((p-qp)^D - (q-qp)^D)
  std::optional<T> residual; // p((p+q)^D - (p-q)^D)(p-q)^2, when defined
};

template <RingContext C>
CornerResult<typename C::Elem> difference_via_corner(
    const IdempotentPair<C>& pr) {
  using detail::ensure;
  using T = typename C::Elem;
  const auto& [ctx, p, q] = pr;
  const T d1 = detail::drazin_of(*ctx, p - q * p, "p-qp").d;
  const T d2 = detail::drazin_of(*ctx, q - q * p, "q-qp").d;
  const T sq = (p - q) * (p - q);
  const int bound = ctx->nil_bound();

  CornerResult<T> r{sq * (d1 - d2), std::nullopt};
  ensure(is_drazin_pair(p - q, r.diff_d, bound), "T3.11.1.axioms");

  // The residual identity borrows the nilpotency hypothesis of the sum
  // formula, which its derivation substitutes in.
  const T pi = ctx->one() - (p - q) * r.diff_d;
  if (is_nilpotent_elem((p + q) * pi, bound)) {
    const T sum_d = r.diff_d * (p + q) * r.diff_d;
    r.residual = p * (sum_d - r.diff_d) * sq;
    ensure(is_zero_elem(*r.residual), "T3.11.2");
  }
  return r;
}

// Residual of the corner identity with the precondition enforced.
template <RingContext C>
typename C::Elem corner_residual(const IdempotentPair<C>& pr) {
  auto r = difference_via_corner(pr);
  if (!r.residual)
    throw PreconditionViolated("(p+q)(p-q)^pi is not nilpotent");
  return *r.residual;
}

// ---------------------------------------------------------------------------
// Plain inverses when p-q is invertible.
// ---------------------------------------------------------------------------

template <class T>
struct InvertibleCase {
  T sum_inverse;      // (p-q)^{-1} (p+q) (p-q)^{-1}
  T diff_inverse;     // (p+q)^{-1} (p-q) (p+q)^{-1}
  T diff_via_fg;      // F + G - 1
  T sum_via_fg;       // (2G - 1)(F + G - 1)
};

template <RingContext C>
InvertibleCase<typename C::Elem> invertible_case(const IdempotentPair<C>& pr) {
  using detail::ensure;
  using T = typename C::Elem;
  const auto& [ctx, p, q] = pr;
  const T one = ctx->one();
  const auto dres = detail::drazin_of(*ctx, p - q, "p-q");
  if (dres.index != 0)
    throw PreconditionViolated("p-q = " + ctx->describe(p - q) +
                               " is not invertible");
  const T& dinv = dres.d;
  // p-q invertible forces p+q invertible.
  auto sinv = ctx->try_inverse(p + q);
  ensure(sinv.has_value(), "C3.12.sum-invertible");

  const T F = p * dinv, G = dinv * p;
  InvertibleCase<T> r{dinv * (p + q) * dinv, *sinv * (p - q) * *sinv,
                      F + G - one, (G + G - one) * (F + G - one)};
  ensure(r.sum_inverse == *sinv, "C3.12.1");
  ensure(r.diff_inverse == dinv, "C3.12.2");
  ensure(r.diff_via_fg == dinv, "C3.12.3");
  ensure(r.sum_via_fg == *sinv, "C3.12.4");
  return r;
}

// ---------------------------------------------------------------------------
// Equi-invertibility censuses.
// ---------------------------------------------------------------------------

template <class T>
struct SigmaMember {
  std::string label;
  T element;
  bool drazin_invertible;
};

template <class T>
struct SigmaFamily {
  std::array<SigmaMember<T>, 9> members;        // all-or-none
  std::array<SigmaMember<T>, 3> product_triple; // pq, 1-p-q, (1-p)(1-q)
  bool all_invertible;
  bool triple_invertible;
};

template <RingContext C>
SigmaFamily<typename C::Elem> sigma_census(const IdempotentPair<C>& pr) {
  using detail::ensure;
  using T = typename C::Elem;
  const auto& [ctx, p, q] = pr;
  const T one = ctx->one();
  auto probe = [&](std::string label, T e) {
    bool ok = ctx->drazin(e).has_value();
    return SigmaMember<T>{std::move(label), std::move(e), ok};
  };
  SigmaFamily<T> fam{
      {probe("p-q", p - q), probe("1-pq", one - p * q),
       probe("p-pq", p - p * q), probe("p-qp", p - q * p),
       probe("p-pqp", p - p * q * p), probe("1-qp", one - q * p),
       probe("q-pq", q - p * q), probe("q-qp", q - q * p),
       probe("p+q-pq", p + q - p * q)},
      {probe("pq", p * q), probe("1-p-q", one - p - q),
       probe("(1-p)(1-q)", (one - p) * (one - q))},
      false,
      false};
  fam.all_invertible = fam.members[0].drazin_invertible;
  for (const auto& m : fam.members)
    ensure(m.drazin_invertible == fam.all_invertible, "L2.1.all-or-none");
  fam.triple_invertible = fam.product_triple[0].drazin_invertible;
  for (const auto& m : fam.product_triple)
    ensure(m.drazin_invertible == fam.triple_invertible, "L2.2.all-or-none");
  return fam;
}

// ---------------------------------------------------------------------------
// Cline and Jacobson formulas (arbitrary elements, not just idempotents).
// ---------------------------------------------------------------------------

// (ba)^D = b ((ab)^D)^2 a.
template <RingContext C>
typename C::Elem cline(const C& ctx, const typename C::Elem& a,
                       const typename C::Elem& b) {
  using detail::ensure;
  const auto dab = detail::drazin_of(ctx, a * b, "ab").d;
  auto res = b * dab * dab * a;
  ensure(is_drazin_pair(b * a, res, ctx.nil_bound()), "L2.3.axioms");
  return res;
}

template <class T>
struct JacobsonResult {
  T d;      // (1-ba)^D
  int k;    // ind(1-ab) = ind(1-ba)
  T r_sum;  // sum_{i=0}^{k-1} (1-ab)^i
};

// (1-ba)^D = 1 + b ((1-ab)^D - (1-ab)^pi r) a.
template <RingContext C>
JacobsonResult<typename C::Elem> jacobson(const C& ctx,
                                          const typename C::Elem& a,
                                          const typename C::Elem& b) {
  using detail::ensure;
  using T = typename C::Elem;
  const T one = ctx.one();
  const T u = one - a * b;
  const auto du = detail::drazin_of(ctx, u, "1-ab");
  const int k = du.index;

  T r = ctx.zero();
  {
    T pw = one;
    for (int i = 0; i < k; ++i) {
      r = r + pw;
      pw = pw * u;
    }
  }
  const T pi = one - u * du.d;
  JacobsonResult<T> jr{one + b * (du.d - pi * r) * a, k, r};

  const T v = one - b * a;
  const int bound = ctx.nil_bound();
  ensure(is_drazin_pair(v, jr.d, bound), "L2.4.axioms");
  ensure(definitional_index(v, jr.d, bound + 1) == k, "L2.4.index");
  return jr;
}

}  // namespace drz
