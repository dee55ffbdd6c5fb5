#include "drz/counterexample.hpp"

#include "drz/idempotents.hpp"
#include "drz/rings.hpp"

namespace drz {

namespace {

void add_check(CounterexampleCase& c, std::string name, std::string expected,
               std::string computed) {
  bool pass = expected == computed;
  c.checks.push_back(CounterexampleCheck{std::move(name), std::move(expected),
                                         std::move(computed), pass});
}

// M_2(Z_7) with p = I and q = diag(1,0): both p+q and p-q are Drazin
// invertible, yet (p+q)(p-q)^pi = diag(2,0) is not nilpotent (its powers
// cycle through nonzero diagonals mod 7), so the nilpotency hypothesis of
// the sum formula is not necessary for p+q to be invertible.
CounterexampleCase matrix_case() {
  CounterexampleCase c;
  c.id = "M2-Z7";
  const Domain gf7 = Domain::prime_field(7);
  const MatrixRing<Fp> ring(2, gf7);
  auto diag = [&](std::uint64_t a, std::uint64_t b) {
    Matrix<Fp> m(2, 2, gf7);
    m(0, 0) = Fp(a, 7);
    m(1, 1) = Fp(b, 7);
    return m;
  };
  const Matrix<Fp> p = ring.one();
  const Matrix<Fp> q = diag(1, 0);

  const auto sum = p + q;
  const auto diff = p - q;
  add_check(c, "p_plus_q", ring.describe(diag(2, 1)), ring.describe(sum));
  add_check(c, "p_minus_q", ring.describe(diag(0, 1)), ring.describe(diff));

  const auto dsum = drazin(sum);
  const auto ddiff = drazin(diff);
  add_check(c, "p_plus_q_drazin", ring.describe(diag(4, 1)),
            ring.describe(dsum.d));
  add_check(c, "p_minus_q_drazin", ring.describe(diag(0, 1)),
            ring.describe(ddiff.d));
  add_check(c, "p_minus_q_spectral_idempotent", ring.describe(diag(1, 0)),
            ring.describe(ddiff.pi));

  const auto w = sum * ddiff.pi;
  add_check(c, "sum_times_pi", ring.describe(diag(2, 0)), ring.describe(w));
  add_check(c, "sum_times_pi_nilpotent", "false",
            is_nilpotent_elem(w, ring.nil_bound()) ? "true" : "false");
  // 2^6 = 1 mod 7, so the powers of diag(2,0) cycle without reaching zero.
  add_check(c, "sum_times_pi_power6", ring.describe(diag(1, 0)),
            ring.describe(mat_pow(w, 6)));

  const auto pair = make_idempotent_pair(ring, p, q);
  bool precondition_rejected = false;
  try {
    sum_via_difference(pair);
  } catch (const PreconditionViolated&) {
    precondition_rejected = true;
  }
  add_check(c, "sum_formula_precondition_rejected", "true",
            precondition_rejected ? "true" : "false");

  c.pass = true;
  for (const auto& k : c.checks) c.pass = c.pass && k.pass;
  return c;
}

// Z with p = q = 1: p-q = 0 is Drazin invertible but p+q = 2 is not, so
// equi-invertibility of sum and difference fails in a general ring.
CounterexampleCase integer_case() {
  CounterexampleCase c;
  c.id = "integer-Z";
  const Int diff(0), sum(2);

  const auto ddiff = integer_drazin(diff);
  add_check(c, "p_minus_q_drazin", "0",
            ddiff ? ddiff->d.str() : "NotDrazinInvertible");
  add_check(c, "p_minus_q_index", "1",
            ddiff ? std::to_string(ddiff->index) : "-");

  const auto dsum = integer_drazin(sum);
  add_check(c, "p_plus_q_drazin", "NotDrazinInvertible",
            dsum ? dsum->d.str() : "NotDrazinInvertible");

  // The whole difference family is Drazin invertible even though p+q is
  // not: p+q does not belong to it.
  const IntegerRing ring;
  const auto pair = make_idempotent_pair(ring, Int(1), Int(1));
  auto fam = sigma_census(pair);
  add_check(c, "sigma_family_all_invertible", "true",
            fam.all_invertible ? "true" : "false");

  c.pass = true;
  for (const auto& k : c.checks) c.pass = c.pass && k.pass;
  return c;
}

}  // namespace

CounterexampleReport run_counterexamples() {
  CounterexampleReport r;
  r.cases.push_back(matrix_case());
  r.cases.push_back(integer_case());
  r.pass = r.cases[0].pass && r.cases[1].pass;
  return r;
}

}  // namespace drz
