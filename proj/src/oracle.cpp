#include "drz/oracle.hpp"

#include <chrono>

#include "drz/idempotents.hpp"
#include "drz/rings.hpp"

namespace drz {

namespace {

// Every identity whose preconditions hold for this pair, each formula
// cross-checked against the engine.  Returns the violated equation label,
// if any.
std::optional<std::string> check_pair_exhaustive(
    const MatrixRing<Fp>& ring, const Matrix<Fp>& p, const Matrix<Fp>& q,
    OracleReport& report) {
  using detail::ensure;
  try {
    const auto pair = make_idempotent_pair(ring, p, q);
    const auto one = ring.one();

    auto fam = sigma_census(pair);
    ensure(fam.all_invertible && fam.triple_invertible, "L2.1.matrix-all-true");

    fgh(pair);
    check_corollary_3_3(pair);
    check_theorem_3_4(pair);

    auto df = derived_from_difference(pair);
    ensure(df.one_minus_pqp == drazin(one - p * q * p).d, "T3.5.1.engine");
    ensure(df.p_minus_pqp == drazin(p - p * q * p).d, "T3.5.2.engine");
    ensure(df.p_minus_pq == drazin(p - p * q).d, "T3.5.3.engine");
    ensure(df.p_minus_qp == drazin(p - q * p).d, "T3.5.4.engine");
    ensure(df.one_minus_pq == drazin(one - p * q).d, "T3.5.5.engine");

    auto cf = derived_from_complement(pair);
    ensure(cf.pqp == drazin(p * q * p).d, "T3.6.1.engine");
    ensure(cf.pq == drazin(p * q).d, "T3.6.2.engine");

    auto pi = product_identities(pair);
    ensure(pi.pq_d == drazin(p * q).d, "T3.7.2.engine");

    ensure(difference_from_products(pair) == drazin(p - q).d, "T3.8.engine");

    auto corner = difference_via_corner(pair);
    ensure(corner.diff_d == drazin(p - q).d, "T3.11.1.engine");

    // Cline and the Jacobson formula hold for arbitrary elements; feed them
    // the pair as well.
    ensure(cline(ring, p, q) == drazin(q * p).d, "L2.3.engine");
    auto jr = jacobson(ring, p, q);
    ensure(jr.d == drazin(one - q * p).d, "L2.4.engine");

    if (sum_condition_holds(pair)) {
      ++report.sum_condition_holds;
      auto sv = sum_via_difference(pair);
      ensure(sv.sum_d == drazin(p + q).d, "T3.10.1.engine");
    } else {
      ++report.sum_condition_fails;
      bool threw = false;
      try {
        sum_via_difference(pair);
      } catch (const PreconditionViolated&) {
        threw = true;
      }
      ensure(threw, "T3.10.precondition-filter");
    }

    if (drazin_index(p - q) == 0) {
      ++report.invertible_difference_pairs;
      invertible_case(pair);
    }
    return std::nullopt;
  } catch (const IdentityViolation& e) {
    return e.equation;
  } catch (const Error& e) {
    return std::string("error: ") + e.what();
  }
}

}  // namespace

OracleReport run_oracle(const Domain& dom, int dim, std::uint64_t cap) {
  if (dom.kind() != DomainKind::PrimeField)
    throw UnsupportedDomain("oracle sweeps run over GF(p), got " + dom.tag());
  const auto t0 = std::chrono::steady_clock::now();

  OracleReport report;
  report.domain = dom;
  report.dim = dim;

  const EnumerableMatrixRing ring(dim, dom, cap);
  report.matrices = ring.size();

  // Engine vs exhaustive search, every matrix in the ring.
  for (std::uint64_t i = 0; i < ring.size(); ++i) {
    const Matrix<Fp> a = ring.element(i);
    const auto engine = drazin(a);
    const auto oracle = brute_force_drazin(a, ring);
    if (!oracle) {
      ++report.mismatches;
      report.failures.push_back("no Drazin inverse found for matrix #" +
                                std::to_string(i));
      continue;
    }
    if (!(oracle->d == engine.d) || oracle->index != engine.index) {
      ++report.mismatches;
      report.failures.push_back("engine/oracle disagree on matrix #" +
                                std::to_string(i));
    }
  }

  // Idempotent-pair sweep.
  std::vector<Matrix<Fp>> idempotents;
  for (std::uint64_t i = 0; i < ring.size(); ++i) {
    Matrix<Fp> m = ring.element(i);
    if (is_idempotent(m)) idempotents.push_back(std::move(m));
  }
  report.idempotents = idempotents.size();
  for (std::size_t i = 0; i < idempotents.size(); ++i)
    for (std::size_t j = 0; j < idempotents.size(); ++j) {
      ++report.idempotent_pairs;
      auto eq = check_pair_exhaustive(ring, idempotents[i], idempotents[j],
                                      report);
      if (eq)
        report.failures.push_back("pair (" + std::to_string(i) + "," +
                                  std::to_string(j) + "): " + *eq);
    }

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

}  // namespace drz
