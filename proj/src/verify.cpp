#include "drz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "drz/generators.hpp"
#include "drz/idempotents.hpp"
#include "drz/reports.hpp"

namespace drz {

namespace {

struct TheoremMeta {
  TheoremId id;
  const char* name;
};

constexpr TheoremMeta kTheorems[] = {
    {TheoremId::L2_1, "L2.1"},   {TheoremId::L2_2, "L2.2"},
    {TheoremId::L2_3, "L2.3"},   {TheoremId::L2_4, "L2.4"},
    {TheoremId::T3_2, "T3.2"},   {TheoremId::C3_3, "C3.3"},
    {TheoremId::T3_4, "T3.4"},   {TheoremId::T3_5, "T3.5"},
    {TheoremId::T3_6, "T3.6"},   {TheoremId::T3_7, "T3.7"},
    {TheoremId::T3_8, "T3.8"},   {TheoremId::T3_9, "T3.9"},
    {TheoremId::T3_10, "T3.10"}, {TheoremId::T3_11, "T3.11"},
    {TheoremId::C3_12, "C3.12"},
};

}  // namespace

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& m : kTheorems) v.push_back(m.id);
    return v;
  }();
  return ids;
}

std::string theorem_name(TheoremId id) {
  for (const auto& m : kTheorems)
    if (m.id == id) return m.name;
  return "?";
}

std::optional<TheoremId> parse_theorem(const std::string& name) {
  for (const auto& m : kTheorems)
    if (name == m.name) return m.id;
  return std::nullopt;
}

bool theorem_supports(TheoremId id, const Domain& dom) {
  if (!dom.is_field()) return false;
  if (id == TheoremId::T3_9) return dom.kind() == DomainKind::Rationals;
  return true;
}

std::vector<Domain> default_campaign_domains() {
  return {Domain::prime_field(2), Domain::prime_field(3),
          Domain::prime_field(7), Domain::prime_field(13),
          Domain::rationals()};
}

std::vector<int> default_campaign_dims() { return {1, 2, 3, 4, 5}; }

namespace {

using detail::ensure;

// Idempotent pair with p - q invertible; unlike the nilpotent-condition
// generator this never falls back to p = q, so ind(p-q) = 0 is guaranteed.
template <FieldScalar S>
std::pair<Matrix<S>, Matrix<S>> invertible_difference_pair(const GenSpec& spec) {
  SplitMix64 g(spec.seed);
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    GenSpec sp = spec, sq = spec;
    sp.r = static_cast<int>(g.below(spec.n + 1));
    sq.r = spec.n - sp.r;
    sp.seed = g.next();
    sq.seed = g.next();
    Matrix<S> p = random_idempotent<S>(sp);
    Matrix<S> q = random_idempotent<S>(sq);
    if (is_invertible(p - q)) return {p, q};
  }
  throw RetryLimitExceeded("no idempotent pair with p - q invertible found");
}

template <FieldScalar S>
class TheoremTrials {
 public:
  TheoremTrials(TheoremId id, const Domain& dom, int dim, std::uint64_t seed)
      : id_(id), dom_(dom), dim_(dim), seed_(seed), ring_(dim, dom),
        inv_ring_(dim, dom) {}

  std::optional<TrialFailure> run(int trial) const {
    const std::uint64_t stream = derive_stream(seed_, trial);
    switch (id_) {
      case TheoremId::L2_3:
      case TheoremId::L2_4:
        return run_two_elements(trial, stream);
      default:
        return run_pair(trial, stream);
    }
  }

 private:
  using M = Matrix<S>;

  GenSpec base_spec(std::uint64_t stream) const {
    return GenSpec{dom_, dim_, 0, stream, 5};
  }

  std::string two_json(const char* ka, const M& a, const char* kb,
                       const M& b) const {
    return Json{{ka, matrix_json(a)}, {kb, matrix_json(b)}}.dump();
  }

  std::pair<M, M> generate_pair(int trial, std::uint64_t stream) const {
    GenSpec spec = base_spec(stream);
    switch (id_) {
      case TheoremId::T3_7:
        return trial % 2 == 0
                   ? special_pairs<S>(PairKind::Commuting, spec)
                   : special_pairs<S>(PairKind::Unrestricted, spec);
      case TheoremId::T3_9: {
        if constexpr (std::is_same_v<S, Rational>) {
          SplitMix64 g(stream);
          GenSpec ps = spec;
          ps.r = static_cast<int>(g.below(dim_ + 1));
          ps.seed = g.next();
          switch (trial % 4) {
            case 0: return special_pairs<S>(PairKind::AnnihilatingProjectors, ps);
            case 2: return commuting_projector_pair(ps);
            default: return random_projector_pair(ps);
          }
        }
        throw UnsupportedDomain("T3.9 requires the rationals");
      }
      case TheoremId::T3_10: {
        SplitMix64 g(stream);
        GenSpec ps = spec;
        ps.r = static_cast<int>(g.below(dim_ + 1));
        ps.seed = g.next();
        return special_pairs<S>(PairKind::NilpotentCondition, ps);
      }
      case TheoremId::T3_11: {
        SplitMix64 g(stream);
        GenSpec ps = spec;
        ps.r = static_cast<int>(g.below(dim_ + 1));
        ps.seed = g.next();
        return trial % 2 == 0
                   ? special_pairs<S>(PairKind::Unrestricted, ps)
                   : special_pairs<S>(PairKind::NilpotentCondition, ps);
      }
      case TheoremId::C3_12: {
        SplitMix64 g(stream);
        GenSpec ps = spec;
        ps.seed = g.next();
        return invertible_difference_pair<S>(ps);
      }
      default:
        return special_pairs<S>(PairKind::Unrestricted, spec);
    }
  }

  std::optional<TrialFailure> run_pair(int trial, std::uint64_t stream) const {
    std::optional<std::pair<M, M>> gen;
    try {
      gen = generate_pair(trial, stream);
      check_pair(trial, gen->first, gen->second);
      return std::nullopt;
    } catch (const IdentityViolation& e) {
      return failure(trial, gen, e.equation);
    } catch (const Error& e) {
      return failure(trial, gen, std::string("error: ") + e.what());
    }
  }

  TrialFailure failure(int trial, const std::optional<std::pair<M, M>>& gen,
                       const std::string& eq) const {
    std::string elems = gen ? two_json("p", gen->first, "q", gen->second)
                            : std::string("{}");
    return TrialFailure{seed_, trial, std::move(elems), eq};
  }

  void check_pair(int trial, const M& p, const M& q) const {
    const auto pair = make_idempotent_pair(ring_, p, q);
    switch (id_) {
      case TheoremId::L2_1: {
        auto fam = sigma_census(pair);  // asserts all-or-none
        ensure(fam.all_invertible, "L2.1.matrix-all-true");
        break;
      }
      case TheoremId::L2_2: {
        auto fam = sigma_census(pair);
        ensure(fam.triple_invertible, "L2.2.matrix-all-true");
        break;
      }
      case TheoremId::T3_2:
        fgh(pair);
        break;
      case TheoremId::C3_3:
        check_corollary_3_3(pair);
        break;
      case TheoremId::T3_4:
        check_theorem_3_4(pair);
        break;
      case TheoremId::T3_5: {
        auto f = derived_from_difference(pair);
        const M one = ring_.one();
        ensure(f.one_minus_pqp == drazin(one - p * q * p).d, "T3.5.1.engine");
        ensure(f.p_minus_pqp == drazin(p - p * q * p).d, "T3.5.2.engine");
        ensure(f.p_minus_pq == drazin(p - p * q).d, "T3.5.3.engine");
        ensure(f.p_minus_qp == drazin(p - q * p).d, "T3.5.4.engine");
        ensure(f.one_minus_pq == drazin(one - p * q).d, "T3.5.5.engine");
        break;
      }
      case TheoremId::T3_6: {
        auto f = derived_from_complement(pair);
        ensure(f.pqp == drazin(p * q * p).d, "T3.6.1.engine");
        ensure(f.pq == drazin(p * q).d, "T3.6.2.engine");
        break;
      }
      case TheoremId::T3_7: {
        auto r = product_identities(pair);
        ensure(r.pq_d == drazin(p * q).d, "T3.7.2.engine");
        if (trial % 2 == 0) {
          ensure(r.commutes, "T3.7.generator-commuting");
          ensure(r.drazin_is_qp, "T3.7.1.positive");
        }
        break;
      }
      case TheoremId::T3_8: {
        M res = difference_from_products(pair);
        ensure(res == drazin(p - q).d, "T3.8.engine");
        break;
      }
      case TheoremId::T3_9: {
        const auto ipair = make_idempotent_pair(inv_ring_, p, q);
        auto crit = projector_criteria(ipair);
        if (trial % 4 == 0) {
          ensure(crit.annihilates, "T3.9.generator-annihilating");
          ensure(crit.sum_fixed, "T3.9.2.positive");
          ensure(crit.difference_fixed, "T3.9.1.positive");
        } else if (trial % 4 == 2) {
          ensure(crit.commutes, "T3.9.generator-commuting");
          ensure(crit.difference_fixed, "T3.9.1.positive");
        }
        break;
      }
      case TheoremId::T3_10: {
        auto r = sum_via_difference(pair);
        ensure(r.sum_d == drazin(p + q).d, "T3.10.1.engine");
        break;
      }
      case TheoremId::T3_11: {
        auto r = difference_via_corner(pair);
        ensure(r.diff_d == drazin(p - q).d, "T3.11.1.engine");
        if (trial % 2 == 1)
          ensure(r.residual.has_value(), "T3.11.generator-nilpotent-condition");
        break;
      }
      case TheoremId::C3_12:
        invertible_case(pair);  // computes and cross-checks all four forms
        break;
      default:
        throw InternalCheckFailure("pair runner got a two-element theorem");
    }
  }

  std::optional<TrialFailure> run_two_elements(int trial,
                                               std::uint64_t stream) const {
    SplitMix64 g(stream);
    std::optional<std::pair<M, M>> gen;
    try {
      M a = detail::random_matrix<S>(g, dom_, dim_, dim_, 5);
      M b = detail::random_matrix<S>(g, dom_, dim_, dim_, 5);
      const bool commuting = id_ == TheoremId::L2_3 && trial % 2 == 1;
      if (commuting) {
        // b = c0 + c1 a + c2 a^2 commutes with a by construction.
        const M one = ring_.one();
        b = detail::random_entry<S>(g, dom_, 2) * one +
            detail::random_entry<S>(g, dom_, 2) * a +
            detail::random_entry<S>(g, dom_, 2) * (a * a);
      }
      gen = std::make_pair(a, b);
      if (id_ == TheoremId::L2_3) {
        M y = cline(ring_, a, b);
        ensure(y == drazin(b * a).d, "L2.3.engine");
        if (commuting) {
          const M dab = drazin(a * b).d;
          const M da = drazin(a).d, db = drazin(b).d;
          ensure(dab == db * da, "L2.3.commuting-1");
          ensure(dab == da * db, "L2.3.commuting-2");
        }
      } else {
        auto jr = jacobson(ring_, a, b);
        ensure(jr.d == drazin(ring_.one() - b * a).d, "L2.4.engine");
        ensure(jr.k == drazin_index(ring_.one() - a * b), "L2.4.index-engine");
      }
      return std::nullopt;
    } catch (const IdentityViolation& e) {
      return two_failure(trial, gen, e.equation);
    } catch (const Error& e) {
      return two_failure(trial, gen, std::string("error: ") + e.what());
    }
  }

  TrialFailure two_failure(int trial, const std::optional<std::pair<M, M>>& gen,
                           const std::string& eq) const {
    std::string elems = gen ? two_json("a", gen->first, "b", gen->second)
                            : std::string("{}");
    return TrialFailure{seed_, trial, std::move(elems), eq};
  }

  TheoremId id_;
  Domain dom_;
  int dim_;
  std::uint64_t seed_;
  MatrixRing<S> ring_;
  InvolutiveMatrixRing<S> inv_ring_;
};

template <FieldScalar S>
VerifyReport run_theorem_impl(TheoremId id, const Domain& dom, int dim,
                              int trials, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const TheoremTrials<S> runner(id, dom, dim, seed);

  unsigned jobs = std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  jobs = std::min<unsigned>({jobs, 16u, static_cast<unsigned>(trials) + 1});

  std::vector<std::vector<TrialFailure>> found(jobs);
  std::atomic<int> next{0};
  auto worker = [&](unsigned w) {
    for (int t; (t = next.fetch_add(1)) < trials;) {
      auto f = runner.run(t);
      if (f) found[w].push_back(std::move(*f));
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& th : threads) th.join();
  }

  VerifyReport report{theorem_name(id), dom, dim, trials, {}, 0};
  for (auto& fs : found)
    for (auto& f : fs) report.failures.push_back(std::move(f));
  std::sort(report.failures.begin(), report.failures.end(),
            [](const TrialFailure& a, const TrialFailure& b) {
              return a.trial < b.trial;
            });
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

}  // namespace

VerifyReport run_theorem(TheoremId id, const Domain& dom, int dim, int trials,
                         std::uint64_t seed) {
  if (!dom.is_field())
    throw UnsupportedDomain("verification campaigns run over field domains, got " +
                            dom.tag());
  if (!theorem_supports(id, dom))
    throw UnsupportedDomain(theorem_name(id) + " requires rationals");
  if (dim < 1 || dim > 64)
    throw UnsupportedDomain("dimension must be in [1, 64]");
  if (trials < 0) throw Error("negative trial count");
  switch (dom.kind()) {
    case DomainKind::Rationals:
      return run_theorem_impl<Rational>(id, dom, dim, trials, seed);
    case DomainKind::PrimeField:
      return run_theorem_impl<Fp>(id, dom, dim, trials, seed);
    default:
      throw UnsupportedDomain("unexpected domain kind");
  }
}

std::vector<VerifyReport> run_campaign(const CampaignOptions& opts) {
  const auto theorems = opts.theorems.empty() ? all_theorems() : opts.theorems;
  const auto domains =
      opts.domains.empty() ? default_campaign_domains() : opts.domains;
  const auto dims = opts.dims.empty() ? default_campaign_dims() : opts.dims;

  std::vector<VerifyReport> reports;
  for (TheoremId id : theorems)
    for (const Domain& dom : domains) {
      if (!theorem_supports(id, dom)) continue;  // T3.9 outside Q
      for (int dim : dims)
        reports.push_back(run_theorem(id, dom, dim, opts.trials, opts.seed));
    }
  return reports;
}

}  // namespace drz
