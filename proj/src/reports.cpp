#include "drz/reports.hpp"

namespace drz {

Json to_json(const VerifyReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"seed", f.seed},
                            {"trial", f.trial},
                            {"equation", f.equation},
                            {"elements", Json::parse(f.elements)}});
  return Json{{"theorem", r.theorem},   {"domain", r.domain.tag()},
              {"dim", r.dim},           {"trials", r.trials},
              {"failures", failures},   {"pass", r.pass()},
              {"elapsed_ms", r.elapsed_ms}};
}

Json campaign_json(const CampaignOptions& opts,
                   const std::vector<VerifyReport>& reports) {
  Json theorems = Json::array();
  for (TheoremId id : opts.theorems.empty() ? all_theorems() : opts.theorems)
    theorems.push_back(theorem_name(id));
  Json domains = Json::array();
  for (const Domain& d :
       opts.domains.empty() ? default_campaign_domains() : opts.domains)
    domains.push_back(d.tag());
  Json dims = Json::array();
  for (int d : opts.dims.empty() ? default_campaign_dims() : opts.dims)
    dims.push_back(d);

  Json entries = Json::array();
  std::int64_t total_trials = 0, total_failures = 0;
  for (const auto& r : reports) {
    entries.push_back(to_json(r));
    total_trials += r.trials;
    total_failures += static_cast<std::int64_t>(r.failures.size());
  }
  return Json{{"command", "verify"},
              {"theorems", theorems},
              {"domains", domains},
              {"dims", dims},
              {"trials", opts.trials},
              {"seed", opts.seed},
              {"reports", entries},
              {"summary", Json{{"entries", entries.size()},
                               {"total_trials", total_trials},
                               {"total_failures", total_failures},
                               {"pass", total_failures == 0}}}};
}

Json to_json(const OracleReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(f);
  return Json{{"command", "oracle"},
              {"domain", r.domain.tag()},
              {"dim", r.dim},
              {"matrices", r.matrices},
              {"mismatches", r.mismatches},
              {"idempotents", r.idempotents},
              {"idempotent_pairs", r.idempotent_pairs},
              {"sum_condition", Json{{"holds", r.sum_condition_holds},
                                     {"fails", r.sum_condition_fails}}},
              {"invertible_difference_pairs", r.invertible_difference_pairs},
              {"failures", failures},
              {"pass", r.pass()},
              {"elapsed_ms", r.elapsed_ms}};
}

Json to_json(const CounterexampleReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json checks = Json::array();
    for (const auto& k : c.checks)
      checks.push_back(Json{{"name", k.name},
                            {"expected", k.expected},
                            {"computed", k.computed},
                            {"pass", k.pass}});
    cases.push_back(Json{{"id", c.id}, {"checks", checks}, {"pass", c.pass}});
  }
  return Json{{"command", "counterexample"}, {"cases", cases}, {"pass", r.pass}};
}

}  // namespace drz
