#pragma once

// Per-identity fuzz campaigns.  Every trial is seeded by mix(seed, trial
// index), so a campaign is reproducible element-for-element regardless of
// how its trials are scheduled across threads.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scalars.hpp"

namespace drz {

enum class TheoremId {
  L2_1, L2_2, L2_3, L2_4,
  T3_2, C3_3, T3_4, T3_5, T3_6, T3_7, T3_8, T3_9, T3_10, T3_11, C3_12,
};

const std::vector<TheoremId>& all_theorems();
std::string theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(const std::string& name);

// T3.9 needs a *-reducing involution, which transpose provides only over
// the rationals; everything else runs over any supported field.
bool theorem_supports(TheoremId id, const Domain& dom);

struct TrialFailure {
  std::uint64_t seed;    // campaign seed
  int trial;             // trial index within the campaign
  std::string elements;  // JSON serialization of the generated inputs
  std::string equation;  // violated equation id
};

struct VerifyReport {
  std::string theorem;
  Domain domain;
  int dim;
  int trials;
  std::vector<TrialFailure> failures;
  std::int64_t elapsed_ms = 0;
  bool pass() const { return failures.empty(); }
};

VerifyReport run_theorem(TheoremId id, const Domain& dom, int dim, int trials,
                         std::uint64_t seed);

struct CampaignOptions {
  std::vector<TheoremId> theorems;  // empty = all
  std::vector<Domain> domains;      // empty = GF(2), GF(3), GF(7), GF(13), Q
  std::vector<int> dims;            // empty = 1..5
  int trials = 500;
  std::uint64_t seed = 0;
};

std::vector<Domain> default_campaign_domains();
std::vector<int> default_campaign_dims();

// Expands the options grid; skips unsupported theorem/domain combinations
// (an explicitly requested unsupported single combination throws instead).
std::vector<VerifyReport> run_campaign(const CampaignOptions& opts);

}  // namespace drz
