#pragma once

// Exhaustive engine-versus-oracle runs over small matrix rings M_n(GF(q)):
// every matrix is Drazin-inverted both by the Fitting engine and by brute
// force over the whole ring, and every idempotent pair is pushed through
// each identity whose preconditions hold.

#include <cstdint>
#include <string>
#include <vector>

#include "scalars.hpp"

namespace drz {

struct OracleReport {
  Domain domain = Domain::rationals();
  int dim = 0;
  std::uint64_t matrices = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t idempotents = 0;
  std::uint64_t idempotent_pairs = 0;
  std::uint64_t sum_condition_holds = 0;  // pairs passing the T3.10 filter
  std::uint64_t sum_condition_fails = 0;
  std::uint64_t invertible_difference_pairs = 0;  // pairs reaching C3.12
  std::vector<std::string> failures;
  std::int64_t elapsed_ms = 0;
  bool pass() const { return mismatches == 0 && failures.empty(); }
};

// Throws ContextTooLarge when q^(n^2) exceeds the cap.
OracleReport run_oracle(const Domain& dom, int dim,
                        std::uint64_t cap = 100000);

}  // namespace drz
