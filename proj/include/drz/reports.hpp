#pragma once

// JSON emission for the CLI.  Key order is fixed (insertion order of
// ordered_json), matrices are serialized as arrays of scalar strings in the
// matrix text syntax, and besides elapsed_ms every field is a deterministic
// function of the invocation.

#include "json.hpp"

#include "counterexample.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "verify.hpp"

namespace drz {

using Json = nlohmann::ordered_json;

template <Scalar S>
Json matrix_json(const Matrix<S>& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(m(i, j).str());
  return Json{{"domain", m.domain().tag()},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(entries)}};
}

Json to_json(const VerifyReport& r);
Json campaign_json(const CampaignOptions& opts,
                   const std::vector<VerifyReport>& reports);
Json to_json(const OracleReport& r);
Json to_json(const CounterexampleReport& r);

}  // namespace drz
