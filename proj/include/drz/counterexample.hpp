#pragma once

// Two fixed cases separating "p-q Drazin invertible" from "p+q Drazin
// invertible" and showing the sum-formula nilpotency hypothesis is not
// necessary.  Expected values are hard-coded fixtures, not recomputed.

#include <string>
#include <vector>

namespace drz {

struct CounterexampleCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CounterexampleCase {
  std::string id;
  std::vector<CounterexampleCheck> checks;
  bool pass = false;
};

struct CounterexampleReport {
  std::vector<CounterexampleCase> cases;
  bool pass = false;
};

CounterexampleReport run_counterexamples();

}  // namespace drz
