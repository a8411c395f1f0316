// verify.hpp - property suites: the full acceptance battery and a narrowed
// per-system check list.
#pragma once

#include <string>
#include <vector>

#include "bruhatkit/weyl.hpp"

namespace bruhatkit {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The release gate: exhaustive sweeps at desk scale.  Every entry must pass.
std::vector<CheckResult> run_acceptance();

// The same properties narrowed to one system.  Sweeps quadratic in the number
// of double cosets are skipped above 400 elements and say so in the detail.
std::vector<CheckResult> run_system_checks(CartanType type, int rank,
                                           std::size_t cap = WeylGroup::kDefaultCap);

}  // namespace bruhatkit
