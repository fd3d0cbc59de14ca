#pragma once

#include <string>
#include <vector>

#include "braceblocks/gmap.hpp"

namespace braceblocks {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample on failure, context note otherwise
};

struct VerifyOptions {
  int psi_n_limit = 12;   // compare the two family constructions up to this index
  int max_n = 0;          // repetition scan limit; 0 means four times the order
  bool map_level_only = false;  // stop after the checks on the map itself
};

// Re-derives every claimed property directly from definitions, one result
// per property. Independent of the construction paths in block/ybe: the
// checks here recompute tables and images from scratch.
std::vector<CheckResult> verify_properties(const AbelianMap& psi,
                                           const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace braceblocks
