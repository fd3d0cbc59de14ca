#pragma once

#include <iosfwd>

#include "json.hpp"

#include "braceblocks/block.hpp"
#include "braceblocks/verify.hpp"
#include "braceblocks/ybe.hpp"

namespace braceblocks {

nlohmann::json group_json(const FiniteGroup& g);
nlohmann::json map_json(const AbelianMap& psi);
nlohmann::json checks_json(const std::vector<CheckResult>& results);
nlohmann::json block_json(const BraceBlock& block);
nlohmann::json census_json(const BraceBlock& block, const Census& census);

// One solution as text: a header line "order m n R|R'" followed by one
// line "x y f g" per argument pair, in row-major order.
void dump_solution_text(const YBESolution& r, int m, int n, bool opposite, std::ostream& out);

// Every census solution in order, separated by blank lines.
void dump_census_text(const BraceBlock& block, const Census& census, std::ostream& out);

}  // namespace braceblocks
