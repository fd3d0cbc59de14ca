#pragma once

#include <map>
#include <string>
#include <vector>

#include "braceblocks/block.hpp"
#include "braceblocks/ybe.hpp"

namespace braceblocks {

// One expected-vs-computed line of a worked example. Informational lines
// carry no expectation and never fail.
struct ClaimLine {
  std::string label;
  std::string expected;  // empty for informational lines
  std::string computed;
  bool ok = true;
  bool informational = false;
};

struct ExampleReport {
  std::string id;
  std::string group_spec;
  std::string map_spec;
  std::vector<ClaimLine> claims;
  BraceBlock block;
  Census census;
  bool all_ok = true;
};

// Identifiers of the built-in worked examples, in display order:
//   d4      D_4 with r -> 1, s -> r^2*s
//   aff5    Aff(F_5) with g -> 1, alpha -> alpha^-1
//   dn-fpf  D_n (even n) with r -> r*s, s -> r*s   (fixed point free)
//   dn-fix  D_n with r -> 1, s -> s                (s stays fixed)
//   sn      S_n with t -> t, c -> 1                (odd permutations to t)
//   split   metacyclic h,k,b with s -> 1, t -> t   (projection onto <t>)
//   dndn    D_n x D_n (odd n), the generator swap seed
//   meta    metacyclic h,k,b with t -> t^(1-j), gcd(j, k) = 1
//   meta2n  same seed for k a power of two, default (13, 4, 5) with j = 2
std::vector<std::string> example_ids();

// Runs one worked example. Recognized parameter overrides (all optional):
// "n" for d4 / dn-* / sn / dndn, "h", "k", "b", "j" for split / meta /
// meta2n. Unknown ids or parameter sets leaving the supported range raise
// InvalidParameter. Every claim is recomputed from scratch; a false claim
// only clears `ok` flags, it does not throw.
ExampleReport run_named_example(const std::string& id,
                                const std::map<std::string, int>& params = {});

}  // namespace braceblocks
