#pragma once

#include <vector>

#include "braceblocks/block.hpp"

namespace braceblocks {

// A map R(x, y) = (f(x, y), g(x, y)) on pairs of group elements, stored as
// two row-major tables.
struct YBESolution {
  int order = 0;
  std::vector<Elem> f, g;

  Elem fval(Elem x, Elem y) const { return f[static_cast<size_t>(x) * order + y]; }
  Elem gval(Elem x, Elem y) const { return g[static_cast<size_t>(x) * order + y]; }
  bool operator==(const YBESolution& other) const = default;
};

// R(x,y) = (x^- . (x o y),  bar(x^- . (x o y)) o x o y) where . is dot,
// o is circ, ^- inverts in dot and bar inverts in circ. Built from the two
// tables alone.
YBESolution solution_from_pair(const CayleyTable& dot, const CayleyTable& circ);

// The companion map R'(x,y) = ((x o y) . x^-,  bar((x o y) . x^-) o x o y).
YBESolution opposite_from_pair(const CayleyTable& dot, const CayleyTable& circ);

// The same two maps through closed formulas in the base product and the
// maps psi_m, psi_n. Each is checked entry-for-entry against its
// table-built counterpart; a mismatch raises VerificationError naming the
// first differing argument pair.
YBESolution explicit_solution(PsiFamily& family, int m, int n);
YBESolution explicit_opposite(PsiFamily& family, int m, int n);

bool braid_relation_holds(const YBESolution& r);      // R12 R23 R12 == R23 R12 R23
bool is_nondegenerate(const YBESolution& r);          // all f(x,-) and g(-,y) bijective
bool is_involutive(const YBESolution& r);             // R(R(x,y)) == (x,y)
bool mutually_inverse(const YBESolution& r, const YBESolution& rp);

// One solution of the block census: the pair (m, n), which of R / R' it
// is, where its tables first appeared, and the isomorphism class of the
// underlying pair of operations.
struct CensusEntry {
  int m = 0, n = 0;
  bool opposite = false;
  int solution = 0;     // index into Census::solutions
  int dup_of = -1;      // earlier entry with identical tables, or -1
  int brace_class = 0;  // joint-isomorphism class of (o_m, o_n)
};

struct Census {
  std::vector<YBESolution> solutions;  // ordered (m, n, variant), no dedup
  std::vector<CensusEntry> entries;
  int raw_distinct = 0;      // distinct (f, g) table pairs
  int brace_classes = 0;     // classes of (o_m, o_n) under a shared bijection
  int convention_count = 0;  // per class: 2 if the first operation is nonabelian, else 1
  bool cross_class_collision = false;  // equal tables from non-isomorphic pairs
};

// Walks every ordered pair of operations in the block and both variants.
// Every solution is checked for the braid relation, non-degeneracy and
// inverseness of the pair (VerificationError on failure).
Census build_census(const BraceBlock& block);

}  // namespace braceblocks
