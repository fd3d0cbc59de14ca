#pragma once

#include <optional>
#include <vector>

#include "braceblocks/gmap.hpp"

namespace braceblocks {

// The n-th twisted operation  g o_n h = g psi_n(g^-1) h psi_n(g)
// together with the map that produced it. o_0 is the original product.
struct CircleOp {
  int n = 0;
  CayleyTable table;
  GMap psi;  // psi_n, the map the operation is built from
  bool abelian = false;
};

// The bare table of o_n, no checks attached.
CayleyTable twisted_product_table(PsiFamily& family, int n);

// Builds (G, o_n) and checks it is a group sharing the identity of (G, .)
// whose inverses are g -> psi_n(g) g^-1 psi_n(g^-1). A failure of any of
// those facts signals a defect in the library, hence VerificationError.
CircleOp build_circle_op(PsiFamily& family, int n);

// x o (y . z) == (x o y) . x^- . (x o z) for all triples, where ^- inverts
// in the first ("dot") operation.
bool brace_relation_holds(const CayleyTable& dot, const CayleyTable& circ);

// higher.n == lower.n + 1 and  g o_{n+1} h == ((g psi(g^-1)) o_n h) psi(g).
bool circle_recursion_holds(const PsiFamily& family, const CircleOp& lower,
                            const CircleOp& higher);

// The tables of o_m and o_n coincide exactly when every value of
// g -> psi_m(g) psi_n(g)^-1 is central in (G, .). Checks both sides agree
// (VerificationError otherwise) and returns the shared verdict.
bool ops_equal(PsiFamily& family, const CircleOp& a, const CircleOp& b);

// A single bijection carrying dot_a to dot_b and circ_a to circ_b.
std::optional<std::vector<Elem>> brace_isomorphism(const CayleyTable& dot_a,
                                                   const CayleyTable& circ_a,
                                                   const CayleyTable& dot_b,
                                                   const CayleyTable& circ_b);

struct PhiHomReport {
  bool homomorphism = false;
  bool bijective = false;
};

// phi = (1 - psi) viewed as a map (G, o_n) -> (G, o_{n-1}).
PhiHomReport check_phi_homomorphism(PsiFamily& family, const CircleOp& from,
                                    const CircleOp& to);

struct BlockOptions {
  // Scan limit for the first repeated product table; 0 means four times
  // the group order.
  int max_n = 0;
};

// The family of operations o_0, o_1, ... for one map, cut at the first
// table that repeats an earlier one, so ops are pairwise distinct as
// tables. Every operation is verified on construction, the brace relation
// is checked for every ordered pair, and an abelian operation can only be
// the final distinct one (the family freezes there).
struct BraceBlock {
  GroupPtr group;
  AbelianMap psi;
  std::vector<CircleOp> ops;  // indices 0 .. preperiod + cycle - 1
  int preperiod = 0;          // least t with o_{t+cycle} = o_t as tables
  int cycle = 1;              // least period of the table sequence
  int stabilized_abelian = -1;  // index of the abelian operation, if any; -1 if none
  std::vector<std::vector<char>> brace_matrix;  // [m][n] -> relation verified

  int window() const { return static_cast<int>(ops.size()); }
};

BraceBlock compute_block(const AbelianMap& psi, const BlockOptions& opts = {});

}  // namespace braceblocks
