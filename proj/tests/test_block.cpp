#include "doctest.h"

#include "braceblocks/block.hpp"
#include "braceblocks/errors.hpp"
#include "braceblocks/group.hpp"
#include "braceblocks/spec.hpp"

using namespace braceblocks;

namespace {

AbelianMap seed(const GroupPtr& g, const std::string& images) {
  return AbelianMap::from_generator_images(g, parse_generator_images(*g, images));
}

}  // namespace

TEST_CASE("twisted products start from the base table") {
  auto d4 = make_dihedral(4);
  PsiFamily fam(seed(d4, "r->1; s->r^2*s"));
  CHECK(twisted_product_table(fam, 0) == d4->table());
  CHECK(twisted_product_table(fam, 1) != d4->table());
  CircleOp op1 = build_circle_op(fam, 1);
  CHECK(op1.n == 1);
  CHECK(op1.abelian);
  CHECK(op1.table.is_group());
}

TEST_CASE("block for the order-eight dihedral seed") {
  auto d4 = make_dihedral(4);
  BraceBlock blk = compute_block(seed(d4, "r->1; s->r^2*s"));
  CHECK(blk.window() == 2);
  CHECK(blk.preperiod == 1);
  CHECK(blk.cycle == 1);
  CHECK(blk.stabilized_abelian == 1);
  CHECK(blk.ops[0].table == d4->table());
  CHECK_FALSE(blk.ops[0].abelian);
  CHECK(blk.ops[1].abelian);
  // every ordered pair of operations satisfies the compatibility relation
  for (const auto& row : blk.brace_matrix)
    for (char ok : row) CHECK(ok == 1);

  PsiFamily fam(blk.psi);
  CHECK(circle_recursion_holds(fam, blk.ops[0], blk.ops[1]));
  CHECK_THROWS_AS(circle_recursion_holds(fam, blk.ops[1], blk.ops[0]), InvalidParameter);
  CHECK(ops_equal(fam, blk.ops[0], blk.ops[0]));
  CHECK_FALSE(ops_equal(fam, blk.ops[0], blk.ops[1]));
}

TEST_CASE("central images freeze the family immediately") {
  auto d4 = make_dihedral(4);
  BraceBlock blk = compute_block(seed(d4, "r->1; s->r^2"));
  CHECK(blk.window() == 1);
  CHECK(blk.preperiod == 0);
  CHECK(blk.cycle == 1);
  CHECK_FALSE(blk.ops[0].abelian);
  CHECK(blk.stabilized_abelian == -1);
}

TEST_CASE("the identity map on an abelian group changes nothing") {
  auto c6 = make_cyclic(6);
  BraceBlock blk = compute_block(AbelianMap::from_images(c6, identity_map(c6).images()));
  CHECK(blk.window() == 1);
  CHECK(blk.stabilized_abelian == 0);
}

TEST_CASE("block for the affine seed stabilizes after two steps") {
  auto a5 = make_affine(5);
  BraceBlock blk = compute_block(seed(a5, "g->1; alpha->alpha^-1"));
  CHECK(blk.window() == 3);
  CHECK(blk.preperiod == 2);
  CHECK(blk.cycle == 1);
  CHECK_FALSE(blk.ops[1].abelian);
  CHECK(blk.ops[2].abelian);
  CHECK(blk.stabilized_abelian == 2);
}

TEST_CASE("a fixed point free seed cycles with no abelian member") {
  auto meta = make_metacyclic(7, 3, 2);
  BraceBlock blk = compute_block(seed(meta, "s->1; t->t^2"));
  CHECK(blk.window() == 2);
  CHECK(blk.preperiod == 0);
  CHECK(blk.cycle == 2);
  CHECK(blk.stabilized_abelian == -1);
  CHECK(blk.ops[1].table != meta->table());
  // o_2 equals the base product again
  PsiFamily fam(blk.psi);
  CHECK(twisted_product_table(fam, 2) == meta->table());
}

TEST_CASE("scan limit is enforced") {
  auto meta = make_metacyclic(7, 3, 2);
  BlockOptions opts;
  opts.max_n = 1;  // the seed needs to look ahead to index 2 to see the repeat
  CHECK_THROWS_AS(compute_block(seed(meta, "s->1; t->t^2"), opts), VerificationError);
}

TEST_CASE("compatibility relation is not automatic") {
  auto d3 = make_dihedral(3);
  auto c6 = make_cyclic(6);
  CHECK(brace_relation_holds(d3->table(), d3->table()));
  CHECK_FALSE(brace_relation_holds(d3->table(), c6->table()));
  CHECK_FALSE(brace_relation_holds(c6->table(), d3->table()));
}

TEST_CASE("joint isomorphism of operation pairs") {
  auto d4 = make_dihedral(4);
  BraceBlock blk = compute_block(seed(d4, "r->1; s->r^2*s"));
  const CayleyTable& dot = blk.ops[0].table;
  const CayleyTable& circ = blk.ops[1].table;
  // a pair is isomorphic to itself and to nothing with the roles swapped
  CHECK(brace_isomorphism(dot, circ, dot, circ).has_value());
  CHECK_FALSE(brace_isomorphism(dot, circ, circ, dot).has_value());
  auto w = brace_isomorphism(dot, circ, dot, circ);
  REQUIRE(w.has_value());
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      CHECK((*w)[dot.op(x, y)] == dot.op((*w)[x], (*w)[y]));
      CHECK((*w)[circ.op(x, y)] == circ.op((*w)[x], (*w)[y]));
    }
}

TEST_CASE("the twist map is a homomorphism onto the previous level") {
  auto d4 = make_dihedral(4);
  BraceBlock blk = compute_block(seed(d4, "r->1; s->r^2*s"));
  PsiFamily fam(blk.psi);
  PhiHomReport rep = check_phi_homomorphism(fam, blk.ops[1], blk.ops[0]);
  CHECK(rep.homomorphism);
  CHECK_FALSE(rep.bijective);  // this seed has a fixed point

  auto meta = make_metacyclic(7, 3, 2);
  BraceBlock mblk = compute_block(seed(meta, "s->1; t->t^2"));
  PsiFamily mfam(mblk.psi);
  PhiHomReport mrep = check_phi_homomorphism(mfam, mblk.ops[1], mblk.ops[0]);
  CHECK(mrep.homomorphism);
  CHECK(mrep.bijective);  // fixed point free seeds give automorphisms
}
