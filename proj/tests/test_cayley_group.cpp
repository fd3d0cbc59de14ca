#include <algorithm>
#include <sstream>

#include "doctest.h"

#include "braceblocks/errors.hpp"
#include "braceblocks/group.hpp"

using namespace braceblocks;

TEST_CASE("cyclic groups") {
  auto c6 = make_cyclic(6);
  CHECK(c6->order() == 6);
  CHECK(c6->is_abelian());
  CHECK(c6->name_of(0) == "1");
  CHECK(c6->name_of(2) == "g^2");
  CHECK(c6->table().element_order(1) == 6);
  CHECK(c6->table().element_order(2) == 3);
  CHECK(c6->power(1, -1) == 5);
  CHECK(c6->power(1, 601) == 1);
  CHECK(make_cyclic(1)->order() == 1);
  CHECK_THROWS_AS(make_cyclic(0), InvalidParameter);
}

TEST_CASE("dihedral groups") {
  auto d3 = make_dihedral(3);
  CHECK(d3->order() == 6);
  CHECK_FALSE(d3->is_abelian());
  // the center of D_n is trivial for odd n
  CHECK(d3->center() == std::vector<Elem>{0});

  auto d4 = make_dihedral(4);
  Elem r = *d4->generator_named("r");
  Elem s = *d4->generator_named("s");
  CHECK(d4->mul(s, s) == 0);
  CHECK(d4->mul(d4->mul(r, s), d4->mul(r, s)) == 0);          // (rs)^2 = 1
  CHECK(d4->mul(s, r) == d4->mul(d4->power(r, 3), s));        // sr = r^3 s
  CHECK(d4->center() == std::vector<Elem>{0, d4->power(r, 2)});
  CHECK(d4->name_of(6) == "r^2*s");

  CHECK_THROWS_AS(make_dihedral(2), InvalidParameter);
}

TEST_CASE("conjugacy classes and derived subgroup") {
  auto d4 = make_dihedral(4);
  auto cls = d4->table().conjugacy_classes();
  CHECK(*std::max_element(cls.begin(), cls.end()) + 1 == 5);
  CHECK(cls[0] == 0);
  // commutators of D_4 form the rotation subgroup of order 2
  CHECK(derived_subgroup(d4->table()) == std::vector<Elem>{0, 2});

  auto s4 = make_symmetric(4);
  CHECK(derived_subgroup(s4->table()).size() == 12);
}

TEST_CASE("symmetric groups") {
  auto s3 = make_symmetric(3);
  CHECK(s3->order() == 6);
  CHECK(group_isomorphic(*s3, *make_dihedral(3)).has_value());
  CHECK(make_symmetric(4)->order() == 24);
  CHECK_THROWS_AS(make_symmetric(7), InvalidParameter);
  CHECK_THROWS_AS(make_symmetric(1), InvalidParameter);
}

TEST_CASE("metacyclic groups") {
  auto g = make_metacyclic(7, 3, 2);
  CHECK(g->order() == 21);
  CHECK_FALSE(g->is_abelian());
  Elem s = *g->generator_named("s");
  Elem t = *g->generator_named("t");
  CHECK(g->mul(g->mul(t, s), g->inv(t)) == g->power(s, 2));   // t s t^-1 = s^2

  // 25 has order 2 mod 13, so C_13 x| C_4 with b = 25 has center <t^2>
  auto m = make_metacyclic(13, 4, 25);
  auto z = m->center();
  REQUIRE(z.size() == 2);
  CHECK(m->name_of(z[1]) == "t^2");

  // 2 has order 12 mod 13, which does not divide k = 4
  CHECK_THROWS_AS(make_metacyclic(13, 4, 2), InvalidParameter);
  CHECK_THROWS_AS(make_metacyclic(13, 4, 13), InvalidParameter);  // not a unit
  // b = 1 collapses to the direct product, which is still a valid group
  CHECK(make_metacyclic(5, 2, 1)->is_abelian());
}

TEST_CASE("affine groups") {
  auto a5 = make_affine(5);
  CHECK(a5->order() == 20);
  Elem g = *a5->generator_named("g");
  Elem alpha = *a5->generator_named("alpha");
  CHECK(a5->table().element_order(g) == 5);
  CHECK(a5->table().element_order(alpha) == 4);
  CHECK(a5->mul(a5->mul(alpha, g), a5->inv(alpha)) == a5->power(g, 2));

  CHECK(group_isomorphic(*make_affine(3), *make_dihedral(3)).has_value());
  CHECK_THROWS_AS(make_affine(4), InvalidParameter);
  CHECK_THROWS_AS(make_affine(2), InvalidParameter);
}

TEST_CASE("direct products") {
  auto p = make_product(make_cyclic(2), make_cyclic(3));
  CHECK(p->order() == 6);
  CHECK(group_isomorphic(*p, *make_cyclic(6)).has_value());
  CHECK(p->generator_named("1.g").has_value());
  CHECK(p->generator_named("2.g").has_value());

  // a trivial factor changes nothing up to isomorphism
  auto q = make_product(make_cyclic(1), make_dihedral(3));
  CHECK(group_isomorphic(*q, *make_dihedral(3)).has_value());

  CHECK_FALSE(group_isomorphic(*make_product(make_cyclic(2), make_cyclic(2)),
                               *make_cyclic(4))
                  .has_value());
}

TEST_CASE("isomorphism witnesses") {
  // 2 and 4 generate the same order-3 subgroup of units mod 7, so the two
  // twists give isomorphic groups
  auto f72 = make_metacyclic(7, 3, 2);
  auto f74 = make_metacyclic(7, 3, 4);
  auto w = group_isomorphic(*f72, *f74);
  REQUIRE(w.has_value());
  const auto& wit = *w;
  for (Elem x = 0; x < f72->order(); ++x)
    for (Elem y = 0; y < f72->order(); ++y)
      CHECK(wit[f72->mul(x, y)] == f74->mul(wit[x], wit[y]));

  CHECK_FALSE(group_isomorphic(*make_dihedral(4), *make_cyclic(8)).has_value());
  CHECK_FALSE(group_isomorphic(*make_dihedral(6), *make_dihedral(4)).has_value());
}

TEST_CASE("table axioms catch broken tables") {
  CayleyTable bad(2, {0, 0, 0, 0});
  CHECK(bad.identity_at_zero() == false);
  CHECK_FALSE(bad.is_latin_square());
  CHECK_FALSE(bad.is_group());
  CayleyTable c2(2, {0, 1, 1, 0});
  CHECK(c2.is_group());
}

TEST_CASE("subgroups") {
  auto d4 = make_dihedral(4);
  auto rot = subgroup_closure(d4->table(), {1});
  CHECK(rot == std::vector<Elem>{0, 1, 2, 3});
  auto sub = make_subgroup(*d4, rot);
  CHECK(sub->order() == 4);
  CHECK(group_isomorphic(*sub, *make_cyclic(4)).has_value());
  // names carry over from the parent group
  CHECK(sub->name_of(0) == "1");
}

TEST_CASE("cayley table text round trip") {
  auto g = make_metacyclic(7, 3, 2);
  std::stringstream buf;
  save_cayley_table(*g, buf);
  auto back = load_cayley_table(buf);
  CHECK(back->table() == g->table());
  CHECK(back->names() == g->names());
}

TEST_CASE("group built from a bare table gets default names") {
  auto d3 = make_dihedral(3);
  auto g = make_from_table(d3->table());
  CHECK(g->order() == 6);
  CHECK(g->name_of(0) == "1");
  CHECK_FALSE(g->generators().empty());
}
