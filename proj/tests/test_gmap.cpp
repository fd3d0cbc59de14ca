#include <algorithm>

#include "doctest.h"

#include "braceblocks/errors.hpp"
#include "braceblocks/gmap.hpp"
#include "braceblocks/group.hpp"
#include "braceblocks/spec.hpp"

using namespace braceblocks;

namespace {

AbelianMap seed(const GroupPtr& g, const std::string& images) {
  return AbelianMap::from_generator_images(g, parse_generator_images(*g, images));
}

}  // namespace

TEST_CASE("near-ring operations on self-maps") {
  auto d4 = make_dihedral(4);
  GMap id = identity_map(d4);
  GMap zero = zero_map(d4);

  // id + id squares every element
  GMap dbl = map_add(id, id);
  for (Elem g = 0; g < d4->order(); ++g) CHECK(dbl(g) == d4->mul(g, g));
  CHECK(dbl(1) == 2);  // r + r = r^2

  CHECK(map_add(id, map_neg(id)) == zero);
  CHECK(map_compose(id, dbl) == dbl);
  CHECK(map_compose(dbl, zero) == zero);
  CHECK(one_minus(zero) == id);
  CHECK(one_minus(id) == zero);
}

TEST_CASE("only the right distributive law holds") {
  auto d4 = make_dihedral(4);
  GMap id = identity_map(d4);
  GMap zero = zero_map(d4);
  GMap psi = seed(d4, "r->1; s->r^2*s").map();
  std::vector<GMap> pool = {zero, id, psi};

  for (const GMap& a : pool)
    for (const GMap& b : pool)
      for (const GMap& c : pool)
        CHECK(map_compose(map_add(a, b), c) == map_add(map_compose(a, c), map_compose(b, c)));

  // the left law fails: (1 - psi) is not an endomorphism, and composing it
  // with a sum does not split
  GMap phi = one_minus(psi);
  CHECK_FALSE(is_endomorphism(phi));
  CHECK(map_compose(phi, map_add(id, id)) != map_add(map_compose(phi, id), map_compose(phi, id)));
}

TEST_CASE("map predicates") {
  auto d4 = make_dihedral(4);
  GMap id = identity_map(d4);
  CHECK(is_endomorphism(id));
  CHECK_FALSE(has_abelian_image(id));  // the image is all of D_4

  auto psi = seed(d4, "r->1; s->r^2*s");
  CHECK(is_endomorphism(psi.map()));
  CHECK(has_abelian_image(psi.map()));
  CHECK(is_constant_on_conjugacy_classes(psi.map()));
  CHECK_FALSE(psi.fixed_point_free());
  CHECK(first_fixed_point(psi.map()) == 6);  // r^2*s keeps its place
  CHECK(psi.map().image_set() == std::vector<Elem>{0, 6});

  auto fpf = seed(d4, "r->r*s; s->r*s");
  CHECK(fpf.fixed_point_free());
  CHECK(fpf.map().image_size() == 2);

  auto meta = make_metacyclic(7, 3, 2);
  CHECK(seed(meta, "s->1; t->t^2").fixed_point_free());
  CHECK_FALSE(seed(meta, "s->1; t->t").fixed_point_free());
}

TEST_CASE("abelian map factories validate") {
  auto d4 = make_dihedral(4);
  // the identity is an endomorphism but its image is not abelian
  CHECK_THROWS_AS(AbelianMap::from_images(d4, identity_map(d4).images()), InvalidParameter);
  // s -> r cannot extend to an endomorphism: s^2 = 1 but r^2 != 1
  CHECK_THROWS_AS(seed(d4, "r->r; s->r"), InvalidParameter);
  CHECK_NOTHROW(AbelianMap::from_images(d4, zero_map(d4).images()));

  auto c6 = make_cyclic(6);
  CHECK_NOTHROW(AbelianMap::from_images(c6, identity_map(c6).images()));
}

TEST_CASE("enumeration of abelian-image endomorphisms") {
  auto c6 = make_cyclic(6);
  auto maps6 = enumerate_abelian_maps(c6);
  CHECK(maps6.size() == 6);  // every endomorphism of C_6
  CHECK(maps6[0].map() == zero_map(c6));

  auto d4 = make_dihedral(4);
  auto maps = enumerate_abelian_maps(d4);
  CHECK(maps.size() == 28);
  CHECK(maps[0].map() == zero_map(d4));
  auto want = seed(d4, "r->1; s->r^2*s");
  CHECK(std::count(maps.begin(), maps.end(), want) == 1);
  // ordered by the tuple of generator images
  for (size_t i = 1; i < maps.size(); ++i) {
    std::vector<Elem> prev, cur;
    for (const auto& gen : d4->generators()) {
      prev.push_back(maps[i - 1](gen.element));
      cur.push_back(maps[i](gen.element));
    }
    CHECK(prev < cur);
  }

  // on S_n every abelian-image endomorphism kills A_n, so the nonzero maps
  // send odd permutations to a single element of order 2
  auto s5 = make_symmetric(5);
  auto maps5 = enumerate_abelian_maps(s5);
  int order2 = 0;
  for (Elem g = 0; g < s5->order(); ++g)
    if (s5->table().element_order(g) == 2) ++order2;
  CHECK(maps5.size() == static_cast<size_t>(order2) + 1);
  auto alt = derived_subgroup(s5->table());
  for (const auto& m : maps5)
    for (Elem a : alt) CHECK(m(a) == 0);
}

TEST_CASE("the derived family psi_n") {
  auto d4 = make_dihedral(4);
  auto psi = seed(d4, "r->1; s->r^2*s");

  CHECK(psi_n_recursive(psi, 0) == zero_map(d4));
  CHECK(psi_n_recursive(psi, 1) == psi.map());
  CHECK(psi_n_binomial(psi, 1) == psi.map());
  CHECK_THROWS_AS(psi_n_binomial(psi, 0), InvalidParameter);
  // this seed satisfies psi_2 = psi, so the family is constant from 1 on
  CHECK(psi_n_recursive(psi, 2) == psi.map());
  CHECK(psi_n_recursive(psi, 7) == psi.map());

  auto a5 = make_affine(5);
  auto rho = seed(a5, "g->1; alpha->alpha^-1");
  for (int n = 1; n <= 8; ++n) CHECK(psi_n_recursive(rho, n) == psi_n_binomial(rho, n));

  // with psi(t) = t^(1-j) the family cycles through t -> t^(1-j^n); at
  // j = 2, k = 3 index two gives the zero map and index three returns
  auto meta = make_metacyclic(7, 3, 2);
  auto tau = seed(meta, "s->1; t->t^2");
  CHECK(psi_n_recursive(tau, 2) == zero_map(meta));
  CHECK(psi_n_recursive(tau, 3) == tau.map());
}

TEST_CASE("family memoization agrees with the direct constructions") {
  auto a5 = make_affine(5);
  auto rho = seed(a5, "g->1; alpha->alpha^-1");
  PsiFamily fam(rho);
  CHECK(fam.psi_n(0) == zero_map(a5));
  CHECK(fam.psi_n(3) == psi_n_recursive(rho, 3));
  CHECK(fam.psi_n(3) == psi_n_binomial(rho, 3));
  CHECK(fam.u_pow(0) == identity_map(a5));
  CHECK(fam.u_pow(2) == map_compose(one_minus(rho.map()), one_minus(rho.map())));
}
