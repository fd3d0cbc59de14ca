#include "doctest.h"

#include "braceblocks/errors.hpp"
#include "braceblocks/spec.hpp"

using namespace braceblocks;

TEST_CASE("group descriptions") {
  CHECK(parse_group_spec("cyclic:6")->order() == 6);
  CHECK(parse_group_spec("dihedral:5")->order() == 10);
  CHECK(parse_group_spec("symmetric:4")->order() == 24);
  CHECK(parse_group_spec("metacyclic:7,3,2")->order() == 21);
  CHECK(parse_group_spec("affine:5")->order() == 20);
  CHECK(parse_group_spec("product(dihedral:3,cyclic:2)")->order() == 12);
  CHECK(parse_group_spec("product(product(cyclic:2,cyclic:2),cyclic:2)")->order() == 8);
  CHECK(parse_group_spec(" cyclic : 6 ")->order() == 6);
}

TEST_CASE("group description errors") {
  CHECK_THROWS_AS(parse_group_spec(""), ParseError);
  CHECK_THROWS_AS(parse_group_spec("nosuch:3"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("cyclic"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("cyclic:x"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("cyclic:3,4"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("product(cyclic:2"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("product(cyclic:2,cyclic:2,cyclic:2)"), ParseError);
  // well-formed text, unusable parameters
  CHECK_THROWS_AS(parse_group_spec("cyclic:0"), InvalidParameter);
  CHECK_THROWS_AS(parse_group_spec("dihedral:2"), InvalidParameter);
  CHECK_THROWS_AS(parse_group_spec("affine:9"), InvalidParameter);
}

TEST_CASE("words in the generators") {
  auto d4 = parse_group_spec("dihedral:4");
  CHECK(parse_word(*d4, "r^2*s") == 6);
  CHECK(parse_word(*d4, "r ^ 2 * s") == 6);
  CHECK(parse_word(*d4, "") == 0);
  CHECK(parse_word(*d4, "1") == 0);
  CHECK(parse_word(*d4, "r^-1") == 3);
  CHECK(parse_word(*d4, "s*r*s") == 3);
  CHECK(parse_word(*d4, "r^0") == 0);
  // full display names work as factors too
  CHECK(parse_word(*d4, "r^3*s * r^3*s") == 0);

  CHECK_THROWS_AS(parse_word(*d4, "q"), ParseError);
  CHECK_THROWS_AS(parse_word(*d4, "r^"), ParseError);
  CHECK_THROWS_AS(parse_word(*d4, "r*"), ParseError);
  CHECK_THROWS_AS(parse_word(*d4, "r r"), ParseError);
}

TEST_CASE("generator image lists") {
  auto d4 = parse_group_spec("dihedral:4");
  auto imgs = parse_generator_images(*d4, "r->r; s->r^2*s");
  REQUIRE(imgs.size() == 2);
  CHECK(imgs[0].first == "r");
  CHECK(imgs[0].second == 1);
  CHECK(imgs[1].first == "s");
  CHECK(imgs[1].second == 6);

  CHECK_THROWS_AS(parse_generator_images(*d4, "r->r"), ParseError);          // s missing
  CHECK_THROWS_AS(parse_generator_images(*d4, "r->r; q->s"), ParseError);    // unknown name
  CHECK_THROWS_AS(parse_generator_images(*d4, "r->r; r->1; s->s"), ParseError);
  CHECK_THROWS_AS(parse_generator_images(*d4, "r=r; s=s"), ParseError);
}
