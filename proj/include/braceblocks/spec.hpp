#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braceblocks/group.hpp"

namespace braceblocks {

// Builds a group from a textual description. Accepted forms:
//   cyclic:n  dihedral:n  symmetric:n  metacyclic:h,k,b  affine:p
//   product(desc,desc)   (nesting allowed)
// Malformed text raises ParseError; well-formed text with bad parameters
// raises InvalidParameter.
GroupPtr parse_group_spec(const std::string& text);

// Evaluates a word in the group's generators, e.g. "r^2*s" or "1".
// A word is '*'-separated factors; each factor is a name with an optional
// integer exponent ("name^-3"). Names are generator names, "1" for the
// identity, or a full element display name. Whitespace is ignored; the
// empty word denotes the identity.
Elem parse_word(const FiniteGroup& g, const std::string& word);

// Parses a generator-image list such as "r->r; s->r^2*s" (';'-separated).
// Every generator of g must be assigned exactly once.
std::vector<std::pair<std::string, Elem>> parse_generator_images(const FiniteGroup& g,
                                                                 const std::string& text);

}  // namespace braceblocks
