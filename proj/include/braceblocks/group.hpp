#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braceblocks/cayley.hpp"

namespace braceblocks {

struct Generator {
  std::string name;
  Elem element;
};

/// A finite group given by its full Cayley table, with display names per
/// element and a distinguished, named generating set. Identity is element 0.
/// All invariants (group axioms, generators generate, unique names) are
/// verified at construction; associativity is checked exhaustively up to
/// order 200 and trusted from the constructor algebra above that.
class FiniteGroup {
 public:
  FiniteGroup(CayleyTable table, std::vector<std::string> names,
              std::vector<Generator> generators);

  int order() const { return table_.order(); }
  const CayleyTable& table() const { return table_; }
  Elem mul(Elem a, Elem b) const { return table_.op(a, b); }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem power(Elem a, long long e) const { return table_.power(a, e); }

  const std::string& name_of(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<Elem> generator_named(const std::string& name) const;

  bool is_abelian() const { return table_.is_abelian(); }
  std::vector<Elem> center() const { return table_.center(); }

 private:
  CayleyTable table_;
  std::vector<std::string> names_;
  std::vector<Generator> generators_;
  std::vector<Elem> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// C_n, generator "g". n >= 1.
GroupPtr make_cyclic(int n);

/// D_n of order 2n: r^n = s^2 = (rs)^2 = 1. Generators "r", "s". n >= 3.
GroupPtr make_dihedral(int n);

/// S_n on {1..n}, generators "t" = (1 2) and "c" = (1 2 ... n). 2 <= n <= 6.
GroupPtr make_symmetric(int n);

/// Split metacyclic C_h x| C_k: s^h = t^k = 1, t s t^-1 = s^b, realized on
/// pairs (i, j) |-> s^i t^j. Requires h >= 3, k >= 1, k | phi(h), gcd(b,h)=1
/// and ord_h(b) | k (so the presentation does not collapse and |G| = hk).
GroupPtr make_metacyclic(int h, int k, long long b);

/// Aff(F_p) = C_p x| Aut(C_p) for odd prime p, with the action of the
/// distinguished generator "alpha" given by the smallest primitive root.
GroupPtr make_affine(int p);

/// Direct product; generator names get "1." / "2." prefixes.
GroupPtr make_product(const GroupPtr& a, const GroupPtr& b);

/// The subgroup on the given (closed) element set, reindexed with its own
/// Cayley table. Names are inherited; generators are found greedily.
GroupPtr make_subgroup(const FiniteGroup& g, const std::vector<Elem>& members);

/// Group built from a raw table: names default to "1", "e1", "e2", ... and
/// generators to a greedy generating sequence unless provided.
GroupPtr make_from_table(CayleyTable table, std::vector<std::string> names = {},
                         std::vector<Generator> generators = {});

/// Isomorphism witness a -> b, or empty. Deterministic.
std::optional<std::vector<Elem>> group_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

/// Cayley-table text format: order line, then one row per line, then
/// optional "index name" lines.
void save_cayley_table(const FiniteGroup& g, std::ostream& out);
GroupPtr load_cayley_table(std::istream& in);

}  // namespace braceblocks
