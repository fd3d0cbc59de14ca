#pragma once

#include <optional>
#include <vector>

namespace braceblocks {

/// Index of a group element. Element 0 is always the identity.
using Elem = int;

/// Square multiplication table over {0, ..., order-1}, stored row-major:
/// op(a, b) = row a, column b.
class CayleyTable {
 public:
  CayleyTable() = default;
  CayleyTable(int order, std::vector<Elem> data);

  int order() const { return order_; }
  Elem op(Elem a, Elem b) const { return data_[static_cast<size_t>(a) * order_ + b]; }
  const Elem* row(Elem a) const { return data_.data() + static_cast<size_t>(a) * order_; }
  const std::vector<Elem>& data() const { return data_; }

  bool identity_at_zero() const;
  bool is_latin_square() const;
  bool is_associative() const;
  /// All group axioms, exhaustive. Quadratic except associativity (cubic).
  bool is_group() const;

  /// Two-sided inverse of a; requires is_group().
  Elem inverse(Elem a) const;
  std::vector<Elem> all_inverses() const;

  /// a^e with e reduced modulo the order of a (negative e allowed).
  Elem power(Elem a, long long e) const;
  int element_order(Elem a) const;

  bool is_abelian() const;
  bool commute(Elem a, Elem b) const { return op(a, b) == op(b, a); }
  std::vector<Elem> center() const;
  bool is_central(Elem a) const;
  int centralizer_size(Elem a) const;

  /// conjugacy_classes()[i] = id of the class containing i; ids are dense,
  /// assigned in order of least class member.
  std::vector<int> conjugacy_classes() const;

  bool operator==(const CayleyTable& other) const = default;

 private:
  int order_ = 0;
  std::vector<Elem> data_;
};

/// Closure of seed under the table's operation (table must be a group).
std::vector<Elem> subgroup_closure(const CayleyTable& t, const std::vector<Elem>& seed);

/// A short generating sequence found greedily (lowest-index first).
std::vector<Elem> greedy_generators(const CayleyTable& t);

/// Smallest subgroup containing all commutators [a,b] = a^-1 b^-1 a b.
std::vector<Elem> derived_subgroup(const CayleyTable& t);

/// Witness bijection w with w[a op1 b] = w[a] op2 w[b], or empty optional.
/// Deterministic: returns the lexicographically least witness found by
/// backtracking over images of a greedy generating sequence.
std::optional<std::vector<Elem>> table_isomorphism(const CayleyTable& a, const CayleyTable& b);

/// Simultaneous isomorphism for parallel lists of tables over the same sets:
/// one bijection transporting as[i] to bs[i] for every i.
std::optional<std::vector<Elem>> joint_table_isomorphism(
    const std::vector<const CayleyTable*>& as, const std::vector<const CayleyTable*>& bs);

}  // namespace braceblocks
