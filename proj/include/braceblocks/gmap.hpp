#pragma once

#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braceblocks/group.hpp"

namespace braceblocks {

// A self-map of a finite group, stored by its value at every element.
// Maps over the same group form a near-ring: addition is the pointwise
// group product, multiplication is composition. Only the right
// distributive law (a+b)c = ac+bc holds in general.
class GMap {
 public:
  GMap() = default;
  GMap(GroupPtr group, std::vector<Elem> images);

  const GroupPtr& group() const { return group_; }
  Elem operator()(Elem g) const { return images_[g]; }
  const std::vector<Elem>& images() const { return images_; }
  std::vector<Elem> image_set() const;  // sorted, duplicates removed
  int image_size() const;

  bool operator==(const GMap& other) const { return images_ == other.images_; }

 private:
  GroupPtr group_;
  std::vector<Elem> images_;
};

GMap identity_map(const GroupPtr& g);
GMap zero_map(const GroupPtr& g);  // everything to the identity element

// (a + b)(g) = a(g) b(g)
GMap map_add(const GMap& a, const GMap& b);
// (-a)(g) = a(g)^{-1}
GMap map_neg(const GMap& a);
// (a b)(g) = a(b(g))
GMap map_compose(const GMap& a, const GMap& b);
// (1 - a)(g) = g a(g^{-1});  for endomorphisms this equals g a(g)^{-1}
GMap one_minus(const GMap& a);

bool is_endomorphism(const GMap& m);
bool has_abelian_image(const GMap& m);
bool is_fixed_point_free(const GMap& m);  // no g other than 1 with m(g) = g
std::optional<Elem> first_fixed_point(const GMap& m);
bool is_constant_on_conjugacy_classes(const GMap& m);

// An endomorphism whose image is an abelian subgroup. Factories validate
// both properties and throw InvalidParameter otherwise.
class AbelianMap {
 public:
  static AbelianMap from_images(GroupPtr group, std::vector<Elem> images);
  // Extends generator images to the whole group; rejects assignments that
  // do not define an endomorphism with abelian image.
  static AbelianMap from_generator_images(
      const GroupPtr& group, const std::vector<std::pair<std::string, Elem>>& images);

  const GMap& map() const { return map_; }
  const GroupPtr& group() const { return map_.group(); }
  Elem operator()(Elem g) const { return map_(g); }
  bool fixed_point_free() const { return is_fixed_point_free(map_); }

  bool operator==(const AbelianMap& other) const { return map_ == other.map_; }

 private:
  explicit AbelianMap(GMap m) : map_(std::move(m)) {}
  GMap map_;
};

// All endomorphisms of g with abelian image, ordered lexicographically by
// the tuple of generator images. Always contains the zero map; contains
// the identity only when g itself is abelian.
std::vector<AbelianMap> enumerate_abelian_maps(const GroupPtr& g);

// The derived family psi_n = -(1 - psi)^n + 1, i.e.
//   psi_n(g) = ((1-psi)^n(g))^{-1} g
// where the n-th power is n-fold composition. psi_0 is the zero map and
// psi_1 = psi.
GMap psi_n_recursive(const AbelianMap& psi, int n);

// Same family through the closed form
//   psi_n(g) = prod_{i=1..n} psi^i(g^(e_i)),  e_i = (-1)^(i-1) binom(n, i),
// with exponents reduced modulo the order of g. Requires n >= 1.
GMap psi_n_binomial(const AbelianMap& psi, int n);

// Memoizing access to psi_n and to the composition powers of (1 - psi).
// Returned references stay valid for the lifetime of the family.
class PsiFamily {
 public:
  explicit PsiFamily(AbelianMap psi);
  const AbelianMap& base() const { return psi_; }
  const GroupPtr& group() const { return psi_.group(); }
  const GMap& u_pow(int n);   // (1 - psi)^n, composition power
  const GMap& psi_n(int n);   // n >= 0

 private:
  AbelianMap psi_;
  std::deque<GMap> u_pows_;
  std::deque<GMap> psi_ns_;
};

}  // namespace braceblocks
