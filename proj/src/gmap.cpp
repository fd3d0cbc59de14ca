#include "braceblocks/gmap.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "braceblocks/errors.hpp"

namespace braceblocks {

namespace {

void require_same_group(const GMap& a, const GMap& b) {
  if (a.group() != b.group() &&
      !(a.group() && b.group() && a.group()->table() == b.group()->table()))
    throw InvalidParameter("maps must live on the same group");
}

}  // namespace

GMap::GMap(GroupPtr group, std::vector<Elem> images)
    : group_(std::move(group)), images_(std::move(images)) {
  if (!group_) throw InvalidParameter("map needs a group");
  if (static_cast<int>(images_.size()) != group_->order())
    throw InvalidParameter("map needs one image per group element");
  for (Elem v : images_)
    if (v < 0 || v >= group_->order()) throw InvalidParameter("map image out of range");
}

std::vector<Elem> GMap::image_set() const {
  std::vector<Elem> vals = images_;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

int GMap::image_size() const { return static_cast<int>(image_set().size()); }

GMap identity_map(const GroupPtr& g) {
  std::vector<Elem> images(g->order());
  for (Elem a = 0; a < g->order(); ++a) images[a] = a;
  return GMap(g, std::move(images));
}

GMap zero_map(const GroupPtr& g) { return GMap(g, std::vector<Elem>(g->order(), 0)); }

GMap map_add(const GMap& a, const GMap& b) {
  require_same_group(a, b);
  const FiniteGroup& g = *a.group();
  std::vector<Elem> images(g.order());
  for (Elem x = 0; x < g.order(); ++x) images[x] = g.mul(a(x), b(x));
  return GMap(a.group(), std::move(images));
}

GMap map_neg(const GMap& a) {
  const FiniteGroup& g = *a.group();
  std::vector<Elem> images(g.order());
  for (Elem x = 0; x < g.order(); ++x) images[x] = g.inv(a(x));
  return GMap(a.group(), std::move(images));
}

GMap map_compose(const GMap& a, const GMap& b) {
  require_same_group(a, b);
  std::vector<Elem> images(a.group()->order());
  for (Elem x = 0; x < a.group()->order(); ++x) images[x] = a(b(x));
  return GMap(a.group(), std::move(images));
}

GMap one_minus(const GMap& a) {
  const FiniteGroup& g = *a.group();
  std::vector<Elem> images(g.order());
  for (Elem x = 0; x < g.order(); ++x) images[x] = g.mul(x, a(g.inv(x)));
  return GMap(a.group(), std::move(images));
}

bool is_endomorphism(const GMap& m) {
  const FiniteGroup& g = *m.group();
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (m(g.mul(a, b)) != g.mul(m(a), m(b))) return false;
  return true;
}

bool has_abelian_image(const GMap& m) {
  const FiniteGroup& g = *m.group();
  const std::vector<Elem> vals = m.image_set();
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = i + 1; j < vals.size(); ++j)
      if (g.mul(vals[i], vals[j]) != g.mul(vals[j], vals[i])) return false;
  return true;
}

std::optional<Elem> first_fixed_point(const GMap& m) {
  for (Elem a = 1; a < m.group()->order(); ++a)
    if (m(a) == a) return a;
  return std::nullopt;
}

bool is_fixed_point_free(const GMap& m) { return !first_fixed_point(m).has_value(); }

bool is_constant_on_conjugacy_classes(const GMap& m) {
  const FiniteGroup& g = *m.group();
  const std::vector<int> cls = g.table().conjugacy_classes();
  std::vector<Elem> rep_value(g.order(), -1);
  for (Elem a = 0; a < g.order(); ++a) {
    if (rep_value[cls[a]] == -1)
      rep_value[cls[a]] = m(a);
    else if (rep_value[cls[a]] != m(a))
      return false;
  }
  return true;
}

AbelianMap AbelianMap::from_images(GroupPtr group, std::vector<Elem> images) {
  GMap m(std::move(group), std::move(images));
  if (!is_endomorphism(m)) throw InvalidParameter("map is not an endomorphism");
  if (!has_abelian_image(m)) throw InvalidParameter("endomorphism image is not abelian");
  return AbelianMap(std::move(m));
}

AbelianMap AbelianMap::from_generator_images(
    const GroupPtr& group, const std::vector<std::pair<std::string, Elem>>& images) {
  if (!group) throw InvalidParameter("map needs a group");
  const FiniteGroup& g = *group;
  std::vector<Elem> img(g.order(), -1);
  img[0] = 0;
  std::vector<std::pair<Elem, Elem>> gen_pairs;  // (generator element, its image)
  std::vector<char> covered;
  for (const auto& [name, value] : images) {
    auto e = g.generator_named(name);
    if (!e) throw InvalidParameter("'" + name + "' is not a generator of this group");
    if (value < 0 || value >= g.order()) throw InvalidParameter("generator image out of range");
    if (img[*e] != -1 && img[*e] != value)
      throw InvalidParameter("conflicting images for generator '" + name + "'");
    img[*e] = value;
    gen_pairs.emplace_back(*e, value);
  }
  for (const Generator& gen : g.generators())
    if (img[gen.element] == -1)
      throw InvalidParameter("no image given for generator '" + gen.name + "'");

  std::queue<Elem> todo;
  std::vector<char> queued(g.order(), 0);
  todo.push(0);
  queued[0] = 1;
  for (const auto& [e, v] : gen_pairs)
    if (!queued[e]) { todo.push(e); queued[e] = 1; }
  while (!todo.empty()) {
    const Elem a = todo.front();
    todo.pop();
    for (const auto& [e, v] : gen_pairs) {
      const Elem b = g.mul(a, e);
      const Elem want = g.mul(img[a], v);
      if (img[b] == -1) {
        img[b] = want;
      } else if (img[b] != want) {
        throw InvalidParameter("generator images do not extend to an endomorphism");
      }
      if (!queued[b]) { todo.push(b); queued[b] = 1; }
    }
  }
  for (Elem a = 0; a < g.order(); ++a)
    if (img[a] == -1) throw InvalidParameter("generator images do not cover the group");
  return from_images(group, std::move(img));
}

std::vector<AbelianMap> enumerate_abelian_maps(const GroupPtr& g) {
  const FiniteGroup& grp = *g;
  std::vector<Elem> gen_elems;
  for (const Generator& gen : grp.generators())
    if (std::find(gen_elems.begin(), gen_elems.end(), gen.element) == gen_elems.end())
      gen_elems.push_back(gen.element);

  std::vector<int> order_of(grp.order());
  for (Elem a = 0; a < grp.order(); ++a) order_of[a] = grp.table().element_order(a);

  // Per generator, images are limited to elements whose order divides the
  // generator's order; a full extension check happens afterwards.
  std::vector<std::vector<Elem>> candidates;
  for (Elem e : gen_elems) {
    std::vector<Elem> c;
    for (Elem v = 0; v < grp.order(); ++v)
      if (order_of[e] % order_of[v] == 0) c.push_back(v);
    candidates.push_back(std::move(c));
  }

  std::vector<AbelianMap> found;
  std::vector<Elem> chosen(gen_elems.size(), 0);
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == gen_elems.size()) {
      std::vector<std::pair<std::string, Elem>> assignment;
      for (const Generator& gen : grp.generators())
        for (size_t i = 0; i < gen_elems.size(); ++i)
          if (gen.element == gen_elems[i]) assignment.emplace_back(gen.name, chosen[i]);
      try {
        found.push_back(AbelianMap::from_generator_images(g, assignment));
      } catch (const InvalidParameter&) {
      }
      return;
    }
    for (Elem v : candidates[pos]) {
      bool ok = true;
      for (size_t i = 0; i < pos && ok; ++i)
        ok = grp.mul(chosen[i], v) == grp.mul(v, chosen[i]);
      if (!ok) continue;  // images must commute pairwise or the image cannot be abelian
      chosen[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  // The search walks candidate images in ascending element order, generator by
  // generator, so the result is already lexicographic in the tuple of
  // generator-image indices.
  return found;
}

GMap psi_n_recursive(const AbelianMap& psi, int n) {
  if (n < 0) throw InvalidParameter("family index must be nonnegative");
  const FiniteGroup& g = *psi.group();
  const GMap u = one_minus(psi.map());
  GMap p = identity_map(psi.group());
  for (int i = 0; i < n; ++i) p = map_compose(u, p);
  std::vector<Elem> images(g.order());
  for (Elem a = 0; a < g.order(); ++a) images[a] = g.mul(g.inv(p(a)), a);
  return GMap(psi.group(), std::move(images));
}

GMap psi_n_binomial(const AbelianMap& psi, int n) {
  if (n < 1) throw InvalidParameter("the closed form needs n >= 1");
  const FiniteGroup& g = *psi.group();

  // psi^i for i = 1..n as lookup tables.
  std::vector<std::vector<Elem>> psi_pow(n + 1);
  psi_pow[1] = psi.map().images();
  for (int i = 2; i <= n; ++i) {
    psi_pow[i].resize(g.order());
    for (Elem a = 0; a < g.order(); ++a) psi_pow[i][a] = psi(psi_pow[i - 1][a]);
  }

  // Row n of Pascal's triangle reduced modulo each element order that occurs.
  std::map<int, std::vector<long long>> row_mod;
  for (Elem a = 0; a < g.order(); ++a) {
    const int m = g.table().element_order(a);
    if (row_mod.count(m)) continue;
    std::vector<long long> row(n + 1, 0), next(n + 1, 0);
    row[0] = 1 % m;
    for (int r = 1; r <= n; ++r) {
      next[0] = 1 % m;
      for (int i = 1; i <= r; ++i) next[i] = (row[i - 1] + row[i]) % m;
      std::swap(row, next);
    }
    row_mod[m] = row;
  }

  std::vector<Elem> images(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    const std::vector<long long>& row = row_mod[g.table().element_order(a)];
    Elem acc = 0;
    for (int i = 1; i <= n; ++i) {
      const long long e = (i % 2 == 1) ? row[i] : -row[i];
      acc = g.mul(acc, psi_pow[i][g.power(a, e)]);
    }
    images[a] = acc;
  }
  return GMap(psi.group(), std::move(images));
}

PsiFamily::PsiFamily(AbelianMap psi) : psi_(std::move(psi)) {
  u_pows_.push_back(identity_map(psi_.group()));
  psi_ns_.push_back(zero_map(psi_.group()));
}

const GMap& PsiFamily::u_pow(int n) {
  if (n < 0) throw InvalidParameter("family index must be nonnegative");
  const GMap u = one_minus(psi_.map());
  while (static_cast<int>(u_pows_.size()) <= n)
    u_pows_.push_back(map_compose(u, u_pows_.back()));
  return u_pows_[n];
}

const GMap& PsiFamily::psi_n(int n) {
  if (n < 0) throw InvalidParameter("family index must be nonnegative");
  const FiniteGroup& g = *psi_.group();
  while (static_cast<int>(psi_ns_.size()) <= n) {
    const int k = static_cast<int>(psi_ns_.size());
    const GMap& p = u_pow(k);
    std::vector<Elem> images(g.order());
    for (Elem a = 0; a < g.order(); ++a) images[a] = g.mul(g.inv(p(a)), a);
    psi_ns_.emplace_back(psi_.group(), std::move(images));
  }
  return psi_ns_[n];
}

}  // namespace braceblocks
