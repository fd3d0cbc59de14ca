#include "braceblocks/cayley.hpp"

#include <algorithm>
#include <numeric>

#include "braceblocks/errors.hpp"

namespace braceblocks {

CayleyTable::CayleyTable(int order, std::vector<Elem> data)
    : order_(order), data_(std::move(data)) {
  if (order < 1) throw InvalidParameter("table order must be at least 1");
  if (data_.size() != static_cast<size_t>(order) * order)
    throw InvalidParameter("table data size does not match order");
  for (Elem v : data_)
    if (v < 0 || v >= order) throw InvalidParameter("table entry out of range");
}

bool CayleyTable::identity_at_zero() const {
  for (Elem a = 0; a < order_; ++a)
    if (op(0, a) != a || op(a, 0) != a) return false;
  return true;
}

bool CayleyTable::is_latin_square() const {
  std::vector<char> seen(order_);
  for (Elem a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < order_; ++b) {
      if (seen[op(a, b)]) return false;
      seen[op(a, b)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < order_; ++b) {
      if (seen[op(b, a)]) return false;
      seen[op(b, a)] = 1;
    }
  }
  return true;
}

bool CayleyTable::is_associative() const {
  for (Elem a = 0; a < order_; ++a) {
    const Elem* ra = row(a);
    for (Elem b = 0; b < order_; ++b) {
      const Elem ab = ra[b];
      const Elem* rb = row(b);
      const Elem* rab = row(ab);
      for (Elem c = 0; c < order_; ++c)
        if (rab[c] != ra[rb[c]]) return false;
    }
  }
  return true;
}

bool CayleyTable::is_group() const {
  if (!identity_at_zero() || !is_latin_square() || !is_associative()) return false;
  for (Elem a = 0; a < order_; ++a) {
    bool has_inv = false;
    for (Elem b = 0; b < order_; ++b)
      if (op(a, b) == 0 && op(b, a) == 0) { has_inv = true; break; }
    if (!has_inv) return false;
  }
  return true;
}

Elem CayleyTable::inverse(Elem a) const {
  for (Elem b = 0; b < order_; ++b)
    if (op(a, b) == 0 && op(b, a) == 0) return b;
  throw VerificationError("element has no two-sided inverse");
}

std::vector<Elem> CayleyTable::all_inverses() const {
  std::vector<Elem> inv(order_);
  for (Elem a = 0; a < order_; ++a) inv[a] = inverse(a);
  return inv;
}

int CayleyTable::element_order(Elem a) const {
  int n = 1;
  Elem x = a;
  while (x != 0) {
    x = op(x, a);
    ++n;
    if (n > order_) throw VerificationError("element order exceeds group order");
  }
  return n;
}

Elem CayleyTable::power(Elem a, long long e) const {
  const int k = element_order(a);
  long long r = e % k;
  if (r < 0) r += k;
  Elem x = 0;
  for (long long i = 0; i < r; ++i) x = op(x, a);
  return x;
}

bool CayleyTable::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

bool CayleyTable::is_central(Elem a) const {
  for (Elem b = 0; b < order_; ++b)
    if (op(a, b) != op(b, a)) return false;
  return true;
}

std::vector<Elem> CayleyTable::center() const {
  std::vector<Elem> z;
  for (Elem a = 0; a < order_; ++a)
    if (is_central(a)) z.push_back(a);
  return z;
}

int CayleyTable::centralizer_size(Elem a) const {
  int n = 0;
  for (Elem b = 0; b < order_; ++b)
    if (op(a, b) == op(b, a)) ++n;
  return n;
}

std::vector<int> CayleyTable::conjugacy_classes() const {
  const std::vector<Elem> inv = all_inverses();
  std::vector<int> cls(order_, -1);
  int next = 0;
  for (Elem a = 0; a < order_; ++a) {
    if (cls[a] >= 0) continue;
    const int id = next++;
    for (Elem g = 0; g < order_; ++g) cls[op(op(inv[g], a), g)] = id;
  }
  return cls;
}

std::vector<Elem> subgroup_closure(const CayleyTable& t, const std::vector<Elem>& seed) {
  std::vector<char> in(t.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (Elem s : seed)
    if (!in[s]) { in[s] = 1; members.push_back(s); }
  // products of existing members against everything discovered so far
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j < members.size(); ++j) {
      Elem p = t.op(members[i], members[j]);
      if (!in[p]) { in[p] = 1; members.push_back(p); }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Elem> greedy_generators(const CayleyTable& t) {
  std::vector<Elem> gens;
  std::vector<Elem> closure{0};
  while (static_cast<int>(closure.size()) < t.order()) {
    std::vector<char> in(t.order(), 0);
    for (Elem e : closure) in[e] = 1;
    Elem pick = -1;
    for (Elem a = 0; a < t.order(); ++a)
      if (!in[a]) { pick = a; break; }
    gens.push_back(pick);
    closure = subgroup_closure(t, gens);
  }
  return gens;
}

std::vector<Elem> derived_subgroup(const CayleyTable& t) {
  const std::vector<Elem> inv = t.all_inverses();
  std::vector<Elem> comms;
  std::vector<char> seen(t.order(), 0);
  for (Elem a = 0; a < t.order(); ++a)
    for (Elem b = 0; b < t.order(); ++b) {
      Elem c = t.op(t.op(inv[a], inv[b]), t.op(a, b));
      if (!seen[c]) { seen[c] = 1; comms.push_back(c); }
    }
  return subgroup_closure(t, comms);
}

namespace {

// Per-element invariants that any (joint) isomorphism preserves.
std::vector<std::vector<int>> signatures(const std::vector<const CayleyTable*>& ts) {
  const int n = ts[0]->order();
  std::vector<std::vector<int>> sig(n);
  for (const CayleyTable* t : ts) {
    std::vector<int> cls = t->conjugacy_classes();
    std::vector<int> cls_size(n, 0);
    for (int c : cls) ++cls_size[c];
    for (Elem a = 0; a < n; ++a) {
      sig[a].push_back(t->element_order(a));
      sig[a].push_back(t->centralizer_size(a));
      sig[a].push_back(cls_size[cls[a]]);
    }
  }
  return sig;
}

struct JointIsoSearch {
  const std::vector<const CayleyTable*>& as;
  const std::vector<const CayleyTable*>& bs;
  int n;
  std::vector<Elem> gens;                      // generating sequence under as[0]
  std::vector<std::vector<Elem>> candidates;   // per generator
  std::vector<Elem> img;                       // partial map, -1 unknown
  std::vector<char> used;                      // image elements taken

  bool propagate(std::vector<Elem>& known, size_t from) {
    // Worklist closure: every product of known elements must stay consistent
    // across all table pairs.
    for (size_t i = from; i < known.size(); ++i) {
      for (size_t j = 0; j < known.size(); ++j) {
        for (size_t t = 0; t < as.size(); ++t) {
          for (auto [x, y] : {std::pair{known[i], known[j]}, std::pair{known[j], known[i]}}) {
            Elem p = as[t]->op(x, y);
            Elem q = bs[t]->op(img[x], img[y]);
            if (img[p] == -1) {
              if (used[q]) return false;
              img[p] = q;
              used[q] = 1;
              known.push_back(p);
            } else if (img[p] != q) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool assign(size_t gi, std::vector<Elem> known) {
    if (gi == gens.size()) {
      if (static_cast<int>(known.size()) != n) return false;
      for (size_t t = 0; t < as.size(); ++t)
        for (Elem a = 0; a < n; ++a)
          for (Elem b = 0; b < n; ++b)
            if (img[as[t]->op(a, b)] != bs[t]->op(img[a], img[b])) return false;
      return true;
    }
    const Elem g = gens[gi];
    for (Elem cand : candidates[gi]) {
      if (used[cand]) continue;
      std::vector<Elem> saved_img = img;
      std::vector<char> saved_used = used;
      std::vector<Elem> next_known = known;
      img[g] = cand;
      used[cand] = 1;
      next_known.push_back(g);
      if (propagate(next_known, next_known.size() - 1) && assign(gi + 1, next_known))
        return true;
      img = std::move(saved_img);
      used = std::move(saved_used);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Elem>> joint_table_isomorphism(
    const std::vector<const CayleyTable*>& as, const std::vector<const CayleyTable*>& bs) {
  if (as.empty() || as.size() != bs.size())
    throw InvalidParameter("isomorphism search needs matching nonempty table lists");
  const int n = as[0]->order();
  for (size_t t = 0; t < as.size(); ++t)
    if (as[t]->order() != n || bs[t]->order() != n) return std::nullopt;

  std::vector<std::vector<int>> sig_a = signatures(as);
  std::vector<std::vector<int>> sig_b = signatures(bs);
  {
    auto sa = sig_a;
    auto sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  JointIsoSearch s{as, bs, n, greedy_generators(*as[0]), {}, {}, {}};
  s.candidates.resize(s.gens.size());
  for (size_t i = 0; i < s.gens.size(); ++i) {
    for (Elem b = 0; b < n; ++b)
      if (sig_b[b] == sig_a[s.gens[i]]) s.candidates[i].push_back(b);
    if (s.candidates[i].empty()) return std::nullopt;
  }
  s.img.assign(n, -1);
  s.used.assign(n, 0);
  s.img[0] = 0;
  s.used[0] = 1;
  if (s.assign(0, {0})) return s.img;
  return std::nullopt;
}

std::optional<std::vector<Elem>> table_isomorphism(const CayleyTable& a, const CayleyTable& b) {
  return joint_table_isomorphism({&a}, {&b});
}

}  // namespace braceblocks
