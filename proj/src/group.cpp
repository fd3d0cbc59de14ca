#include "braceblocks/group.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "braceblocks/errors.hpp"

namespace braceblocks {

namespace {

constexpr int kExhaustiveLimit = 200;

std::string power_factor(const std::string& gen, int e) {
  if (e == 1) return gen;
  return gen + "^" + std::to_string(e);
}

long long totient(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long long pow_mod(long long base, long long exp, long long mod) {
  long long acc = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return acc;
}

int multiplicative_order(long long b, long long mod) {
  long long x = b % mod;
  if (x < 0) x += mod;
  if (std::gcd(x, mod) != 1) return 0;
  int ord = 1;
  long long acc = x;
  while (acc != 1) {
    acc = acc * x % mod;
    ++ord;
  }
  return ord;
}

// Shared semidirect-product construction for metacyclic and affine groups:
// pairs (i, j) with (i,j)(i',j') = (i + b^j i' mod h, j + j' mod k),
// indexed as j*h + i.
GroupPtr make_semidirect(int h, int k, long long b, const std::string& s_name,
                         const std::string& t_name) {
  const int n = h * k;
  std::vector<long long> bpow(k);
  for (int j = 0; j < k; ++j) bpow[j] = pow_mod(b, j, h);
  std::vector<Elem> data(static_cast<size_t>(n) * n);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < h; ++i) {
      const Elem a = j * h + i;
      for (int j2 = 0; j2 < k; ++j2)
        for (int i2 = 0; i2 < h; ++i2) {
          const int ri = static_cast<int>((i + bpow[j] * i2) % h);
          const int rj = (j + j2) % k;
          data[static_cast<size_t>(a) * n + (j2 * h + i2)] = rj * h + ri;
        }
    }
  std::vector<std::string> names(n);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < h; ++i) {
      std::string nm;
      if (i > 0) nm = power_factor(s_name, i);
      if (j > 0) {
        if (!nm.empty()) nm += "*";
        nm += power_factor(t_name, j);
      }
      names[j * h + i] = nm.empty() ? "1" : nm;
    }
  std::vector<Generator> gens;
  if (h > 1) gens.push_back({s_name, 1});
  if (k > 1) gens.push_back({t_name, h});
  if (gens.empty()) gens.push_back({s_name, 0});
  return std::make_shared<FiniteGroup>(CayleyTable(n, std::move(data)), std::move(names),
                                       std::move(gens));
}

std::vector<std::string> split_factors(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : name) {
    if (ch == '*') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

FiniteGroup::FiniteGroup(CayleyTable table, std::vector<std::string> names,
                         std::vector<Generator> generators)
    : table_(std::move(table)), names_(std::move(names)), generators_(std::move(generators)) {
  const int n = table_.order();
  if (static_cast<int>(names_.size()) != n)
    throw InvalidParameter("need exactly one display name per element");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size())
    throw InvalidParameter("element display names must be unique");
  if (generators_.empty()) throw InvalidParameter("generator list must not be empty");
  std::set<std::string> gen_names;
  for (const Generator& g : generators_) {
    if (g.element < 0 || g.element >= n) throw InvalidParameter("generator index out of range");
    if (!gen_names.insert(g.name).second)
      throw InvalidParameter("duplicate generator name: " + g.name);
  }
  if (!table_.identity_at_zero()) throw InvalidParameter("element 0 is not an identity");
  if (!table_.is_latin_square()) throw InvalidParameter("table is not a Latin square");
  if (n <= kExhaustiveLimit && !table_.is_associative())
    throw InvalidParameter("table is not associative");
  inv_ = table_.all_inverses();
  std::vector<Elem> gen_elems;
  for (const Generator& g : generators_) gen_elems.push_back(g.element);
  if (static_cast<int>(subgroup_closure(table_, gen_elems).size()) != n)
    throw InvalidParameter("listed generators do not generate the group");
}

std::optional<Elem> FiniteGroup::generator_named(const std::string& name) const {
  for (const Generator& g : generators_)
    if (g.name == name) return g.element;
  return std::nullopt;
}

GroupPtr make_cyclic(int n) {
  if (n < 1) throw InvalidParameter("cyclic group needs n >= 1");
  std::vector<Elem> data(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) data[static_cast<size_t>(a) * n + b] = (a + b) % n;
  std::vector<std::string> names(n);
  names[0] = "1";
  for (Elem a = 1; a < n; ++a) names[a] = power_factor("g", a);
  std::vector<Generator> gens{{"g", n == 1 ? 0 : 1}};
  return std::make_shared<FiniteGroup>(CayleyTable(n, std::move(data)), std::move(names),
                                       std::move(gens));
}

GroupPtr make_dihedral(int n) {
  if (n < 3) throw InvalidParameter("dihedral group needs n >= 3");
  const int order = 2 * n;
  // r^i s^e  <->  i + n*e
  std::vector<Elem> data(static_cast<size_t>(order) * order);
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < n; ++i) {
      const Elem a = i + n * e;
      for (int e2 = 0; e2 < 2; ++e2)
        for (int i2 = 0; i2 < n; ++i2) {
          const int ri = ((e ? i - i2 : i + i2) % n + n) % n;
          data[static_cast<size_t>(a) * order + (i2 + n * e2)] = ri + n * (e ^ e2);
        }
    }
  std::vector<std::string> names(order);
  for (int i = 0; i < n; ++i) {
    names[i] = i == 0 ? "1" : power_factor("r", i);
    names[i + n] = i == 0 ? "s" : power_factor("r", i) + "*s";
  }
  std::vector<Generator> gens{{"r", 1}, {"s", n}};
  return std::make_shared<FiniteGroup>(CayleyTable(order, std::move(data)), std::move(names),
                                       std::move(gens));
}

GroupPtr make_symmetric(int n) {
  if (n < 2 || n > 6)
    throw InvalidParameter("symmetric group supported for 2 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  std::map<std::vector<int>, Elem> index;
  for (Elem a = 0; a < order; ++a) index[perms[a]] = a;

  std::vector<Elem> data(static_cast<size_t>(order) * order);
  std::vector<int> comp(n);
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b) {
      for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
      data[static_cast<size_t>(a) * order + b] = index.at(comp);
    }

  std::vector<std::string> names(order);
  for (Elem a = 0; a < order; ++a) {
    std::string nm;
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
      if (seen[start] || perms[a][start] == start) continue;
      nm += "(" + std::to_string(start + 1);
      seen[start] = 1;
      for (int x = perms[a][start]; x != start; x = perms[a][x]) {
        nm += " " + std::to_string(x + 1);
        seen[x] = 1;
      }
      nm += ")";
    }
    names[a] = nm.empty() ? "1" : nm;
  }

  std::vector<int> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int x = 0; x < n; ++x) cycle[x] = (x + 1) % n;
  std::vector<Generator> gens{{"t", index.at(transposition)}, {"c", index.at(cycle)}};
  return std::make_shared<FiniteGroup>(CayleyTable(order, std::move(data)), std::move(names),
                                       std::move(gens));
}

GroupPtr make_metacyclic(int h, int k, long long b) {
  if (h < 3) throw InvalidParameter("metacyclic group needs h >= 3");
  if (k < 1) throw InvalidParameter("metacyclic group needs k >= 1");
  long long br = b % h;
  if (br < 0) br += h;
  if (std::gcd(br, static_cast<long long>(h)) != 1)
    throw InvalidParameter("metacyclic parameter b must be a unit mod h");
  if (totient(h) % k != 0)
    throw InvalidParameter("metacyclic parameter k must divide phi(h)");
  const int ord = multiplicative_order(br, h);
  if (k % ord != 0)
    throw InvalidParameter("multiplicative order of b mod h (" + std::to_string(ord) +
                           ") must divide k (" + std::to_string(k) + ")");
  return make_semidirect(h, k, br, "s", "t");
}

GroupPtr make_affine(int p) {
  if (p < 3) throw InvalidParameter("affine group needs an odd prime p >= 3");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidParameter("affine group needs p prime");
  int root = 0;
  for (int c = 2; c < p; ++c)
    if (multiplicative_order(c, p) == p - 1) { root = c; break; }
  return make_semidirect(p, p - 1, root, "g", "alpha");
}

GroupPtr make_product(const GroupPtr& a, const GroupPtr& b) {
  if (!a || !b) throw InvalidParameter("product needs two groups");
  const int na = a->order(), nb = b->order();
  const int n = na * nb;
  std::vector<Elem> data(static_cast<size_t>(n) * n);
  for (Elem x1 = 0; x1 < na; ++x1)
    for (Elem y1 = 0; y1 < nb; ++y1)
      for (Elem x2 = 0; x2 < na; ++x2)
        for (Elem y2 = 0; y2 < nb; ++y2)
          data[static_cast<size_t>(x1 * nb + y1) * n + (x2 * nb + y2)] =
              a->mul(x1, x2) * nb + b->mul(y1, y2);

  auto prefixed = [](const std::string& name, const char* prefix) {
    std::string out;
    for (const std::string& f : split_factors(name)) {
      if (!out.empty()) out += "*";
      out += prefix + f;
    }
    return out;
  };
  std::vector<std::string> names(n);
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y) {
      std::string nm;
      if (x != 0) nm = prefixed(a->name_of(x), "1.");
      if (y != 0) {
        if (!nm.empty()) nm += "*";
        nm += prefixed(b->name_of(y), "2.");
      }
      names[x * nb + y] = nm.empty() ? "1" : nm;
    }
  std::vector<Generator> gens;
  for (const Generator& g : a->generators()) gens.push_back({"1." + g.name, g.element * nb});
  for (const Generator& g : b->generators()) gens.push_back({"2." + g.name, g.element});
  return std::make_shared<FiniteGroup>(CayleyTable(n, std::move(data)), std::move(names),
                                       std::move(gens));
}

GroupPtr make_subgroup(const FiniteGroup& g, const std::vector<Elem>& members) {
  std::vector<Elem> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty() || sorted[0] != 0)
    throw InvalidParameter("subgroup must contain the identity");
  std::vector<Elem> back(g.order(), -1);
  for (size_t i = 0; i < sorted.size(); ++i) back[sorted[i]] = static_cast<Elem>(i);
  const int n = static_cast<int>(sorted.size());
  std::vector<Elem> data(static_cast<size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = g.name_of(sorted[i]);
    for (int j = 0; j < n; ++j) {
      Elem p = back[g.mul(sorted[i], sorted[j])];
      if (p < 0) throw InvalidParameter("element set is not closed under multiplication");
      data[static_cast<size_t>(i) * n + j] = p;
    }
  }
  CayleyTable table(n, std::move(data));
  std::vector<Generator> gens;
  for (Elem e : greedy_generators(table)) gens.push_back({names[e], e});
  if (gens.empty()) gens.push_back({names[0], 0});
  return std::make_shared<FiniteGroup>(std::move(table), std::move(names), std::move(gens));
}

GroupPtr make_from_table(CayleyTable table, std::vector<std::string> names,
                         std::vector<Generator> generators) {
  const int n = table.order();
  if (names.empty()) {
    names.resize(n);
    names[0] = "1";
    for (Elem a = 1; a < n; ++a) names[a] = "e" + std::to_string(a);
  }
  if (generators.empty()) {
    for (Elem e : greedy_generators(table)) generators.push_back({names[e], e});
    if (generators.empty()) generators.push_back({names[0], 0});
  }
  return std::make_shared<FiniteGroup>(std::move(table), std::move(names), std::move(generators));
}

std::optional<std::vector<Elem>> group_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  return table_isomorphism(a.table(), b.table());
}

void save_cayley_table(const FiniteGroup& g, std::ostream& out) {
  const int n = g.order();
  out << n << "\n";
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
  for (Elem a = 0; a < n; ++a) out << a << " " << g.name_of(a) << "\n";
}

GroupPtr load_cayley_table(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1) throw ParseError("table file must start with a positive order");
  std::vector<Elem> data(static_cast<size_t>(n) * n);
  for (size_t i = 0; i < data.size(); ++i) {
    if (!(in >> data[i])) throw ParseError("table file truncated: expected " +
                                           std::to_string(n) + "x" + std::to_string(n) +
                                           " entries");
    if (data[i] < 0 || data[i] >= n) throw ParseError("table entry out of range");
  }
  std::vector<std::string> names(n);
  std::vector<char> have(n, 0);
  int idx;
  while (in >> idx) {
    std::string nm;
    if (!(in >> nm)) throw ParseError("name line without a name");
    if (idx < 0 || idx >= n) throw ParseError("name line index out of range");
    names[idx] = nm;
    have[idx] = 1;
  }
  bool any = std::any_of(have.begin(), have.end(), [](char c) { return c != 0; });
  if (any) {
    for (int i = 0; i < n; ++i)
      if (!have[i]) names[i] = i == 0 ? "1" : "e" + std::to_string(i);
  } else {
    names.clear();
  }
  CayleyTable table(n, std::move(data));
  if (!table.is_group()) throw ParseError("table file does not describe a group");
  return make_from_table(std::move(table), std::move(names));
}

}  // namespace braceblocks
