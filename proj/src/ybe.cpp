#include "braceblocks/ybe.hpp"

#include <map>
#include <string>

#include "braceblocks/errors.hpp"

namespace braceblocks {

namespace {

YBESolution from_tables(const CayleyTable& dot, const CayleyTable& circ, bool opposite) {
  if (dot.order() != circ.order())
    throw InvalidParameter("the two operations must have the same order");
  const int n = dot.order();
  const std::vector<Elem> dinv = dot.all_inverses();
  const std::vector<Elem> cinv = circ.all_inverses();
  YBESolution r;
  r.order = n;
  r.f.resize(static_cast<size_t>(n) * n);
  r.g.resize(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = circ.op(x, y);
      const Elem u = opposite ? dot.op(xy, dinv[x]) : dot.op(dinv[x], xy);
      r.f[static_cast<size_t>(x) * n + y] = u;
      r.g[static_cast<size_t>(x) * n + y] = circ.op(circ.op(cinv[u], x), y);
    }
  return r;
}

Elem chain(const FiniteGroup& g, std::initializer_list<Elem> factors) {
  Elem acc = 0;
  for (Elem f : factors) acc = g.mul(acc, f);
  return acc;
}

void match_or_throw(const YBESolution& formula, const YBESolution& reference,
                    const char* what) {
  if (formula == reference) return;
  for (Elem x = 0; x < formula.order; ++x)
    for (Elem y = 0; y < formula.order; ++y)
      if (formula.fval(x, y) != reference.fval(x, y) ||
          formula.gval(x, y) != reference.gval(x, y))
        throw VerificationError(std::string(what) + ": closed formula disagrees with the " +
                                "table construction first at arguments (" +
                                std::to_string(x) + ", " + std::to_string(y) + ")");
  throw VerificationError(std::string(what) + ": closed formula disagrees in size");
}

}  // namespace

YBESolution solution_from_pair(const CayleyTable& dot, const CayleyTable& circ) {
  return from_tables(dot, circ, false);
}

YBESolution opposite_from_pair(const CayleyTable& dot, const CayleyTable& circ) {
  return from_tables(dot, circ, true);
}

YBESolution explicit_solution(PsiFamily& family, int m, int n) {
  const FiniteGroup& grp = *family.group();
  const GMap& pm = family.psi_n(m);
  const GMap& pn = family.psi_n(n);
  const int order = grp.order();
  YBESolution r;
  r.order = order;
  r.f.resize(static_cast<size_t>(order) * order);
  r.g.resize(static_cast<size_t>(order) * order);
  for (Elem x = 0; x < order; ++x) {
    const Elem xi = grp.inv(x);
    for (Elem y = 0; y < order; ++y) {
      const Elem yi = grp.inv(y);
      r.f[static_cast<size_t>(x) * order + y] =
          chain(grp, {pm(x), pn(xi), y, pn(x), pm(xi)});
      r.g[static_cast<size_t>(x) * order + y] =
          chain(grp, {pm(x), pn(grp.mul(xi, y)), yi, pn(x), pm(xi), x, pn(xi), y,
                      pn(grp.mul(x, yi))});
    }
  }
  match_or_throw(r, solution_from_pair(twisted_product_table(family, m), twisted_product_table(family, n)),
                 "solution map");
  return r;
}

YBESolution explicit_opposite(PsiFamily& family, int m, int n) {
  const FiniteGroup& grp = *family.group();
  const GMap& pm = family.psi_n(m);
  const GMap& pn = family.psi_n(n);
  const int order = grp.order();
  YBESolution r;
  r.order = order;
  r.f.resize(static_cast<size_t>(order) * order);
  r.g.resize(static_cast<size_t>(order) * order);
  for (Elem x = 0; x < order; ++x) {
    const Elem xi = grp.inv(x);
    for (Elem y = 0; y < order; ++y) {
      const Elem yi = grp.inv(y);
      r.f[static_cast<size_t>(x) * order + y] =
          chain(grp, {x, pn(xi), y, pn(x), pm(yi), xi, pm(y)});
      r.g[static_cast<size_t>(x) * order + y] =
          chain(grp, {pn(y), pm(yi), x, pm(y), pn(yi)});
    }
  }
  match_or_throw(r, opposite_from_pair(twisted_product_table(family, m), twisted_product_table(family, n)),
                 "companion map");
  return r;
}

bool braid_relation_holds(const YBESolution& r) {
  const int n = r.order;
  struct Triple { Elem a, b, c; };
  auto r12 = [&](Triple t) { return Triple{r.fval(t.a, t.b), r.gval(t.a, t.b), t.c}; };
  auto r23 = [&](Triple t) { return Triple{t.a, r.fval(t.b, t.c), r.gval(t.b, t.c)}; };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Triple t{a, b, c};
        const Triple lhs = r12(r23(r12(t)));
        const Triple rhs = r23(r12(r23(t)));
        if (lhs.a != rhs.a || lhs.b != rhs.b || lhs.c != rhs.c) return false;
      }
  return true;
}

bool is_nondegenerate(const YBESolution& r) {
  const int n = r.order;
  for (Elem x = 0; x < n; ++x) {
    std::vector<char> hit(n, 0);
    for (Elem y = 0; y < n; ++y) {
      const Elem v = r.fval(x, y);
      if (hit[v]) return false;
      hit[v] = 1;
    }
  }
  for (Elem y = 0; y < n; ++y) {
    std::vector<char> hit(n, 0);
    for (Elem x = 0; x < n; ++x) {
      const Elem v = r.gval(x, y);
      if (hit[v]) return false;
      hit[v] = 1;
    }
  }
  return true;
}

bool is_involutive(const YBESolution& r) {
  for (Elem x = 0; x < r.order; ++x)
    for (Elem y = 0; y < r.order; ++y) {
      const Elem fx = r.fval(x, y), gy = r.gval(x, y);
      if (r.fval(fx, gy) != x || r.gval(fx, gy) != y) return false;
    }
  return true;
}

bool mutually_inverse(const YBESolution& r, const YBESolution& rp) {
  if (r.order != rp.order) return false;
  for (Elem x = 0; x < r.order; ++x)
    for (Elem y = 0; y < r.order; ++y) {
      Elem a = r.fval(x, y), b = r.gval(x, y);
      if (rp.fval(a, b) != x || rp.gval(a, b) != y) return false;
      a = rp.fval(x, y), b = rp.gval(x, y);
      if (r.fval(a, b) != x || r.gval(a, b) != y) return false;
    }
  return true;
}

Census build_census(const BraceBlock& block) {
  const int window = block.window();
  Census census;

  // Group-isomorphism classes of the individual operations, used both to
  // prefilter the pair classification and to label abelian components.
  std::vector<int> op_class(window, -1);
  std::vector<int> op_reps;
  for (int i = 0; i < window; ++i) {
    for (int rep : op_reps)
      if (table_isomorphism(block.ops[rep].table, block.ops[i].table)) {
        op_class[i] = op_class[rep];
        break;
      }
    if (op_class[i] < 0) {
      op_class[i] = static_cast<int>(op_reps.size());
      op_reps.push_back(i);
    }
  }

  std::vector<std::pair<int, int>> class_reps;  // (m, n) representative per pair class
  std::vector<int> pair_class(static_cast<size_t>(window) * window, -1);
  std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, int> seen_tables;

  for (int m = 0; m < window; ++m)
    for (int n = 0; n < window; ++n) {
      int cls = -1;
      for (size_t c = 0; c < class_reps.size(); ++c) {
        const auto [rm, rn] = class_reps[c];
        if (op_class[rm] != op_class[m] || op_class[rn] != op_class[n]) continue;
        if (brace_isomorphism(block.ops[rm].table, block.ops[rn].table,
                              block.ops[m].table, block.ops[n].table)) {
          cls = static_cast<int>(c);
          break;
        }
      }
      if (cls < 0) {
        cls = static_cast<int>(class_reps.size());
        class_reps.emplace_back(m, n);
      }
      pair_class[static_cast<size_t>(m) * window + n] = cls;

      const YBESolution sol = solution_from_pair(block.ops[m].table, block.ops[n].table);
      const YBESolution opp = opposite_from_pair(block.ops[m].table, block.ops[n].table);
      const std::string label = "pair (" + std::to_string(m) + ", " + std::to_string(n) + ")";
      if (!braid_relation_holds(sol) || !braid_relation_holds(opp))
        throw VerificationError(label + ": braid relation failed");
      if (!is_nondegenerate(sol) || !is_nondegenerate(opp))
        throw VerificationError(label + ": solution is degenerate");
      if (!mutually_inverse(sol, opp))
        throw VerificationError(label + ": the two maps are not mutually inverse");
      if ((sol == opp) != block.ops[m].abelian)
        throw VerificationError(label + ": map coincidence disagrees with first-operation "
                                        "commutativity");

      for (int variant = 0; variant < 2; ++variant) {
        const YBESolution& s = variant ? opp : sol;
        CensusEntry entry;
        entry.m = m;
        entry.n = n;
        entry.opposite = variant == 1;
        entry.solution = static_cast<int>(census.solutions.size());
        entry.brace_class = cls;
        auto [it, fresh] = seen_tables.try_emplace({s.f, s.g},
                                                   static_cast<int>(census.entries.size()));
        if (!fresh) entry.dup_of = it->second;
        census.solutions.push_back(s);
        census.entries.push_back(entry);
      }
    }

  census.brace_classes = static_cast<int>(class_reps.size());
  for (const CensusEntry& e : census.entries) {
    if (e.dup_of < 0) ++census.raw_distinct;
    else if (census.entries[e.dup_of].brace_class != e.brace_class)
      census.cross_class_collision = true;
  }
  for (const auto& [m, n] : class_reps)
    census.convention_count += block.ops[m].abelian ? 1 : 2;
  return census;
}

}  // namespace braceblocks
