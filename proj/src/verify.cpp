#include "braceblocks/verify.hpp"

#include <algorithm>
#include <map>

#include "braceblocks/block.hpp"
#include "braceblocks/errors.hpp"
#include "braceblocks/ybe.hpp"

namespace braceblocks {

namespace {

struct Suite {
  std::vector<CheckResult> results;
  void add(std::string name, bool pass, std::string detail = "") {
    results.push_back({std::move(name), pass, std::move(detail)});
  }
};

std::string at_pair(const FiniteGroup& g, Elem a, Elem b) {
  return "fails at (" + g.name_of(a) + ", " + g.name_of(b) + ")";
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> verify_properties(const AbelianMap& psi, const VerifyOptions& opts) {
  Suite s;
  const GroupPtr gp = psi.group();
  const FiniteGroup& g = *gp;
  const int order = g.order();

  {
    bool ok = true;
    std::string d;
    for (Elem a = 0; a < order && ok; ++a)
      for (Elem b = 0; b < order; ++b)
        if (psi(g.mul(a, b)) != g.mul(psi(a), psi(b))) {
          ok = false;
          d = at_pair(g, a, b);
          break;
        }
    s.add("map is an endomorphism", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (Elem a = 0; a < order && ok; ++a)
      for (Elem b = 0; b < order; ++b)
        if (g.mul(psi(a), psi(b)) != g.mul(psi(b), psi(a))) {
          ok = false;
          d = "values at " + g.name_of(a) + " and " + g.name_of(b) + " do not commute";
          break;
        }
    s.add("image of the map is abelian", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (Elem a = 0; a < order && ok; ++a)
      for (Elem x = 0; x < order; ++x)
        if (psi(g.mul(g.mul(g.inv(x), a), x)) != psi(a)) {
          ok = false;
          d = "value changes within the class of " + g.name_of(a);
          break;
        }
    s.add("map is constant on conjugacy classes", ok, d);
  }
  {
    auto fp = first_fixed_point(psi.map());
    s.add("fixed-point survey", true,
          fp ? "first nonidentity fixed point: " + g.name_of(*fp) : "fixed point free");
  }
  {
    bool ok = true;
    std::string d;
    PsiFamily fam(psi);
    for (int n = 1; n <= opts.psi_n_limit && ok; ++n) {
      const GMap a = psi_n_recursive(psi, n);
      const GMap b = psi_n_binomial(psi, n);
      if (!(a == b)) {
        ok = false;
        d = "iterate and binomial forms disagree at index " + std::to_string(n);
      } else if (!(fam.psi_n(n) == a)) {
        ok = false;
        d = "memoized member disagrees at index " + std::to_string(n);
      }
    }
    s.add("family members match between iterate and binomial construction", ok, d);
  }
  s.add("family member 0 is the trivial map", psi_n_recursive(psi, 0) == zero_map(gp));
  s.add("family member 1 is the map itself", psi_n_recursive(psi, 1) == psi.map());

  if (opts.map_level_only) return s.results;

  PsiFamily fam(psi);
  const int cap = opts.max_n > 0 ? opts.max_n : 4 * order;
  int pre = -1, cyc = 0;
  {
    std::map<std::vector<Elem>, int> seen;
    for (int n = 0; n <= cap + 1; ++n) {
      auto [it, fresh] = seen.try_emplace(fam.psi_n(n).images(), n);
      if (!fresh) {
        pre = it->second;
        cyc = n - it->second;
        break;
      }
    }
  }
  if (pre < 0) {
    s.add("family is eventually periodic", false,
          "no repetition within " + std::to_string(cap) + " steps");
    return s.results;
  }
  s.add("family is eventually periodic", true,
        "preperiod " + std::to_string(pre) + ", cycle length " + std::to_string(cyc));
  const int window = pre + cyc;

  {
    std::vector<char> in_image(order, 0);
    for (Elem v : psi.map().image_set()) in_image[v] = 1;
    bool ok = true;
    std::string d;
    for (int n = 1; n < window && ok; ++n)
      for (Elem a = 0; a < order; ++a)
        if (!in_image[fam.psi_n(n)(a)]) {
          ok = false;
          d = "member " + std::to_string(n) + " leaves the image at " + g.name_of(a);
          break;
        }
    s.add("family values stay inside the image of the map", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int m = 1; m < window && ok; ++m)
      for (int n = m; n < window && ok; ++n)
        for (Elem a = 0; a < order && ok; ++a)
          for (Elem b = 0; b < order; ++b) {
            const Elem u = fam.psi_n(m)(a), v = fam.psi_n(n)(b);
            if (g.mul(u, v) != g.mul(v, u)) {
              ok = false;
              d = "members " + std::to_string(m) + " and " + std::to_string(n) + " " +
                  at_pair(g, a, b);
              break;
            }
          }
    s.add("values of any two family members commute", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int m = 0; m < window && ok; ++m)
      for (int n = 0; n < window; ++n)
        if (!(map_add(fam.psi_n(m), fam.psi_n(n)) == map_add(fam.psi_n(n), fam.psi_n(m)))) {
          ok = false;
          d = "sums of members " + std::to_string(m) + " and " + std::to_string(n) +
              " depend on the order";
          break;
        }
    s.add("pointwise sums of family members commute", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int n = 0; n <= window && ok; ++n)
      if (!(fam.u_pow(n) == one_minus(fam.psi_n(n)))) {
        ok = false;
        d = "power " + std::to_string(n) + " differs";
      }
    s.add("n-th composition power of the complement equals complement of member n", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    const GMap u = one_minus(psi.map());
    for (int n = 0; n < window && ok; ++n)
      if (!(fam.psi_n(n + 1) == map_add(psi.map(), map_compose(fam.psi_n(n), u)))) {
        ok = false;
        d = "recurrence fails from index " + std::to_string(n);
      }
    s.add("family recurrence: next member is map plus member composed with complement", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int n = 1; n < window && ok; ++n)
      if (!is_endomorphism(fam.psi_n(n)) || !has_abelian_image(fam.psi_n(n))) {
        ok = false;
        d = "member " + std::to_string(n) + " is not an endomorphism with abelian image";
      }
    s.add("every family member is an endomorphism with abelian image", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    try {
      const int mlim = std::max(2, std::min(window, 5));
      for (int m = 1; m <= mlim && ok; ++m) {
        const AbelianMap pm = AbelianMap::from_images(gp, fam.psi_n(m).images());
        for (int n = 1; n <= 5; ++n)
          if (!(psi_n_recursive(pm, n) == fam.psi_n(m * n))) {
            ok = false;
            d = "nesting fails for indices " + std::to_string(m) + " and " + std::to_string(n);
            break;
          }
      }
    } catch (const InvalidParameter& e) {
      ok = false;
      d = e.what();
    }
    s.add("nesting: member n of member m equals member m*n", ok, d);
  }

  std::vector<CayleyTable> ops;
  ops.reserve(window);
  for (int n = 0; n < window; ++n) ops.push_back(twisted_product_table(fam, n));

  s.add("twisted operation 0 is the original product", ops[0] == g.table());
  {
    bool ok = true;
    std::string d;
    for (int n = 0; n < window && ok; ++n)
      if (!ops[n].identity_at_zero() || !ops[n].is_latin_square() || !ops[n].is_associative()) {
        ok = false;
        d = "operation " + std::to_string(n) + " is not a group with the shared identity";
      }
    s.add("every twisted operation is a group with the original identity", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int n = 0; n < window && ok; ++n)
      for (Elem x = 0; x < order; ++x) {
        const GMap& pn = fam.psi_n(n);
        const Elem cand = g.mul(g.mul(pn(x), g.inv(x)), pn(g.inv(x)));
        if (ops[n].op(x, cand) != 0 || ops[n].op(cand, x) != 0) {
          ok = false;
          d = "operation " + std::to_string(n) + " at " + g.name_of(x);
          break;
        }
      }
    s.add("twisted inverses follow the closed formula", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    auto step_ok = [&](const CayleyTable& lower, const CayleyTable& higher) {
      for (Elem x = 0; x < order; ++x) {
        const Elem shifted = g.mul(x, psi(g.inv(x)));
        for (Elem y = 0; y < order; ++y)
          if (higher.op(x, y) != g.mul(lower.op(shifted, y), psi(x))) return false;
      }
      return true;
    };
    for (int n = 1; n < window && ok; ++n)
      if (!step_ok(ops[n - 1], ops[n])) {
        ok = false;
        d = "recursion fails between operations " + std::to_string(n - 1) + " and " +
            std::to_string(n);
      }
    if (ok && !step_ok(ops[window - 1], ops[pre])) {
      ok = false;
      d = "recursion fails at the period boundary";
    }
    s.add("one-step recursion links consecutive twisted operations", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int m = 0; m < window && ok; ++m)
      for (int n = 0; n < window; ++n)
        if (!brace_relation_holds(ops[m], ops[n])) {
          ok = false;
          d = "fails for operations " + std::to_string(m) + " and " + std::to_string(n);
          break;
        }
    s.add("compatibility relation holds for every ordered pair of operations", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int m = 0; m < window && ok; ++m)
      for (int n = 0; n < window; ++n) {
        const bool equal = ops[m] == ops[n];
        bool central = true;
        for (Elem x = 0; x < order && central; ++x)
          central = g.table().is_central(g.mul(fam.psi_n(m)(x), g.inv(fam.psi_n(n)(x))));
        if (equal != central) {
          ok = false;
          d = "operations " + std::to_string(m) + " and " + std::to_string(n) +
              (equal ? " coincide without central difference" : " differ with central difference");
          break;
        }
      }
    s.add("operations coincide exactly when the map difference is central", ok, d);
  }
  {
    // Justifies stopping a block scan at the first repeated table: a repeat
    // can only continue repeating.
    bool ok = true;
    std::string d;
    const CayleyTable next_after_window = twisted_product_table(fam, window);
    auto table_at = [&](int n) -> const CayleyTable& {
      return n < window ? ops[n] : next_after_window;
    };
    for (int m = 0; m < window && ok; ++m)
      for (int n = m + 1; n < window; ++n)
        if (ops[m] == ops[n] && !(table_at(m + 1) == table_at(n + 1))) {
          ok = false;
          d = "operations " + std::to_string(m) + " and " + std::to_string(n) +
              " coincide but their successors differ";
          break;
        }
    s.add("equal operations have equal successors", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    for (int n = 0; n < window && ok; ++n) {
      const std::vector<Elem> image = fam.u_pow(n).image_set();
      std::vector<char> member(order, 0);
      for (Elem v : image) member[v] = 1;
      bool closed = true, commutative = true;
      for (size_t i = 0; i < image.size(); ++i)
        for (size_t j = 0; j < image.size(); ++j) {
          if (!member[g.mul(image[i], image[j])]) closed = false;
          if (g.mul(image[i], image[j]) != g.mul(image[j], image[i])) commutative = false;
        }
      if (!closed) {
        ok = false;
        d = "image of power " + std::to_string(n) + " is not a subgroup";
      } else if (commutative != ops[n].is_abelian()) {
        ok = false;
        d = "commutativity mismatch at power " + std::to_string(n);
      }
    }
    s.add("image of the n-th complement power is a subgroup, abelian exactly when "
          "operation n is", ok, d);
  }
  {
    bool ok = true;
    std::string d = "never abelian within the window";
    std::vector<char> ab(window, 0);
    for (int n = 0; n < window; ++n) ab[n] = ops[n].is_abelian();
    for (int n = 1; n + 1 < window && ok; ++n)
      if (ab[n] && !ab[n + 1]) {
        ok = false;
        d = "operation " + std::to_string(n) + " is abelian but its successor is not";
      }
    if (ok && window >= 2 && ab[window - 1] && !ab[pre]) {
      ok = false;
      d = "abelian at the window edge but not at the cycle start";
    }
    if (ok)
      for (int n = 1; n < window; ++n)
        if (ab[n]) {
          d = "abelian from operation " + std::to_string(n) + " on";
          break;
        }
    s.add("once abelian, later twisted operations stay abelian", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    const bool base = psi.fixed_point_free();
    for (int n = 1; n < window && ok; ++n)
      if (is_fixed_point_free(fam.psi_n(n)) != base) {
        ok = false;
        d = "member " + std::to_string(n) + " disagrees with the base map";
      }
    s.add("fixed-point freeness is shared by all family members", ok, d);
  }
  {
    bool ok = true;
    std::string d;
    const GMap phi = one_minus(psi.map());
    for (int n = 1; n < window && ok; ++n)
      for (Elem x = 0; x < order && ok; ++x)
        for (Elem y = 0; y < order; ++y)
          if (phi(ops[n].op(x, y)) != ops[n - 1].op(phi(x), phi(y))) {
            ok = false;
            d = "not a homomorphism from operation " + std::to_string(n) + " " +
                at_pair(g, x, y);
            break;
          }
    if (ok) {
      std::vector<char> hit(order, 0);
      bool bij = true;
      for (Elem x = 0; x < order; ++x) {
        if (hit[phi(x)]) { bij = false; break; }
        hit[phi(x)] = 1;
      }
      if (bij != psi.fixed_point_free()) {
        ok = false;
        d = "bijectivity of the connecting map disagrees with fixed-point freeness";
      }
    }
    s.add("complement map connects each operation to its predecessor, bijective exactly "
          "for fixed-point-free maps", ok, d);
  }
  {
    if (!psi.fixed_point_free()) {
      s.add("fixed-point-free transport onto the base product", true,
            "skipped: map has fixed points");
    } else {
      // phi^m lowers both indices by m, carrying the pair (o_m, o_n) onto
      // (o_0, o_{n-m}) through one bijection.
      bool ok = true;
      std::string d;
      for (int m = 0; m < window && ok; ++m)
        for (int n = m; n < window && ok; ++n) {
          const GMap& t = fam.u_pow(m);
          for (Elem x = 0; x < order && ok; ++x)
            for (Elem y = 0; y < order; ++y) {
              if (t(ops[m].op(x, y)) != g.mul(t(x), t(y)) ||
                  t(ops[n].op(x, y)) != ops[n - m].op(t(x), t(y))) {
                ok = false;
                d = "transport fails for operations " + std::to_string(m) + ", " +
                    std::to_string(n) + " " + at_pair(g, x, y);
                break;
              }
            }
        }
      s.add("fixed-point-free transport onto the base product", ok, d);
    }
  }

  {
    bool braid_ok = true, nondeg_ok = true, inverse_ok = true, invol_ok = true,
         closed_ok = true;
    std::string braid_d, nondeg_d, inverse_d, invol_d, closed_d;
    for (int m = 0; m < window; ++m)
      for (int n = 0; n < window; ++n) {
        const std::string label =
            "pair (" + std::to_string(m) + ", " + std::to_string(n) + ")";
        const YBESolution r = solution_from_pair(ops[m], ops[n]);
        const YBESolution rp = opposite_from_pair(ops[m], ops[n]);
        if (braid_ok && (!braid_relation_holds(r) || !braid_relation_holds(rp))) {
          braid_ok = false;
          braid_d = label;
        }
        if (nondeg_ok && (!is_nondegenerate(r) || !is_nondegenerate(rp))) {
          nondeg_ok = false;
          nondeg_d = label;
        }
        if (inverse_ok && !mutually_inverse(r, rp)) {
          inverse_ok = false;
          inverse_d = label;
        }
        if (invol_ok) {
          const bool ab = ops[m].is_abelian();
          if (is_involutive(r) != ab || (r == rp) != ab) {
            invol_ok = false;
            invol_d = label;
          }
        }
        if (closed_ok) {
          try {
            (void)explicit_solution(fam, m, n);
            (void)explicit_opposite(fam, m, n);
          } catch (const VerificationError& e) {
            closed_ok = false;
            closed_d = e.what();
          }
        }
      }
    s.add("braid relation for every pair of operations", braid_ok, braid_d);
    s.add("solution maps are non-degenerate", nondeg_ok, nondeg_d);
    s.add("solution and companion maps are mutually inverse", inverse_ok, inverse_d);
    s.add("involutivity occurs exactly for commutative first operations", invol_ok, invol_d);
    s.add("closed formulas reproduce the table-built solution maps", closed_ok, closed_d);
  }

  return s.results;
}

}  // namespace braceblocks
