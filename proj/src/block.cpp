#include "braceblocks/block.hpp"

#include <map>
#include <string>

#include "braceblocks/errors.hpp"

namespace braceblocks {

CayleyTable twisted_product_table(PsiFamily& family, int n) {
  const FiniteGroup& g = *family.group();
  const GMap& psi_n = family.psi_n(n);
  const int order = g.order();
  std::vector<Elem> data(static_cast<size_t>(order) * order);
  for (Elem x = 0; x < order; ++x) {
    const Elem pre = g.mul(x, psi_n(g.inv(x)));
    const Elem post = psi_n(x);
    for (Elem y = 0; y < order; ++y)
      data[static_cast<size_t>(x) * order + y] = g.mul(g.mul(pre, y), post);
  }
  return CayleyTable(order, std::move(data));
}

namespace {

// Group axioms plus the closed form for inverses under the twisted product.
void verify_circle_op(const FiniteGroup& g, CircleOp& op) {
  const std::string label = "operation " + std::to_string(op.n);
  if (!op.table.identity_at_zero())
    throw VerificationError(label + ": twisted product lost the identity");
  if (!op.table.is_latin_square() || !op.table.is_associative())
    throw VerificationError(label + ": twisted product is not a group");
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem candidate = g.mul(g.mul(op.psi(x), g.inv(x)), op.psi(g.inv(x)));
    if (op.table.op(x, candidate) != 0 || op.table.op(candidate, x) != 0)
      throw VerificationError(label + ": inverse formula failed at element " +
                              g.name_of(x));
  }
  op.abelian = op.table.is_abelian();
}

}  // namespace

CircleOp build_circle_op(PsiFamily& family, int n) {
  CircleOp op{n, twisted_product_table(family, n), family.psi_n(n), false};
  verify_circle_op(*family.group(), op);
  return op;
}

bool brace_relation_holds(const CayleyTable& dot, const CayleyTable& circ) {
  if (dot.order() != circ.order()) return false;
  const int n = dot.order();
  const std::vector<Elem> dinv = dot.all_inverses();
  for (Elem x = 0; x < n; ++x) {
    const Elem* cx = circ.row(x);
    for (Elem y = 0; y < n; ++y) {
      const Elem lead = dot.op(cx[y], dinv[x]);
      const Elem* dy = dot.row(y);
      for (Elem z = 0; z < n; ++z)
        if (cx[dy[z]] != dot.op(lead, cx[z])) return false;
    }
  }
  return true;
}

bool circle_recursion_holds(const PsiFamily& family, const CircleOp& lower,
                            const CircleOp& higher) {
  if (higher.n != lower.n + 1)
    throw InvalidParameter("recursion check needs consecutive operations");
  const FiniteGroup& g = *family.group();
  const AbelianMap& psi = family.base();
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem shifted = g.mul(x, psi(g.inv(x)));
    for (Elem y = 0; y < g.order(); ++y)
      if (higher.table.op(x, y) != g.mul(lower.table.op(shifted, y), psi(x)))
        return false;
  }
  return true;
}

bool ops_equal(PsiFamily& family, const CircleOp& a, const CircleOp& b) {
  const FiniteGroup& g = *family.group();
  const bool tables = a.table == b.table;
  bool central = true;
  for (Elem x = 0; x < g.order() && central; ++x)
    central = g.table().is_central(g.mul(a.psi(x), g.inv(b.psi(x))));
  if (tables != central)
    throw VerificationError("operation equality and centrality of the map difference disagree "
                            "for operations " + std::to_string(a.n) + " and " +
                            std::to_string(b.n));
  return tables;
}

std::optional<std::vector<Elem>> brace_isomorphism(const CayleyTable& dot_a,
                                                   const CayleyTable& circ_a,
                                                   const CayleyTable& dot_b,
                                                   const CayleyTable& circ_b) {
  return joint_table_isomorphism({&dot_a, &circ_a}, {&dot_b, &circ_b});
}

PhiHomReport check_phi_homomorphism(PsiFamily& family, const CircleOp& from,
                                    const CircleOp& to) {
  if (from.n != to.n + 1)
    throw InvalidParameter("the connecting map goes from operation n to operation n-1");
  const FiniteGroup& g = *family.group();
  const GMap phi = one_minus(family.base().map());
  PhiHomReport report;
  report.homomorphism = true;
  for (Elem x = 0; x < g.order() && report.homomorphism; ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (phi(from.table.op(x, y)) != to.table.op(phi(x), phi(y))) {
        report.homomorphism = false;
        break;
      }
  std::vector<char> hit(g.order(), 0);
  report.bijective = true;
  for (Elem x = 0; x < g.order(); ++x) {
    if (hit[phi(x)]) { report.bijective = false; break; }
    hit[phi(x)] = 1;
  }
  return report;
}

BraceBlock compute_block(const AbelianMap& psi, const BlockOptions& opts) {
  BraceBlock block{.group = psi.group(), .psi = psi};
  PsiFamily family(psi);

  // Scan until a product table repeats one already seen.  Equal operations
  // have equal successors (the verify suite checks that independently), so
  // the first repetition pins down the eventual period of the whole family,
  // and the distinct tables are exactly indices 0..preperiod+cycle-1.
  const int cap = opts.max_n > 0 ? opts.max_n : 4 * block.group->order();
  std::vector<CayleyTable> tables;
  std::map<std::vector<Elem>, int> first_seen;
  for (int n = 0;; ++n) {
    if (n > cap)
      throw VerificationError("twisted products did not repeat within " +
                              std::to_string(cap) + " steps; raise the scan limit");
    CayleyTable table = twisted_product_table(family, n);
    auto [it, fresh] = first_seen.try_emplace(table.data(), n);
    if (!fresh) {
      block.preperiod = it->second;
      block.cycle = n - it->second;
      break;
    }
    tables.push_back(std::move(table));
  }

  const int window = block.preperiod + block.cycle;
  block.ops.reserve(window);
  for (int n = 0; n < window; ++n) {
    CircleOp op{n, std::move(tables[n]), family.psi_n(n), false};
    verify_circle_op(*block.group, op);
    block.ops.push_back(std::move(op));
    if (n > 0 && !circle_recursion_holds(family, block.ops[n - 1], block.ops[n]))
      throw VerificationError("recursion between operations " + std::to_string(n - 1) +
                              " and " + std::to_string(n) + " failed");
  }
  // The step leaving the window lands back on the start of the cycle.
  CircleOp wrap = block.ops[block.preperiod];
  wrap.n = window;
  wrap.psi = family.psi_n(window);
  if (!circle_recursion_holds(family, block.ops[window - 1], wrap))
    throw VerificationError("recursion at the period boundary failed");

  // Once an operation is abelian the family freezes, so an abelian table can
  // only be the final distinct one, sitting on a fixed point of the scan.
  for (int n = 0; n + 1 < window; ++n)
    if (block.ops[n].abelian)
      throw VerificationError("an abelian operation was followed by a distinct one");
  if (block.ops[window - 1].abelian) {
    if (block.cycle != 1)
      throw VerificationError("an abelian operation did not freeze the family");
    block.stabilized_abelian = window - 1;
  }

  block.brace_matrix.assign(window, std::vector<char>(window, 0));
  for (int m = 0; m < window; ++m)
    for (int n = 0; n < window; ++n) {
      if (!brace_relation_holds(block.ops[m].table, block.ops[n].table))
        throw VerificationError("brace relation failed for operations " + std::to_string(m) +
                                " and " + std::to_string(n));
      block.brace_matrix[m][n] = 1;
    }
  return block;
}

}  // namespace braceblocks
