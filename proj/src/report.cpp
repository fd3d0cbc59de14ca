#include "braceblocks/report.hpp"

#include <algorithm>
#include <ostream>

namespace braceblocks {

using nlohmann::json;

json group_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  json gens = json::array();
  for (const Generator& gen : g.generators())
    gens.push_back({{"name", gen.name}, {"element", g.name_of(gen.element)}});
  j["generators"] = gens;
  json center = json::array();
  for (Elem z : g.center()) center.push_back(g.name_of(z));
  j["center"] = center;
  const std::vector<int> cls = g.table().conjugacy_classes();
  j["conjugacy_classes"] = *std::max_element(cls.begin(), cls.end()) + 1;
  return j;
}

json map_json(const AbelianMap& psi) {
  const FiniteGroup& g = *psi.group();
  json j;
  json images = json::object();
  for (Elem a = 0; a < g.order(); ++a) images[g.name_of(a)] = g.name_of(psi(a));
  j["images"] = images;
  json gen_images = json::object();
  for (const Generator& gen : g.generators())
    gen_images[gen.name] = g.name_of(psi(gen.element));
  j["generator_images"] = gen_images;
  j["image_size"] = psi.map().image_size();
  j["fixed_point_free"] = psi.fixed_point_free();
  return j;
}

json checks_json(const std::vector<CheckResult>& results) {
  json arr = json::array();
  for (const CheckResult& r : results) {
    json item;
    item["name"] = r.name;
    item["pass"] = r.pass;
    if (!r.detail.empty()) item["detail"] = r.detail;
    arr.push_back(item);
  }
  json j;
  j["checks"] = arr;
  j["all_passed"] = all_passed(results);
  return j;
}

json block_json(const BraceBlock& block) {
  json j;
  j["group"] = group_json(*block.group);
  j["map"] = map_json(block.psi);
  j["preperiod"] = block.preperiod;
  j["cycle"] = block.cycle;
  j["window"] = block.window();
  if (block.stabilized_abelian >= 0)
    j["stabilized_abelian_from"] = block.stabilized_abelian;
  else
    j["stabilized_abelian_from"] = nullptr;

  std::vector<int> op_class(block.window(), -1);
  std::vector<int> reps;
  for (int i = 0; i < block.window(); ++i) {
    for (int r : reps)
      if (table_isomorphism(block.ops[r].table, block.ops[i].table)) {
        op_class[i] = op_class[r];
        break;
      }
    if (op_class[i] < 0) {
      op_class[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  json ops = json::array();
  for (const CircleOp& op : block.ops) {
    json o;
    o["n"] = op.n;
    o["abelian"] = op.abelian;
    o["isomorphism_class"] = op_class[op.n];
    o["center_size"] = static_cast<int>(op.table.center().size());
    ops.push_back(o);
  }
  j["operations"] = ops;

  json matrix = json::array();
  for (const auto& row : block.brace_matrix) {
    json r = json::array();
    for (char c : row) r.push_back(c != 0);
    matrix.push_back(r);
  }
  j["pair_relation_verified"] = matrix;
  return j;
}

json census_json(const BraceBlock& block, const Census& census) {
  json j;
  j["window"] = block.window();
  j["solutions_emitted"] = static_cast<int>(census.entries.size());
  j["raw_distinct"] = census.raw_distinct;
  j["pair_classes"] = census.brace_classes;
  j["count_by_class_convention"] = census.convention_count;
  j["cross_class_collision"] = census.cross_class_collision;
  json entries = json::array();
  for (const CensusEntry& e : census.entries) {
    json item;
    item["m"] = e.m;
    item["n"] = e.n;
    item["variant"] = e.opposite ? "R'" : "R";
    item["pair_class"] = e.brace_class;
    if (e.dup_of >= 0)
      item["duplicate_of"] = e.dup_of;
    else
      item["duplicate_of"] = nullptr;
    entries.push_back(item);
  }
  j["entries"] = entries;
  return j;
}

void dump_solution_text(const YBESolution& r, int m, int n, bool opposite, std::ostream& out) {
  out << r.order << " " << m << " " << n << " " << (opposite ? "R'" : "R") << "\n";
  for (Elem x = 0; x < r.order; ++x)
    for (Elem y = 0; y < r.order; ++y)
      out << x << " " << y << " " << r.fval(x, y) << " " << r.gval(x, y) << "\n";
}

void dump_census_text(const BraceBlock& block, const Census& census, std::ostream& out) {
  (void)block;
  bool first = true;
  for (const CensusEntry& e : census.entries) {
    if (!first) out << "\n";
    first = false;
    dump_solution_text(census.solutions[e.solution], e.m, e.n, e.opposite, out);
  }
}

}  // namespace braceblocks
