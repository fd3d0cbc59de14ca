#include "braceblocks/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "braceblocks/errors.hpp"
#include "braceblocks/examples.hpp"
#include "braceblocks/report.hpp"
#include "braceblocks/spec.hpp"
#include "braceblocks/verify.hpp"

namespace braceblocks {

namespace {

std::string map_text(const AbelianMap& psi) {
  const FiniteGroup& g = *psi.group();
  std::string out;
  for (const Generator& gen : g.generators()) {
    if (!out.empty()) out += "; ";
    out += gen.name + "->" + g.name_of(psi(gen.element));
  }
  return out;
}

std::string join_names(const FiniteGroup& g, const std::vector<Elem>& elems) {
  std::string out;
  for (Elem e : elems) {
    if (!out.empty()) out += ", ";
    out += g.name_of(e);
  }
  return out;
}

AbelianMap map_from_text(const GroupPtr& g, const std::string& text) {
  return AbelianMap::from_generator_images(g, parse_generator_images(*g, text));
}

void print_group_text(const FiniteGroup& g, const std::string& origin) {
  std::cout << "group: " << origin << "\n";
  std::cout << "order: " << g.order() << "\n";
  std::cout << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n";
  std::cout << "center: " << join_names(g, g.center()) << " (size "
            << g.center().size() << ")\n";
  std::string gens;
  for (const Generator& gen : g.generators()) {
    if (!gens.empty()) gens += ", ";
    gens += gen.name;
  }
  std::cout << "generators: " << gens << "\n";
  const std::vector<int> cls = g.table().conjugacy_classes();
  std::cout << "conjugacy classes: "
            << (cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1) << "\n";
}

int cmd_group(const std::string& spec, const std::string& import_path,
              const std::string& export_path, bool json) {
  GroupPtr g;
  std::string origin;
  if (!import_path.empty()) {
    std::ifstream in(import_path);
    if (!in) throw InvalidParameter("cannot open '" + import_path + "' for reading");
    g = load_cayley_table(in);
    origin = import_path;
  } else {
    g = parse_group_spec(spec);
    origin = spec;
  }
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) throw InvalidParameter("cannot open '" + export_path + "' for writing");
    save_cayley_table(*g, out);
  }
  if (json) {
    nlohmann::json j = group_json(*g);
    j["source"] = origin;
    if (!export_path.empty()) j["exported_to"] = export_path;
    std::cout << j.dump(2) << "\n";
  } else {
    print_group_text(*g, origin);
    if (!export_path.empty()) std::cout << "table written to " << export_path << "\n";
  }
  return 0;
}

int cmd_maps(const std::string& spec, bool json) {
  GroupPtr g = parse_group_spec(spec);
  const auto maps = enumerate_abelian_maps(g);
  if (json) {
    nlohmann::json j;
    j["group"] = group_json(*g);
    j["count"] = maps.size();
    j["maps"] = nlohmann::json::array();
    for (const AbelianMap& m : maps) j["maps"].push_back(map_json(m));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: " << spec << " (order " << g->order() << ")\n";
    std::cout << "abelian-image endomorphisms: " << maps.size() << "\n";
    for (size_t i = 0; i < maps.size(); ++i) {
      std::cout << "[" << i << "] " << map_text(maps[i]);
      if (maps[i].map() == zero_map(g)) std::cout << "  (zero)";
      if (maps[i].fixed_point_free()) std::cout << "  (fixed point free)";
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_block(const std::string& spec, const std::string& mapspec, int max_n, bool json) {
  GroupPtr g = parse_group_spec(spec);
  AbelianMap psi = map_from_text(g, mapspec);
  BraceBlock block = compute_block(psi, BlockOptions{max_n});
  Census census = build_census(block);
  if (json) {
    nlohmann::json j;
    j["group"] = group_json(*g);
    j["group_spec"] = spec;
    j["map"] = map_json(psi);
    j["block"] = block_json(block);
    j["census"] = census_json(block, census);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "group: " << spec << " (order " << g->order() << ")\n";
  std::cout << "map: " << map_text(psi)
            << (psi.fixed_point_free() ? "  (fixed point free)" : "") << "\n";
  std::cout << "distinct operations: " << block.window() << " (preperiod "
            << block.preperiod << ", cycle " << block.cycle << ")\n";
  for (const CircleOp& op : block.ops)
    std::cout << "operation " << op.n << ": "
              << (op.abelian ? "abelian" : "nonabelian") << ", center size "
              << op.table.center().size() << "\n";
  if (block.stabilized_abelian >= 0)
    std::cout << "abelian from operation " << block.stabilized_abelian
              << " on; all later operations repeat it\n";
  std::cout << "brace relation verified for all " << block.window() * block.window()
            << " ordered pairs\n";
  std::cout << "brace classes: " << census.brace_classes << "\n";
  std::cout << "solution census (two per nonabelian-first class, one otherwise): "
            << census.convention_count << "\n";
  std::cout << "raw distinct solution tables: " << census.raw_distinct << "\n";
  return 0;
}

int cmd_solutions(const std::string& spec, const std::string& mapspec,
                  const std::string& dump_path, int max_n, bool json) {
  GroupPtr g = parse_group_spec(spec);
  AbelianMap psi = map_from_text(g, mapspec);
  BraceBlock block = compute_block(psi, BlockOptions{max_n});
  Census census = build_census(block);
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) throw InvalidParameter("cannot open '" + dump_path + "' for writing");
    dump_census_text(block, census, out);
  }
  if (json) {
    nlohmann::json j;
    j["group_spec"] = spec;
    j["map"] = map_json(psi);
    j["census"] = census_json(block, census);
    if (!dump_path.empty()) j["dumped_to"] = dump_path;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "group: " << spec << " (order " << g->order() << ")\n";
  std::cout << "map: " << map_text(psi) << "\n";
  std::cout << "distinct operations: " << block.window() << "\n";
  std::cout << "solutions emitted: " << census.entries.size() << " ("
            << block.window() * block.window() << " pairs x 2 variants)\n";
  std::cout << "raw distinct solution tables: " << census.raw_distinct << "\n";
  std::cout << "brace classes: " << census.brace_classes << "\n";
  std::cout << "census (two per nonabelian-first class, one otherwise): "
            << census.convention_count << "\n";
  if (census.cross_class_collision)
    std::cout << "note: identical tables arose from nonisomorphic pairs\n";
  if (!dump_path.empty()) std::cout << "solution tables written to " << dump_path << "\n";
  return 0;
}

int cmd_verify(const std::string& spec, const std::string& mapspec, bool seed_check,
               int max_n, bool json) {
  GroupPtr g = parse_group_spec(spec);
  AbelianMap psi = map_from_text(g, mapspec);
  VerifyOptions opts;
  opts.max_n = max_n;
  opts.map_level_only = seed_check;
  const auto checks = verify_properties(psi, opts);
  const bool ok = all_passed(checks);
  if (json) {
    nlohmann::json j;
    j["group_spec"] = spec;
    j["map"] = map_json(psi);
    j["checks"] = checks_json(checks);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: " << spec << " (order " << g->order() << ")\n";
    std::cout << "map: " << map_text(psi) << "\n";
    int passed = 0;
    for (const CheckResult& c : checks) {
      std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) std::cout << " — " << c.detail;
      std::cout << "\n";
      passed += c.pass;
    }
    std::cout << passed << "/" << checks.size() << " checks passed\n";
  }
  return ok ? 0 : 1;
}

int cmd_paper(const std::string& id, const std::map<std::string, int>& params, bool json) {
  ExampleReport rep = run_named_example(id, params);
  if (json) {
    nlohmann::json j;
    j["id"] = rep.id;
    j["group_spec"] = rep.group_spec;
    j["map_spec"] = rep.map_spec;
    j["claims"] = nlohmann::json::array();
    for (const ClaimLine& c : rep.claims) {
      nlohmann::json cl;
      cl["label"] = c.label;
      cl["computed"] = c.computed;
      cl["informational"] = c.informational;
      if (!c.informational) {
        cl["expected"] = c.expected;
        cl["ok"] = c.ok;
      }
      j["claims"].push_back(cl);
    }
    j["all_ok"] = rep.all_ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "example: " << rep.id << "\n";
    std::cout << "group: " << rep.group_spec << "\n";
    std::cout << "map: " << rep.map_spec << "\n";
    int checked = 0;
    for (const ClaimLine& c : rep.claims) {
      if (c.informational) {
        std::cout << "note:  " << c.label << ": " << c.computed << "\n";
        continue;
      }
      ++checked;
      std::cout << (c.ok ? "claim: " : "WRONG: ") << c.label << ": expected " << c.expected
                << ", computed " << c.computed << "\n";
    }
    std::cout << (rep.all_ok ? "all claims hold" : "some claims failed") << " (" << checked
              << " checked)\n";
  }
  return rep.all_ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "finite groups from named constructors, their abelian-image endomorphisms, the "
      "derived twisted products, and the resulting set-theoretic Yang-Baxter solutions"};
  app.require_subcommand(1);
  bool json = false;
  int max_n = 0;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--max-n", max_n,
                 "scan limit for the family of twisted products (default: 4x group order)");

  std::string spec, mapspec, import_path, export_path, dump_path, example_id;
  bool seed_check = false;

  CLI::App* group = app.add_subcommand(
      "group", "build a group and print order, center, abelianness");
  group->add_option("spec", spec,
                    "group description, e.g. dihedral:4, metacyclic:7,3,2, "
                    "product(dihedral:3,cyclic:2)");
  group->add_option("--import", import_path, "read a Cayley table from a file instead");
  group->add_option("--export", export_path, "write the Cayley table to a file");

  CLI::App* maps = app.add_subcommand(
      "maps", "enumerate all endomorphisms with abelian image");
  maps->add_option("spec", spec, "group description")->required();

  CLI::App* block = app.add_subcommand(
      "block", "build the family of twisted products for one map and verify it");
  block->add_option("spec", spec, "group description")->required();
  block->add_option("--map", mapspec, "generator images, e.g. \"r->1; s->r^2*s\"")
      ->required();

  CLI::App* solutions = app.add_subcommand(
      "solutions", "emit and verify the Yang-Baxter solutions of a block");
  solutions->add_option("spec", spec, "group description")->required();
  solutions->add_option("--map", mapspec, "generator images")->required();
  solutions->add_option("--dump", dump_path, "write all solution tables to this file");

  CLI::App* verify = app.add_subcommand(
      "verify", "re-derive every property of a map and its block from scratch");
  verify->add_option("spec", spec, "group description")->required();
  verify->add_option("--map", mapspec, "generator images")->required();
  verify->add_flag("--seed-check", seed_check, "stop after the checks on the map itself");

  CLI::App* paper = app.add_subcommand(
      "paper", "replay a named worked example and compare expected against computed");
  paper->add_option("id", example_id, "one of: d4, aff5, dn-fpf, dn-fix, sn, split, dndn, "
                                      "meta, meta2n")
      ->required();
  // --h would clash with the default -h help shorthand.
  paper->set_help_flag("--help", "print this help message and exit");
  int pn = 0, ph = 0, pk = 0, pb = 0, pj = 0;
  CLI::Option* on = paper->add_option("--n", pn, "size parameter (dn-*, sn, dndn)");
  CLI::Option* oh = paper->add_option("--h", ph, "metacyclic h (split, meta, meta2n)");
  CLI::Option* ok_opt = paper->add_option("--k", pk, "metacyclic k (split, meta, meta2n)");
  CLI::Option* ob = paper->add_option("--b", pb, "metacyclic b (split, meta, meta2n)");
  CLI::Option* oj = paper->add_option("--j", pj, "twist exponent (meta, meta2n)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (group->parsed()) {
      if (spec.empty() == import_path.empty())
        throw InvalidParameter("group needs exactly one of a spec or --import");
      return cmd_group(spec, import_path, export_path, json);
    }
    if (maps->parsed()) return cmd_maps(spec, json);
    if (block->parsed()) return cmd_block(spec, mapspec, max_n, json);
    if (solutions->parsed()) return cmd_solutions(spec, mapspec, dump_path, max_n, json);
    if (verify->parsed()) return cmd_verify(spec, mapspec, seed_check, max_n, json);
    if (paper->parsed()) {
      std::map<std::string, int> params;
      if (*on) params["n"] = pn;
      if (*oh) params["h"] = ph;
      if (*ok_opt) params["k"] = pk;
      if (*ob) params["b"] = pb;
      if (*oj) params["j"] = pj;
      return cmd_paper(example_id, params, json);
    }
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace braceblocks
