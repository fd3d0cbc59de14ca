#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "braceblocks/block.hpp"
#include "braceblocks/errors.hpp"
#include "braceblocks/gmap.hpp"
#include "braceblocks/group.hpp"
#include "braceblocks/spec.hpp"
#include "braceblocks/verify.hpp"
#include "braceblocks/ybe.hpp"

namespace py = pybind11;
using namespace braceblocks;

namespace {

// GroupPtr is shared_ptr-to-const, which does not fit pybind11's holder
// model directly; a one-field wrapper keeps ownership semantics simple.
struct PyGroup {
  GroupPtr p;
};

std::vector<std::vector<Elem>> table_rows(const CayleyTable& t) {
  std::vector<std::vector<Elem>> out(t.order());
  for (Elem a = 0; a < t.order(); ++a) out[a].assign(t.row(a), t.row(a) + t.order());
  return out;
}

CayleyTable table_from_rows(const std::vector<std::vector<Elem>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidParameter("multiplication table must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return CayleyTable(n, std::move(flat));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "finite groups, abelian-image endomorphisms, their twisted products, "
      "and the resulting Yang-Baxter solutions";

  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("order", [](const PyGroup& g) { return g.p->order(); })
      .def_property_readonly("abelian", [](const PyGroup& g) { return g.p->is_abelian(); })
      .def("mul", [](const PyGroup& g, Elem a, Elem b) { return g.p->mul(a, b); })
      .def("inv", [](const PyGroup& g, Elem a) { return g.p->inv(a); })
      .def("power", [](const PyGroup& g, Elem a, long long e) { return g.p->power(a, e); })
      .def("element_order", [](const PyGroup& g, Elem a) { return g.p->table().element_order(a); })
      .def("name_of", [](const PyGroup& g, Elem a) { return g.p->name_of(a); })
      .def_property_readonly("names", [](const PyGroup& g) { return g.p->names(); })
      .def_property_readonly("generators",
                             [](const PyGroup& g) {
                               std::vector<std::pair<std::string, Elem>> out;
                               for (const Generator& gen : g.p->generators())
                                 out.emplace_back(gen.name, gen.element);
                               return out;
                             })
      .def_property_readonly("center", [](const PyGroup& g) { return g.p->center(); })
      .def("table", [](const PyGroup& g) { return table_rows(g.p->table()); })
      .def("word", [](const PyGroup& g, const std::string& w) { return parse_word(*g.p, w); })
      .def("__len__", [](const PyGroup& g) { return g.p->order(); })
      .def("__repr__", [](const PyGroup& g) {
        return "<Group order " + std::to_string(g.p->order()) + ">";
      });

  m.def("group", [](const std::string& spec) { return PyGroup{parse_group_spec(spec)}; },
        py::arg("spec"), "Build a group from a description like 'dihedral:4'.");
  m.def("group_from_table",
        [](const std::vector<std::vector<Elem>>& rows) {
          return PyGroup{make_from_table(table_from_rows(rows))};
        },
        py::arg("rows"), "Build a group from a full multiplication table.");
  m.def("group_isomorphic",
        [](const PyGroup& a, const PyGroup& b) { return group_isomorphic(*a.p, *b.p); },
        py::arg("a"), py::arg("b"),
        "Witness bijection carrying one product to the other, or None.");

  py::class_<AbelianMap>(m, "AbelianMap")
      .def("__call__", [](const AbelianMap& am, Elem g) { return am(g); })
      .def_property_readonly("images", [](const AbelianMap& am) { return am.map().images(); })
      .def_property_readonly("image_set", [](const AbelianMap& am) { return am.map().image_set(); })
      .def_property_readonly("fixed_point_free", &AbelianMap::fixed_point_free)
      .def("__eq__", [](const AbelianMap& a, const AbelianMap& b) { return a == b; })
      .def("__repr__", [](const AbelianMap& am) {
        std::string r = "<AbelianMap";
        for (const Generator& gen : am.group()->generators())
          r += " " + gen.name + "->" + am.group()->name_of(am(gen.element));
        return r + ">";
      });

  m.def("abelian_map",
        [](const PyGroup& g, const std::string& images) {
          return AbelianMap::from_generator_images(g.p, parse_generator_images(*g.p, images));
        },
        py::arg("group"), py::arg("generator_images"),
        "Endomorphism with abelian image from text like 'r->1; s->r^2*s'.");
  m.def("abelian_map_from_images",
        [](const PyGroup& g, std::vector<Elem> images) {
          return AbelianMap::from_images(g.p, std::move(images));
        },
        py::arg("group"), py::arg("images"));
  m.def("enumerate_abelian_maps",
        [](const PyGroup& g) { return enumerate_abelian_maps(g.p); }, py::arg("group"),
        "Every endomorphism with abelian image, in generator-image order.");
  m.def("psi_n",
        [](const AbelianMap& psi, int n) { return psi_n_recursive(psi, n).images(); },
        py::arg("psi"), py::arg("n"),
        "Value table of the n-th derived map; index 0 is the zero map.");

  py::class_<BraceBlock>(m, "BraceBlock")
      .def_property_readonly("window", &BraceBlock::window)
      .def_readonly("preperiod", &BraceBlock::preperiod)
      .def_readonly("cycle", &BraceBlock::cycle)
      .def_readonly("stabilized_abelian", &BraceBlock::stabilized_abelian)
      .def("op_table", [](const BraceBlock& b, int i) { return table_rows(b.ops.at(i).table); })
      .def("op_abelian", [](const BraceBlock& b, int i) { return b.ops.at(i).abelian; })
      .def("psi_images", [](const BraceBlock& b, int i) { return b.ops.at(i).psi.images(); })
      .def("__repr__", [](const BraceBlock& b) {
        return "<BraceBlock window " + std::to_string(b.window()) + ">";
      });

  m.def("compute_block",
        [](const AbelianMap& psi, int max_n) {
          BlockOptions opts;
          opts.max_n = max_n;
          return compute_block(psi, opts);
        },
        py::arg("psi"), py::arg("max_n") = 0,
        "The family of twisted products, cut at the first repeated table; "
        "every operation and every brace relation is verified.");

  py::class_<Census>(m, "Census")
      .def_readonly("raw_distinct", &Census::raw_distinct)
      .def_readonly("brace_classes", &Census::brace_classes)
      .def_readonly("convention_count", &Census::convention_count)
      .def_readonly("cross_class_collision", &Census::cross_class_collision)
      .def_property_readonly("solution_count",
                             [](const Census& c) { return c.solutions.size(); })
      .def("solution",
           [](const Census& c, int i) {
             const YBESolution& s = c.solutions.at(static_cast<size_t>(i));
             const int n = s.order;
             std::vector<std::vector<Elem>> f(n), g(n);
             for (Elem x = 0; x < n; ++x) {
               f[x].assign(s.f.begin() + static_cast<size_t>(x) * n,
                           s.f.begin() + static_cast<size_t>(x + 1) * n);
               g[x].assign(s.g.begin() + static_cast<size_t>(x) * n,
                           s.g.begin() + static_cast<size_t>(x + 1) * n);
             }
             return py::make_tuple(f, g);
           })
      .def_property_readonly("entries", [](const Census& c) {
        std::vector<py::tuple> out;
        for (const CensusEntry& e : c.entries)
          out.push_back(py::make_tuple(e.m, e.n, e.opposite, e.solution, e.dup_of, e.brace_class));
        return out;
      });

  m.def("build_census", &build_census, py::arg("block"),
        "All solutions from every ordered pair of operations, both variants, "
        "each checked for the braid relation and non-degeneracy.");

  m.def("verify_properties",
        [](const AbelianMap& psi, int psi_n_limit, int max_n, bool map_level_only) {
          VerifyOptions opts;
          opts.psi_n_limit = psi_n_limit;
          opts.max_n = max_n;
          opts.map_level_only = map_level_only;
          std::vector<py::tuple> out;
          for (const CheckResult& r : verify_properties(psi, opts))
            out.push_back(py::make_tuple(r.name, r.pass, r.detail));
          return out;
        },
        py::arg("psi"), py::arg("psi_n_limit") = 12, py::arg("max_n") = 0,
        py::arg("map_level_only") = false,
        "Re-derive every claimed property from definitions; returns "
        "(name, passed, detail) per property.");
}
