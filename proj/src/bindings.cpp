#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sublab/classes.hpp"
#include "sublab/corpus.hpp"
#include "sublab/errors.hpp"
#include "sublab/lattice.hpp"
#include "sublab/subnormal.hpp"
#include "sublab/suites.hpp"

namespace py = pybind11;
using namespace sublab;

namespace {

StepPolicy policy_from_name(const std::string& name, int t) {
  if (name == "subnormal") return StepPolicy::subnormal();
  if (name == "psub") return StepPolicy::p_sub();
  if (name == "kpsub") return StepPolicy::k_p_sub();
  if (name == "kpt") return StepPolicy::k_p_t(t);
  if (name == "fsub_uk") return StepPolicy::f_sub(FormationSpec::u_k(t));
  if (name == "kfsub_uk") return StepPolicy::k_f_sub(FormationSpec::u_k(t));
  throw ArgumentError("unknown policy: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "subgroup chain analysis for finite permutation groups";

  py::register_exception<DegreeError>(m, "DegreeError");
  py::register_exception<FormatError>(m, "FormatError");
  py::register_exception<CapacityError>(m, "CapacityError");
  py::register_exception<MembershipError>(m, "MembershipError");
  py::register_exception<ArgumentError>(m, "ArgumentError");

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>())
      .def_static("identity", &Permutation::identity)
      .def_static("from_cycles", &Permutation::from_cycles)
      .def("cycles", &Permutation::cycles)
      .def("order", &Permutation::order)
      .def("inverse", &Permutation::inverse)
      .def("degree", &Permutation::degree)
      .def("__eq__", [](const Permutation& a, const Permutation& b) {
        return a == b;
      })
      .def("__repr__", [](const Permutation& p) {
        return "Permutation(" + p.cycles() + ")";
      });
  m.def("compose", &compose);

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init<int, std::vector<Permutation>>())
      .def("degree", &PermGroup::degree)
      .def("order", &PermGroup::order)
      .def("exponent", &PermGroup::exponent)
      .def("contains", &PermGroup::contains)
      .def("generators", &PermGroup::generators)
      .def("elements", &PermGroup::elements);

  m.def("builtin_group", &builtin_group);
  m.def("builtin_names", &builtin_names);
  m.def("parse_group_file", &parse_group_file);
  m.def("serialize_group_file", &serialize_group_file);

  m.def("is_soluble", &is_soluble);
  m.def("is_nilpotent", &is_nilpotent);
  m.def("is_supersoluble", &is_supersoluble);
  m.def("is_ore_dispersive", &is_ore_dispersive);
  m.def("pt_admissible", &pt_admissible);
  m.def("in_class_ht", &in_class_Ht);
  m.def("in_ut0", &in_ut0);

  m.def(
      "is_subnormal",
      [](const PermGroup& G, const PermGroup& H, const std::string& policy,
         int t) {
        auto v = is_subnormal_variant(G, H, policy_from_name(policy, t), true);
        std::string text;
        if (v.subnormal && v.witness) {
          text = v.witness->render(*lattice_of(G));
        }
        return py::make_tuple(v.subnormal, text);
      },
      py::arg("group"), py::arg("subgroup"), py::arg("policy") = "subnormal",
      py::arg("t") = 1);

  m.def("residual_order", [](const PermGroup& G, int k) {
    return residual(G, FormationSpec::u_k(k)).order();
  });

  m.def("lattice_dot",
        [](const PermGroup& G) { return lattice_of(G)->dot(); });
  m.def("subgroup_orders", [](const PermGroup& G) {
    auto L = lattice_of(G);
    std::vector<std::uint64_t> orders;
    for (int i = 0; i < L->size(); ++i) orders.push_back(L->node(i).order);
    return orders;
  });
}
