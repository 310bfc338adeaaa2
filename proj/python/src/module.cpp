#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "genord/chartab.hpp"
#include "genord/classalg.hpp"
#include "genord/classes.hpp"
#include "genord/cyclotomic.hpp"
#include "genord/fixture.hpp"
#include "genord/identities.hpp"
#include "genord/nilpotent.hpp"
#include "genord/oracle.hpp"

namespace py = pybind11;
using namespace genord;

namespace {

py::int_ to_py_int(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

struct PyGroup {
  std::shared_ptr<PermGroup> group;

  Permutation parse_element(const std::string& cycles) const {
    return Permutation::from_cycles(cycles, group->degree());
  }
};

struct PyClasses {
  std::shared_ptr<PermGroup> group;
  std::shared_ptr<ClassTable> table;
};

PyGroup make_group(std::size_t degree, const std::vector<std::vector<long long>>& generators) {
  std::vector<Permutation> gens;
  for (const auto& images : generators) {
    if (images.size() != degree)
      throw std::invalid_argument("generator length does not match the degree");
    gens.push_back(Permutation::from_images_1based(images));
  }
  return {std::make_shared<PermGroup>(std::move(gens))};
}

PyGroup load_group(const std::string& path) {
  GroupFixture fixture = load_group_fixture(path);
  return {std::make_shared<PermGroup>(group_from_fixture(fixture))};
}

PyClasses make_classes(const PyGroup& g, std::uint64_t cap) {
  return {g.group, std::make_shared<ClassTable>(ClassTable::build(*g.group, cap))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact generalized-order computations on finite permutation groups";

  py::register_exception<EnumerationCapError>(m, "EnumerationCapError", PyExc_RuntimeError);
  py::register_exception<CharTableError>(m, "CharTableError", PyExc_ValueError);
  py::register_exception<CycloParseError>(m, "CycloParseError", PyExc_ValueError);
  py::register_exception<FixtureError>(m, "FixtureError", PyExc_ValueError);

  py::class_<PyGroup>(m, "Group")
      .def(py::init(&make_group), py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", [](const PyGroup& g) { return g.group->degree(); })
      .def_property_readonly("order",
                             [](const PyGroup& g) { return to_py_int(g.group->order()); })
      .def_property_readonly("transitive",
                             [](const PyGroup& g) { return g.group->is_transitive(); })
      .def("contains",
           [](const PyGroup& g, const std::string& cycles) {
             return g.group->contains(g.parse_element(cycles));
           },
           py::arg("cycles"))
      .def("element_order",
           [](const PyGroup& g, const std::string& cycles) {
             return g.parse_element(cycles).order();
           },
           py::arg("cycles"))
      .def("classes", &make_classes, py::arg("cap") = kDefaultEnumCap)
      .def("check_identities",
           [](const PyGroup& g, int samples, std::uint64_t seed) {
             return check_commutator_identities(*g.group, samples, seed).all_pass;
           },
           py::arg("samples") = 1000, py::arg("seed") = 0)
      .def("lower_central_series_orders",
           [](const PyGroup& g) {
             LowerCentralSeries series = lower_central_series(*g.group);
             std::vector<py::int_> orders;
             for (const auto& term : series.terms) orders.push_back(to_py_int(term.order()));
             return py::make_tuple(orders, series.nilpotent,
                                   series.nilpotent ? py::cast(series.nilpotency_class)
                                                    : py::none());
           })
      .def("brute_generalized_order",
           [](const PyGroup& g, const std::string& cycles, std::uint64_t cap) {
             return brute_generalized_order(*g.group, g.parse_element(cycles), cap);
           },
           py::arg("cycles"), py::arg("cap") = kDefaultOracleCap);

  py::class_<PyClasses>(m, "Classes")
      .def_property_readonly("num_classes",
                             [](const PyClasses& c) { return c.table->num_classes(); })
      .def("size", [](const PyClasses& c, int i) { return c.table->cls(i).size; })
      .def("element_order",
           [](const PyClasses& c, int i) { return c.table->cls(i).element_order; })
      .def("real", [](const PyClasses& c, int i) { return c.table->cls(i).real; })
      .def("representative",
           [](const PyClasses& c, int i) { return c.table->cls(i).representative.cycle_string(); })
      .def("inverse_class", [](const PyClasses& c, int i) { return c.table->inverse_class(i); })
      .def("power_classes", [](const PyClasses& c, int i) { return c.table->power_classes(i); })
      .def("class_of",
           [](const PyClasses& c, const std::string& cycles) {
             return c.table->class_of(
                 Permutation::from_cycles(cycles, c.group->degree()));
           },
           py::arg("cycles"))
      .def("census",
           [](const PyClasses& c) {
             RealCensus census = c.table->real_census();
             return py::make_tuple(census.lambda, census.mu);
           })
      .def("alpha",
           [](const PyClasses& c, int cls, int k, const std::string& method,
              std::uint64_t oracle_cap) {
             if (method == "direct") return to_py_int(alpha_direct(*c.table, cls, k));
             if (method == "oracle") {
               std::vector<Permutation> members;
               for (std::uint32_t id : c.table->class_members(cls))
                 members.push_back(c.table->index().element(id));
               return to_py_int(brute_alpha(*c.group, members, k, oracle_cap));
             }
             throw std::invalid_argument("method must be 'direct' or 'oracle'");
           },
           py::arg("cls"), py::arg("k"), py::arg("method") = "direct",
           py::arg("oracle_cap") = kDefaultOracleCap)
      .def("generalized_order",
           [](const PyClasses& c, int cls, int k_cap) {
             AlphaProfile profile = generalized_order(*c.table, cls, k_cap);
             std::vector<py::int_> alphas;
             for (const auto& a : profile.alphas) alphas.push_back(to_py_int(a));
             return py::make_tuple(profile.generalized_order
                                       ? py::cast(*profile.generalized_order)
                                       : py::none(),
                                   alphas);
           },
           py::arg("cls"), py::arg("k_cap") = 0)
      .def("generalized_exponent",
           [](const PyClasses& c) { return generalized_exponent(*c.table); });

  py::class_<CharacterTable>(m, "CharacterTable")
      .def_static("load", &CharacterTable::load_file, py::arg("path"))
      .def_property_readonly("name", &CharacterTable::name)
      .def_property_readonly("num_classes", &CharacterTable::num_classes)
      .def_property_readonly("order",
                             [](const CharacterTable& t) { return to_py_int(t.order()); })
      .def("validate",
           [](const CharacterTable& t) {
             auto v = t.validate();
             return py::make_tuple(v.ok, v.failures);
           })
      .def("class_size", [](const CharacterTable& t, int i) { return t.classes()[i].size; })
      .def("class_element_order",
           [](const CharacterTable& t, int i) { return t.classes()[i].element_order; })
      .def("class_real", &CharacterTable::class_real, py::arg("cls"))
      .def("census",
           [](const CharacterTable& t) {
             RealCensus census = t.real_census();
             return py::make_tuple(census.lambda, census.mu);
           })
      .def("alpha",
           [](const CharacterTable& t, int cls, int k) { return to_py_int(t.alpha(cls, k)); },
           py::arg("cls"), py::arg("k"))
      .def("generalized_order",
           [](const CharacterTable& t, int cls, int k_cap) {
             AlphaProfile profile = t.generalized_order(cls, k_cap);
             return profile.generalized_order ? py::cast(*profile.generalized_order)
                                              : py::none();
           },
           py::arg("cls"), py::arg("k_cap") = 0)
      .def("generalized_exponent", &CharacterTable::generalized_exponent)
      .def("value",
           [](const CharacterTable& t, int character, int cls) {
             return t.value(character, cls).str();
           },
           py::arg("character"), py::arg("cls"));

  m.def("load_group", &load_group, py::arg("path"),
        "load a group fixture file and build its index");
  m.def("cyclo_eval",
        [](const std::string& text) { return Cyclotomic::parse(text).str(); },
        py::arg("text"), "canonical form of a cyclotomic expression");
  m.def("cyclo_as_integer",
        [](const std::string& text) -> py::object {
          auto value = Cyclotomic::parse(text).as_integer();
          if (!value) return py::none();
          return to_py_int(*value);
        },
        py::arg("text"));
}
