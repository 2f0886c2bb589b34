#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "loctest/deciders.hpp"
#include "loctest/harness.hpp"
#include "loctest/verdict_json.hpp"

namespace py = pybind11;
using namespace loctest;

namespace {

DecideOptions decide_options(std::size_t cap, std::size_t product_cap) {
  DecideOptions opts;
  opts.semigroup_cap = cap;
  opts.graph.product_cap = product_cap;
  return opts;
}

Instance as_instance(const py::object& obj) {
  if (py::isinstance<Dfa>(obj)) return obj.cast<Dfa>();
  if (py::isinstance<FiniteSemigroup>(obj)) return obj.cast<FiniteSemigroup>();
  throw py::type_error("instance must be a Dfa or a FiniteSemigroup");
}

std::string instance_repr(const Dfa& d) {
  std::ostringstream s;
  s << "<Dfa states=" << d.state_count() << " letters=" << d.alphabet_size() << '>';
  return s.str();
}

}  // namespace

PYBIND11_MODULE(_loctest, m) {
  m.doc() = "Decide local testability and local idempotency of automata and semigroups";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Dfa>(m, "Dfa")
      .def(py::init(&make_dfa), py::arg("states"), py::arg("letters"), py::arg("delta"),
           py::arg("letter_names") = std::vector<std::string>{},
           "Row-major delta, -1 for undefined transitions.")
      .def_property_readonly("state_count", &Dfa::state_count)
      .def_property_readonly("alphabet_size", &Dfa::alphabet_size)
      .def_property_readonly("letter_names", &Dfa::letter_names)
      .def_property_readonly("transitions", [](const Dfa& d) {
        return std::vector<State>(d.transitions().begin(), d.transitions().end());
      })
      .def("delta", &Dfa::delta, py::arg("state"), py::arg("letter"))
      .def("apply", [](const Dfa& d, State p, const Word& w) { return apply(d, p, w); },
           py::arg("state"), py::arg("word"))
      .def("serialize", &serialize_dfa)
      .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; })
      .def("__repr__", &instance_repr);

  py::class_<FiniteSemigroup>(m, "FiniteSemigroup")
      .def_static("from_table", &FiniteSemigroup::from_table, py::arg("order"), py::arg("table"))
      .def_property_readonly("order", &FiniteSemigroup::order)
      .def("product", &FiniteSemigroup::product)
      .def("table", &FiniteSemigroup::table)
      .def("has_words", &FiniteSemigroup::has_words)
      .def("word", &FiniteSemigroup::word)
      .def("opposite", &FiniteSemigroup::opposite)
      .def("idempotents", [](const FiniteSemigroup& s) { return idempotents(s); })
      .def("serialize", &serialize_cayley);

  m.attr("DEFAULT_CAP") = kDefaultSemigroupCap;
  m.attr("DEFAULT_PRODUCT_CAP") = kDefaultProductCap;

  m.def("parse_dfa", &parse_dfa, py::arg("text"));
  m.def("parse_cayley", &parse_cayley, py::arg("text"));
  m.def(
      "transition_semigroup",
      [](const Dfa& d, std::size_t cap) { return transition_semigroup(d, cap).semigroup; },
      py::arg("dfa"), py::arg("cap") = kDefaultSemigroupCap);

  m.def(
      "_decide_json",
      [](const py::object& obj, const std::string& property, const std::string& route,
         std::size_t cap, std::size_t product_cap) {
        const Instance instance = as_instance(obj);
        const PropertyId p = parse_property(property);
        const Route r = parse_route(route);
        Verdict v;
        {
          py::gil_scoped_release release;
          v = decide(instance, p, r, decide_options(cap, product_cap));
        }
        return to_json(v).dump();
      },
      py::arg("instance"), py::arg("property"), py::arg("route"), py::arg("cap"),
      py::arg("product_cap"));

  m.def(
      "_verify_witness_json",
      [](const py::object& obj, const std::string& verdict) {
        return verify_witness(as_instance(obj), verdict_from_json(nlohmann::json::parse(verdict)));
      },
      py::arg("instance"), py::arg("verdict"));

  m.def(
      "random_dfas",
      [](std::size_t states, std::size_t letters, double completeness, std::uint64_t seed,
         std::size_t count) { return random_dfas({states, letters, completeness, seed, count}); },
      py::arg("states"), py::arg("letters"), py::arg("completeness") = 1.0, py::arg("seed") = 0,
      py::arg("count") = 1);
  m.def("enumerate_dfas", &enumerate_dfas, py::arg("states"), py::arg("letters"),
        py::arg("complete_only") = true);

  m.def(
      "_cross_validate",
      [](const std::vector<Dfa>& instances, std::size_t cap, unsigned jobs, bool keep_going,
         const std::string& format) {
        CrossOptions opts;
        opts.semigroup_cap = cap;
        opts.jobs = jobs;
        opts.stop_on_disagreement = !keep_going;
        const ReportFormat f = parse_report_format(format);
        py::gil_scoped_release release;
        return format_report(cross_validate(instances, opts, "python"), f);
      },
      py::arg("instances"), py::arg("cap"), py::arg("jobs"), py::arg("keep_going"),
      py::arg("format"));
}
