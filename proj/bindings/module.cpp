#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "propunit/oracle.hpp"
#include "propunit/orders.hpp"
#include "propunit/sweep.hpp"
#include "propunit/transform.hpp"

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace propunit;

namespace pybind11 {
namespace detail {

// exact bridge to fractions.Fraction; ints accepted, floats rejected
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("Fraction"));

  bool load(handle src, bool) {
    object num, den;
    if (PyLong_Check(src.ptr())) {
      num = reinterpret_borrow<object>(src);
      den = int_(1);
    } else if (hasattr(src, "numerator") && hasattr(src, "denominator")) {
      num = src.attr("numerator");
      den = src.attr("denominator");
      if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr())) return false;
    } else {
      return false;
    }
    const std::string ns = str(num), ds = str(den);
    try {
      value = Rational(Integer(ns), Integer(ds));
    } catch (...) {
      return false;
    }
    return true;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    object big_num = reinterpret_steal<object>(
        PyLong_FromString(numerator(r).str().c_str(), nullptr, 10));
    object big_den = reinterpret_steal<object>(
        PyLong_FromString(denominator(r).str().c_str(), nullptr, 10));
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(big_num, big_den).release();
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using PyRep = std::vector<std::pair<Rational, Rational>>;

Representation rep_of(const PyRep& v) {
  Representation rep;
  rep.intervals.reserve(v.size());
  for (const auto& [l, r] : v) rep.intervals.emplace_back(l, r);
  return rep;
}

PyRep py_of(const Representation& rep) {
  PyRep v;
  v.reserve(rep.intervals.size());
  for (const auto& iv : rep.intervals) v.emplace_back(iv.left, iv.right);
  return v;
}

py::object py_of_opt(const std::optional<Representation>& rep) {
  if (!rep) return py::none();
  return py::cast(py_of(*rep));
}

}  // namespace

PYBIND11_MODULE(_propunit, m) {
  m.doc() = "exact interval representation toolkit";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_readonly("n", &Graph::n)
      .def("adj", &Graph::adj, py::arg("u"), py::arg("v"))
      .def("set_edge", &Graph::set_edge, py::arg("u"), py::arg("v"))
      .def("edge_count", &Graph::edge_count)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<ClawWitness>(m, "ClawWitness")
      .def_readonly("center", &ClawWitness::center)
      .def_readonly("leaves", &ClawWitness::leaves)
      .def("__repr__", [](const ClawWitness& w) {
        return "ClawWitness(center=" + std::to_string(w.center) + ", leaves=(" +
               std::to_string(w.leaves[0]) + ", " + std::to_string(w.leaves[1]) + ", " +
               std::to_string(w.leaves[2]) + "))";
      });

  py::class_<Poset>(m, "Poset")
      .def(py::init<int>(), py::arg("n"))
      .def_readonly("n", &Poset::n)
      .def("less", &Poset::less, py::arg("x"), py::arg("y"))
      .def("incomparable", &Poset::incomparable, py::arg("x"), py::arg("y"))
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; });

  py::class_<TwoPlusTwoWitness>(m, "TwoPlusTwoWitness")
      .def_readonly("a", &TwoPlusTwoWitness::a)
      .def_readonly("b", &TwoPlusTwoWitness::b)
      .def_readonly("c", &TwoPlusTwoWitness::c)
      .def_readonly("d", &TwoPlusTwoWitness::d);

  py::class_<OnePlusThreeWitness>(m, "OnePlusThreeWitness")
      .def_readonly("isolated", &OnePlusThreeWitness::isolated)
      .def_readonly("chain", &OnePlusThreeWitness::chain);

  py::enum_<OrderClass>(m, "OrderClass")
      .value("linear_order", OrderClass::linear_order)
      .value("semiorder", OrderClass::semiorder)
      .value("interval_order", OrderClass::interval_order)
      .value("poset", OrderClass::poset);

  py::class_<Classification>(m, "Classification")
      .def_readonly("cls", &Classification::cls)
      .def_property_readonly("values",
                             [](const Classification& c) -> py::object {
                               if (!c.values) return py::none();
                               return py::cast(c.values->f);
                             })
      .def_property_readonly(
          "rep", [](const Classification& c) { return py_of_opt(c.rep); })
      .def_property_readonly("one_plus_three",
                             [](const Classification& c) -> py::object {
                               if (!c.one_plus_three) return py::none();
                               return py::cast(*c.one_plus_three);
                             })
      .def_property_readonly("two_plus_two", [](const Classification& c) -> py::object {
        if (!c.two_plus_two) return py::none();
        return py::cast(*c.two_plus_two);
      });

  py::class_<SweepStats>(m, "SweepStats")
      .def_readonly("graphs", &SweepStats::graphs)
      .def_readonly("unit_feasible", &SweepStats::unit_feasible)
      .def_readonly("interval", &SweepStats::interval)
      .def_readonly("clawed", &SweepStats::clawed)
      .def_readonly("to_unit_ok", &SweepStats::to_unit_ok)
      .def_readonly("disagreements", &SweepStats::disagreements)
      .def_readonly("soundness_failures", &SweepStats::soundness_failures)
      .def_readonly("witness_failures", &SweepStats::witness_failures)
      .def("clean", &SweepStats::clean);

  m.def("is_proper", [](const PyRep& v) { return is_proper(rep_of(v)); });
  m.def("is_unit", [](const PyRep& v) { return is_unit(rep_of(v)); });
  m.def("canonicalize", [](const PyRep& v) { return py_of(canonicalize(rep_of(v))); });
  m.def("intersection_graph", [](const PyRep& v) { return intersection_graph(rep_of(v)); });
  m.def("find_claw", [](const Graph& g) -> py::object {
    auto w = find_claw(g);
    if (!w) return py::none();
    return py::cast(*w);
  });
  m.def("properize", [](const PyRep& v) -> py::object {
    auto out = properize(rep_of(v));
    if (std::holds_alternative<ClawWitness>(out))
      return py::cast(std::get<ClawWitness>(out));
    return py::cast(py_of(std::get<ProperizeResult>(out).rep));
  });
  m.def("unitize", [](const PyRep& v) { return py_of(unitize(rep_of(v)).rep); });
  m.def("to_unit", [](const Graph& g, const PyRep& v) -> py::object {
    auto out = to_unit(g, rep_of(v));
    if (std::holds_alternative<ClawWitness>(out))
      return py::cast(std::get<ClawWitness>(out));
    return py::cast(py_of(std::get<ToUnitResult>(out).rep));
  });

  m.def("poset_from_relation",
        [](int n, const std::vector<std::pair<int, int>>& pairs) {
          auto res = poset_from_relation(n, pairs);
          if (std::holds_alternative<std::vector<int>>(res)) {
            const auto& cyc = std::get<std::vector<int>>(res);
            std::string msg = "relation contains a cycle:";
            for (size_t i = 0; i < cyc.size(); ++i)
              msg += (i ? " < " : " ") + std::to_string(cyc[i]);
            throw std::invalid_argument(msg);
          }
          return std::get<Poset>(res);
        },
        py::arg("n"), py::arg("pairs"));
  m.def("interval_order_of", [](const PyRep& v) { return interval_order_of(rep_of(v)); });
  m.def("incomparability_graph", &incomparability_graph);
  m.def("check_semiorder_axioms", &check_semiorder_axioms);
  m.def("semiorder_values",
        [](const Poset& p, int cap) -> py::object {
          auto out = semiorder_values(p, cap);
          if (std::holds_alternative<ValueFunction>(out))
            return py::cast(std::get<ValueFunction>(out).f);
          if (std::holds_alternative<OnePlusThreeWitness>(out))
            return py::cast(std::get<OnePlusThreeWitness>(out));
          return py::cast(std::get<NotIntervalOrder>(out).witness);
        },
        py::arg("p"), py::arg("cap") = 6);
  m.def("classify", &classify, py::arg("p"), py::arg("cap") = 6);

  m.def("interval_rep_brute",
        [](const Graph& g, int cap) { return py_of_opt(interval_rep_brute(g, cap)); },
        py::arg("g"), py::arg("cap") = 8);
  m.def("unit_rep_feasible",
        [](const Graph& g, int cap) { return py_of_opt(unit_rep_feasible(g, cap)); },
        py::arg("g"), py::arg("cap") = 7);
  m.def("interval_rep_of_poset",
        [](const Poset& p, int cap) { return py_of_opt(interval_rep_of_poset(p, cap)); },
        py::arg("p"), py::arg("cap") = 6);

  m.def("run_sweep",
        [](int n, int jobs, int cap) { return run_sweep(n, jobs, nullptr, cap); },
        py::arg("n"), py::arg("jobs") = 1, py::arg("cap") = 7);
}
