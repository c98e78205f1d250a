// Copyright 2026 The g2jac Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "g2jac/cantor.hpp"
#include "g2jac/explicit_add.hpp"
#include "g2jac/figure.hpp"
#include "g2jac/group.hpp"
#include "g2jac/sweep.hpp"
#include "g2jac/text_format.hpp"

namespace py = pybind11;
using namespace g2jac;

namespace {

py::int_ to_py(u128 v) { return py::int_(py::str(to_decimal(v))); }

FieldElement from_py(const FieldModulus& m, const py::int_& value) {
  const py::int_ reduced = value.attr("__mod__")(to_py(m.value()));
  return FieldElement(m, parse_decimal(std::string(py::str(reduced))));
}

py::list coeffs_to_py(const Poly& poly) {
  py::list out;
  for (const FieldElement& c : poly.coeffs()) out.append(to_py(c.value()));
  return out;
}

Poly poly_from_py(const FieldModulus& m, const std::vector<py::int_>& coeffs) {
  std::vector<FieldElement> out;
  for (const auto& c : coeffs) out.push_back(from_py(m, c));
  return Poly(m, std::move(out));
}

py::tuple point_to_py(const AffinePoint& p) { return py::make_tuple(to_py(p.x.value()), to_py(p.y.value())); }

AffinePoint point_from_py(const Curve& curve, const py::int_& x, const py::int_& y) {
  return curve.point(from_py(curve.field(), x), from_py(curve.field(), y));
}

MumfordDivisor checked(const Curve& curve, MumfordDivisor d) {
  if (!validate(curve, d)) throw py::value_error("not a reduced divisor on this curve: " + format_divisor(d));
  return d;
}

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_g2jac, m) {
  m.doc() = "Explicit genus-2 Jacobian arithmetic over prime fields";

  py::class_<Curve>(m, "Curve")
      .def(py::init([](const py::int_& p, const std::vector<py::int_>& f) {
             const FieldModulus modulus(parse_decimal(std::string(py::str(p))));
             return Curve::validate(poly_from_py(modulus, f));
           }),
           py::arg("p"), py::arg("f"))
      .def_property_readonly("p", [](const Curve& c) { return to_py(c.field().value()); })
      .def_property_readonly("f", [](const Curve& c) { return coeffs_to_py(c.f()); })
      .def("is_on_curve",
           [](const Curve& c, const py::int_& x, const py::int_& y) {
             return c.is_on_curve({from_py(c.field(), x), from_py(c.field(), y)});
           })
      .def("lift_x",
           [](const Curve& c, const py::int_& x) {
             py::list out;
             for (const AffinePoint& p : c.lift_x(from_py(c.field(), x))) out.append(point_to_py(p));
             return out;
           })
      .def("enumerate_points",
           [](const Curve& c, std::uint64_t bound) {
             py::list out;
             for (const AffinePoint& p : c.enumerate_points(bound)) out.append(point_to_py(p));
             return out;
           },
           py::arg("bound") = kDefaultEnumerationBound)
      .def("__repr__", [](const Curve& c) { return "Curve(p=" + to_decimal(c.field().value()) + ", f=" + c.f().to_string() + ")"; });

  py::class_<MumfordDivisor>(m, "Divisor")
      .def_property_readonly("u", [](const MumfordDivisor& d) { return coeffs_to_py(d.u); })
      .def_property_readonly("v", [](const MumfordDivisor& d) { return coeffs_to_py(d.v); })
      .def_property_readonly("weight", &MumfordDivisor::weight)
      .def("is_identity", &MumfordDivisor::is_identity)
      .def("__eq__", [](const MumfordDivisor& a, const MumfordDivisor& b) { return a == b; })
      .def("__hash__", [](const MumfordDivisor& d) { return py::hash(py::str(format_divisor(d))); })
      .def("__str__", &format_divisor)
      .def("__repr__", [](const MumfordDivisor& d) { return "Divisor(" + format_divisor(d) + ")"; });

  m.def("divisor",
        [](const Curve& c, const std::vector<py::int_>& u, const std::vector<py::int_>& v) {
          return checked(c, {poly_from_py(c.field(), u), poly_from_py(c.field(), v)});
        },
        py::arg("curve"), py::arg("u"), py::arg("v"), "Validated divisor from ascending u and v coefficients.");
  m.def("parse_divisor", [](const Curve& c, const std::string& text) { return checked(c, parse_divisor(c.field(), text)); });
  m.def("identity", [](const Curve& c) { return MumfordDivisor::identity(c.field()); });
  m.def("from_points", [](const Curve& c, const py::tuple& p, const py::tuple& q) {
    return from_points(c, point_from_py(c, p[0], p[1]), point_from_py(c, q[0], q[1]));
  });
  m.def("from_single", [](const Curve& c, const py::tuple& p) { return from_single(c, point_from_py(c, p[0], p[1])); });
  m.def("validate", [](const Curve& c, const MumfordDivisor& d) { return validate(c, d); });
  m.def("negate", &negate);
  m.def("support_points", [](const Curve& c, const MumfordDivisor& d) -> py::object {
    const auto pts = support_points(c, d);
    if (!pts) return py::none();
    py::list out;
    for (const AffinePoint& p : *pts) out.append(point_to_py(p));
    return out;
  });

  m.def("classify", [](const Curve& c, const MumfordDivisor& a, const MumfordDivisor& b) {
    return std::string(case_name(classify(c, checked(c, a), checked(c, b)).kind));
  });
  m.def("add",
        [](const Curve& c, const MumfordDivisor& a, const MumfordDivisor& b) {
          OpCounters counters;
          const AdditionTrace trace = add_traced(c, checked(c, a), checked(c, b), &counters);
          py::dict info;
          info["case"] = std::string(case_name(trace.addition_case.kind));
          info["reason"] = trace.addition_case.reason;
          info["field_mults"] = counters.field.mults;
          info["field_invs"] = counters.field.invs;
          return py::make_tuple(trace.result, info);
        },
        "Explicit addition. Returns (sum, info) where info names the case taken.");
  m.def("double", [](const Curve& c, const MumfordDivisor& d) { return double_divisor(c, checked(c, d)); });
  m.def("cantor_add", [](const Curve& c, const MumfordDivisor& a, const MumfordDivisor& b) {
    return cantor_add(c, checked(c, a), checked(c, b));
  });
  m.def("scalar_mul", [](const Curve& c, const py::int_& n, const MumfordDivisor& d) {
    return scalar_mul(c, parse_decimal(std::string(py::str(n))), checked(c, d));
  });
  m.def("enumerate_jacobian", &enumerate_jacobian, py::arg("curve"), py::arg("bound") = kDefaultEnumerationBound);
  m.def("element_order", [](const Curve& c, const MumfordDivisor& d) { return element_order(c, checked(c, d)); });

  m.def("verify",
        [](const Curve& c, std::uint64_t bound, unsigned threads) {
          py::gil_scoped_release release;
          VerifyReport report = verify_exhaustive(c, bound, threads);
          py::gil_scoped_acquire acquire;
          return json_to_py(report.to_json());
        },
        py::arg("curve"), py::arg("bound") = kDefaultEnumerationBound, py::arg("threads") = 0);
  m.def("bench",
        [](std::uint64_t iterations, std::uint64_t seed) {
          return json_to_py(run_bench(default_bench_curve(seed), iterations, seed).to_json(false));
        },
        py::arg("iterations") = 1000, py::arg("seed") = 1);
  m.def("figure_svg", [](int case_id) { return render_svg(build_figure(case_id)); });
}
