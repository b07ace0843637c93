#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gravibounce/airy.hpp"
#include "gravibounce/bouncer.hpp"
#include "gravibounce/constants.hpp"
#include "gravibounce/emission.hpp"
#include "gravibounce/errors.hpp"
#include "gravibounce/quadrupole.hpp"
#include "gravibounce/report.hpp"

namespace py = pybind11;
using namespace gravibounce;

PYBIND11_MODULE(_gravibounce, m) {
  m.doc() = "Quantum bouncer eigenstates, quadrupole matrix elements and graviton emission rates";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::class_<PhysicalConstants>(m, "PhysicalConstants")
      .def(py::init<double, double, double, double, double>(), py::arg("hbar"), py::arg("c"),
           py::arg("G"), py::arg("m"), py::arg("g"))
      .def_property_readonly("hbar", &PhysicalConstants::hbar)
      .def_property_readonly("c", &PhysicalConstants::c)
      .def_property_readonly("G", &PhysicalConstants::G)
      .def_property_readonly("m", &PhysicalConstants::m)
      .def_property_readonly("g", &PhysicalConstants::g)
      .def_property_readonly("m_planck", &PhysicalConstants::m_planck)
      .def("serialize", &serialize_constants)
      .def(py::self == py::self)
      .def("__repr__", [](const PhysicalConstants& k) {
        std::ostringstream out;
        out << "PhysicalConstants(hbar=" << k.hbar() << ", c=" << k.c() << ", G=" << k.G()
            << ", m=" << k.m() << ", g=" << k.g() << ")";
        return out.str();
      });

  m.def("default_constants", &default_constants);
  m.def("load_constants", [](const std::string& path) { return load_constants(path); },
        py::arg("path"));
  m.def("parse_constants", [](const std::string& text) {
    std::istringstream in(text);
    return parse_constants(in);
  }, py::arg("text"));

  m.def("ai", &airy::ai, py::arg("x"));
  m.def("ai_prime", &airy::ai_prime, py::arg("x"));
  m.def("bs_zero", &airy::bs_zero, py::arg("n"));
  m.def("airy_zero", [](std::size_t n) { return airy::airy_zero(n).lambda; }, py::arg("n"),
        "Magnitude of the n-th negative zero of Ai.");

  py::class_<BouncerScales>(m, "BouncerScales")
      .def(py::init<double, double>(), py::arg("z0"), py::arg("e0"))
      .def_readonly("z0", &BouncerScales::z0)
      .def_readonly("e0", &BouncerScales::e0);
  m.def("scales", &scales, py::arg("constants"));

  py::class_<EigenState>(m, "EigenState")
      .def_readonly("n", &EigenState::n)
      .def_readonly("lambda_", &EigenState::lambda)
      .def_readonly("energy", &EigenState::energy)
      .def_readonly("norm_const", &EigenState::norm_const);
  m.def("eigenstate", &eigenstate, py::arg("n"), py::arg("scales"));
  m.def("wavefunction", &wavefunction, py::arg("state"), py::arg("scales"), py::arg("z"));

  py::class_<QuadrupoleElement>(m, "QuadrupoleElement")
      .def_readonly("k", &QuadrupoleElement::k)
      .def_readonly("n", &QuadrupoleElement::n)
      .def_readonly("dimensionless", &QuadrupoleElement::dimensionless)
      .def_readonly("physical", &QuadrupoleElement::physical)
      .def_readonly("q_moment", &QuadrupoleElement::q_moment);
  m.def("element_closed", &element_closed, py::arg("k"), py::arg("n"), py::arg("scales"),
        py::arg("mass"));
  m.def("element_quadrature", &element_quadrature, py::arg("k"), py::arg("n"),
        py::arg("scales"), py::arg("mass"));

  py::class_<TransitionRate>(m, "TransitionRate")
      .def_readonly("k", &TransitionRate::k)
      .def_readonly("n", &TransitionRate::n)
      .def_readonly("omega", &TransitionRate::omega)
      .def_readonly("gamma", &TransitionRate::gamma)
      .def_readonly("quadrupole_ratio", &TransitionRate::quadrupole_ratio)
      .def_readonly("valid", &TransitionRate::valid);
  py::class_<RatePrefactor>(m, "RatePrefactor")
      .def_readonly("numeric", &RatePrefactor::numeric)
      .def_readonly("mass_ratio_sq", &RatePrefactor::mass_ratio_sq)
      .def_readonly("scale_term", &RatePrefactor::scale_term)
      .def_property_readonly("value", &RatePrefactor::value);
  py::class_<Lifetime>(m, "Lifetime")
      .def_readonly("n", &Lifetime::n)
      .def_readonly("total_rate", &Lifetime::total_rate)
      .def_readonly("partials", &Lifetime::partials)
      .def_property_readonly("dominant_final_state", &Lifetime::dominant_final_state);

  m.def("omega", &omega, py::arg("k"), py::arg("n"), py::arg("scales"), py::arg("constants"));
  m.def("rate_general", &rate_general, py::arg("q_moment"), py::arg("omega"),
        py::arg("constants"));
  m.def("rate_prefactor", &rate_prefactor, py::arg("scales"), py::arg("constants"));
  m.def("rate_reduced", &rate_reduced, py::arg("k"), py::arg("n"), py::arg("scales"),
        py::arg("constants"));
  m.def("quadrupole_validity",
        [](std::size_t k, const BouncerScales& s, const PhysicalConstants& c, double threshold) {
          const auto v = quadrupole_validity(k, s, c, threshold);
          return py::make_tuple(v.ratio, v.valid);
        },
        py::arg("k"), py::arg("scales"), py::arg("constants"),
        py::arg("threshold") = kDefaultValidityThreshold);
  m.def("transition", &transition, py::arg("k"), py::arg("n"), py::arg("scales"),
        py::arg("constants"), py::arg("threshold") = kDefaultValidityThreshold);
  m.def("lifetime", &lifetime, py::arg("n"), py::arg("scales"), py::arg("constants"),
        py::arg("threshold") = kDefaultValidityThreshold);

  m.def("table",
        [](const std::string& command, std::size_t size, const std::string& format,
           const PhysicalConstants& constants, double threshold, bool pretty) {
          const auto t = report::build(command, size, constants, threshold);
          if (format != "csv" && format != "json") throw DomainError("format must be csv or json");
          return report::render(t, format == "json" ? report::Format::json : report::Format::csv,
                                pretty);
        },
        py::arg("command"), py::arg("size"), py::arg("format") = "csv",
        py::arg("constants") = default_constants(),
        py::arg("threshold") = kDefaultValidityThreshold, py::arg("pretty") = false,
        "Render a CLI table (zeros, levels, qmatrix, rates, lifetimes) as text.");
}
