#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "glueform/commands.hpp"
#include "glueform/error.hpp"
#include "glueform/mayer_vietoris.hpp"
#include "glueform/polynomial.hpp"
#include "glueform/presentation.hpp"

namespace py = pybind11;
using namespace glueform;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.to_string());
}

Rational from_python(const py::handle& value) {
  return Rational::parse(py::str(value).cast<std::string>());
}

py::tuple command_tuple(const cli::CommandResult& r) { return py::make_tuple(r.exit_code, r.report); }

py::dict cohomology_dict(const CohomologyEntry& e) {
  py::dict d;
  d["degree"] = e.degree;
  d["bound"] = e.bound;
  d["omega"] = e.omega_dim;
  d["closed"] = e.closed_dim;
  d["exact"] = e.exact_dim;
  d["h"] = e.betti();
  return d;
}

}  // namespace

PYBIND11_MODULE(_glueform, m) {
  m.doc() = "Exact De Rham forms and truncated cohomology of two-plot diffeological spaces";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError", PyExc_RuntimeError);

  py::class_<Polynomial>(m, "Polynomial")
      .def_property_readonly("variables", [](const Polynomial& p) { return p.context().names(); })
      .def_property_readonly("degree", &Polynomial::degree)
      .def("is_zero", &Polynomial::is_zero)
      .def("evaluate",
           [](const Polynomial& p, const py::sequence& point) {
             std::vector<Rational> pt;
             for (const auto& v : point) pt.push_back(from_python(v));
             return to_fraction(evaluate(p, pt));
           })
      .def("partial", [](const Polynomial& p, std::size_t i) { return partial(p, i); })
      .def("compose",
           [](const Polynomial& p, const std::vector<Polynomial>& components,
              const std::vector<std::string>& source) {
             return compose(p, PolyMap(VarContext(source), components));
           },
           py::arg("components"), py::arg("source"))
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__neg__", [](const Polynomial& a) { return -a; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });

  m.def("parse_poly",
        [](const std::string& text, const std::vector<std::string>& variables) {
          return parse_polynomial(text, VarContext(variables));
        },
        py::arg("text"), py::arg("variables"));

  py::class_<PresentationFile>(m, "Presentation")
      .def_static("parse", &parse_presentation, py::arg("text"))
      .def("to_text", &print_presentation)
      .def_property_readonly("bound", [](const PresentationFile& f) { return f.compute.bound; })
      .def_property_readonly("degrees", [](const PresentationFile& f) { return f.compute.degrees; })
      .def_property_readonly("plots",
                             [](const PresentationFile& f) {
                               return std::vector<std::string>{f.space.alpha().name, f.space.beta().name};
                             })
      .def("verify",
           [](const PresentationFile& f) {
             const auto report = verify_presentation(f.space);
             return py::make_tuple(report.passed(), report.to_string());
           })
      .def("omega_dimension",
           [](const PresentationFile& f, std::size_t k, std::uint32_t bound) {
             return omega_basis(f.space, k, bound).size();
           },
           py::arg("k"), py::arg("bound"))
      .def("horizontal_dimension",
           [](const PresentationFile& f, std::size_t plot, std::size_t k, std::uint32_t bound) {
             const Plot& p = plot == 0 ? f.space.alpha() : f.space.beta();
             return horizontal_basis(p, k, bound).size();
           },
           py::arg("plot"), py::arg("k"), py::arg("bound"))
      .def("cohomology",
           [](const PresentationFile& f, std::size_t k, std::uint32_t bound) {
             return cohomology_dict(cohomology(f.space, k, bound));
           },
           py::arg("k"), py::arg("bound"))
      .def("exactness_audit",
           [](const PresentationFile& f, std::size_t k, std::uint32_t bound) {
             const auto report = exactness_audit(f.space, k, bound);
             return py::make_tuple(report.passed(), report.to_string());
           },
           py::arg("k"), py::arg("bound"))
      .def("glue",
           [](const PresentationFile& f, const std::string& mu_text, const std::string& nu_text) {
             const auto mu = parse_form_file(mu_text, f.space.alpha().domain());
             const auto nu = parse_form_file(nu_text, f.space.beta().domain());
             const auto outcome = glue(f.space, mu, nu);
             return py::make_tuple(outcome.accepted(),
                                   outcome.accepted() ? std::string() : outcome.rejection->reason);
           },
           py::arg("mu"), py::arg("nu"));

  m.def("check", [](const std::string& text) { return command_tuple(cli::cmd_check(text)); },
        py::arg("text"));
  m.def("cohomology",
        [](const std::string& text, std::optional<std::uint32_t> bound,
           const std::vector<std::size_t>& degrees) {
          return command_tuple(cli::cmd_cohomology(text, bound, degrees));
        },
        py::arg("text"), py::arg("bound") = py::none(),
        py::arg("degrees") = std::vector<std::size_t>{});
  m.def("delta",
        [](const std::string& text, const std::string& mu, const std::string& nu) {
          return command_tuple(cli::cmd_delta(text, mu, nu));
        },
        py::arg("text"), py::arg("mu"), py::arg("nu"));
  m.def("sample",
        [](const std::string& text, std::size_t samples, std::uint64_t seed) {
          return command_tuple(cli::cmd_sample(text, samples, seed));
        },
        py::arg("text"), py::arg("samples") = 100, py::arg("seed") = 0);
}
