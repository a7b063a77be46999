// Python bindings.  Commands return a Report; its JSON text is turned into
// dicts by the package (anabelkit/__init__.py).
#include <optional>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anabelkit/elliptic.hpp"
#include "anabelkit/local_field.hpp"
#include "anabelkit/reports.hpp"

namespace py = pybind11;
using namespace anabelkit;

namespace {

RunConfig config(long precision, std::uint64_t seed, unsigned threads) {
  RunConfig c;
  c.precision = precision;
  c.seed = seed;
  c.threads = threads;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "p-adic fields, anabelomorphy checks and Tate's algorithm";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);

  m.attr("DEFAULT_PRECISION") = kDefaultPrecision;

  py::class_<FieldElement>(m, "Element")
      .def("valuation", &FieldElement::valuation)
      .def("valuation_via_norm", [](const FieldElement& x) { return valuation_via_norm(x); })
      .def("is_zero", &FieldElement::is_zero)
      .def("is_pth_power", [](const FieldElement& x) { return is_pth_power(x); })
      .def("log", [](const FieldElement& x) { return field_log(x); })
      .def("l_invariant", [](const FieldElement& q) { return l_invariant(q); })
      .def("inverse", &FieldElement::inverse)
      // Integer representative of an element of Q_p, as a decimal string.
      .def("lift_integer",
           [](const FieldElement& x) {
             if (x.field().degree() != 1) throw DomainError("lift_integer needs a field of degree 1");
             return x.coefficients()[0].lift_integer().get_str();
           })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def("__pow__", [](const FieldElement& x, long k) { return x.pow(k); })
      .def("__str__", &FieldElement::to_string)
      .def("__repr__", [](const FieldElement& x) { return "<Element " + x.to_string() + ">"; });

  py::class_<LocalField>(m, "Field")
      .def(py::init([](const std::string& spec, long precision) {
             return LocalField::build(FieldSpec::parse(spec), precision);
           }),
           py::arg("spec"), py::arg("precision") = kDefaultPrecision)
      .def_property_readonly("p", &LocalField::prime)
      .def_property_readonly("degree", &LocalField::degree)
      .def_property_readonly("e", &LocalField::ramification_index)
      .def_property_readonly("f", &LocalField::residue_degree)
      .def_property_readonly("precision", &LocalField::precision)
      .def("different_valuation", [](const LocalField& K) { return different_valuation(K); })
      .def("discriminant_valuation", [](const LocalField& K) { return discriminant_valuation(K); })
      .def("different_bound", [](const LocalField& K) { return different_bound(K); })
      .def("uniformizer", &LocalField::uniformizer)
      .def("element", [](const LocalField& K, const std::string& expr) { return K.evaluate(expr); })
      .def("integer", [](const LocalField& K, long n) { return K.from_integer(n); })
      .def("spec", [](const LocalField& K) { return FieldSpec{K.prime(), K.steps()}.to_string(); });

  py::class_<Report>(m, "Report")
      .def_readonly("exit_code", &Report::exit_code)
      .def_property_readonly("json", [](const Report& r) { return r.data.dump(); })
      .def("render", [](const Report& r, const std::string& fmt) { return render(r, parse_format(fmt)); });

  m.def("check_anab",
        [](const std::string& a, const std::string& b, long prec) { return cmd_check_anab(a, b, config(prec, 1, 1)); },
        py::arg("spec1"), py::arg("spec2"), py::arg("precision") = kDefaultPrecision);
  m.def("disc", [](const std::string& s, long prec) { return cmd_disc(s, config(prec, 1, 1)); },
        py::arg("spec"), py::arg("precision") = kDefaultPrecision);
  m.def("conductor", [](const std::string& s, long prec) { return cmd_conductor(s, config(prec, 1, 1)); },
        py::arg("spec"), py::arg("precision") = kDefaultPrecision);
  m.def("tate",
        [](const std::string& curve, const std::string& s, long prec) {
          return cmd_tate(curve, s, config(prec, 1, 1));
        },
        py::arg("curve"), py::arg("spec"), py::arg("precision") = kDefaultPrecision);
  m.def("table",
        [](const std::string& id, std::optional<std::string> rows, long first, unsigned threads) {
          const std::string* text = rows ? &*rows : nullptr;
          py::gil_scoped_release release;
          return cmd_table(parse_table_id(id), text, first, config(kDefaultPrecision, 1, threads));
        },
        py::arg("table"), py::arg("rows") = py::none(), py::arg("first") = -1, py::arg("threads") = 1);
  m.def("search",
        [](const std::string& k, const std::string& l, long count, const std::string& filter, std::uint64_t seed,
           unsigned threads) {
          SearchOptions o;
          o.field_k = k;
          o.field_l = l;
          o.count = count;
          o.filter = parse_search_filter(filter);
          py::gil_scoped_release release;
          return cmd_search(o, config(kDefaultPrecision, seed, threads));
        },
        py::arg("field_k"), py::arg("field_l"), py::arg("count") = 5, py::arg("filter") = "any",
        py::arg("seed") = 1, py::arg("threads") = 1);

}
