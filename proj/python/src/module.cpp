#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "integra/cli.hpp"
#include "integra/serialize.hpp"

namespace py = pybind11;
using namespace integra;

namespace {

mpz_class to_mpz(const py::int_& v) { return mpz_class(py::str(v).cast<std::string>()); }

py::int_ to_py(const mpz_class& z) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10))); }

template <class T, class Parse>
void json_io(py::class_<T>& cls, Parse parse) {
  cls.def_static("from_json", [parse](const std::string& text) { return parse(parse_json(text)); }, py::arg("text"))
      .def("to_json", [](const T& v) { return dump(to_json(v)); });
}

}  // namespace

PYBIND11_MODULE(_integra, m) {
  m.doc() = "Certificates of integrality over commutative rings";

  py::register_exception<Error>(m, "IntegraError", PyExc_ValueError);

  py::class_<Ring> ring(m, "Ring");
  ring.def(py::init<>())
      .def_static("integers", &Ring::integers)
      .def_static("modular", [](const py::int_& n) { return Ring::modular(to_mpz(n)); })
      .def_static("rationals", &Ring::rationals)
      .def_static("polynomial", &Ring::polynomial, py::arg("base"), py::arg("var"))
      .def_static("monic_quotient", &Ring::monic_quotient, py::arg("base"), py::arg("modulus"), py::arg("var"))
      .def_property_readonly("var", &Ring::var)
      .def("is_univariate", &Ring::is_univariate)
      .def("__str__", &Ring::str)
      .def("__repr__", [](const Ring& r) { return "Ring(" + r.str() + ")"; })
      .def(py::self == py::self);
  json_io(ring, ring_from_json);

  py::class_<Element>(m, "Element")
      .def_static("from_integer", [](const Ring& r, const py::int_& n) { return Element::from_integer(r, to_mpz(n)); })
      .def_static("zero", &Element::zero)
      .def_static("one", &Element::one)
      .def_static("generator", &Element::generator)
      .def_static("from_coeffs", &Element::from_coeffs)
      .def_static("from_json", [](const std::string& text, const Ring& r) { return element_from_json(parse_json(text), r); })
      .def("to_json", [](const Element& e) { return to_json(e).dump(); })
      .def_property_readonly("ring", &Element::ring)
      .def_property_readonly("coeffs", &Element::coeffs)
      .def("integer", [](const Element& e) { return to_py(e.integer()); })
      .def("degree", &Element::degree)
      .def("is_zero", &Element::is_zero)
      .def("pow", &Element::pow)
      .def("embed", [](const Element& e, const Ring& target) { return embed(e, target); })
      .def("__str__", &Element::str)
      .def("__repr__", [](const Element& e) { return "Element(" + e.str() + ")"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self);

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("verified", &Verdict::verified)
      .def_property_readonly("refuted", &Verdict::refuted)
      .def_readonly("detail", &Verdict::detail)
      .def("line", &Verdict::line)
      .def("exit_code", &Verdict::exit_code)
      .def("__str__", &Verdict::line);

  py::class_<RingCertificate> cert(m, "RingCertificate");
  cert.def(py::init([](const Ring& base, const Ring& algebra, const Element& element, std::vector<Element> coeffs) {
             return RingCertificate{base, algebra, element, std::move(coeffs), {}};
           }),
           py::arg("base"), py::arg("algebra"), py::arg("element"), py::arg("coeffs"))
      .def_readonly("base", &RingCertificate::base)
      .def_readonly("algebra", &RingCertificate::algebra)
      .def_readonly("element", &RingCertificate::element)
      .def_readonly("coeffs", &RingCertificate::coeffs)
      .def("degree", &RingCertificate::degree)
      .def(py::self == py::self);
  json_io(cert, certificate_from_json);

  py::class_<Semifiltration> sf(m, "Semifiltration");
  sf.def_static("powers", [](const Ring& r, std::vector<Element> gens) { return Semifiltration::powers(Ideal(r, std::move(gens))); })
      .def_static("constant", [](const Ring& r, std::vector<Element> gens) { return Semifiltration::constant(Ideal(r, std::move(gens))); })
      .def_static("trivial", &Semifiltration::trivial)
      .def_static("product", &Semifiltration::product)
      .def_static("accelerated", &Semifiltration::accelerated)
      .def_static("extended", &Semifiltration::extended)
      .def("validate", [](const Semifiltration& s, std::size_t bound) { return validate(s, bound).str(); }, py::arg("bound") = 6)
      .def("__str__", &Semifiltration::str)
      .def(py::self == py::self);
  json_io(sf, semifiltration_from_json);

  py::class_<SemifilCertificate> scert(m, "SemifilCertificate");
  scert.def(py::init([](const RingCertificate& c, const Semifiltration& s) { return SemifilCertificate{c, s}; }))
      .def_readonly("cert", &SemifilCertificate::cert)
      .def_readonly("semifiltration", &SemifilCertificate::semifiltration)
      .def(py::self == py::self);
  json_io(scert, semifil_certificate_from_json);

  py::class_<ReesCertificate> rcert(m, "ReesCertificate");
  rcert.def_readonly("cert", &ReesCertificate::cert).def_readonly("lambda_", &ReesCertificate::lambda);
  json_io(rcert, rees_certificate_from_json);

  auto paranoid = [](bool p) { return Options{p}; };

  m.def("verify", &verify_ring, py::arg("cert"));
  m.def("verify_sf", &verify_semifil, py::arg("cert"));
  m.def("pad", &pad, py::arg("cert"), py::arg("degree"));
  m.def("charpoly", [](const Ring& r, const std::vector<std::vector<long>>& rows) { return charpoly(Matrix::from_integers(r, rows)); });
  m.def("sum", [=](const RingCertificate& a, const RingCertificate& b, bool p) { return sum_cert(a, b, paranoid(p)); },
        py::arg("cx"), py::arg("cy"), py::arg("paranoid") = true);
  m.def("product", [=](const RingCertificate& a, const RingCertificate& b, bool p) { return product_cert(a, b, paranoid(p)); },
        py::arg("cx"), py::arg("cy"), py::arg("paranoid") = true);
  m.def("negate", [=](const RingCertificate& a, bool p) { return negate_cert(a, paranoid(p)); }, py::arg("cx"),
        py::arg("paranoid") = true);
  m.def("diff", [=](const RingCertificate& a, const RingCertificate& b, bool p) { return diff_cert(a, b, paranoid(p)); },
        py::arg("cx"), py::arg("cy"), py::arg("paranoid") = true);
  m.def("transitivity",
        [=](const RingCertificate& cv, const RingCertificate& cu, bool p) { return transitivity_cert(cv, cu, paranoid(p)); },
        py::arg("cv"), py::arg("cu"), py::arg("paranoid") = true);
  m.def("truncation",
        [=](const std::string& relation, std::size_t k, bool p) {
          return truncation_cert(relation_from_json(parse_json(relation)), k, paranoid(p));
        },
        py::arg("relation_json"), py::arg("k"), py::arg("paranoid") = true);
  m.def("lombardi",
        [=](const std::string& witness, bool p) {
          const auto [w, ctx] = witness_from_json(parse_json(witness));
          return lombardi_cert(w, ctx, paranoid(p));
        },
        py::arg("witness_json"), py::arg("paranoid") = true);
  m.def("lift", [=](const SemifilCertificate& c, bool p) { return lift(c, paranoid(p)); }, py::arg("cert"),
        py::arg("paranoid") = true);
  m.def("lift_accel", [=](const SemifilCertificate& c, std::size_t l, bool p) { return lift_accel(c, l, paranoid(p)); },
        py::arg("cert"), py::arg("lambda_"), py::arg("paranoid") = true);
  m.def("drop", [=](const ReesCertificate& rc, bool p) { return drop(rc, std::nullopt, paranoid(p)); }, py::arg("rees"),
        py::arg("paranoid") = true);
  m.def("semifil_sum",
        [=](const SemifilCertificate& a, const SemifilCertificate& b, bool p) { return semifil_sum(a, b, paranoid(p)); },
        py::arg("cx"), py::arg("cy"), py::arg("paranoid") = true);
  m.def("semifil_product",
        [=](const SemifilCertificate& a, const SemifilCertificate& b, bool p) { return semifil_product(a, b, paranoid(p)); },
        py::arg("cx"), py::arg("cy"), py::arg("paranoid") = true);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
