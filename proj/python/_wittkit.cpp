// JSON-in, JSON-out bindings; the Python package decodes with the json module.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wittkit/commands.hpp"
#include "wittkit/documents.hpp"
#include "wittkit/error.hpp"
#include "wittkit/groebner.hpp"
#include "wittkit/poly_format.hpp"
#include "wittkit/report.hpp"
#include "wittkit/unimodular.hpp"
#include "wittkit/witt.hpp"

namespace py = pybind11;
using namespace wittkit;

namespace {

struct PyRing {
  RingPtr ptr;
};

Json decode(const std::string& text, const char* what) { return parse_json(text, what); }

Mat matrix(const PyRing& r, const std::string& text) { return matrix_from_json(r.ptr, decode(text, "matrix"), "matrix"); }

std::vector<RingElement> elements(const PyRing& r, const std::string& text, const char* what) {
  return elements_from_json(r.ptr, decode(text, what), what);
}

UmRow um_row(const PyRing& r, const std::string& row, const std::optional<std::string>& witness) {
  const auto a = elements(r, row, "row");
  if (witness) return UmRow(a, elements(r, *witness, "witness"));
  auto certified = certify_row(a);
  if (!certified) throw PreconditionViolation("row is not unimodular");
  return *certified;
}

std::string verdict_json(const Verdict& v) {
  Json out{{"accepted", v.accepted}, {"reason", v.reason}};
  out["mismatch"] = v.mismatch ? Json::array({v.mismatch->first + 1, v.mismatch->second + 1}) : Json(nullptr);
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_wittkit, m) {
  m.doc() = "Exact Witt-group and unimodular-row computations";

  auto base = py::register_exception<Error>(m, "WittkitError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<RingMismatch>(m, "RingMismatch", base.ptr());
  py::register_exception<SizeMismatch>(m, "SizeMismatch", base.ptr());
  py::register_exception<NotAlternating>(m, "NotAlternating", base.ptr());
  py::register_exception<NotInvertible>(m, "NotInvertible", base.ptr());
  py::register_exception<PreconditionViolation>(m, "PreconditionViolation", base.ptr());

  py::class_<PyRing>(m, "Ring")
      .def(py::init([](const std::string& spec) {
             return PyRing{Ring::create(ring_spec_from_json(decode(spec, "ring"), "ring"))};
           }),
           py::arg("spec_json"))
      .def("describe", [](const PyRing& r) { return r.ptr->describe(); })
      .def("spec_json", [](const PyRing& r) { return ring_spec_to_json(r.ptr->spec()).dump(); })
      .def("basis", [](const PyRing& r) {
        std::vector<std::string> out;
        for (const auto& g : r.ptr->ideal_basis().generators) out.push_back(format_polynomial(r.ptr->poly(), g));
        return out;
      })
      .def("reduce", [](const PyRing& r, const std::string& poly) { return r.ptr->parse(poly).to_string(); });

  m.def("pfaffian", [](const PyRing& r, const std::string& g) { return pfaffian(matrix(r, g)).to_string(); });
  m.def("det", [](const PyRing& r, const std::string& g) { return det(matrix(r, g)).to_string(); });

  m.def("certify_row", [](const PyRing& r, const std::string& row) {
    auto certified = certify_row(elements(r, row, "row"));
    return certified ? elements_to_json(certified->witness()).dump() : std::string("null");
  });
  m.def(
      "vaserstein",
      [](const PyRing& r, const std::string& row, const std::optional<std::string>& witness) {
        return matrix_to_json(vaserstein(um_row(r, row, witness)).mat()).dump();
      },
      py::arg("ring"), py::arg("row"), py::arg("witness") = py::none());
  m.def(
      "swan_towber_complete",
      [](const PyRing& r, const std::string& row, const std::optional<std::string>& witness) {
        return matrix_to_json(swan_towber_complete(um_row(r, row, witness))).dump();
      },
      py::arg("ring"), py::arg("row"), py::arg("witness") = py::none());
  m.def(
      "koszul_homotopy",
      [](const PyRing& r, const std::string& row, const std::string& syzygy, const std::optional<std::string>& witness) {
        return matrix_to_json(koszul_homotopy(um_row(r, row, witness), elements(r, syzygy, "syzygy"))).dump();
      },
      py::arg("ring"), py::arg("row"), py::arg("syzygy"), py::arg("witness") = py::none());

  m.def("eta", [](const PyRing& r, const std::string& g) { return matrix_to_json(eta(matrix(r, g)).mat()).dump(); });
  m.def("eta_product_cert", [](const PyRing& r, const std::string& a, const std::string& b) {
    return cert_to_json(eta_product_cert(matrix(r, a), matrix(r, b))).dump();
  });
  m.def("symplectic_reduce", [](const PyRing& r, const std::string& g) {
    const Mat mg = matrix(r, g);
    const SymplecticReduction red = symplectic_reduce(mg);
    const std::size_t n = mg.rows();
    const EquivCert cert{0, n, n, red.word.embedded(0, 2 * n)};
    return Json{{"canonical", matrix_to_json(red.canonical)}, {"certificate", cert_to_json(cert)}}.dump();
  });
  m.def("field_equiv_cert", [](const PyRing& r, const std::string& g, const std::string& g2) {
    auto cert = field_equiv_cert(matrix(r, g), matrix(r, g2));
    return cert ? cert_to_json(*cert).dump() : std::string("null");
  });
  m.def("verify_equiv", [](const PyRing& r, const std::string& g, const std::string& g2, const std::string& cert) {
    return verdict_json(verify_equiv(matrix(r, g), matrix(r, g2), cert_from_json(r.ptr, decode(cert, "cert"), "cert")));
  });

  m.def("groebner_basis", [](const PyRing& r, const std::string& gens) {
    std::vector<Polynomial> polys;
    for (const auto& e : elements(r, gens, "generators")) polys.push_back(e.value());
    for (const auto& g : r.ptr->ideal_basis().generators) polys.push_back(g);
    std::vector<std::string> out;
    for (const auto& g : buchberger(r.ptr->poly(), polys, r.ptr->budget()).generators) {
      out.push_back(format_polynomial(r.ptr->poly(), g));
    }
    return out;
  });

  m.def(
      "run_command",
      [](const std::string& subcommand, const std::optional<std::string>& ring, const std::vector<std::string>& inputs,
         const std::optional<std::string>& cert, bool structured) {
        CommandOptions opt;
        opt.subcommand = subcommand;
        opt.ring = ring;
        opt.inputs = inputs;
        opt.cert = cert;
        opt.format = structured ? Format::structured : Format::text;
        const Report report = run_command(opt);
        return py::make_tuple(exit_code(report.status), emit_report(report, opt.format));
      },
      py::arg("subcommand"), py::arg("ring") = py::none(), py::arg("inputs") = std::vector<std::string>{},
      py::arg("cert") = py::none(), py::arg("structured") = true);
}
