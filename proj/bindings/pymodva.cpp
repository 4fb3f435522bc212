// Python face of the library.  The bindings stay close to the C++ surface:
// Hopf elements cross as their text syntax, reports as plain dicts, module
// states as an opaque Vector handled through its Carrier.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "modva/cli.hpp"
#include "modva/forms.hpp"
#include "modva/verify.hpp"

namespace py = pybind11;
using namespace modva;

namespace {

// the reports are small, so the round-trip through text is fine
py::object jsonToPy(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

HFam famFromString(const std::string& s) {
  if (s == "D" || s == "lower") return HFam::Lower;
  if (s == "H" || s == "diag") return HFam::Diag;
  if (s == "E" || s == "raise") return HFam::Raise;
  throw std::invalid_argument("unknown divided-power family: " + s + " (want D, H or E)");
}

SuiteParams makeParams(const std::string& carrier, uint32_t p, long long central, int maxDegree,
                       int bound, uint64_t seed, int workers) {
  SuiteParams P;
  P.carrier = carrier;
  P.p = p;
  P.central = central;
  P.maxDegree = maxDegree;
  P.bound = bound;
  P.seed = seed;
  P.workers = workers;
  return P;
}

GradedVector basisVector(const Carrier& c, long long degree, size_t idx) {
  const auto& words = c.basis(degree);
  if (idx >= words.size()) throw std::out_of_range("basis index out of range");
  GradedVector r(c.p());
  r.add(words[idx], 1);
  return r;
}

std::vector<uint32_t> coords(const Carrier& c, const GradedVector& v, long long degree) {
  const auto& words = c.basis(degree);
  std::vector<uint32_t> out(words.size(), 0);
  for (size_t i = 0; i < words.size(); ++i) out[i] = v.coeff(words[i]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact modular vertex-algebra toolkit";

  m.def("binom_mod", &binomMod, py::arg("m"), py::arg("k"), py::arg("p"),
        "binomial coefficient mod an odd prime; negative upper index follows the integer "
        "identity binom(m,k) = (-1)^k binom(k-m-1,k)");

  py::class_<Hopf>(m, "Hopf", "divided-power Hopf algebra over F_p, PBW basis D^(i) H^(j) E^(k)")
      .def(py::init<uint32_t>(), py::arg("p"))
      .def_property_readonly("p", &Hopf::p)
      .def(
          "normal", [](const Hopf& h, const std::string& e) { return Hopf::print(h.parse(e)); },
          py::arg("expr"), "parse and print the normal form")
      .def(
          "product",
          [](const Hopf& h, const std::string& a, const std::string& b) {
            return Hopf::print(h.product(h.parse(a), h.parse(b)));
          },
          py::arg("a"), py::arg("b"))
      .def(
          "coproduct",
          [](const Hopf& h, const std::string& e) {
            HTensor t = h.coproduct(h.parse(e));
            py::list out;
            for (auto& [k, c] : t.terms())
              out.append(py::make_tuple(Hopf::print(h.mono(k.first.i, k.first.j, k.first.k)),
                                        Hopf::print(h.mono(k.second.i, k.second.j, k.second.k)),
                                        c));
            return out;
          },
          py::arg("expr"), "list of (left, right, coeff) tensor terms")
      .def(
          "counit", [](const Hopf& h, const std::string& e) { return h.counit(h.parse(e)).v; },
          py::arg("expr"))
      .def(
          "theta", [](const Hopf& h, const std::string& e) { return Hopf::print(h.theta(h.parse(e))); },
          py::arg("expr"), "the anti-automorphism swapping D and E")
      .def(
          "sigma", [](const Hopf& h, const std::string& e) { return Hopf::print(h.sigma(h.parse(e))); },
          py::arg("expr"), "the automorphism negating the Cartan direction");

  py::class_<GradedVector>(m, "Vector", "state of a carrier; print it with Carrier.show")
      .def("is_zero", &GradedVector::isZero)
      .def_property_readonly("p", &GradedVector::p)
      .def("__eq__", [](const GradedVector& a, const GradedVector& b) { return a == b; })
      .def("__add__", [](const GradedVector& a, const GradedVector& b) { return a + b; })
      .def("__sub__", [](const GradedVector& a, const GradedVector& b) { return a - b; })
      .def("scaled", &GradedVector::scaled, py::arg("s"));

  py::class_<Carrier>(m, "Carrier",
                      "truncated vacuum module: graded slices up to the truncation degree")
      .def_property_readonly("p", &Carrier::p)
      .def_property_readonly("truncation", &Carrier::truncation)
      .def_property_readonly("central", &Carrier::centralValue)
      .def_property_readonly("num_gens", &Carrier::numGens)
      .def_property_readonly(
          "kind",
          [](const Carrier& c) { return c.kind() == CarrierKind::Affine ? "affine" : "virasoro"; })
      .def("dim", &Carrier::dim, py::arg("degree"))
      .def(
          "basis",
          [](const Carrier& c, long long d) {
            std::vector<std::string> out;
            for (const auto& w : c.basis(d)) out.push_back(c.wordStr(w));
            return out;
          },
          py::arg("degree"), "basis words of the degree slice, as text")
      .def("vacuum", &Carrier::vacuum)
      .def("gen_state", &Carrier::genState, py::arg("gen"))
      .def("basis_vector", &basisVector, py::arg("degree"), py::arg("index"))
      .def("apply_mode", &Carrier::applyMode, py::arg("gen"), py::arg("n"), py::arg("v"),
           "single Lie mode x_gen(n) applied to v")
      .def("generator_mode", &Carrier::generatorMode, py::arg("gen"), py::arg("m"), py::arg("v"),
           "vertex-operator mode of the generator state")
      .def("composite_mode", &Carrier::compositeMode, py::arg("v"), py::arg("m"), py::arg("w"),
           "mode (v)_m of an arbitrary state applied to w")
      .def(
          "h_action",
          [](const Carrier& c, const std::string& fam, long long r, const GradedVector& v) {
            return c.hAction(famFromString(fam), r, v);
          },
          py::arg("family"), py::arg("r"), py::arg("v"),
          "divided-power family action (family D, H or E)")
      .def(
          "h_action_element",
          [](const Carrier& c, const std::string& expr, const GradedVector& v) {
            Hopf h(c.p());
            return c.hActionVector(h.parse(expr), v);
          },
          py::arg("expr"), py::arg("v"))
      .def("show", &Carrier::str, py::arg("v"), py::arg("symmetric") = true)
      .def("coords", &coords, py::arg("v"), py::arg("degree"),
           "coordinates of the degree slice of v in basis order");

  m.def(
      "make_carrier",
      [](const std::string& desc, uint32_t p, long long central, long long truncation) {
        return makeCarrier(desc, p, central, truncation);
      },
      py::arg("desc"), py::arg("p"), py::arg("central"), py::arg("truncation"),
      "build a carrier from its textual description: 'virasoro' or 'affine:<name-or-path>'");

  // ---- bilinear form -------------------------------------------------------

  m.def(
      "gram_row",
      [](const Carrier& c, long long degree) {
        BilinearForm f(c);
        return jsonToPy(gramRowToJson(c, f.gramRow(degree)));
      },
      py::arg("carrier"), py::arg("degree"),
      "Gram data of the degree slice: basis, matrix, rank, radical");

  m.def(
      "form_pair",
      [](const Carrier& c, const GradedVector& u, const GradedVector& v) {
        return BilinearForm(c).pair(u, v);
      },
      py::arg("carrier"), py::arg("u"), py::arg("v"),
      "the invariant form normalized by (vacuum, vacuum) = 1");

  m.def(
      "form_space_dim",
      [](const Carrier& c) {
        FormSpaceResult r = formSpaceDim(c);
        return py::make_tuple(r.dim, r.stabilized);
      },
      py::arg("carrier"), "(dimension of the space of invariant forms, stabilized flag)");

  m.def(
      "quotient_dims",
      [](const Carrier& c) {
        BilinearForm f(c);
        return simpleQuotientDims(f);
      },
      py::arg("carrier"), "graded dimensions of the quotient by the form radical");

  m.def("annihilation_radical", &annihilationRadical, py::arg("carrier"), py::arg("degree"),
        "form-independent radical slice: states whose nonnegative-mode orbit misses degree 0");

  // ---- verification suites -------------------------------------------------

  m.def(
      "suites", [] { return suiteCatalog(); }, "names of the verification suites, in run order");

  m.def(
      "run_suite",
      [](const std::string& name, const std::string& carrier, uint32_t p, long long central,
         int maxDegree, int bound, uint64_t seed, int workers) {
        return jsonToPy(
            suiteReportToJson(runSuite(name, makeParams(carrier, p, central, maxDegree, bound,
                                                        seed, workers))));
      },
      py::arg("name"), py::arg("carrier") = "affine:sl2", py::arg("p") = 5,
      py::arg("central") = 1, py::arg("max_degree") = 4, py::arg("bound") = 3, py::arg("seed") = 1,
      py::arg("workers") = 1);

  m.def(
      "run_all",
      [](const std::string& carrier, uint32_t p, long long central, int maxDegree, int bound,
         uint64_t seed, int workers) {
        py::list out;
        for (const SuiteReport& r :
             runAllSuites(makeParams(carrier, p, central, maxDegree, bound, seed, workers)))
          out.append(jsonToPy(suiteReportToJson(r)));
        return out;
      },
      py::arg("carrier") = "affine:sl2", py::arg("p") = 5, py::arg("central") = 1,
      py::arg("max_degree") = 4, py::arg("bound") = 3, py::arg("seed") = 1, py::arg("workers") = 1);

  // ---- command-line front end ----------------------------------------------

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "run a front-end command in process; returns (exit_code, stdout, stderr)");
}
