#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "cobord/cyclotomic.hpp"
#include "cobord/errors.hpp"
#include "cobord/forms.hpp"
#include "cobord/io.hpp"
#include "cobord/seifert.hpp"
#include "cobord/smith.hpp"
#include "cobord/verify.hpp"

namespace py = pybind11;
using namespace cobord;

namespace {

// Python ints are arbitrary precision; go through their decimal form.
Integer to_integer(const py::handle& h) {
  return Integer(py::str(h).cast<std::string>());
}

py::int_ to_py(const Integer& z) {
  return py::int_(py::module_::import("builtins").attr("int")(z.get_str()));
}

IntMatrix to_matrix(const py::sequence& rows, std::size_t cols_if_empty = 0) {
  std::vector<std::vector<Integer>> out;
  for (const auto& row : rows) {
    std::vector<Integer> r;
    for (const auto& x : row.cast<py::sequence>()) r.push_back(to_integer(x));
    out.push_back(std::move(r));
  }
  return IntMatrix::from_rows(out, cols_if_empty);
}

py::list from_matrix(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list r;
    for (std::size_t j = 0; j < m.cols(); ++j) r.append(to_py(m(i, j)));
    rows.append(r);
  }
  return rows;
}

SeifertForm seifert(const py::sequence& a, int parity) {
  return SeifertForm(to_matrix(a), parity);
}

}  // namespace

PYBIND11_MODULE(_cobord, m) {
  m.doc() = "Exact invariants of chain complexes, forms and Seifert matrices.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<FormError>(m, "FormError", PyExc_ValueError);

  m.def(
      "smith_invariants",
      [](const py::sequence& a) {
        py::list out;
        for (const auto& z : smith_normal_form(to_matrix(a)).invariants())
          out.append(to_py(z));
        return out;
      },
      py::arg("matrix"), "Nonzero invariant factors d_1 | d_2 | ...");

  m.def(
      "kernel_basis",
      [](const py::sequence& a) { return from_matrix(kernel_basis(to_matrix(a))); },
      py::arg("matrix"), "Saturated integral kernel basis as columns.");

  m.def(
      "form_inertia",
      [](const py::sequence& gram, int epsilon) {
        const InertiaProfile p = inertia(EpsSymmetricForm(epsilon, to_matrix(gram)));
        return py::make_tuple(p.r_plus, p.r_minus, p.nullity);
      },
      py::arg("gram"), py::arg("epsilon") = 1,
      "(r_plus, r_minus, nullity) of an epsilon-symmetric form.");

  m.def(
      "wall_signature",
      [](const std::string& text) { return wall_triad_signature(parse_wall(text)); },
      py::arg("text"), "Signature of the triad form from a .wall file body.");

  m.def(
      "alexander",
      [](const py::sequence& a, int parity) {
        return alexander(seifert(a, parity)).to_string();
      },
      py::arg("matrix"), py::arg("parity") = 1,
      "Normalized Alexander polynomial as text.");

  m.def(
      "lt_invariants",
      [](const py::sequence& a, int parity, long p, long q) {
        const LTResult r = lt_invariants(seifert(a, parity), RootOfUnity(p, q));
        py::dict d;
        d["xi"] = r.xi.to_string();
        d["nullity"] = r.nullity;
        d["signature"] = r.signature;
        d["alexander_zero"] = r.alexander_value_is_zero;
        return d;
      },
      py::arg("matrix"), py::arg("parity") = 1, py::arg("p") = 1, py::arg("q") = 2,
      "Levine-Tristram nullity and signature at exp(2 pi i p / q).");

  m.def(
      "mk_check",
      [](const py::sequence& a0, const py::sequence& a1, int parity, long b,
         long b0, long b1, long p, long q) {
        const MKReport r = mk_check(MKInstance{seifert(a0, parity), seifert(a1, parity),
                                               b, b0, b1, RootOfUnity(p, q)});
        py::dict d;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["holds"] = r.holds;
        d["slack"] = r.slack;
        return d;
      },
      py::arg("a0"), py::arg("a1"), py::arg("parity"), py::arg("b_sigma"),
      py::arg("b_sigma0"), py::arg("b_sigma1"), py::arg("p") = 1, py::arg("q") = 2);

  m.def(
      "parse_seifert",
      [](const std::string& text) {
        const SeifertFile f = parse_seifert(text);
        return py::make_tuple(f.label, from_matrix(f.form.matrix()), f.form.parity());
      },
      py::arg("text"), "(label, matrix, parity) from a .seifert file body.");

  m.def("suite_names", &suite_names);

  m.def(
      "run_suite",
      [](const std::string& name, std::size_t cases, std::uint64_t seed) {
        std::ostringstream os;
        const SuiteOutcome o = run_suite(name, cases, seed, os);
        return py::make_tuple(o.passed, o.cases, os.str());
      },
      py::arg("name"), py::arg("cases"), py::arg("seed"),
      "(passed, cases, report) for a seeded verification suite.");
}
