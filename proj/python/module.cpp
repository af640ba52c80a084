// Python bindings for the binomiacci core library.

#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "binomiacci/asymptotics.hpp"
#include "binomiacci/diagonal.hpp"
#include "binomiacci/power_series.hpp"
#include "binomiacci/sequence.hpp"
#include "binomiacci/verify.hpp"

namespace py = pybind11;
using namespace binomiacci;

namespace {

py::object to_py(const ExactInteger& value) {
  const std::string text = to_decimal(value);
  return py::reinterpret_steal<py::object>(PyLong_FromString(text.c_str(), nullptr, 10));
}

// Integral coefficients come back as int, anything else as fractions.Fraction.
py::object to_py(const ExactRational& value) {
  if (is_integral(value)) return to_py(ExactInteger(boost::multiprecision::numerator(value)));
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(ExactInteger(boost::multiprecision::numerator(value))),
                  to_py(ExactInteger(boost::multiprecision::denominator(value))));
}

ExactRational from_py(const py::handle& value) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction")(value);
  const auto num = parse_decimal(py::str(fraction.attr("numerator")).cast<std::string>());
  const auto den = parse_decimal(py::str(fraction.attr("denominator")).cast<std::string>());
  return ExactRational(num, den);
}

TruncatedSeries series_from_py(const py::sequence& coeffs) {
  if (py::len(coeffs) == 0) throw py::value_error("series needs at least one coefficient");
  std::vector<ExactRational> values;
  for (const auto& c : coeffs) values.push_back(from_py(c));
  const std::size_t order = values.size() - 1;
  return TruncatedSeries(std::move(values), order);
}

py::list to_py(const TruncatedSeries& series) {
  py::list out;
  for (const auto& c : series.coeffs()) out.append(to_py(c));
  return out;
}

py::list to_py(const std::vector<ExactInteger>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::tuple to_py(const ResidueTriple& r) { return py::make_tuple(r.res1, r.res2, r.res3); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Binomiacci numbers: recurrence, generating functions, residues and asymptotics";

  // Sequence
  m.def("fibonacci", [](std::size_t j) { return to_py(fibonacci(j)); }, py::arg("j"));
  m.def("binomiacci", [](std::size_t k, std::size_t n) { return to_py(binomiacci::binomiacci(k, n)); }, py::arg("k"), py::arg("n"));
  m.def("central", [](std::size_t n) { return to_py(central(n)); }, py::arg("n"));
  m.def("central_sequence", [](std::size_t n_max) { return to_py(central_sequence(n_max)); }, py::arg("n_max"));
  m.def("triangle_row", [](std::size_t row) { return to_py(triangle_row(row)); }, py::arg("m"));
  m.def(
      "table",
      [](std::size_t max_k, std::size_t max_n) {
        const BinomiacciTable t = table(max_k, max_n);
        py::list rows;
        for (const auto& row : t.cells()) rows.append(to_py(row));
        return rows;
      },
      py::arg("max_k"), py::arg("max_n"));

  // Power series
  m.def("fibonacci_gf", [](std::size_t order) { return to_py(fibonacci_gf(order)); }, py::arg("order"));
  m.def("row_gf", [](std::size_t k, std::size_t order) { return to_py(row_gf(k, order)); }, py::arg("k"), py::arg("order"));
  m.def("central_gf", [](std::size_t order) { return to_py(central_gf(order)); }, py::arg("order"));
  m.def(
      "bivariate_gf",
      [](std::size_t max_k, std::size_t max_n) {
        const BivariateSeries g = bivariate_gf(max_k, max_n);
        py::list rows;
        for (std::size_t k = 0; k <= max_k; ++k) {
          py::list row;
          for (std::size_t n = 0; n <= max_n; ++n) row.append(to_py(g.at(k, n)));
          rows.append(row);
        }
        return rows;
      },
      py::arg("max_k"), py::arg("max_n"));
  m.def(
      "series_mul",
      [](const py::sequence& a, const py::sequence& b) { return to_py(series_mul(series_from_py(a), series_from_py(b))); },
      py::arg("a"), py::arg("b"));
  m.def(
      "series_inverse",
      [](const py::sequence& a, std::size_t order) { return to_py(series_inverse(series_from_py(a), order)); },
      py::arg("a"), py::arg("order"));
  m.def(
      "series_sqrt",
      [](const py::sequence& a, std::size_t order) { return to_py(series_sqrt(series_from_py(a), order)); },
      py::arg("a"), py::arg("order"));

  // Residues
  m.def("eval_G", &eval_G, py::arg("z"), py::arg("w"));
  m.def("eval_F", &eval_F, py::arg("z"), py::arg("s"));
  m.def("eval_C", &eval_C, py::arg("s"));
  m.def(
      "poles",
      [](ComplexValue s) {
        const PoleSet p = poles(s);
        return py::make_tuple(p.z1, p.z2, p.z3);
      },
      py::arg("s"));
  m.def("residues", [](ComplexValue s) { return to_py(residues(s)); }, py::arg("s"));
  m.def(
      "numeric_residues", [](ComplexValue s, double radius) { return to_py(numeric_residues(s, radius)); },
      py::arg("s"), py::arg("radius") = kNumericResidueRadius);
  m.def(
      "residue_identity_check",
      [](ComplexValue s) {
        const ResidueReport r = residue_identity_check(s);
        py::dict out;
        out["s"] = r.s;
        out["residues"] = to_py(r.residues);
        out["c_value"] = r.c_value;
        out["max_abs_error"] = r.max_abs_error;
        out["passed"] = r.passed;
        return out;
      },
      py::arg("s"));

  // Asymptotics
  py::class_<AlgebraicSingularity>(m, "AlgebraicSingularity")
      .def(py::init(&AlgebraicSingularity::make), py::arg("alpha"), py::arg("omega"), py::arg("g_at_alpha"))
      .def_readonly("alpha", &AlgebraicSingularity::alpha)
      .def_readonly("omega", &AlgebraicSingularity::omega)
      .def_readonly("g_at_alpha", &AlgebraicSingularity::g_at_alpha)
      .def("__repr__", [](const AlgebraicSingularity& s) {
        return "AlgebraicSingularity(alpha=" + std::to_string(s.alpha) + ", omega=" + std::to_string(s.omega) +
               ", g_at_alpha=" + std::to_string(s.g_at_alpha) + ")";
      });
  m.def("decompose_C", [] {
    const CentralDecomposition d = decompose_C();
    py::dict out;
    out["f0"] = d.f0_description;
    out["g"] = d.g_description;
    out["singularity"] = d.singularity;
    out["g_at_alpha_exact"] = to_py(d.g_at_alpha_exact);
    return out;
  });
  m.def(
      "algebraic_estimate",
      [](const std::vector<AlgebraicSingularity>& singularities, std::size_t n) {
        return algebraic_estimate(singularities, n);
      },
      py::arg("singularities"), py::arg("n"));
  m.def("coarse_estimate", &coarse_estimate, py::arg("n"));
  m.def("gamma_positive", &gamma_positive, py::arg("x"));
  m.def(
      "ratio_table",
      [](std::size_t n_max) {
        py::list rows;
        for (const EstimateRow& r : ratio_table(n_max)) {
          py::dict row;
          row["n"] = r.n;
          row["exact"] = to_py(r.exact);
          row["estimate"] = r.estimate;
          row["ratio"] = r.ratio;
          rows.append(row);
        }
        return rows;
      },
      py::arg("n_max"));

  m.def(
      "verify",
      [](const std::string& suite_text) {
        const auto suite = parse_suite(suite_text);
        if (!suite) throw py::value_error("unknown suite '" + suite_text + "'");
        py::list out;
        for (const CheckResult& r : run_suite(*suite)) {
          py::dict row;
          row["suite"] = r.suite;
          row["check"] = r.name;
          row["passed"] = r.passed;
          row["measured"] = r.measured;
          row["tolerance"] = r.tolerance;
          out.append(row);
        }
        return out;
      },
      py::arg("suite") = "all");
}
