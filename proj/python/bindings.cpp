#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hfitt/errors.hpp"
#include "hfitt/job.hpp"
#include "hfitt/loci.hpp"

namespace py = pybind11;
using namespace hfitt;

namespace {

/// Coordinate ring handle; Python sees polynomials only as strings.
struct Ring {
  QuotientPtr base;

  Polynomial parse(const std::string& s) const { return base->parse(s); }
};

Ring make_ring_handle(std::vector<std::string> variables, const std::string& field, const std::string& order,
                      const std::vector<std::string>& relations) {
  FieldSpec k = FieldSpec::rationals();
  if (field.rfind("GF(", 0) == 0 && field.size() > 4 && field.back() == ')')
    k = FieldSpec::prime(std::stoll(field.substr(3, field.size() - 4)));
  else if (field != "QQ")
    throw InputError("field must be \"QQ\" or \"GF(p)\"");
  MonomialOrder o = MonomialOrder::GrevLex;
  if (order == "lex")
    o = MonomialOrder::Lex;
  else if (order != "grevlex")
    throw InputError("order must be \"grevlex\" or \"lex\"");
  RingPtr r = make_ring(std::move(variables), k, o);
  std::vector<Polynomial> rels;
  for (const auto& s : relations) rels.push_back(parse_polynomial(s, r));
  return Ring{make_quotient(r, std::move(rels))};
}

PolyMatrix to_matrix(const Ring& ring, const std::vector<std::vector<std::string>>& rows, std::optional<std::size_t> ncols) {
  std::size_t cols = ncols.value_or(rows.empty() ? 0 : rows[0].size());
  return parse_matrix(ring.base, rows.size(), cols, rows);
}

std::vector<std::vector<std::string>> matrix_rows(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(render_polynomial(m(r, c)));
  return out;
}

std::vector<std::string> basis_strings(const Ideal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.groebner_basis()) out.push_back(render_polynomial(g));
  return out;
}

Orientation orientation_of(const std::string& s) {
  if (s == "chain") return Orientation::Chain;
  if (s == "cochain") return Orientation::Cochain;
  throw InputError("orientation must be \"chain\" or \"cochain\"");
}

}  // namespace

PYBIND11_MODULE(_hfitt, m) {
  m.doc() = "Exact higher Fitting ideals over polynomial rings and their quotients";
  m.attr("__version__") = kVersion;

  auto base_error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<RingMismatch>(m, "RingMismatch", base_error.ptr());
  py::register_exception<InputError>(m, "InputError", base_error.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base_error.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base_error.ptr());

  py::class_<Ring>(m, "Ring")
      .def(py::init(&make_ring_handle), py::arg("variables"), py::arg("field") = "QQ", py::arg("order") = "grevlex",
           py::arg("relations") = std::vector<std::string>{})
      .def_property_readonly("variables", [](const Ring& r) { return r.base->ring()->variables(); })
      .def_property_readonly("field", [](const Ring& r) { return r.base->ring()->field().name(); })
      .def_property_readonly("relations",
                             [](const Ring& r) {
                               std::vector<std::string> out;
                               for (const auto& g : r.base->basis()) out.push_back(render_polynomial(g));
                               return out;
                             })
      .def("normal_form", [](const Ring& r, const std::string& s) { return render_polynomial(r.parse(s)); })
      .def("ideal",
           [](const Ring& r, const std::vector<std::string>& gens) {
             std::vector<Polynomial> ps;
             for (const auto& s : gens) ps.push_back(r.parse(s));
             return Ideal(r.base, std::move(ps));
           })
      .def("matrix", &to_matrix, py::arg("rows"), py::arg("cols") = py::none());

  py::class_<PolyMatrix>(m, "Matrix")
      .def_property_readonly("rows", &PolyMatrix::rows)
      .def_property_readonly("cols", &PolyMatrix::cols)
      .def("entries", &matrix_rows)
      .def("__eq__", [](const PolyMatrix& a, const PolyMatrix& b) { return a == b; })
      .def("__repr__", [](const PolyMatrix& a) {
        return "<Matrix " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ">";
      });

  py::class_<Ideal>(m, "Ideal")
      .def("generators", &basis_strings, "Reduced monic Groebner basis, descending leading terms")
      .def_property_readonly("is_zero", &Ideal::is_zero)
      .def_property_readonly("is_unit", &Ideal::is_unit)
      .def("dimension", &Ideal::krull_dimension)
      .def("contains", [](const Ideal& i, const std::string& s) { return i.contains(i.base()->parse(s)); })
      .def("contains_ideal", [](const Ideal& a, const Ideal& b) { return ideal_contains(a, b); })
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return ideal_equal(a, b); })
      .def("__repr__", [](const Ideal& i) {
        std::string s = "(";
        auto gens = basis_strings(i);
        for (std::size_t t = 0; t < gens.size(); ++t) s += (t ? ", " : "") + gens[t];
        return s + (gens.empty() ? "0)" : ")");
      });

  py::class_<FpModule>(m, "Module")
      .def(py::init<PolyMatrix>(), py::arg("presentation"))
      .def_static("free", [](const Ring& r, std::size_t n) { return FpModule::free(r.base, n); })
      .def_property_readonly("generator_count", &FpModule::generator_count)
      .def_property_readonly("presentation", &FpModule::presentation);

  py::class_<FreeComplex>(m, "Complex")
      .def(py::init([](const Ring& r, const std::string& orientation, int lowest, std::vector<std::size_t> ranks,
                       std::vector<PolyMatrix> differentials) {
             return FreeComplex(r.base, orientation_of(orientation), lowest, std::move(ranks),
                                std::move(differentials));
           }),
           py::arg("ring"), py::arg("orientation"), py::arg("lowest"), py::arg("ranks"), py::arg("differentials"))
      .def_property_readonly("orientation",
                             [](const FreeComplex& c) { return c.orientation() == Orientation::Chain ? "chain" : "cochain"; })
      .def_property_readonly("lowest", &FreeComplex::lowest)
      .def_property_readonly("highest", &FreeComplex::highest)
      .def("ranks", &FreeComplex::ranks)
      .def("rank", &FreeComplex::rank)
      .def("differential", &FreeComplex::differential)
      .def("padded", [](const FreeComplex& c, int position, std::size_t rank) { return pad_trivial(c, position, rank); })
      .def("euler_characteristic", &euler_characteristic)
      .def("chi", &chi)
      .def("is_exact_at", &is_exact_at)
      .def("is_exact", &is_exact);

  py::class_<Resolution>(m, "Resolution")
      .def_readonly("complex", &Resolution::complex)
      .def_readonly("length", &Resolution::length)
      .def_readonly("truncated", &Resolution::truncated);

  py::class_<AffineScheme>(m, "Scheme")
      .def(py::init([](const Ring& r, const std::vector<std::string>& equations) {
             if (!r.base->is_ambient()) throw InputError("schemes take equations in an ambient ring");
             std::vector<Polynomial> ps;
             for (const auto& s : equations) ps.push_back(r.parse(s));
             return AffineScheme(r.base->ring(), std::move(ps));
           }),
           py::arg("ring"), py::arg("equations"))
      .def_property_readonly("dimension", &AffineScheme::dimension)
      .def_property_readonly("coordinate_ring", [](const AffineScheme& x) { return Ring{x.coordinate_ring()}; });

  m.def("determinant", [](const PolyMatrix& a) { return render_polynomial(determinant(a)); });
  m.def("minors_ideal", &minors_ideal, py::arg("matrix"), py::arg("k"));
  m.def("determinantal_scheme", &determinantal_scheme, py::arg("matrix"), py::arg("k"));
  m.def("fitting_ideal", &fitting_ideal, py::arg("complex"), py::arg("i"), py::arg("k"));
  m.def("underline_fitting_ideal", &underline_fitting_ideal, py::arg("complex"), py::arg("i"), py::arg("k"));
  m.def("classical_fitting", &classical_fitting, py::arg("module"), py::arg("k"));
  m.def("generic_rank", &generic_rank, py::arg("module"));
  m.def("free_resolution", &free_resolution, py::arg("module"), py::arg("length"));
  m.def("minimalize", &minimalize, py::arg("resolution"));
  m.def("pd_locus", py::overload_cast<const FpModule&, int, std::optional<int>>(&pd_locus), py::arg("module"),
        py::arg("d"), py::arg("rank") = py::none());
  m.def("kaehler_presentation", &kaehler_presentation, py::arg("scheme"));
  m.def("singular_locus", &singular_locus, py::arg("scheme"), py::arg("dimension") = py::none());
  m.def("higher_singular_locus", &higher_singular_locus, py::arg("scheme"), py::arg("i"), py::arg("length"),
        py::arg("dimension") = py::none());
  m.def(
      "brill_noether_ideal", [](const FreeComplex& c, int k) { return brill_noether_ideal(PushforwardComplex(c), k); },
      py::arg("complex"), py::arg("k"));
  m.def(
      "liftable_sections_rank",
      [](const FreeComplex& c) -> std::optional<int> {
        auto lr = liftable_sections_rank(PushforwardComplex(c));
        return lr ? std::optional<int>(lr->k) : std::nullopt;
      },
      py::arg("complex"));
  m.def(
      "padding_is_quasi_iso",
      [](const FreeComplex& c, int position, std::size_t rank) { return is_quasi_iso(padding_inclusion(c, position, rank)); },
      py::arg("complex"), py::arg("position"), py::arg("rank"));
  m.def(
      "run_job",
      [](const std::string& document, std::optional<std::size_t> budget, std::uint64_t seed, const std::string& format) {
        JobOptions o;
        o.budget = budget;
        o.seed = seed;
        o.format = format == "text" ? ReportFormat::Text : ReportFormat::Json;
        JobResult r;
        {
          py::gil_scoped_release release;
          r = run_job(document, o);
        }
        return py::make_tuple(r.report, r.exit_code);
      },
      py::arg("document"), py::arg("budget") = py::none(), py::arg("seed") = 0, py::arg("format") = "json",
      "Returns (report, exit_code).");
}
