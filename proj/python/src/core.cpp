// Python bindings. Structured results cross the boundary as JSON text and are
// decoded by the package's __init__.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hocofin/error.hpp"
#include "hocofin/fixtures.hpp"
#include "hocofin/report.hpp"
#include "hocofin/theorems.hpp"
#include "hocofin/workspace.hpp"

namespace py = pybind11;
using namespace hocofin;

namespace {

std::vector<std::string> strings(const std::vector<AbelianInvariants>& h) {
  std::vector<std::string> out;
  for (const auto& g : h) out.push_back(g.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Homology of group diagrams over finite categories";
  py::register_exception<Error>(m, "HocofinError", PyExc_ValueError);

  m.def("theorem_names", &theorem_names);
  m.def("fixture_names", &fixture_names, py::arg("theorem"));
  m.def("fixtures_json", [] {
    namespace fx = fixtures;
    return Json{{"categories", fx::category_names()}, {"functors", fx::functor_names()},
                {"diagrams", fx::diagram_names()},    {"pointed_diagrams", fx::pointed_diagram_names()},
                {"dsets", fx::dset_names()},          {"dset_morphisms", fx::dset_morphism_names()},
                {"systems", fx::system_names()}}
        .dump();
  });

  m.def(
      "verify_json",
      [](const std::string& theorem, const std::string& fixture, std::size_t n_max, int effort, std::size_t level,
         bool unconditional) {
        VerifyOptions o;
        o.n_max = n_max;
        o.effort = effort;
        o.level = level;
        o.unconditional = unconditional;
        py::gil_scoped_release release;
        return to_json(verify(theorem, fixture, o), o).dump();
      },
      py::arg("theorem"), py::arg("fixture"), py::arg("n_max") = 3, py::arg("effort") = 1, py::arg("level") = 3,
      py::arg("unconditional") = false);

  m.def(
      "ab_colim_derived",
      [](const std::string& diagram, std::size_t n_max, const std::string& input) {
        Workspace w = input.empty() ? Workspace{} : Workspace::load(input);
        return strings(ab_colim_derived(abelianize_diagram(w.diagram(diagram)), n_max));
      },
      py::arg("diagram"), py::arg("n_max") = 3, py::arg("input") = "");

  m.def(
      "colim0_json",
      [](const std::string& diagram, const std::string& input) {
        Workspace w = input.empty() ? Workspace{} : Workspace::load(input);
        return to_json(degree_zero(w.diagram(diagram))).dump();
      },
      py::arg("diagram"), py::arg("input") = "");

  m.def(
      "certify_cofinal_json",
      [](const std::string& functor, bool coinitial, int effort, std::size_t n_max, const std::string& input) {
        Workspace w = input.empty() ? Workspace{} : Workspace::load(input);
        Functor f = w.functor(functor);
        CertifyOptions o;
        o.effort = effort;
        o.n_max = n_max;
        return to_json(certify_homotopy_cofinal(f, coinitial, o), f.target()).dump();
      },
      py::arg("functor"), py::arg("coinitial") = false, py::arg("effort") = 1, py::arg("n_max") = 3,
      py::arg("input") = "");

  m.def(
      "certify_contractible_json",
      [](const std::string& category, int effort, std::size_t n_max, const std::string& input) {
        Workspace w = input.empty() ? Workspace{} : Workspace::load(input);
        CertifyOptions o;
        o.effort = effort;
        o.n_max = n_max;
        return to_json(certify_contractible(w.category(category), o)).dump();
      },
      py::arg("category"), py::arg("effort") = 1, py::arg("n_max") = 3, py::arg("input") = "");

  m.def(
      "fingerprint",
      [](const std::vector<std::string>& generators, const std::vector<std::vector<std::string>>& relators) {
        return fingerprint(make_presentation(generators, relators));
      },
      py::arg("generators"), py::arg("relators"));

  m.def(
      "invariant_factors",
      [](const std::vector<std::vector<long long>>& rows) {
        const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i) {
          if (rows[i].size() != c) fail(ErrorCode::InvalidInput, "ragged matrix");
          for (std::size_t j = 0; j < c; ++j) a(i, j) = rows[i][j];
        }
        std::vector<std::string> out;
        for (const auto& d : invariant_factors(a)) out.push_back(d.str());
        return out;
      },
      py::arg("rows"));

  m.def(
      "workspace_summary_json", [](const std::string& path) { return Workspace::load(path).summary().dump(); },
      py::arg("path"));
}
