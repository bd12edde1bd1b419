// Python bindings for the main operations.  Values cross the boundary as
// plain python data: tableaux as row lists, diagrams as arc triples,
// expansions as coefficient lists, webs through their JSON form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spechtweb/checks.hpp"
#include "spechtweb/json_io.hpp"
#include "spechtweb/render.hpp"
#include "spechtweb/specht.hpp"

namespace py = pybind11;
using namespace spechtweb;

namespace {

Tableau tableau_of(int n, const std::vector<std::vector<int>>& rows) { return Tableau(n, rows); }

std::vector<std::vector<int>> rows_of(const Tableau& t) { return t.rows(); }

std::vector<std::array<int, 3>> arcs_of(const ForkDiagram& d) {
  std::vector<std::array<int, 3>> out;
  for (const Arc& a : d.arcs()) out.push_back({a.left, a.middle, a.right});
  return out;
}

py::list expansion_terms(const MComb& c) {
  py::list out;
  for (const auto& [d, coeff] : c.terms())
    out.append(py::make_tuple(coeff.convert_to<long long>(), arcs_of(d)));
  return out;
}

py::list websum_terms(const WebSum& s) {
  py::list out;
  for (const auto& [key, t] : s.terms())
    out.append(py::make_tuple(t.coeff.convert_to<long long>(), key));
  return out;
}

py::dict matrix_dict(const TransitionMatrix& m) {
  py::dict out;
  out["from"] = basis_name(m.from);
  out["to"] = basis_name(m.to);
  out["n"] = m.n;
  py::list order;
  for (const Tableau& t : m.index) order.append(rows_of(t));
  out["order"] = order;
  py::list entries;
  for (const auto& row : m.entries) {
    py::list r;
    for (const Int& v : row) r.append(v.convert_to<long long>());
    entries.append(r);
  }
  out["entries"] = entries;
  out["unitriangular"] = is_unitriangular(m);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact engine for the three diagram bases of the Specht module S^(n,n,n)";

  py::class_<Tableau>(m, "Tableau")
      .def(py::init(&tableau_of), py::arg("n"), py::arg("rows"))
      .def_static("superstandard", &Tableau::superstandard)
      .def_property_readonly("n", &Tableau::cols)
      .def_property_readonly("rows", &rows_of)
      .def("is_standard", &Tableau::is_standard)
      .def("column_word", &Tableau::column_word)
      .def("__eq__", [](const Tableau& a, const Tableau& b) { return a == b; })
      .def("__repr__", [](const Tableau& t) { return dump(to_json(t)); });

  py::class_<ForkDiagram>(m, "ForkDiagram")
      .def(py::init(&ForkDiagram::from_triples), py::arg("arcs"))
      .def_property_readonly("n", &ForkDiagram::arc_count)
      .def_property_readonly("arcs", &arcs_of)
      .def("__eq__", [](const ForkDiagram& a, const ForkDiagram& b) { return a == b; })
      .def("__repr__", [](const ForkDiagram& d) { return dump(to_json(d)); });

  m.def("syt_count", &syt_count, py::arg("n"));
  m.def("enumerate_syt", &enumerate_syt, py::arg("n"));
  m.def("word_of", [](const Tableau& t) { return word_of(t).str(); });
  m.def("inversions", [](const std::string& w) { return inversions(BoundaryWord::parse(w)); });
  m.def("precedes", [](const std::string& w, const std::string& v) {
    return precedes(BoundaryWord::parse(w), BoundaryWord::parse(v));
  });
  m.def("weak_leq", &weak_leq, py::arg("a"), py::arg("b"));

  m.def("polytabloid_diagram", &polytabloid_diagram, py::arg("t"));
  m.def("m_diagram", &m_diagram, py::arg("t"));
  m.def("is_m_diagram", &is_m_diagram);
  m.def("is_polytabloid", &is_polytabloid);
  m.def("crossing_count", &crossing_count);
  m.def("boundary_word", [](const ForkDiagram& d) { return boundary_word(d).str(); });

  m.def("expand_in_m", [](const ForkDiagram& d) { return expansion_terms(expand_in_m(d)); });
  m.def("expand_via_webs",
        [](const ForkDiagram& d) { return websum_terms(expand_via_webs(d)); });
  m.def("act_module", [](const ForkDiagram& d, int i) {
    SpechtWorkspace ws(d.arc_count());
    return expansion_terms(ws.act(MComb(d), i));
  });
  m.def("transition_matrix", [](const std::string& from, const std::string& to, int n) {
    return matrix_dict(transition_matrix(parse_basis(from), parse_basis(to), n));
  });
  m.def("check_representation", [](int n) {
    RepresentationReport r = check_representation(n);
    return py::make_tuple(r.ok, r.dimension, r.first_violation);
  });

  m.def("web_json_of_fork", [](const ForkDiagram& d) {
    py::list out;
    for (const auto& [key, t] : web_of_fork(d).terms())
      out.append(py::make_tuple(t.coeff.convert_to<long long>(), dump(to_json(t.web))));
    return out;
  });
  m.def("render_svg", [](const ForkDiagram& d) { return render_svg(d); });
  m.def("run_checks", [](int n, unsigned long seed) {
    py::list out;
    for (const auto& r : checks::run_all(n, seed))
      out.append(py::make_tuple(r.name, r.pass, r.detail));
    return out;
  });
}
