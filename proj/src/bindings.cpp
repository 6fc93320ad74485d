#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "facewalk/assoc.hpp"
#include "facewalk/cube.hpp"
#include "facewalk/families.hpp"
#include "facewalk/graphassoc.hpp"
#include "facewalk/perm.hpp"
#include "facewalk/planar3.hpp"
#include "facewalk/quotient.hpp"
#include "facewalk/strip.hpp"

namespace py = pybind11;
using namespace facewalk;

namespace {

FamilySpec make_spec(const std::string& family, int n, const std::string& graph, const std::string& congruence) {
  FamilySpec s;
  s.family = family;
  s.n = n;
  if (!graph.empty()) {
    std::istringstream in(graph);
    if (family == "planar3")
      s.plane = read_plane_graph(in);
    else
      s.graph = read_simple_graph(in);
  }
  if (!congruence.empty()) {
    std::istringstream in(congruence);
    s.congruence = read_congruence(in);
  }
  check_spec(s);
  return s;
}

PlaneGraph plane_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_plane_graph(in);
}

std::string strip_text(const RhombicStrip& s) {
  std::ostringstream out;
  write_strip(out, s);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hamiltonian listings of face lattices";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.attr("EMPTY") = kEmptyId;
  m.def("families", &family_names);
  m.def(
      "generate",
      [](const std::string& family, int n, const std::string& graph, const std::string& congruence) {
        return generate_listing(make_spec(family, n, graph, congruence)).ids;
      },
      py::arg("family"), py::arg("n") = 0, py::arg("graph") = "", py::arg("congruence") = "",
      "Cyclic face listing; graph and congruence are file contents.");
  m.def(
      "verify",
      [](const std::string& family, const std::vector<std::string>& ids, int n, const std::string& graph,
         const std::string& congruence) {
        return verify_family_listing(make_spec(family, n, graph, congruence), Listing{ids, true}).str();
      },
      py::arg("family"), py::arg("ids"), py::arg("n") = 0, py::arg("graph") = "", py::arg("congruence") = "",
      "Returns 'OK' or 'FAIL <position> <reason>'.");
  m.def(
      "rank",
      [](const std::string& family, int n, const std::string& id) { return face_rank(make_spec(family, n, "", ""), id); },
      py::arg("family"), py::arg("n"), py::arg("id"));

  m.def("brgc", [](int n) { return facewalk::brgc(n); }, py::arg("n"));
  m.def("gamma", [](int n) { return facewalk::gamma(n); }, py::arg("n"));
  m.def("fubini", &fubini);
  m.def("little_schroeder", &little_schroeder);

  m.def(
      "strip",
      [](const std::string& family, int n) {
        if (family == "boolean-mirror") return strip_text(strip_boolean_mirror(n));
        if (family == "boolean-stack") return strip_text(strip_boolean_stack(n));
        if (family == "cube-faces") return strip_text(strip_cube_faces(n));
        throw InputError("unknown strip family " + family);
      },
      py::arg("family"), py::arg("n"), "Strip in the text file format.");
  m.def(
      "sweep",
      [](const std::string& strip) {
        std::istringstream in(strip);
        return sweep_flags(read_strip(in));
      },
      py::arg("strip"));
  m.def("flag_to_signed_perm", &flag_to_signed_perm, py::arg("flag"));

  m.def(
      "decide_strip",
      [](const std::string& plane, int max_vertices) {
        StripDecision d = decide_rhombic_strip(plane_from_text(plane), max_vertices);
        py::dict out;
        out["strip"] = d.found;
        out["cycles"] = d.cycles;
        out["cycle"] = d.cycle;
        if (!d.found && d.cycles > 0) {
          py::list w;
          for (const auto& c : d.witness.witness) w.append(py::make_tuple(c.first, c.second));
          out["witness"] = w;
        }
        if (d.strip) out["strip_text"] = strip_text(*d.strip);
        return out;
      },
      py::arg("plane"), py::arg("max_vertices") = 18);
  m.def(
      "fixture",
      [](const std::string& name, int n) {
        PlaneGraph h;
        if (name == "fano") h = fixture_fano();
        else if (name == "cube") h = fixture_cube();
        else if (name == "prism") h = fixture_prism(n ? n : 3);
        else if (name == "truncated-tetra") h = fixture_truncated_tetra(n);
        else if (name == "permutahedron") h = fixture_permutahedron3();
        else if (name == "associahedron") h = fixture_associahedron3();
        else throw InputError("unknown fixture " + name);
        std::ostringstream out;
        write_plane_graph(out, h);
        return out.str();
      },
      py::arg("name"), py::arg("n") = 0);
}
