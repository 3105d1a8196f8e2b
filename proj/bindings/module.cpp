#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include <json.hpp>

#include "polyforge/audit.hpp"
#include "polyforge/expr.hpp"
#include "polyforge/families.hpp"
#include "polyforge/formulas.hpp"
#include "polyforge/isomorphism.hpp"
#include "polyforge/json_io.hpp"
#include "polyforge/lattice.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      py::dict d;
      for (const auto& [key, value] : j.items())
        d[py::str(key)] = json_to_py(value);
      return d;
    }
    case nlohmann::json::value_t::array: {
      py::list l;
      for (const auto& value : j) l.append(json_to_py(value));
      return l;
    }
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

// Wraps a constructed polytope with a lazily enumerated lattice.
struct PyPolytope {
  polyforge::ConstructedPolytope poly;
  mutable std::shared_ptr<const polyforge::FaceLattice> lattice;

  const polyforge::FaceLattice& lat() const {
    if (!lattice)
      lattice = std::make_shared<const polyforge::FaceLattice>(
          polyforge::enumerate_face_lattice(poly.structure));
    return *lattice;
  }

  std::vector<std::vector<int>> facets() const {
    std::vector<std::vector<int>> out;
    for (polyforge::VertexSet f : poly.structure.facets)
      out.push_back(polyforge::vset::to_vector(f));
    return out;
  }

  std::vector<std::vector<int>> faces(int k) const {
    if (k < 0 || k > poly.structure.dim)
      throw polyforge::Error(polyforge::ErrorCode::BadRank,
                             "k = " + std::to_string(k));
    std::vector<std::vector<int>> out;
    for (polyforge::VertexSet f :
         lat().faces_by_dim[static_cast<std::size_t>(k)])
      out.push_back(polyforge::vset::to_vector(f));
    return out;
  }

  std::vector<std::int64_t> f_vector() const {
    return polyforge::f_vector(lat()).counts;
  }
};

PyPolytope wrap(polyforge::ConstructedPolytope poly) {
  return PyPolytope{std::move(poly), nullptr};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact face-lattice kernel for vertex-facet incidence data";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const polyforge::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<PyPolytope>(m, "Polytope")
      .def_property_readonly(
          "dim", [](const PyPolytope& p) { return p.poly.structure.dim; })
      .def_property_readonly(
          "num_vertices",
          [](const PyPolytope& p) { return p.poly.structure.num_vertices; })
      .def_property_readonly("provenance",
                             [](const PyPolytope& p) { return p.poly.provenance; })
      .def_property_readonly("facets", &PyPolytope::facets)
      .def_property_readonly(
          "handles",
          [](const PyPolytope& p) {
            py::dict d;
            for (const auto& [name, handle] : p.poly.handles)
              d[py::str(name)] = polyforge::vset::to_vector(handle.vertex_set);
            return d;
          })
      .def("f_vector", &PyPolytope::f_vector)
      .def("faces", &PyPolytope::faces, py::arg("k"))
      .def("degrees",
           [](const PyPolytope& p) { return polyforge::graph_degrees(p.lat()); })
      .def("is_simple_vertex",
           [](const PyPolytope& p, int v) {
             return polyforge::is_simple_vertex(p.lat(), v);
           },
           py::arg("v"))
      .def("vertex_figure",
           [](const PyPolytope& p, int v) {
             polyforge::ConstructedPolytope out;
             out.structure = polyforge::vertex_figure(p.lat(), v);
             out.provenance = p.poly.provenance + "/" + std::to_string(v);
             return wrap(std::move(out));
           },
           py::arg("v"))
      .def("count_faces_meeting",
           [](const PyPolytope& p, const std::vector<int>& s, int k) {
             return polyforge::count_faces_meeting(p.lat(), s, k);
           },
           py::arg("vertices"), py::arg("k"))
      .def("validate",
           [](const PyPolytope& p) { return polyforge::validate(p.poly.structure); })
      .def("to_json",
           [](const PyPolytope& p) { return polyforge::to_json(p.poly).dump(2); })
      .def("__repr__", [](const PyPolytope& p) {
        return "<Polytope dim=" + std::to_string(p.poly.structure.dim) +
               " vertices=" + std::to_string(p.poly.structure.num_vertices) +
               " '" + p.poly.provenance + "'>";
      });

  m.def("build", [](const std::string& spec) {
    return wrap(polyforge::build_from_spec(spec));
  });
  m.def("from_json", [](const std::string& text) {
    return wrap(polyforge::polytope_from_json(nlohmann::json::parse(text)));
  });

  m.def("simplex", [](int d) { return wrap(polyforge::simplex(d)); });
  m.def("pyramid", [](const PyPolytope& p, int t) {
          return wrap(polyforge::kfold_pyramid(p.poly, t));
        },
        py::arg("p"), py::arg("t") = 1);
  m.def("prism", [](const PyPolytope& p) { return wrap(polyforge::prism(p.poly)); });
  m.def("product", [](const PyPolytope& a, const PyPolytope& b) {
    return wrap(polyforge::product(a.poly, b.poly));
  });
  m.def("direct_sum", [](const PyPolytope& a, const PyPolytope& b) {
    return wrap(polyforge::direct_sum(a.poly, b.poly));
  });
  m.def("wedge", [](const PyPolytope& p, const std::vector<int>& face) {
    return wrap(polyforge::wedge(p.poly, polyforge::vset::from_vector(face)));
  });
  m.def("wedge_at_handle", [](const PyPolytope& p, const std::string& name) {
    return wrap(polyforge::wedge(p.poly, name));
  });
  m.def("truncate_vertex", [](const PyPolytope& p, int v) {
    return wrap(polyforge::truncate_vertex(p.poly, v));
  });

  m.def("are_isomorphic",
        [](const PyPolytope& a, const PyPolytope& b, int max_vertices) {
          return polyforge::are_isomorphic(a.poly.structure, b.poly.structure,
                                           max_vertices);
        },
        py::arg("a"), py::arg("b"), py::arg("max_vertices") = 64);

  m.def("binomial", &polyforge::formulas::binomial);
  m.def("phi", &polyforge::formulas::phi, py::arg("k"), py::arg("d"),
        py::arg("s"));
  m.def("zeta", &polyforge::formulas::zeta, py::arg("k"), py::arg("d"),
        py::arg("s"));
  m.def("fk_dplus2_facets", &polyforge::formulas::fk_dplus2_facets);
  m.def("fk_dplus2_vertices", &polyforge::formulas::fk_dplus2_vertices);
  m.def("fk_pentasm", &polyforge::formulas::fk_pentasm);
  m.def("fk_pentasm_pyr", &polyforge::formulas::fk_pentasm_pyr);
  m.def("fk_z", &polyforge::formulas::fk_z);
  m.def("refined_s2_bound", &polyforge::formulas::refined_s2_bound);
  m.def("eval_formula", &polyforge::eval_formula_spec);

  m.def("audit",
        [](int dmax, const std::vector<std::string>& checks, std::uint64_t seed,
           bool iso_cross_check) {
          polyforge::audit::SweepConfig cfg;
          cfg.dmax = dmax;
          cfg.checks = checks;
          cfg.seed = seed;
          cfg.iso_cross_check = iso_cross_check;
          polyforge::audit::RunResult result = polyforge::audit::run(cfg);
          return json_to_py(result.to_json(cfg));
        },
        py::arg("dmax") = 8, py::arg("checks") = std::vector<std::string>{"all"},
        py::arg("seed") = 20250810, py::arg("iso_cross_check") = false);
}
