#include "polyforge/families.hpp"

#include <string>

#include "polyforge/lattice.hpp"

namespace polyforge::families {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

}  // namespace

ConstructedPolytope square() {
  ConstructedPolytope out = prism(simplex(1));
  out.provenance = "sq";
  return out;
}

ConstructedPolytope triplex(int s, int t) {
  require(s >= 1 && t >= 0, "triplex needs s >= 1, t >= 0");
  // The simplicial 1-prism degenerates to a segment.
  ConstructedPolytope base = s == 1 ? simplex(1) : prism(simplex(s - 1));
  ConstructedPolytope out = kfold_pyramid(base, t);
  out.provenance = "triplex(" + std::to_string(s) + "," + std::to_string(t) + ")";
  return out;
}

ConstructedPolytope grunbaum_t(int d, int a, int m) {
  require(2 <= a && a <= d, "grunbaum_t needs 2 <= a <= d");
  require(1 <= m && m <= a / 2, "grunbaum_t needs 1 <= m <= floor(a/2)");
  ConstructedPolytope out =
      kfold_pyramid(direct_sum(simplex(m), simplex(a - m)), d - a);
  out.provenance = "gT(" + std::to_string(d) + "," + std::to_string(a) + "," +
                   std::to_string(m) + ")";
  return out;
}

ConstructedPolytope pentasm(int d) {
  require(d >= 2, "pentasm needs d >= 2");
  ConstructedPolytope base = triplex(2, d - 2);
  FaceLattice lattice = enumerate_face_lattice(base.structure);
  int cut = -1;
  for (int v = 0; v < 4; ++v) {
    if (is_simple_vertex(lattice, v)) {
      cut = v;
      break;
    }
  }
  require(cut >= 0, "no simple vertex on the base square");
  ConstructedPolytope out = truncate_vertex(base, cut);
  out.provenance = "pm(" + std::to_string(d) + ")";
  return out;
}

ConstructedPolytope pentasm_pyr(int b, int a) {
  require(b >= 2 && a >= 0, "pentasm_pyr needs b >= 2, a >= 0");
  ConstructedPolytope out = kfold_pyramid(pentasm(b), a);
  out.provenance = "pm(" + std::to_string(b) + "," + std::to_string(a) + ")";
  return out;
}

ConstructedPolytope ta(int d) {
  require(d >= 2, "ta needs d >= 2");
  if (d == 2) {
    ConstructedPolytope out = square();
    out.provenance = "ta(2)";
    return out;
  }
  if (d == 3) {
    ConstructedPolytope out;
    out.structure = IncidenceStructure::make(
        3, 6,
        {vset::from_vector({0, 1, 2, 3}), vset::from_vector({2, 3, 4, 5}),
         vset::from_vector({0, 3, 5}), vset::from_vector({0, 4, 5}),
         vset::from_vector({0, 1, 4}), vset::from_vector({1, 2, 4})});
    out.handles["prev-copy"] =
        FaceHandle{"prev-copy", vset::from_vector({0, 1, 2, 3})};
    out.provenance = "ta(3)";
    return out;
  }
  ConstructedPolytope out = wedge(ta(d - 1), "prev-copy");
  out.handles["prev-copy"] =
      FaceHandle{"prev-copy", out.handle("bottom-base").vertex_set};
  out.provenance = "ta(" + std::to_string(d) + ")";
  return out;
}

ConstructedPolytope ta_pyr(int s, int t) {
  require(t >= 0, "ta_pyr needs t >= 0");
  ConstructedPolytope out = kfold_pyramid(ta(s), t);
  out.provenance = "ta(" + std::to_string(s) + "," + std::to_string(t) + ")";
  return out;
}

ConstructedPolytope z(int d) {
  require(d >= 3, "z needs d >= 3");
  if (d == 3) {
    ConstructedPolytope out = direct_sum(simplex(1), simplex(2));
    out.handles["prev-copy"] =
        FaceHandle{"prev-copy", out.structure.facets[0]};
    out.provenance = "z(3)";
    return out;
  }
  ConstructedPolytope out = wedge(z(d - 1), "prev-copy");
  out.handles["prev-copy"] =
      FaceHandle{"prev-copy", out.handle("bottom-base").vertex_set};
  out.provenance = "z(" + std::to_string(d) + ")";
  return out;
}

ConstructedPolytope z_pyr(int a, int t) {
  require(t >= 0, "z_pyr needs t >= 0");
  ConstructedPolytope out = kfold_pyramid(z(a), t);
  out.provenance = "z(" + std::to_string(a) + "," + std::to_string(t) + ")";
  return out;
}

ConstructedPolytope sigma3() {
  ConstructedPolytope out = wedge(square(), vset::single(0));
  out.provenance = "sigma3";
  return out;
}

ConstructedPolytope sigma3_pyr(int t) {
  require(t >= 0, "sigma3_pyr needs t >= 0");
  ConstructedPolytope out = kfold_pyramid(sigma3(), t);
  out.provenance = "sigma3:pyr=" + std::to_string(t);
  return out;
}

ConstructedPolytope wp() {
  ConstructedPolytope out =
      wedge(pyramid(square()), vset::from_vector({0, 1}));
  out.provenance = "wp";
  return out;
}

ConstructedPolytope wp_pyr(int t) {
  require(t >= 0, "wp_pyr needs t >= 0");
  ConstructedPolytope out = kfold_pyramid(wp(), t);
  out.provenance = "wp:pyr=" + std::to_string(t);
  return out;
}

}  // namespace polyforge::families
