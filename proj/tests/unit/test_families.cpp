#include <doctest.h>

#include <algorithm>

#include "polyforge/families.hpp"
#include "polyforge/formulas.hpp"
#include "polyforge/isomorphism.hpp"
#include "polyforge/lattice.hpp"

using namespace polyforge;
using namespace polyforge::families;

namespace {

FVector fvec(const ConstructedPolytope& p) {
  return f_vector(enumerate_face_lattice(p.structure));
}

int max_degree_vertex(const FaceLattice& lattice) {
  std::vector<int> degrees = graph_degrees(lattice);
  return static_cast<int>(
      std::max_element(degrees.begin(), degrees.end()) - degrees.begin());
}

}  // namespace

TEST_CASE("triplex") {
  CHECK(fvec(triplex(2, 0)) == FVector{2, {4, 4}});
  ConstructedPolytope m22 = triplex(2, 2);
  FVector f = fvec(m22);
  CHECK(f.counts[0] == 6);
  CHECK(m22.structure.facets.size() == 6);
  for (int d = 2; d <= 6; ++d)
    for (int s = 2; s <= d; ++s) {
      ConstructedPolytope m = triplex(s, d - s);
      FVector fm = fvec(m);
      for (int k = 0; k < d; ++k)
        CHECK(fm.counts[k] == formulas::phi(k, d, s));
      CHECK(static_cast<int>(m.structure.facets.size()) == d + 2);
    }
  CHECK(are_isomorphic(triplex(1, 3).structure, simplex(4).structure));
  CHECK_THROWS_AS(triplex(0, 1), Error);
}

TEST_CASE("T_m^{d,d-a}") {
  ConstructedPolytope t = grunbaum_t(3, 2, 1);
  FVector f = fvec(t);
  CHECK(f.counts[2] == 5);
  ConstructedPolytope t442 = grunbaum_t(4, 4, 2);
  CHECK(t442.structure.num_vertices == 6);
  CHECK(t442.structure.facets.size() == 9);
  for (int d = 2; d <= 6; ++d)
    for (int a = 2; a <= d; ++a)
      for (int m = 1; m <= a / 2; ++m) {
        FVector g = fvec(grunbaum_t(d, a, m));
        for (int k = 0; k < d; ++k)
          CHECK(g.counts[k] == formulas::fk_dplus2_vertices(k, d, a, m));
      }
  CHECK_THROWS_AS(grunbaum_t(3, 4, 1), Error);
  CHECK_THROWS_AS(grunbaum_t(4, 4, 3), Error);
}

TEST_CASE("pentasms") {
  CHECK(fvec(pentasm(2)) == FVector{2, {5, 5}});
  CHECK(fvec(pentasm(4)) == FVector{4, {9, 19, 17, 7}});
  CHECK(fvec(pentasm_pyr(3, 1)) == FVector{4, {8, 18, 17, 7}});
  for (int d = 2; d <= 6; ++d) {
    FVector f = fvec(pentasm(d));
    for (int k = 0; k < d; ++k)
      CHECK(f.counts[k] == formulas::fk_pentasm(k, d));
  }
  CHECK_THROWS_AS(pentasm(1), Error);
}

TEST_CASE("tetragonal antiwedge family") {
  ConstructedPolytope t3 = ta(3);
  CHECK(fvec(t3) == FVector{3, {6, 10, 6}});
  std::vector<int> sizes;
  for (VertexSet f : t3.structure.facets) sizes.push_back(vset::count(f));
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{3, 3, 3, 3, 4, 4});
  // Nonpyramidal: no vertex lies on every facet but one.
  FaceLattice lattice3 = enumerate_face_lattice(t3.structure);
  std::vector<int> degrees = graph_degrees(lattice3);
  CHECK(*std::max_element(degrees.begin(), degrees.end()) == 4);

  CHECK(fvec(ta(4)) == FVector{4, {8, 18, 17, 7}});
  for (int d = 3; d <= 6; ++d) {
    ConstructedPolytope t = ta(d);
    CHECK(t.structure.num_vertices == 2 * d);
    CHECK(static_cast<int>(t.structure.facets.size()) == d + 3);
  }
  FVector f5 = fvec(ta(5));
  for (int k = 0; k < 5; ++k)
    CHECK(f5.counts[k] == formulas::zeta(k, 5, 5));
}

TEST_CASE("Z family") {
  CHECK(fvec(z(3)) == FVector{3, {5, 9, 6}});
  CHECK(fvec(z(4)) == FVector{4, {7, 17, 17, 7}});
  for (int d = 3; d <= 6; ++d) {
    ConstructedPolytope p = z(d);
    FVector f = fvec(p);
    CHECK(f.counts[0] == 2 * d - 1);
    CHECK(f.counts[1] == d * d + d - 3);
    for (int k = 2; k < d; ++k)
      CHECK(f.counts[k] == formulas::fk_z(k, d));
    CHECK(static_cast<int>(p.structure.facets.size()) == d + 3);
  }
  CHECK_THROWS_AS(z(2), Error);
}

TEST_CASE("pentasm and antiwedge towers share f-vectors") {
  for (int d = 3; d <= 6; ++d)
    for (int s = 3; s <= d; ++s) {
      FVector a = fvec(ta_pyr(s, d - s));
      FVector b = fvec(pentasm_pyr(s - 1, d + 1 - s));
      CHECK(a == b);
      for (int k = 0; k < d; ++k)
        CHECK(a.counts[k] == formulas::zeta(k, d, s));
    }
}

TEST_CASE("Z tower face counts") {
  FVector f = fvec(z_pyr(4, 2));  // d = 6, s = 3
  CHECK(f.counts[1] == formulas::zeta(1, 6, 3) + 1);
  // Pyramids over Z(s+1) exceed zeta_k by C(d-s,k-1): the binomial is 1 at
  // k = 1 and k = d-s+1, larger in between, and 0 from k = d-s+2 on.
  for (int d = 4; d <= 6; ++d)
    for (int s = 3; s < d; ++s) {
      FVector g = fvec(z_pyr(s + 1, d - s - 1));
      CHECK(g.counts[0] == d + s);
      for (int k = 1; k < d; ++k)
        CHECK(g.counts[k] ==
              formulas::zeta(k, d, s) + formulas::binomial(d - s, k - 1));
      CHECK(g.counts[d - s + 1] == formulas::zeta(d - s + 1, d, s) + 1);
      for (int k = d - s + 2; k < d; ++k)
        CHECK(g.counts[k] == formulas::zeta(k, d, s));
    }
}

TEST_CASE("sigma3 and WP") {
  ConstructedPolytope s = sigma3();
  CHECK(s.structure.num_vertices == 7);
  CHECK(s.structure.facets.size() == 6);
  CHECK(fvec(sigma3_pyr(1)) == FVector{4, {8, 18, 17, 7}});
  CHECK(fvec(wp()) == FVector{4, {8, 18, 17, 7}});
  // A pyramid over sigma3 is the wedge of a square pyramid at an apex edge.
  ConstructedPolytope apex_wedge =
      wedge(pyramid(square()), vset::from_vector({0, 4}));
  CHECK(are_isomorphic(sigma3_pyr(1).structure, apex_wedge.structure));
  CHECK_FALSE(are_isomorphic(wp().structure, apex_wedge.structure));
}

TEST_CASE("maximum-degree vertex figures") {
  // TA(d) and Z(d): simplicial (d-1)-prism on 2d-2 vertices.
  for (int d : {4, 5}) {
    FaceLattice lattice = enumerate_face_lattice(ta(d).structure);
    int v = max_degree_vertex(lattice);
    CHECK_FALSE(is_simple_vertex(lattice, v));
    IncidenceStructure figure = vertex_figure(lattice, v);
    CHECK(figure.num_vertices == 2 * d - 2);
    CHECK(are_isomorphic(figure, triplex(d - 1, 0).structure));

    FaceLattice zl = enumerate_face_lattice(z(d).structure);
    IncidenceStructure zfig = vertex_figure(zl, max_degree_vertex(zl));
    CHECK(are_isomorphic(zfig, triplex(d - 1, 0).structure));
  }
  // Pm(d): the apexes carry the maximum degree d+1 and their figure is the
  // (2,d-3)-triplex.
  for (int d : {4, 5}) {
    FaceLattice lattice = enumerate_face_lattice(pentasm(d).structure);
    std::vector<int> degrees = graph_degrees(lattice);
    int v = max_degree_vertex(lattice);
    CHECK(degrees[v] == d + 1);
    CHECK_FALSE(is_simple_vertex(lattice, v));
    CHECK(are_isomorphic(vertex_figure(lattice, v),
                         triplex(2, d - 3).structure));
  }
}
