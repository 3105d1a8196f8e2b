#include <doctest.h>

#include <algorithm>
#include <set>

#include "polyforge/families.hpp"
#include "polyforge/formulas.hpp"
#include "polyforge/isomorphism.hpp"
#include "polyforge/lattice.hpp"

using namespace polyforge;

namespace {

IncidenceStructure cube() {
  return IncidenceStructure::make(
      3, 8,
      {vset::from_vector({0, 1, 2, 3}), vset::from_vector({4, 5, 6, 7}),
       vset::from_vector({0, 1, 4, 5}), vset::from_vector({2, 3, 6, 7}),
       vset::from_vector({0, 2, 4, 6}), vset::from_vector({1, 3, 5, 7})});
}

FVector fvec(const IncidenceStructure& p) {
  return f_vector(enumerate_face_lattice(p));
}

}  // namespace

TEST_CASE("simplex lattice") {
  FaceLattice lattice = enumerate_face_lattice(simplex(3).structure);
  CHECK(f_vector(lattice) == FVector{3, {4, 6, 4}});
  for (int k = 0; k <= 3; ++k)
    CHECK(static_cast<std::int64_t>(lattice.faces_by_dim[k].size()) ==
          formulas::binomial(4, k + 1));
}

TEST_CASE("cube lattice") { CHECK(fvec(cube()) == FVector{3, {8, 12, 6}}); }

TEST_CASE("segment lattice") {
  FaceLattice lattice = enumerate_face_lattice(simplex(1).structure);
  CHECK(f_vector(lattice) == FVector{1, {2}});
  CHECK(graph_degrees(lattice) == std::vector<int>{1, 1});
}

TEST_CASE("product of two triangles") {
  ConstructedPolytope p = product(simplex(2), simplex(2));
  FVector f = fvec(p.structure);
  CHECK(f == FVector{4, {9, 18, 15, 6}});
  for (int k = 0; k < 4; ++k)
    CHECK(f.counts[k] == formulas::fk_dplus2_facets(k, 4, 4, 2));
}

TEST_CASE("malformed input is rejected") {
  // Two facets whose closure misses most vertices.
  IncidenceStructure bad = IncidenceStructure::make(
      2, 5, {vset::from_vector({0, 1, 2}), vset::from_vector({2, 3, 4})});
  CHECK_THROWS_AS(enumerate_face_lattice(bad), Error);

  // Declared dimension disagrees with the closure rank.
  IncidenceStructure wrong_dim = simplex(3).structure;
  wrong_dim.dim = 4;
  CHECK_THROWS_AS(enumerate_face_lattice(wrong_dim), Error);
}

TEST_CASE("graph degrees") {
  FaceLattice simplex_lattice = enumerate_face_lattice(simplex(4).structure);
  for (int v = 0; v < 5; ++v) {
    CHECK(graph_degrees(simplex_lattice)[v] == 4);
    CHECK(is_simple_vertex(simplex_lattice, v));
  }

  FaceLattice pyr_lattice =
      enumerate_face_lattice(pyramid(families::square()).structure);
  std::vector<int> degrees = graph_degrees(pyr_lattice);
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{3, 3, 3, 3, 4});
  CHECK_FALSE(is_simple_vertex(pyr_lattice, 4));  // apex
  CHECK_THROWS_AS(is_simple_vertex(pyr_lattice, 9), Error);

  FaceLattice ta4 = enumerate_face_lattice(families::ta(4).structure);
  std::vector<int> ta_degrees = graph_degrees(ta4);
  std::sort(ta_degrees.begin(), ta_degrees.end());
  CHECK(ta_degrees == std::vector<int>{4, 4, 4, 4, 4, 5, 5, 6});

  FaceLattice z4 = enumerate_face_lattice(families::z(4).structure);
  std::vector<int> z_degrees = graph_degrees(z4);
  std::sort(z_degrees.begin(), z_degrees.end());
  CHECK(z_degrees == std::vector<int>{4, 4, 4, 5, 5, 6, 6});
}

TEST_CASE("vertex figure of an apex is the base") {
  ConstructedPolytope p = pyramid(families::ta(3));
  FaceLattice lattice = enumerate_face_lattice(p.structure);
  IncidenceStructure figure = vertex_figure(lattice, 6);
  CHECK(are_isomorphic(figure, families::ta(3).structure));
}

TEST_CASE("vertex figure of a simple vertex is a simplex") {
  FaceLattice lattice = enumerate_face_lattice(cube());
  for (int v = 0; v < 8; ++v)
    CHECK(are_isomorphic(vertex_figure(lattice, v), simplex(2).structure));
}

TEST_CASE("vertex figure counts faces through the vertex") {
  for (const ConstructedPolytope& p :
       {families::ta(4), families::z(4), pyramid(families::square())}) {
    FaceLattice lattice = enumerate_face_lattice(p.structure);
    for (int v = 0; v < p.structure.num_vertices; ++v) {
      FVector figure_f = f_vector(enumerate_face_lattice(vertex_figure(lattice, v)));
      for (int k = 1; k < lattice.dim; ++k) {
        std::int64_t through = 0;
        for (VertexSet face : lattice.faces_by_dim[k])
          if (vset::contains(face, v)) ++through;
        CHECK(figure_f.extended(k - 1) == through);
      }
    }
  }
}

TEST_CASE("counting faces that meet a vertex set") {
  ConstructedPolytope p = pyramid(families::square());
  FaceLattice lattice = enumerate_face_lattice(p.structure);
  std::vector<int> all{0, 1, 2, 3, 4};
  FVector f = f_vector(lattice);
  for (int k = 0; k <= 2; ++k)
    CHECK(count_faces_meeting(lattice, all, k) == f.counts[k]);
  std::vector<int> apex{4};
  CHECK(count_faces_meeting(lattice, apex, 1) == 4);
  CHECK_THROWS_AS(count_faces_meeting(lattice, apex, 3), Error);
  std::vector<int> bogus{7};
  CHECK_THROWS_AS(count_faces_meeting(lattice, bogus, 1), Error);
}

TEST_CASE("face-count bound on random vertex sequences") {
  ConstructedPolytope p = families::triplex(3, 2);
  FaceLattice lattice = enumerate_face_lattice(p.structure);
  const int d = lattice.dim;
  std::uint64_t state = 42;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> pool(p.structure.num_vertices);
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);
    int r = 1 + static_cast<int>(next() % (d + 1));
    for (int i = 0; i < r; ++i)
      std::swap(pool[i], pool[i + static_cast<int>(next() % (pool.size() - i))]);
    std::vector<int> s(pool.begin(), pool.begin() + r);
    for (int k = 1; k <= d - 1; ++k) {
      std::int64_t bound = 0;
      for (int i = 1; i <= r; ++i) bound += formulas::binomial(d + 1 - i, k);
      CHECK(count_faces_meeting(lattice, s, k) >= bound);
    }
  }
}

TEST_CASE("isomorphism under relabeling") {
  std::uint64_t state = 7;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (const ConstructedPolytope& p :
       {families::ta(4), families::z(4), families::pentasm(3),
        families::triplex(3, 1)}) {
    const int n = p.structure.num_vertices;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = 0; i < n - 1; ++i)
      std::swap(perm[i], perm[i + static_cast<int>(next() % (n - i))]);
    std::vector<VertexSet> relabeled;
    for (VertexSet f : p.structure.facets) {
      VertexSet out = 0;
      for (int v : vset::to_vector(f)) out |= vset::single(perm[v]);
      relabeled.push_back(out);
    }
    IncidenceStructure q =
        IncidenceStructure::make(p.structure.dim, n, relabeled);
    CHECK(are_isomorphic(p.structure, q));
    CHECK(are_isomorphic(p.structure, p.structure));
    // Isomorphic structures must agree on every face count.
    CHECK(f_vector(enumerate_face_lattice(p.structure)) ==
          f_vector(enumerate_face_lattice(q)));
  }
}

TEST_CASE("non-isomorphic pairs") {
  CHECK_FALSE(are_isomorphic(families::ta(4).structure,
                             families::pentasm_pyr(3, 1).structure));
  CHECK_FALSE(are_isomorphic(cube(), product(simplex(1), simplex(2)).structure));
}

TEST_CASE("wedge of a square at an edge is a triangular prism") {
  ConstructedPolytope w = wedge(families::square(), vset::from_vector({0, 1}));
  ConstructedPolytope p = prism(simplex(2));
  // The deterministic numbering happens to reproduce the prism labels
  // exactly, which doubles as an explicit bijection.
  std::set<VertexSet> wf(w.structure.facets.begin(), w.structure.facets.end());
  std::set<VertexSet> pf(p.structure.facets.begin(), p.structure.facets.end());
  CHECK(wf == pf);
  CHECK(are_isomorphic(w.structure, p.structure));
}

TEST_CASE("isomorphism size guard") {
  ConstructedPolytope big = product(simplex(4), simplex(4));
  CHECK_THROWS_AS(are_isomorphic(big.structure, big.structure, 16), Error);
  CHECK(are_isomorphic(big.structure, big.structure, 32));

  // Cross-polytopes square the facet count per sum; seven factors pass the
  // vertex cap but overflow the 64-facet mask.
  ConstructedPolytope cross = direct_sum(simplex(1), simplex(1));
  for (int i = 2; i < 7; ++i) cross = direct_sum(cross, simplex(1));
  CHECK(cross.structure.num_vertices == 14);
  CHECK(cross.structure.facets.size() == 128);
  CHECK_THROWS_AS(are_isomorphic(cross.structure, cross.structure), Error);
}

TEST_CASE("vertex cap guards") {
  ConstructedPolytope big = product(simplex(7), simplex(7));  // 64 vertices
  CHECK(big.structure.num_vertices == 64);
  CHECK_THROWS_AS(pyramid(big), Error);
  CHECK_THROWS_AS(direct_sum(big, simplex(1)), Error);
  CHECK_THROWS_AS(product(simplex(8), simplex(7)), Error);
  CHECK_THROWS_AS(wedge(big, big.structure.facets[0]), Error);
}

TEST_CASE("vertex figure on a segment") {
  FaceLattice lattice = enumerate_face_lattice(simplex(1).structure);
  IncidenceStructure figure = vertex_figure(lattice, 0);
  CHECK(figure.dim == 0);
  CHECK(figure.num_vertices == 1);
  FaceLattice point = enumerate_face_lattice(simplex(0).structure);
  CHECK_THROWS_AS(vertex_figure(point, 0), Error);
}

TEST_CASE("validation flags broken structures") {
  // Duplicated facet.
  IncidenceStructure dup = IncidenceStructure::make(
      2, 4,
      {vset::from_vector({0, 1}), vset::from_vector({0, 1}),
       vset::from_vector({1, 3}), vset::from_vector({2, 3}),
       vset::from_vector({0, 2})});
  CHECK_FALSE(validate(dup).empty());

  // Square with an extra diagonal: graded but neither diamond nor Euler.
  IncidenceStructure diag = IncidenceStructure::make(
      2, 4,
      {vset::from_vector({0, 1}), vset::from_vector({1, 3}),
       vset::from_vector({2, 3}), vset::from_vector({0, 2}),
       vset::from_vector({0, 3})});
  std::vector<std::string> violations = validate(diag);
  CHECK_FALSE(violations.empty());
}

TEST_CASE("constructed families validate cleanly") {
  for (const ConstructedPolytope& p :
       {families::ta(4), families::z(5), families::pentasm(4),
        families::grunbaum_t(5, 4, 2), families::wp()})
    CHECK(validate(p.structure).empty());
}

TEST_CASE("Euler relation for Z(6)") {
  FVector f = fvec(families::z(6).structure);
  std::int64_t sum = 0;
  for (int k = 0; k < 6; ++k) sum += (k % 2 == 0 ? 1 : -1) * f.counts[k];
  CHECK(sum == 0);
  CHECK(validate(families::z(6).structure).empty());
}
