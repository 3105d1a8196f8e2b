#include <doctest.h>

#include <algorithm>

#include "polyforge/expr.hpp"
#include "polyforge/families.hpp"
#include "polyforge/isomorphism.hpp"
#include "polyforge/json_io.hpp"
#include "polyforge/lattice.hpp"

using namespace polyforge;

namespace {

FVector fvec(const ConstructedPolytope& p) {
  return f_vector(enumerate_face_lattice(p.structure));
}

}  // namespace

TEST_CASE("polytope json round trip") {
  for (const ConstructedPolytope& p :
       {families::ta(4), families::z(4), families::wp(),
        prism(simplex(3))}) {
    nlohmann::json j = to_json(p);
    ConstructedPolytope back = polytope_from_json(j);
    CHECK(back.structure.dim == p.structure.dim);
    CHECK(back.structure.num_vertices == p.structure.num_vertices);
    CHECK(back.structure.facets == p.structure.facets);
    for (const auto& [name, handle] : p.handles)
      CHECK(back.handle(name).vertex_set == handle.vertex_set);
  }
}

TEST_CASE("facet output order is lexicographic") {
  nlohmann::json j = to_json(families::ta(4));
  std::vector<std::vector<int>> facets =
      j["facets"].get<std::vector<std::vector<int>>>();
  std::vector<std::vector<int>> sorted = facets;
  std::sort(sorted.begin(), sorted.end());
  CHECK(facets == sorted);
}

TEST_CASE("labels round trip") {
  IncidenceStructure p = simplex(2).structure;
  p.labels[0] = "origin";
  p.labels[2] = "far";
  IncidenceStructure back = incidence_from_json(to_json(p));
  CHECK(back.labels == p.labels);
}

TEST_CASE("json errors") {
  CHECK_THROWS_AS(incidence_from_json(nlohmann::json::object()), Error);
  nlohmann::json bad = {{"dim", 2}, {"vertices", 3}, {"facets", {{0, 7}}}};
  CHECK_THROWS_AS(incidence_from_json(bad), Error);
}

TEST_CASE("family specs") {
  CHECK(fvec(build_from_spec("ta:4")) == FVector{4, {8, 18, 17, 7}});
  CHECK(fvec(build_from_spec("pm:3:pyr=1")) == FVector{4, {8, 18, 17, 7}});
  CHECK(fvec(build_from_spec("z:4,2")) ==
        fvec(families::z_pyr(4, 2)));
  CHECK(fvec(build_from_spec("triplex:2,2")) == fvec(families::triplex(2, 2)));
  CHECK(fvec(build_from_spec("gT:4,4,2")) == fvec(families::grunbaum_t(4, 4, 2)));
  CHECK(fvec(build_from_spec("sigma3")) == fvec(families::sigma3()));
  CHECK(fvec(build_from_spec("wp")) == fvec(families::wp()));
  CHECK(fvec(build_from_spec("sq")) == FVector{2, {4, 4}});
}

TEST_CASE("construction expressions") {
  CHECK(are_isomorphic(
      build_from_spec("wed(pyr(sq,1), handle:bottom-base)").structure,
      families::wp().structure));
  CHECK(fvec(build_from_spec("product(simplex(2), simplex(2))")) ==
        FVector{4, {9, 18, 15, 6}});
  CHECK(fvec(build_from_spec("wed(sq, [0,1])")) == FVector{3, {6, 9, 5}});
  CHECK(build_from_spec("wed(sq, vertex:0)").structure.num_vertices == 7);
  CHECK(fvec(build_from_spec("trunc(triplex:2,2, 0)")) ==
        FVector{4, {9, 19, 17, 7}});
  CHECK(fvec(build_from_spec("dsum(simplex(1), simplex(2))")) ==
        FVector{3, {5, 9, 6}});
}

TEST_CASE("spec parse errors") {
  CHECK_THROWS_AS(build_from_spec("nosuch:3"), Error);
  CHECK_THROWS_AS(build_from_spec("pyr("), Error);
  CHECK_THROWS_AS(build_from_spec("ta:4 extra"), Error);
  CHECK_THROWS_AS(build_from_spec("wed(sq, 3)"), Error);
}

TEST_CASE("formula specs") {
  CHECK(eval_formula_spec("phi:1,4,4") == 16);
  CHECK(eval_formula_spec("zeta:2,4,4") == 17);
  CHECK(eval_formula_spec("binom:6,3") == 20);
  CHECK(eval_formula_spec("dplus2facets:1,4,4,2") == 18);
  CHECK(eval_formula_spec("zfam:1,4") == 17);
  CHECK(eval_formula_spec("refined-s2:2,5,3") == 29);
  CHECK_THROWS_AS(eval_formula_spec("phi:1,4"), Error);
  CHECK_THROWS_AS(eval_formula_spec("nope:1"), Error);
}
