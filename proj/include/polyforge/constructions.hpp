#pragma once

#include <map>
#include <string>

#include "polyforge/incidence.hpp"

namespace polyforge {

// An incidence structure plus named designated faces. Handles survive a
// construction only when the vertex numbering does (pyramids extend it; the
// other operators renumber and install fresh handles).
struct ConstructedPolytope {
  IncidenceStructure structure;
  std::map<std::string, FaceHandle> handles;
  std::string provenance;

  const FaceHandle& handle(const std::string& name) const;
  bool has_handle(const std::string& name) const {
    return handles.count(name) != 0;
  }
};

// d+1 vertices, all d-subsets as facets; handle "facet-0" = {0..d-1} (d >= 1).
ConstructedPolytope simplex(int d);

// One new apex adjacent to everything; handles "apex-i" per apex, "base" for
// the original vertex set (kept across iterated pyramids).
ConstructedPolytope pyramid(const ConstructedPolytope& p);
ConstructedPolytope kfold_pyramid(const ConstructedPolytope& p, int t);

// Vertex pairs (i,j) numbered i*|Q|+j; facets F x V(Q) and V(P) x G.
ConstructedPolytope product(const ConstructedPolytope& p,
                            const ConstructedPolytope& q);

// product(p, segment) with handles "bottom-base", "top-base".
ConstructedPolytope prism(const ConstructedPolytope& p);

// Disjoint vertex union; facets F ∪ G over all facet pairs.
ConstructedPolytope direct_sum(const ConstructedPolytope& p,
                               const ConstructedPolytope& q);

// Wedge of p at the face with vertex set `face`: face vertices stay single,
// all others split into a bottom and a top copy. Handles "bottom-base" and
// "top-base", each a copy of p.
ConstructedPolytope wedge(const ConstructedPolytope& p, VertexSet face);
ConstructedPolytope wedge(const ConstructedPolytope& p,
                          const std::string& handle_name);

// Cuts a simple vertex: one new vertex per edge at v, one new simplex facet
// on the d new vertices. Handle "cut-facet" designates that facet.
ConstructedPolytope truncate_vertex(const ConstructedPolytope& p, int v);

// True iff pyr(wed_F(P)) is isomorphic to the wedge of pyr(P) at pyr(F).
bool pyramid_wedge_commutation_check(const ConstructedPolytope& p,
                                     VertexSet face);

}  // namespace polyforge
