#pragma once

#include "polyforge/constructions.hpp"

namespace polyforge::families {

// Square with prism handles (bottom-base {0,2}, top-base {1,3}).
ConstructedPolytope square();

// M(s,t): t-fold pyramid over the simplicial s-prism; dimension s+t, 2s+t
// vertices, s+t+2 facets for s >= 2.
ConstructedPolytope triplex(int s, int t);

// T_m^{d,d-a}: (d-a)-fold pyramid over T(m) ⊕ T(a-m); d+2 vertices.
ConstructedPolytope grunbaum_t(int d, int a, int m);

// Pm(d): the simple base-square vertex of M(2,d-2) truncated; 2d+1 vertices.
ConstructedPolytope pentasm(int d);

// Pm(b,a): a-fold pyramid over Pm(b).
ConstructedPolytope pentasm_pyr(int b, int a);

// TA(2) square, TA(3) tetragonal antiwedge, TA(d) the wedge of TA(d-1) at its
// designated TA(d-2) facet (handle "prev-copy"); 2d vertices, d+3 facets.
ConstructedPolytope ta(int d);

// TA(s,t): t-fold pyramid over TA(s).
ConstructedPolytope ta_pyr(int s, int t);

// Z(3) triangular bipyramid, Z(d) the wedge of Z(d-1) at its designated
// Z(d-2) facet (handle "prev-copy"); 2d-1 vertices, d+3 facets.
ConstructedPolytope z(int d);

// Z(a,t): t-fold pyramid over Z(a).
ConstructedPolytope z_pyr(int a, int t);

// Σ(3): wedge of a square at a vertex; 7 vertices, 6 facets.
ConstructedPolytope sigma3();
ConstructedPolytope sigma3_pyr(int t);

// WP: wedge of a square pyramid at a base edge; f-vector (8,18,17,7).
ConstructedPolytope wp();
ConstructedPolytope wp_pyr(int t);

}  // namespace polyforge::families
