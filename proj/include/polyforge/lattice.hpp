#pragma once

#include <span>
#include <string>
#include <vector>

#include "polyforge/incidence.hpp"

namespace polyforge {

// Enumerates the face lattice as the intersection closure of the facet
// vertex-sets seeded with the full vertex set; ranks are longest containment
// chains from the vertices. Throws Error(NotGraded) when the closure poset is
// not the graded poset of a polytope (malformed input).
FaceLattice enumerate_face_lattice(const IncidenceStructure& p);

FVector f_vector(const FaceLattice& lattice);

// Number of 1-faces containing each vertex.
std::vector<int> graph_degrees(const FaceLattice& lattice);

// True iff the vertex lies in exactly dim edges.
bool is_simple_vertex(const FaceLattice& lattice, int v);

// The (dim-1)-structure whose faces are the faces of P containing v, shifted
// down one dimension: vertices <-> edges at v, facets <-> facets through v.
IncidenceStructure vertex_figure(const FaceLattice& lattice, int v);

// Exact number of k-faces containing at least one vertex of S.
std::int64_t count_faces_meeting(const FaceLattice& lattice,
                                 std::span<const int> s, int k);

// Invariant checks on the raw incidence data (vertex coverage, facet
// antichain, facet count). Violations are data, not errors.
std::vector<std::string> validate_incidence(const IncidenceStructure& p);

// Gradedness, diamond property, Euler relation and graph connectivity of an
// enumerated lattice.
std::vector<std::string> validate_lattice(const FaceLattice& lattice);

// Runs both check layers; a NotGraded enumeration failure is reported as a
// violation instead of thrown.
std::vector<std::string> validate(const IncidenceStructure& p);

}  // namespace polyforge
