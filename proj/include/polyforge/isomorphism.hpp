#pragma once

#include "polyforge/incidence.hpp"

namespace polyforge {

// Combinatorial isomorphism: is there a vertex bijection carrying the facet
// family of a onto the facet family of b? Backtracks over facet images after
// refining by facet sizes, pairwise intersection sizes and vertex-facet
// degrees. Throws Error(TooLarge) when either side exceeds max_vertices.
bool are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b,
                    int max_vertices = kMaxVertices);

}  // namespace polyforge
