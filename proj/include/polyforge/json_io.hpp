#pragma once

#include <string>

#include <json.hpp>

#include "polyforge/constructions.hpp"
#include "polyforge/incidence.hpp"

namespace polyforge {

// Schema: {"dim": int, "vertices": int, "facets": [[int,...],...],
//          "labels": {"0": "..."}?, "handles": {"name": [int,...]}?}
// Facets are emitted in lexicographic order of their sorted vertex lists.
nlohmann::json to_json(const IncidenceStructure& p);
nlohmann::json to_json(const ConstructedPolytope& p);
nlohmann::json to_json(const FVector& f);

IncidenceStructure incidence_from_json(const nlohmann::json& j);
ConstructedPolytope polytope_from_json(const nlohmann::json& j);

ConstructedPolytope read_polytope_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace polyforge
