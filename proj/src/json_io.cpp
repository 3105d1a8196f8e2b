#include "polyforge/json_io.hpp"

#include <fstream>

namespace polyforge {

namespace {

nlohmann::json facet_lists(const IncidenceStructure& p) {
  nlohmann::json out = nlohmann::json::array();
  std::vector<VertexSet> sorted = p.facets;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  for (VertexSet f : sorted) out.push_back(vset::to_vector(f));
  return out;
}

}  // namespace

nlohmann::json to_json(const IncidenceStructure& p) {
  nlohmann::json j;
  j["dim"] = p.dim;
  j["vertices"] = p.num_vertices;
  j["facets"] = facet_lists(p);
  if (!p.labels.empty()) {
    nlohmann::json labels = nlohmann::json::object();
    for (const auto& [v, text] : p.labels) labels[std::to_string(v)] = text;
    j["labels"] = labels;
  }
  return j;
}

nlohmann::json to_json(const ConstructedPolytope& p) {
  nlohmann::json j = to_json(p.structure);
  if (!p.handles.empty()) {
    nlohmann::json handles = nlohmann::json::object();
    for (const auto& [name, handle] : p.handles)
      handles[name] = vset::to_vector(handle.vertex_set);
    j["handles"] = handles;
  }
  if (!p.provenance.empty()) j["provenance"] = p.provenance;
  return j;
}

nlohmann::json to_json(const FVector& f) {
  return nlohmann::json(f.counts);
}

IncidenceStructure incidence_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices") ||
      !j.contains("facets"))
    throw Error(ErrorCode::UsageError,
                "polytope JSON needs dim, vertices and facets");
  int dim = j.at("dim").get<int>();
  int vertices = j.at("vertices").get<int>();
  std::vector<VertexSet> facets;
  for (const auto& facet : j.at("facets")) {
    std::vector<int> vs = facet.get<std::vector<int>>();
    for (int v : vs)
      if (v < 0 || v >= vertices)
        throw Error(ErrorCode::UnknownVertex,
                    "facet vertex " + std::to_string(v));
    facets.push_back(vset::from_vector(vs));
  }
  IncidenceStructure p = IncidenceStructure::make(dim, vertices, std::move(facets));
  if (j.contains("labels")) {
    for (const auto& [key, value] : j.at("labels").items())
      p.labels[std::stoi(key)] = value.get<std::string>();
  }
  return p;
}

ConstructedPolytope polytope_from_json(const nlohmann::json& j) {
  ConstructedPolytope p;
  p.structure = incidence_from_json(j);
  if (j.contains("handles")) {
    for (const auto& [name, verts] : j.at("handles").items()) {
      std::vector<int> vs = verts.get<std::vector<int>>();
      p.handles[name] = FaceHandle{name, vset::from_vector(vs)};
    }
  }
  if (j.contains("provenance")) p.provenance = j.at("provenance").get<std::string>();
  return p;
}

ConstructedPolytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UsageError, "cannot open " + path);
  nlohmann::json j;
  in >> j;
  return polytope_from_json(j);
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::UsageError, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace polyforge
