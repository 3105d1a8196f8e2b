#include "polyforge/incidence.hpp"

#include <algorithm>
#include <sstream>

namespace polyforge {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::ImproperFace: return "ImproperFace";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Error";
}

namespace vset {

std::string to_string(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : to_vector(s)) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace vset

bool lex_less(VertexSet a, VertexSet b) {
  if (a == b) return false;
  // Compare sorted vertex lists elementwise; a strict prefix sorts first.
  while (a && b) {
    int va = std::countr_zero(a);
    int vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0;
}

IncidenceStructure IncidenceStructure::make(int dim, int num_vertices,
                                            std::vector<VertexSet> facets) {
  if (dim < 0) throw Error(ErrorCode::BadDimension, "dimension must be >= 0");
  if (num_vertices < 1)
    throw Error(ErrorCode::BadParams, "at least one vertex required");
  if (num_vertices > kMaxVertices)
    throw Error(ErrorCode::TooLarge,
                "structures are limited to " + std::to_string(kMaxVertices) +
                    " vertices, got " + std::to_string(num_vertices));
  VertexSet full = vset::full(num_vertices);
  for (VertexSet f : facets) {
    if (!vset::subset(f, full))
      throw Error(ErrorCode::UnknownVertex,
                  "facet " + vset::to_string(f) + " uses a vertex >= " +
                      std::to_string(num_vertices));
  }
  std::sort(facets.begin(), facets.end(), lex_less);
  IncidenceStructure p;
  p.dim = dim;
  p.num_vertices = num_vertices;
  p.facets = std::move(facets);
  return p;
}

std::string to_string(const FVector& f) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < f.counts.size(); ++i) {
    if (i) out << ',';
    out << f.counts[i];
  }
  out << ')';
  return out.str();
}

}  // namespace polyforge
