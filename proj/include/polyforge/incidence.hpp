#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyforge {

// A face is a set of vertex indices packed into a 64-bit mask, so every
// structure in the library is capped at 64 vertices.
using VertexSet = std::uint64_t;
inline constexpr int kMaxVertices = 64;

namespace vset {

inline VertexSet full(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : ((VertexSet{1} << n) - 1);
}

inline VertexSet single(int v) { return VertexSet{1} << v; }

inline bool contains(VertexSet s, int v) { return (s >> v) & 1u; }

inline bool subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline int count(VertexSet s) { return std::popcount(s); }

inline std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count(s)));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline VertexSet from_vector(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= single(v);
  return s;
}

std::string to_string(VertexSet s);

}  // namespace vset

enum class ErrorCode {
  NotGraded,
  UnknownVertex,
  BadRank,
  TooLarge,
  BadDimension,
  NotAFace,
  ImproperFace,
  NotSimple,
  BadParams,
  RankOutOfRange,
  UsageError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A polytope given purely by its dimension and facet vertex-sets. This is the
// only input representation; everything else is derived from it.
struct IncidenceStructure {
  int dim = 0;
  int num_vertices = 1;
  std::vector<VertexSet> facets;  // normalized: lexicographic by vertex list
  std::map<int, std::string> labels;

  // Normalizes facet order and enforces the 64-vertex cap. Does not check the
  // polytopality invariants; see validate_incidence.
  static IncidenceStructure make(int dim, int num_vertices,
                                 std::vector<VertexSet> facets);
};

// Total order on vertex sets matching lexicographic order of their sorted
// vertex lists ({0,1,2} < {0,1,3} < {0,2}).
bool lex_less(VertexSet a, VertexSet b);

struct FaceHandle {
  std::string name;
  VertexSet vertex_set = 0;
};

// Exact face counts (f_0, ..., f_{dim-1}).
struct FVector {
  int dim = 0;
  std::vector<std::int64_t> counts;

  // f_{-1} = f_dim = 1, zero outside [-1, dim].
  std::int64_t extended(int k) const {
    if (k == -1 || k == dim) return 1;
    if (k < -1 || k > dim) return 0;
    return counts[static_cast<std::size_t>(k)];
  }

  bool operator==(const FVector&) const = default;
};

std::string to_string(const FVector& f);

// All faces graded by dimension, dimensions 0..dim (top face included at rank
// dim, the empty face excluded). covers_up[k][i] lists the indices at rank
// k+1 of the faces covering faces_by_dim[k][i].
struct FaceLattice {
  int dim = 0;
  int num_vertices = 0;
  std::vector<std::vector<VertexSet>> faces_by_dim;
  std::vector<std::vector<std::vector<int>>> covers_up;

  std::int64_t total_faces() const {
    std::int64_t n = 0;
    for (const auto& level : faces_by_dim) n += static_cast<std::int64_t>(level.size());
    return n;
  }
};

}  // namespace polyforge
