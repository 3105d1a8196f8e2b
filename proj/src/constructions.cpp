#include "polyforge/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "polyforge/isomorphism.hpp"
#include "polyforge/lattice.hpp"

namespace polyforge {

namespace {

std::string apex_name(const std::map<std::string, FaceHandle>& handles) {
  int next = 0;
  while (handles.count("apex-" + std::to_string(next))) ++next;
  return "apex-" + std::to_string(next);
}

// Faces of a polytope are exactly the intersections of the facets containing
// them, so a proper nonempty candidate is a face iff it equals that
// intersection.
bool is_face_of(const IncidenceStructure& p, VertexSet candidate) {
  VertexSet inter = vset::full(p.num_vertices);
  for (VertexSet f : p.facets)
    if (vset::subset(candidate, f)) inter &= f;
  return inter == candidate;
}

}  // namespace

const FaceHandle& ConstructedPolytope::handle(const std::string& name) const {
  auto it = handles.find(name);
  if (it == handles.end())
    throw Error(ErrorCode::BadParams,
                "no handle named '" + name + "' on " + provenance);
  return it->second;
}

ConstructedPolytope simplex(int d) {
  if (d < 0) throw Error(ErrorCode::BadDimension, "simplex needs d >= 0");
  ConstructedPolytope out;
  std::vector<VertexSet> facets;
  if (d >= 1) {
    VertexSet full = vset::full(d + 1);
    for (int v = 0; v <= d; ++v) facets.push_back(full & ~vset::single(v));
  }
  out.structure = IncidenceStructure::make(d, d + 1, std::move(facets));
  if (d >= 1)
    out.handles["facet-0"] = FaceHandle{"facet-0", out.structure.facets[0]};
  out.provenance = "simplex(" + std::to_string(d) + ")";
  return out;
}

ConstructedPolytope pyramid(const ConstructedPolytope& p) {
  ConstructedPolytope out;
  const IncidenceStructure& s = p.structure;
  if (s.dim == 0) {
    out.structure =
        IncidenceStructure::make(1, 2, {vset::single(0), vset::single(1)});
    out.handles["base"] = FaceHandle{"base", vset::single(0)};
    out.handles["apex-0"] = FaceHandle{"apex-0", vset::single(1)};
    out.provenance = "pyr(" + p.provenance + ")";
    return out;
  }
  if (s.num_vertices + 1 > kMaxVertices)
    throw Error(ErrorCode::TooLarge, "pyramid exceeds the vertex cap");
  const int apex = s.num_vertices;
  const VertexSet base = vset::full(s.num_vertices);
  std::vector<VertexSet> facets;
  facets.reserve(s.facets.size() + 1);
  for (VertexSet f : s.facets) facets.push_back(f | vset::single(apex));
  facets.push_back(base);
  out.structure =
      IncidenceStructure::make(s.dim + 1, s.num_vertices + 1, std::move(facets));
  out.handles = p.handles;  // every face of p stays a face of the pyramid
  if (!out.handles.count("base")) out.handles["base"] = FaceHandle{"base", base};
  std::string apex_handle = apex_name(out.handles);
  out.handles[apex_handle] = FaceHandle{apex_handle, vset::single(apex)};
  out.provenance = "pyr(" + p.provenance + ")";
  return out;
}

ConstructedPolytope kfold_pyramid(const ConstructedPolytope& p, int t) {
  if (t < 0) throw Error(ErrorCode::BadParams, "pyramid fold count < 0");
  ConstructedPolytope out = p;
  for (int i = 0; i < t; ++i) out = pyramid(out);
  return out;
}

ConstructedPolytope product(const ConstructedPolytope& p,
                            const ConstructedPolytope& q) {
  const IncidenceStructure& sp = p.structure;
  const IncidenceStructure& sq = q.structure;
  if (sp.dim < 1 || sq.dim < 1)
    throw Error(ErrorCode::BadDimension, "product needs both dims >= 1");
  const int np = sp.num_vertices, nq = sq.num_vertices;
  if (np * nq > kMaxVertices)
    throw Error(ErrorCode::TooLarge, "product has " + std::to_string(np * nq) +
                                         " vertices");
  auto pair_bit = [nq](int i, int j) { return vset::single(i * nq + j); };
  std::vector<VertexSet> facets;
  for (VertexSet f : sp.facets) {
    VertexSet mask = 0;
    for (int i : vset::to_vector(f))
      for (int j = 0; j < nq; ++j) mask |= pair_bit(i, j);
    facets.push_back(mask);
  }
  for (VertexSet g : sq.facets) {
    VertexSet mask = 0;
    for (int i = 0; i < np; ++i)
      for (int j : vset::to_vector(g)) mask |= pair_bit(i, j);
    facets.push_back(mask);
  }
  ConstructedPolytope out;
  out.structure =
      IncidenceStructure::make(sp.dim + sq.dim, np * nq, std::move(facets));
  out.provenance = "product(" + p.provenance + ", " + q.provenance + ")";
  return out;
}

ConstructedPolytope prism(const ConstructedPolytope& p) {
  ConstructedPolytope out = product(p, simplex(1));
  const int np = p.structure.num_vertices;
  VertexSet bottom = 0, top = 0;
  for (int i = 0; i < np; ++i) {
    bottom |= vset::single(2 * i);
    top |= vset::single(2 * i + 1);
  }
  out.handles["bottom-base"] = FaceHandle{"bottom-base", bottom};
  out.handles["top-base"] = FaceHandle{"top-base", top};
  out.provenance = "prism(" + p.provenance + ")";
  return out;
}

ConstructedPolytope direct_sum(const ConstructedPolytope& p,
                               const ConstructedPolytope& q) {
  const IncidenceStructure& sp = p.structure;
  const IncidenceStructure& sq = q.structure;
  if (sp.dim < 1 || sq.dim < 1)
    throw Error(ErrorCode::BadDimension, "direct sum needs both dims >= 1");
  if (sp.num_vertices + sq.num_vertices > kMaxVertices)
    throw Error(ErrorCode::TooLarge, "direct sum exceeds the vertex cap");
  const int np = sp.num_vertices;
  std::vector<VertexSet> facets;
  for (VertexSet f : sp.facets)
    for (VertexSet g : sq.facets) facets.push_back(f | (g << np));
  ConstructedPolytope out;
  out.structure = IncidenceStructure::make(sp.dim + sq.dim,
                                           np + sq.num_vertices, std::move(facets));
  out.provenance = "dsum(" + p.provenance + ", " + q.provenance + ")";
  return out;
}

ConstructedPolytope wedge(const ConstructedPolytope& p, VertexSet face) {
  const IncidenceStructure& s = p.structure;
  const VertexSet full = vset::full(s.num_vertices);
  if (!vset::subset(face, full))
    throw Error(ErrorCode::NotAFace,
                "face " + vset::to_string(face) + " uses unknown vertices");
  if (face == 0 || face == full)
    throw Error(ErrorCode::ImproperFace,
                "wedge needs a proper nonempty face");
  if (!is_face_of(s, face))
    throw Error(ErrorCode::NotAFace,
                vset::to_string(face) + " is not a face of " + p.provenance);

  const std::vector<int> fverts = vset::to_vector(face);
  const std::vector<int> others = vset::to_vector(full & ~face);
  const int nf = static_cast<int>(fverts.size());
  const int no = static_cast<int>(others.size());
  if (nf + 2 * no > kMaxVertices)
    throw Error(ErrorCode::TooLarge, "wedge exceeds the vertex cap");

  std::vector<int> bar(static_cast<std::size_t>(s.num_vertices), -1);
  std::vector<int> bottom(static_cast<std::size_t>(s.num_vertices), -1);
  std::vector<int> top(static_cast<std::size_t>(s.num_vertices), -1);
  for (int i = 0; i < nf; ++i) bar[static_cast<std::size_t>(fverts[static_cast<std::size_t>(i)])] = i;
  for (int i = 0; i < no; ++i) {
    bottom[static_cast<std::size_t>(others[static_cast<std::size_t>(i)])] = nf + i;
    top[static_cast<std::size_t>(others[static_cast<std::size_t>(i)])] = nf + no + i;
  }

  VertexSet bottom_base = 0, top_base = 0;
  for (int v : fverts) {
    bottom_base |= vset::single(bar[static_cast<std::size_t>(v)]);
    top_base |= vset::single(bar[static_cast<std::size_t>(v)]);
  }
  for (int v : others) {
    bottom_base |= vset::single(bottom[static_cast<std::size_t>(v)]);
    top_base |= vset::single(top[static_cast<std::size_t>(v)]);
  }

  std::vector<VertexSet> facets{bottom_base, top_base};
  for (VertexSet g : s.facets) {
    if (g == face) continue;  // collapsed side of a facet wedge
    VertexSet side = 0;
    for (int v : vset::to_vector(g)) {
      if (vset::contains(face, v)) {
        side |= vset::single(bar[static_cast<std::size_t>(v)]);
      } else {
        side |= vset::single(bottom[static_cast<std::size_t>(v)]);
        side |= vset::single(top[static_cast<std::size_t>(v)]);
      }
    }
    facets.push_back(side);
  }

  ConstructedPolytope out;
  out.structure =
      IncidenceStructure::make(s.dim + 1, nf + 2 * no, std::move(facets));
  out.handles["bottom-base"] = FaceHandle{"bottom-base", bottom_base};
  out.handles["top-base"] = FaceHandle{"top-base", top_base};
  out.provenance =
      "wed(" + p.provenance + ", " + vset::to_string(face) + ")";
  return out;
}

ConstructedPolytope wedge(const ConstructedPolytope& p,
                          const std::string& handle_name) {
  return wedge(p, p.handle(handle_name).vertex_set);
}

ConstructedPolytope truncate_vertex(const ConstructedPolytope& p, int v) {
  const IncidenceStructure& s = p.structure;
  if (v < 0 || v >= s.num_vertices)
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  if (s.dim < 2)
    throw Error(ErrorCode::BadDimension, "truncation needs dim >= 2");
  FaceLattice lattice = enumerate_face_lattice(s);
  if (!is_simple_vertex(lattice, v))
    throw Error(ErrorCode::NotSimple,
                "vertex " + std::to_string(v) + " of " + p.provenance +
                    " is not simple");

  // One new vertex per edge at v, ordered by the other endpoint.
  std::vector<int> endpoints;
  for (VertexSet edge : lattice.faces_by_dim[1])
    if (vset::contains(edge, v))
      endpoints.push_back(std::countr_zero(edge & ~vset::single(v)));
  std::sort(endpoints.begin(), endpoints.end());

  const int n_old = s.num_vertices;
  if (n_old - 1 + static_cast<int>(endpoints.size()) > kMaxVertices)
    throw Error(ErrorCode::TooLarge, "truncation exceeds the vertex cap");
  auto remap = [v](int u) { return u < v ? u : u - 1; };
  auto cut_vertex = [&](int w) {
    auto it = std::lower_bound(endpoints.begin(), endpoints.end(), w);
    return n_old - 1 + static_cast<int>(it - endpoints.begin());
  };

  std::vector<VertexSet> facets;
  for (VertexSet g : s.facets) {
    VertexSet mapped = 0;
    for (int u : vset::to_vector(g))
      if (u != v) mapped |= vset::single(remap(u));
    if (vset::contains(g, v)) {
      for (int w : endpoints)
        if (vset::contains(g, w)) mapped |= vset::single(cut_vertex(w));
    }
    facets.push_back(mapped);
  }
  VertexSet cut = 0;
  for (int w : endpoints) cut |= vset::single(cut_vertex(w));
  facets.push_back(cut);

  ConstructedPolytope out;
  out.structure = IncidenceStructure::make(
      s.dim, n_old - 1 + static_cast<int>(endpoints.size()), std::move(facets));
  out.handles["cut-facet"] = FaceHandle{"cut-facet", cut};
  out.provenance =
      "trunc(" + p.provenance + ", " + std::to_string(v) + ")";
  return out;
}

bool pyramid_wedge_commutation_check(const ConstructedPolytope& p,
                                     VertexSet face) {
  ConstructedPolytope lhs = pyramid(wedge(p, face));
  VertexSet extended_face = face | vset::single(p.structure.num_vertices);
  ConstructedPolytope rhs = wedge(pyramid(p), extended_face);
  return are_isomorphic(lhs.structure, rhs.structure);
}

}  // namespace polyforge
