#include "polyforge/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace polyforge {

namespace {

std::vector<VertexSet> deduped_facets(const IncidenceStructure& p) {
  std::vector<VertexSet> facets = p.facets;
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return facets;
}

struct ClosurePoset {
  std::vector<VertexSet> faces;  // sorted by (popcount, value)
  std::vector<int> rank;         // longest chain from an atom
  std::vector<std::vector<int>> covers_down;
};

// Intersection closure of the facets seeded with the full vertex set, with
// ranks assigned by longest containment chain.
ClosurePoset closure_poset(const IncidenceStructure& p) {
  const VertexSet full = vset::full(p.num_vertices);
  std::vector<VertexSet> facets = deduped_facets(p);

  std::unordered_set<VertexSet> seen;
  std::vector<VertexSet> faces;
  seen.insert(full);
  faces.push_back(full);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    VertexSet x = faces[i];
    for (VertexSet f : facets) {
      VertexSet y = x & f;
      if (y != 0 && seen.insert(y).second) faces.push_back(y);
    }
  }
  std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
    int ca = vset::count(a), cb = vset::count(b);
    return ca != cb ? ca < cb : a < b;
  });

  const int m = static_cast<int>(faces.size());
  ClosurePoset poset;
  poset.faces = std::move(faces);
  poset.rank.assign(m, 0);
  poset.covers_down.assign(m, {});
  for (int i = 0; i < m; ++i) {
    // Equal popcounts cannot nest, so scanning j < i sees every subface.
    // Walking j downward visits higher popcounts first, which makes the
    // maximality filter a test against already-kept covers only.
    for (int j = i - 1; j >= 0; --j) {
      if (!vset::subset(poset.faces[j], poset.faces[i])) continue;
      if (vset::count(poset.faces[j]) == vset::count(poset.faces[i])) continue;
      poset.rank[i] = std::max(poset.rank[i], poset.rank[j] + 1);
      bool maximal = true;
      for (int c : poset.covers_down[i]) {
        if (vset::subset(poset.faces[j], poset.faces[c])) {
          maximal = false;
          break;
        }
      }
      if (maximal) poset.covers_down[i].push_back(j);
    }
  }
  return poset;
}

// Rank checks shared by enumerate (throwing) and validate (collecting).
std::vector<std::string> graded_violations(const IncidenceStructure& p,
                                           const ClosurePoset& poset) {
  std::vector<std::string> out;
  const int m = static_cast<int>(poset.faces.size());
  int atoms = 0;
  for (int i = 0; i < m; ++i) {
    if (poset.rank[i] == 0) {
      ++atoms;
      if (vset::count(poset.faces[i]) != 1)
        out.push_back("minimal face " + vset::to_string(poset.faces[i]) +
                      " is not a vertex");
    }
  }
  if (atoms != p.num_vertices)
    out.push_back("only " + std::to_string(atoms) + " of " +
                  std::to_string(p.num_vertices) +
                  " vertices arise as faces");
  if (poset.faces.back() != vset::full(p.num_vertices))
    out.push_back("full vertex set is not the top face");
  if (poset.rank[m - 1] != p.dim)
    out.push_back("declared dimension " + std::to_string(p.dim) +
                  " but the closure poset has rank " +
                  std::to_string(poset.rank[m - 1]));
  for (int i = 0; i < m; ++i) {
    for (int j : poset.covers_down[i]) {
      if (poset.rank[i] != poset.rank[j] + 1) {
        out.push_back("cover " + vset::to_string(poset.faces[j]) + " < " +
                      vset::to_string(poset.faces[i]) + " jumps rank " +
                      std::to_string(poset.rank[j]) + " to " +
                      std::to_string(poset.rank[i]));
      }
    }
  }
  return out;
}

FaceLattice lattice_from_poset(const IncidenceStructure& p,
                               const ClosurePoset& poset) {
  FaceLattice lattice;
  lattice.dim = p.dim;
  lattice.num_vertices = p.num_vertices;
  lattice.faces_by_dim.assign(static_cast<std::size_t>(p.dim) + 1, {});

  const int m = static_cast<int>(poset.faces.size());
  std::vector<std::pair<int, int>> where(m);  // face index -> (rank, slot)
  for (int i = 0; i < m; ++i) {
    auto& level = lattice.faces_by_dim[static_cast<std::size_t>(poset.rank[i])];
    where[static_cast<std::size_t>(i)] = {poset.rank[i],
                                          static_cast<int>(level.size())};
    level.push_back(poset.faces[i]);
  }
  // Deterministic level order; remap slots accordingly.
  for (std::size_t k = 0; k < lattice.faces_by_dim.size(); ++k) {
    auto& level = lattice.faces_by_dim[k];
    std::vector<int> order(level.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return lex_less(level[static_cast<std::size_t>(a)],
                      level[static_cast<std::size_t>(b)]);
    });
    std::vector<int> slot_of(level.size());
    std::vector<VertexSet> sorted(level.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      slot_of[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
      sorted[pos] = level[static_cast<std::size_t>(order[pos])];
    }
    level = std::move(sorted);
    for (int i = 0; i < m; ++i) {
      if (where[static_cast<std::size_t>(i)].first == static_cast<int>(k))
        where[static_cast<std::size_t>(i)].second =
            slot_of[static_cast<std::size_t>(
                where[static_cast<std::size_t>(i)].second)];
    }
  }

  lattice.covers_up.assign(static_cast<std::size_t>(p.dim), {});
  for (std::size_t k = 0; k < lattice.covers_up.size(); ++k)
    lattice.covers_up[k].assign(lattice.faces_by_dim[k].size(), {});
  for (int i = 0; i < m; ++i) {
    auto [rank_i, slot_i] = where[static_cast<std::size_t>(i)];
    for (int j : poset.covers_down[static_cast<std::size_t>(i)]) {
      auto [rank_j, slot_j] = where[static_cast<std::size_t>(j)];
      lattice.covers_up[static_cast<std::size_t>(rank_j)]
                       [static_cast<std::size_t>(slot_j)]
          .push_back(slot_i);
    }
  }
  for (auto& level : lattice.covers_up)
    for (auto& ups : level) std::sort(ups.begin(), ups.end());
  return lattice;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void join(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

FaceLattice enumerate_face_lattice(const IncidenceStructure& p) {
  ClosurePoset poset = closure_poset(p);
  std::vector<std::string> violations = graded_violations(p, poset);
  if (!violations.empty())
    throw Error(ErrorCode::NotGraded, violations.front());
  return lattice_from_poset(p, poset);
}

FVector f_vector(const FaceLattice& lattice) {
  FVector f;
  f.dim = lattice.dim;
  f.counts.reserve(static_cast<std::size_t>(lattice.dim));
  for (int k = 0; k < lattice.dim; ++k)
    f.counts.push_back(static_cast<std::int64_t>(
        lattice.faces_by_dim[static_cast<std::size_t>(k)].size()));
  return f;
}

std::vector<int> graph_degrees(const FaceLattice& lattice) {
  std::vector<int> degrees(static_cast<std::size_t>(lattice.num_vertices), 0);
  if (lattice.dim < 1) return degrees;
  for (VertexSet edge : lattice.faces_by_dim[1]) {
    for (int v : vset::to_vector(edge)) ++degrees[static_cast<std::size_t>(v)];
  }
  return degrees;
}

bool is_simple_vertex(const FaceLattice& lattice, int v) {
  if (v < 0 || v >= lattice.num_vertices)
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  return graph_degrees(lattice)[static_cast<std::size_t>(v)] == lattice.dim;
}

IncidenceStructure vertex_figure(const FaceLattice& lattice, int v) {
  if (v < 0 || v >= lattice.num_vertices)
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  if (lattice.dim < 1)
    throw Error(ErrorCode::BadDimension, "vertex figure needs dim >= 1");
  if (lattice.dim == 1) return IncidenceStructure::make(0, 1, {});

  // Figure vertices are the edges at v, ordered by their other endpoint.
  std::vector<VertexSet> edges;
  for (VertexSet edge : lattice.faces_by_dim[1])
    if (vset::contains(edge, v)) edges.push_back(edge);
  std::sort(edges.begin(), edges.end(), [&](VertexSet a, VertexSet b) {
    return (a & ~vset::single(v)) < (b & ~vset::single(v));
  });

  std::vector<VertexSet> figure_facets;
  for (VertexSet facet :
       lattice.faces_by_dim[static_cast<std::size_t>(lattice.dim - 1)]) {
    if (!vset::contains(facet, v)) continue;
    VertexSet g = 0;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (vset::subset(edges[e], facet)) g |= vset::single(static_cast<int>(e));
    if (g != 0) figure_facets.push_back(g);
  }
  return IncidenceStructure::make(lattice.dim - 1,
                                  static_cast<int>(edges.size()),
                                  std::move(figure_facets));
}

std::int64_t count_faces_meeting(const FaceLattice& lattice,
                                 std::span<const int> s, int k) {
  if (k < 0 || k > lattice.dim - 1)
    throw Error(ErrorCode::BadRank, "k = " + std::to_string(k));
  VertexSet mask = 0;
  for (int v : s) {
    if (v < 0 || v >= lattice.num_vertices)
      throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
    mask |= vset::single(v);
  }
  std::int64_t count = 0;
  for (VertexSet face : lattice.faces_by_dim[static_cast<std::size_t>(k)])
    if (face & mask) ++count;
  return count;
}

std::vector<std::string> validate_incidence(const IncidenceStructure& p) {
  std::vector<std::string> out;
  VertexSet covered = 0;
  for (VertexSet f : p.facets) {
    if (f == 0) out.push_back("empty facet");
    covered |= f;
  }
  if (p.dim >= 1 && covered != vset::full(p.num_vertices))
    out.push_back("some vertex lies in no facet");
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    for (std::size_t j = 0; j < p.facets.size(); ++j) {
      if (i == j) continue;
      if (vset::subset(p.facets[i], p.facets[j])) {
        out.push_back("facet " + vset::to_string(p.facets[i]) +
                      " is contained in facet " +
                      vset::to_string(p.facets[j]));
      }
    }
  }
  if (p.dim >= 1 && static_cast<int>(deduped_facets(p).size()) < p.dim + 1)
    out.push_back("fewer than dim+1 facets");
  if (p.dim >= 1 && p.num_vertices < p.dim + 1)
    out.push_back("fewer than dim+1 vertices");
  return out;
}

std::vector<std::string> validate_lattice(const FaceLattice& lattice) {
  std::vector<std::string> out;
  const int d = lattice.dim;

  if (static_cast<int>(lattice.faces_by_dim.size()) != d + 1) {
    out.push_back("lattice does not store ranks 0..dim");
    return out;
  }
  if (lattice.faces_by_dim[static_cast<std::size_t>(d)].size() != 1)
    out.push_back("top rank must hold exactly the full polytope");
  for (VertexSet atom : lattice.faces_by_dim[0])
    if (vset::count(atom) != 1) out.push_back("rank-0 face is not a vertex");
  if (static_cast<int>(lattice.faces_by_dim[0].size()) !=
      lattice.num_vertices)
    out.push_back("vertex count disagrees with rank-0 faces");

  // Gradedness: every face below the top is covered, every face above the
  // atoms covers something.
  for (int k = 0; k < d; ++k) {
    const auto& ups = lattice.covers_up[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < ups.size(); ++i) {
      if (ups[i].empty())
        out.push_back("face " +
                      vset::to_string(
                          lattice.faces_by_dim[static_cast<std::size_t>(k)][i]) +
                      " at rank " + std::to_string(k) + " has no cover");
    }
  }
  for (int k = 1; k <= d; ++k) {
    const auto& level = lattice.faces_by_dim[static_cast<std::size_t>(k)];
    const auto& ups_below = lattice.covers_up[static_cast<std::size_t>(k - 1)];
    std::vector<char> covered(level.size(), 0);
    for (const auto& ups : ups_below)
      for (int j : ups) covered[static_cast<std::size_t>(j)] = 1;
    for (std::size_t i = 0; i < level.size(); ++i)
      if (!covered[i])
        out.push_back("face " + vset::to_string(level[i]) + " at rank " +
                      std::to_string(k) + " covers nothing");
  }

  // Diamond property: every rank-2 interval, the empty face included as the
  // bottom of intervals below rank 1, has exactly two middle elements.
  for (int r = 1; r <= d; ++r) {
    const auto& uppers = lattice.faces_by_dim[static_cast<std::size_t>(r)];
    const auto& mids_level = lattice.faces_by_dim[static_cast<std::size_t>(r - 1)];
    for (VertexSet y : uppers) {
      std::vector<VertexSet> mids;
      for (VertexSet mid : mids_level)
        if (mid != y && vset::subset(mid, y)) mids.push_back(mid);
      if (r == 1) {
        if (mids.size() != 2)
          out.push_back("interval (empty, " + vset::to_string(y) + ") has " +
                        std::to_string(mids.size()) + " middle faces");
        continue;
      }
      for (VertexSet x : lattice.faces_by_dim[static_cast<std::size_t>(r - 2)]) {
        if (x == y || !vset::subset(x, y)) continue;
        int middles = 0;
        for (VertexSet mid : mids)
          if (x != mid && vset::subset(x, mid)) ++middles;
        if (middles != 2)
          out.push_back("interval (" + vset::to_string(x) + ", " +
                        vset::to_string(y) + ") has " +
                        std::to_string(middles) + " middle faces");
      }
    }
  }

  // Euler-Poincare relation.
  FVector f = f_vector(lattice);
  std::int64_t alternating = 0;
  for (int k = 0; k < d; ++k)
    alternating += (k % 2 == 0 ? 1 : -1) * f.extended(k);
  std::int64_t expected = 1 - (d % 2 == 0 ? 1 : -1);
  if (alternating != expected)
    out.push_back("alternating face-count sum is " +
                  std::to_string(alternating) + ", expected " +
                  std::to_string(expected));

  // Graph connectivity.
  if (d >= 1 && lattice.num_vertices > 1) {
    Dsu dsu(lattice.num_vertices);
    for (VertexSet edge : lattice.faces_by_dim[1]) {
      auto vs = vset::to_vector(edge);
      for (std::size_t i = 1; i < vs.size(); ++i) dsu.join(vs[0], vs[i]);
    }
    int root = dsu.find(0);
    for (int v = 1; v < lattice.num_vertices; ++v)
      if (dsu.find(v) != root) {
        out.push_back("graph is disconnected");
        break;
      }
  }
  return out;
}

std::vector<std::string> validate(const IncidenceStructure& p) {
  std::vector<std::string> out = validate_incidence(p);
  ClosurePoset poset = closure_poset(p);
  std::vector<std::string> graded = graded_violations(p, poset);
  out.insert(out.end(), graded.begin(), graded.end());
  if (graded.empty()) {
    std::vector<std::string> lattice_violations =
        validate_lattice(lattice_from_poset(p, poset));
    out.insert(out.end(), lattice_violations.begin(), lattice_violations.end());
  }
  return out;
}

}  // namespace polyforge
