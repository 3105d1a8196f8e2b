#include "polyforge/isomorphism.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace polyforge {

namespace {

using FacetSet = std::uint64_t;  // bit i = facet index i

struct Side {
  std::vector<VertexSet> facets;                 // deduped
  std::vector<int> sizes;                        // facet sizes
  std::vector<std::vector<int>> inter;           // pairwise |Fi ∩ Fj|
  std::vector<std::vector<int>> invariant;       // per facet: size + sorted inters
  std::unordered_map<FacetSet, int> row_counts;  // vertex row -> multiplicity
};

Side analyze(const IncidenceStructure& p) {
  Side side;
  side.facets = p.facets;
  std::sort(side.facets.begin(), side.facets.end());
  side.facets.erase(std::unique(side.facets.begin(), side.facets.end()),
                    side.facets.end());
  const int m = static_cast<int>(side.facets.size());
  if (m > 64)
    throw Error(ErrorCode::TooLarge,
                "more than 64 facets (" + std::to_string(m) + ")");
  side.sizes.resize(static_cast<std::size_t>(m));
  side.inter.assign(static_cast<std::size_t>(m),
                    std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    side.sizes[static_cast<std::size_t>(i)] = vset::count(side.facets[static_cast<std::size_t>(i)]);
    for (int j = 0; j < m; ++j)
      side.inter[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          vset::count(side.facets[static_cast<std::size_t>(i)] &
                      side.facets[static_cast<std::size_t>(j)]);
  }
  for (int i = 0; i < m; ++i) {
    std::vector<int> inv;
    inv.push_back(side.sizes[static_cast<std::size_t>(i)]);
    std::vector<int> row;
    for (int j = 0; j < m; ++j)
      if (j != i)
        row.push_back(side.inter[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    std::sort(row.begin(), row.end());
    inv.insert(inv.end(), row.begin(), row.end());
    side.invariant.push_back(std::move(inv));
  }
  for (int v = 0; v < p.num_vertices; ++v) {
    FacetSet row = 0;
    for (int i = 0; i < m; ++i)
      if (vset::contains(side.facets[static_cast<std::size_t>(i)], v))
        row |= FacetSet{1} << i;
    ++side.row_counts[row];
  }
  return side;
}

struct Backtracker {
  const Side& a;
  const Side& b;
  std::vector<std::vector<int>> candidates;  // per facet of a
  std::vector<int> order;                    // most-constrained first
  std::vector<int> image;                    // facet of a -> facet of b
  std::vector<char> used;

  bool vertex_rows_match() const {
    std::unordered_map<FacetSet, int> mapped;
    for (const auto& [row, count] : a.row_counts) {
      FacetSet out = 0;
      FacetSet rest = row;
      while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        out |= FacetSet{1} << image[static_cast<std::size_t>(i)];
      }
      mapped[out] += count;
    }
    return mapped == b.row_counts;
  }

  bool search(std::size_t depth) {
    if (depth == order.size()) return vertex_rows_match();
    int i = order[depth];
    for (int j : candidates[static_cast<std::size_t>(i)]) {
      if (used[static_cast<std::size_t>(j)]) continue;
      bool ok = true;
      for (std::size_t q = 0; q < depth; ++q) {
        int i2 = order[q];
        if (a.inter[static_cast<std::size_t>(i)][static_cast<std::size_t>(i2)] !=
            b.inter[static_cast<std::size_t>(j)]
                   [static_cast<std::size_t>(image[static_cast<std::size_t>(i2)])]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(i)] = j;
      used[static_cast<std::size_t>(j)] = 1;
      if (search(depth + 1)) return true;
      used[static_cast<std::size_t>(j)] = 0;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b,
                    int max_vertices) {
  if (a.num_vertices > max_vertices || b.num_vertices > max_vertices)
    throw Error(ErrorCode::TooLarge,
                "isomorphism guard is " + std::to_string(max_vertices) +
                    " vertices");
  if (a.dim != b.dim || a.num_vertices != b.num_vertices) return false;

  Side sa = analyze(a);
  Side sb = analyze(b);
  if (sa.facets.size() != sb.facets.size()) return false;
  if (sa.facets.empty()) return true;  // points

  // Vertex facet-degree refinement.
  auto degree_multiset = [](const Side& s) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [row, count] : s.row_counts)
      out.emplace_back(std::popcount(row), count);
    std::sort(out.begin(), out.end());
    return out;
  };
  {
    auto da = degree_multiset(sa);
    auto db = degree_multiset(sb);
    // Multisets of (degree, class size) must agree up to aggregation; compare
    // aggregated degree counts.
    std::unordered_map<int, int> ca, cb;
    for (auto [deg, cnt] : da) ca[deg] += cnt;
    for (auto [deg, cnt] : db) cb[deg] += cnt;
    if (ca != cb) return false;
  }

  Backtracker bt{sa, sb, {}, {}, {}, {}};
  const int m = static_cast<int>(sa.facets.size());
  bt.candidates.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      if (sa.invariant[static_cast<std::size_t>(i)] ==
          sb.invariant[static_cast<std::size_t>(j)])
        bt.candidates[static_cast<std::size_t>(i)].push_back(j);
    if (bt.candidates[static_cast<std::size_t>(i)].empty()) return false;
  }
  bt.order.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) bt.order[static_cast<std::size_t>(i)] = i;
  std::sort(bt.order.begin(), bt.order.end(), [&](int x, int y) {
    return bt.candidates[static_cast<std::size_t>(x)].size() <
           bt.candidates[static_cast<std::size_t>(y)].size();
  });
  bt.image.assign(static_cast<std::size_t>(m), -1);
  bt.used.assign(static_cast<std::size_t>(m), 0);
  return bt.search(0);
}

}  // namespace polyforge
