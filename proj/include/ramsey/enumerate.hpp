#ifndef RAMSEY_ENUMERATE_HPP
#define RAMSEY_ENUMERATE_HPP

// Small graphs up to isomorphism, deduplicated by canonical code.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "ramsey/canonical.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

namespace detail {

inline PackedBoard pack_edges(int n, const std::vector<Edge>& edges) {
  PackedBoard pb{n, 0, 0};
  for (const Edge& e : edges) pb.blue |= 1u << edge_index(e);
  return pb;
}

}  // namespace detail

/// One tree per isomorphism class on n vertices, 2 <= n <= 8.
inline std::vector<TargetGraph> nonisomorphic_trees(int n) {
  if (n < 2 || n > kCanonicalMaxOrder) throw std::invalid_argument("tree order must lie in [2, 8]");
  std::vector<std::vector<Edge>> layer{{Edge(0, 1)}};
  for (int k = 3; k <= n; ++k) {
    std::vector<std::vector<Edge>> next;
    std::set<std::uint64_t> seen;
    for (const auto& tree : layer) {
      for (int v = 0; v < k - 1; ++v) {
        auto grown = tree;
        grown.emplace_back(v, k - 1);
        if (seen.insert(canonical_code(detail::pack_edges(k, grown))).second) next.push_back(std::move(grown));
      }
    }
    layer = std::move(next);
  }
  std::vector<TargetGraph> out;
  for (auto& edges : layer) out.emplace_back(n, std::move(edges));
  return out;
}

/// One graph per isomorphism class on exactly n vertices with no isolated
/// vertex, 2 <= n <= 6.
inline std::vector<TargetGraph> nonisomorphic_graphs(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("graph order must lie in [2, 6]");
  const int total = pair_count(n);
  std::set<std::uint64_t> seen;
  std::vector<TargetGraph> out;
  for (std::uint32_t mask = 1; mask < (1u << total); ++mask) {
    std::uint32_t touched = 0;
    for (int i = 0; i < total; ++i)
      if (mask >> i & 1u) touched |= 1u << edge_at(i).u | 1u << edge_at(i).v;
    if (touched != (1u << n) - 1) continue;
    if (!seen.insert(canonical_code(PackedBoard{n, mask, 0})).second) continue;
    std::vector<Edge> edges;
    for (int i = 0; i < total; ++i)
      if (mask >> i & 1u) edges.push_back(edge_at(i));
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace ramsey

#endif  // RAMSEY_ENUMERATE_HPP
