#ifndef RAMSEY_STRATEGIES_TREE_BUILDER_HPP
#define RAMSEY_STRATEGIES_TREE_BUILDER_HPP

// Alice grows the target tree one DFS vertex at a time. After her i-th blue
// edge the blue graph is a copy of the subtree on the first i + 1 DFS
// vertices; the next edge joins the image of the next vertex's parent to an
// unused board vertex. On K_N with N >= n + q floor((n - 2) / p) such an edge
// always exists, whatever Bob does.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/game.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// n + q floor((n - 2) / p): board order on which the tree builder cannot fail.
constexpr int tree_builder_board(int n, int p, int q) { return n + q * ((n - 2) / p); }

struct TreeBuilderMemory {
  DfsOrder dfs;
  Embedding embedding;  // target vertex -> board vertex, -1 if not yet placed
  int placed = 0;       // number of DFS vertices embedded
};

class TreeBuilder : public Strategy {
public:
  explicit TreeBuilder(const TargetGraph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("tree-builder needs a tree target");
    mem_.dfs = dfs_order(tree);
    mem_.embedding.assign(tree.vertex_count(), -1);
  }

  std::string name() const override { return "tree-builder"; }

  Edge next_move(const BoardState& s) override {
    const auto& order = mem_.dfs.order;
    if (mem_.placed == 0) {
      const auto free = s.uncolored_edges();
      if (free.empty()) throw StrategyFailure("tree-builder: board is full");
      const Edge e = free.front();
      mem_.embedding[order[0]] = e.u;
      mem_.embedding[order[1]] = e.v;
      mem_.placed = 2;
      return e;
    }
    if (mem_.placed >= static_cast<int>(order.size()))
      throw StrategyFailure("tree-builder: tree already complete");
    const int next = order[mem_.placed];
    const int anchor = mem_.embedding[mem_.dfs.parent[next]];
    std::uint64_t used = 0;
    for (int b : mem_.embedding)
      if (b >= 0) used |= std::uint64_t{1} << b;
    for (int x = 0; x < s.order(); ++x) {
      if (used >> x & 1) continue;
      if (s.color(anchor, x) != Color::Uncolored) continue;
      mem_.embedding[next] = x;
      ++mem_.placed;
      return Edge(anchor, x);
    }
    throw StrategyFailure("tree-builder: every edge from board vertex " + std::to_string(anchor + 1) +
                          " to an unused vertex is red");
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<TreeBuilder>(*this); }

  const TreeBuilderMemory& memory() const { return mem_; }

private:
  TreeBuilderMemory mem_;
};

}  // namespace ramsey

#endif  // RAMSEY_STRATEGIES_TREE_BUILDER_HPP
