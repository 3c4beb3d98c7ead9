#ifndef RAMSEY_COPY_SEARCH_HPP
#define RAMSEY_COPY_SEARCH_HPP

// Finding a copy of the target graph inside one colour class of the board.
//
// The colour class is given as per-vertex neighbour masks, so the same search
// serves the general engine board and the packed solver board.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ramsey/board.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Target vertex -> board vertex; -1 where unmapped.
using Embedding = std::vector<int>;

/// Backtracking subgraph search with degree pruning. Stars are answered by a
/// max-degree check. Build once per target and reuse; not thread-safe.
class CopyFinder {
public:
  explicit CopyFinder(const TargetGraph& target) : target_(target) {
    const int tn = target.vertex_count();
    tadj_ = target.adjacency();
    degree_.resize(tn);
    for (int t = 0; t < tn; ++t) degree_[t] = target.degree(t);
    star_ = target.is_star();
    if (star_) {
      while (degree_[star_centre_] != target.edge_count()) ++star_centre_;
    }
    free_order_ = make_order({});
    for (const Edge& te : target.edges()) {
      pinned_orders_.push_back({te.u, te.v, make_order({te.u, te.v})});
      pinned_orders_.push_back({te.v, te.u, make_order({te.v, te.u})});
    }
  }

  const TargetGraph& target() const { return target_; }

  std::optional<Embedding> find(std::span<const std::uint64_t> adj) {
    if (target_.vertex_count() > static_cast<int>(adj.size())) return std::nullopt;
    if (star_) return star_copy(adj, -1);
    adj_ = adj;
    image_.fill(-1);
    if (extend(free_order_, 0, 0)) return embedding();
    return std::nullopt;
  }

  /// A copy that may use the edge `e`. If the class had no copy before `e`
  /// was added, it has one afterwards iff this returns a value.
  std::optional<Embedding> find_through(std::span<const std::uint64_t> adj, Edge e) {
    if (target_.vertex_count() > static_cast<int>(adj.size())) return std::nullopt;
    if (star_) {
      if (auto emb = star_copy(adj, e.u)) return emb;
      return star_copy(adj, e.v);
    }
    adj_ = adj;
    const int du = std::popcount(adj[e.u]);
    const int dv = std::popcount(adj[e.v]);
    for (const auto& po : pinned_orders_) {
      if (du < degree_[po.a] || dv < degree_[po.b]) continue;
      image_.fill(-1);
      image_[po.a] = e.u;
      image_[po.b] = e.v;
      if (extend(po.order, 0, bit(e.u) | bit(e.v))) return embedding();
    }
    return std::nullopt;
  }

  bool exists_through(std::span<const std::uint64_t> adj, Edge e) { return find_through(adj, e).has_value(); }

private:
  struct PinnedOrder {
    int a, b;
    std::vector<int> order;
  };

  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  // Mapping order: each vertex after the first of its component has an
  // earlier neighbour; components start at a max-degree vertex.
  std::vector<int> make_order(const std::vector<int>& seeds) const {
    const int tn = target_.vertex_count();
    std::vector<char> placed(tn, 0);
    std::vector<int> queue, order;
    for (int s : seeds) {
      placed[s] = 1;
      queue.push_back(s);
    }
    std::size_t head = 0;
    auto drain = [&] {
      for (; head < queue.size(); ++head)
        for (int y : tadj_[queue[head]])
          if (!placed[y]) {
            placed[y] = 1;
            queue.push_back(y);
            order.push_back(y);
          }
    };
    drain();
    while (static_cast<int>(queue.size()) < tn) {
      int best = -1;
      for (int t = 0; t < tn; ++t)
        if (!placed[t] && (best < 0 || degree_[t] > degree_[best])) best = t;
      placed[best] = 1;
      queue.push_back(best);
      order.push_back(best);
      drain();
    }
    return order;
  }

  bool extend(const std::vector<int>& order, std::size_t k, std::uint64_t used) {
    if (k == order.size()) return true;
    const int t = order[k];
    const int need = degree_[t];
    const int bn = static_cast<int>(adj_.size());
    std::uint64_t cand = bn == 64 ? ~std::uint64_t{0} : (bit(bn) - 1);
    cand &= ~used;
    for (int y : tadj_[t])
      if (image_[y] >= 0) cand &= adj_[image_[y]];
    while (cand) {
      const int b = std::countr_zero(cand);
      cand &= cand - 1;
      if (std::popcount(adj_[b]) < need) continue;
      image_[t] = b;
      if (extend(order, k + 1, used | bit(b))) return true;
      image_[t] = -1;
    }
    return false;
  }

  std::optional<Embedding> star_copy(std::span<const std::uint64_t> adj, int only_centre) const {
    const int leaves = target_.edge_count();
    const int bn = static_cast<int>(adj.size());
    for (int b = 0; b < bn; ++b) {
      if (only_centre >= 0 && b != only_centre) continue;
      if (std::popcount(adj[b]) < leaves) continue;
      Embedding emb(target_.vertex_count(), -1);
      emb[star_centre_] = b;
      std::uint64_t nb = adj[b];
      for (int t = 0; t < target_.vertex_count(); ++t) {
        if (t == star_centre_) continue;
        emb[t] = std::countr_zero(nb);
        nb &= nb - 1;
      }
      return emb;
    }
    return std::nullopt;
  }

  Embedding embedding() const {
    return Embedding(image_.begin(), image_.begin() + target_.vertex_count());
  }

  TargetGraph target_;
  std::vector<std::vector<int>> tadj_;
  std::vector<int> degree_;
  bool star_ = false;
  int star_centre_ = 0;
  std::vector<int> free_order_;
  std::vector<PinnedOrder> pinned_orders_;
  std::span<const std::uint64_t> adj_;
  std::array<int, kMaxBoardOrder> image_{};
};

/// Some copy of `target` inside the graph with neighbour masks `adj`.
/// Deterministic: board vertices are tried in increasing order.
inline std::optional<Embedding> find_copy(std::span<const std::uint64_t> adj, const TargetGraph& target) {
  return CopyFinder(target).find(adj);
}

inline std::optional<Embedding> contains_copy(const BoardState& state, const TargetGraph& target, Color color) {
  const auto adj = state.adjacency(color);
  return find_copy(adj, target);
}

/// True when the map is injective and every target edge between mapped
/// vertices lands on a board edge of the given colour.
inline bool embedding_valid(const BoardState& state, const TargetGraph& target, const Embedding& emb,
                            Color color) {
  if (static_cast<int>(emb.size()) != target.vertex_count()) return false;
  std::uint64_t seen = 0;
  for (int b : emb) {
    if (b < 0) continue;
    if (b >= state.order() || (seen >> b & 1)) return false;
    seen |= std::uint64_t{1} << b;
  }
  for (const Edge& te : target.edges()) {
    if (emb[te.u] < 0 || emb[te.v] < 0) continue;
    if (state.color(emb[te.u], emb[te.v]) != color) return false;
  }
  return true;
}

}  // namespace ramsey

#endif  // RAMSEY_COPY_SEARCH_HPP
