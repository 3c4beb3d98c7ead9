#ifndef RAMSEY_STRATEGIES_STAR_BLOCKER_HPP
#define RAMSEY_STRATEGIES_STAR_BLOCKER_HPP

// Bob's potential strategy against stars: at the start of each red block he
// picks the vertex w of largest potential (lowest index on ties) and colours
// uncolored edges at w. If w has fewer than q, the rest go to the next vertices
// in potential order.

#include <algorithm>
#include <deque>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "ramsey/game.hpp"
#include "ramsey/potential.hpp"

namespace ramsey {

/// Vertices by decreasing potential, ties by index.
inline std::vector<int> rank_by_potential(const BoardState& s, const BlockerParams& bp) {
  std::vector<double> phi(s.order());
  for (int v = 0; v < s.order(); ++v) phi[v] = potential_phi(s, v, bp);
  std::vector<int> order(s.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return phi[a] > phi[b]; });
  return order;
}

/// The whole red block for the current position (q edges, or everything
/// left when the board runs short).
inline std::vector<Edge> star_blocker_moves(const BoardState& s, const BlockerParams& bp) {
  const int want = std::min(s.config().q, s.uncolored_count());
  std::vector<Edge> out;
  for (int v : rank_by_potential(s, bp)) {
    if (static_cast<int>(out.size()) == want) break;
    for (const Edge& e : s.uncolored_at(v)) {
      if (static_cast<int>(out.size()) == want) break;
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
  }
  return out;
}

class StarBlocker : public Strategy {
public:
  explicit StarBlocker(BlockerParams bp) : bp_(bp) {}

  std::string name() const override { return "star-blocker"; }

  Edge next_move(const BoardState& s) override {
    if (queue_.empty()) {
      auto block = star_blocker_moves(s, bp_);
      const int owed = s.whose_turn().remaining;
      if (static_cast<int>(block.size()) > owed) block.resize(owed);
      queue_.assign(block.begin(), block.end());
    }
    if (queue_.empty()) throw StrategyFailure("star-blocker: no uncolored edge");
    const Edge e = queue_.front();
    queue_.pop_front();
    return e;
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<StarBlocker>(*this); }

  const BlockerParams& params() const { return bp_; }

private:
  BlockerParams bp_;
  std::deque<Edge> queue_;
};

}  // namespace ramsey

#endif  // RAMSEY_STRATEGIES_STAR_BLOCKER_HPP
