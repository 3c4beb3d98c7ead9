#ifndef RAMSEY_STRATEGIES_BASELINES_HPP
#define RAMSEY_STRATEGIES_BASELINES_HPP

// Simple adversaries used to exercise the constructive strategies.

#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ramsey/game.hpp"

namespace ramsey {

/// Uniformly random uncolored edge from a seeded 64-bit Mersenne twister.
class RandomStrategy : public Strategy {
public:
  explicit RandomStrategy(std::uint64_t seed) : rng_(seed) {}

  std::string name() const override { return "random"; }

  Edge next_move(const BoardState& s) override {
    const int left = s.uncolored_count();
    if (left == 0) throw StrategyFailure("random: no uncolored edge");
    std::uniform_int_distribution<int> pick(0, left - 1);
    int k = pick(rng_);
    for (int i = 0; i < s.edge_total(); ++i)
      if (s.color_at(i) == Color::Uncolored && k-- == 0) return edge_at(i);
    throw StrategyFailure("random: bookkeeping error");
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<RandomStrategy>(*this); }

private:
  std::mt19937_64 rng_;
};

namespace detail {

// Lowest uncolored edge at the best-ranked vertex that still has one.
inline Edge edge_at_ranked_vertex(const BoardState& s, const std::vector<int>& ranked) {
  for (int v : ranked) {
    auto at = s.uncolored_at(v);
    if (!at.empty()) return at.front();
  }
  throw StrategyFailure("no uncolored edge left");
}

inline std::vector<int> rank_by_degree(const BoardState& s, Color c) {
  std::vector<int> order(s.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return s.degree(a, c) > s.degree(b, c); });
  return order;
}

}  // namespace detail

/// Plays at the vertex where the opponent's colour is densest.
class GreedyDegreeBlocker : public Strategy {
public:
  std::string name() const override { return "greedy-degree-blocker"; }
  Edge next_move(const BoardState& s) override {
    const Color theirs = color_of(opponent(s.whose_turn().player));
    return detail::edge_at_ranked_vertex(s, detail::rank_by_degree(s, theirs));
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<GreedyDegreeBlocker>(*this); }
};

/// Grows a star at its own densest vertex.
class GreedyStar : public Strategy {
public:
  std::string name() const override { return "greedy-star"; }
  Edge next_move(const BoardState& s) override {
    const Color mine = color_of(s.whose_turn().player);
    return detail::edge_at_ranked_vertex(s, detail::rank_by_degree(s, mine));
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<GreedyStar>(*this); }
};

/// Edge that produces the largest own-colour component; edges inside one
/// component score zero. Ties go to the lowest edge index.
class GreedyExtender : public Strategy {
public:
  std::string name() const override { return "greedy-extender"; }

  Edge next_move(const BoardState& s) override {
    const Color mine = color_of(s.whose_turn().player);
    const int n = s.order();
    std::vector<int> parent(n), size(n, 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Move& m : s.move_log())
      if (m.color == mine) {
        int a = find(m.edge.u), b = find(m.edge.v);
        if (a != b) {
          parent[a] = b;
          size[b] += size[a];
        }
      }
    int best = -1, best_score = -1;
    for (int i = 0; i < s.edge_total(); ++i) {
      if (s.color_at(i) != Color::Uncolored) continue;
      const Edge e = edge_at(i);
      const int a = find(e.u), b = find(e.v);
      const int score = a == b ? 0 : size[a] + size[b];
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    if (best < 0) throw StrategyFailure("greedy-extender: no uncolored edge");
    return edge_at(best);
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<GreedyExtender>(*this); }
};

}  // namespace ramsey

#endif  // RAMSEY_STRATEGIES_BASELINES_HPP
