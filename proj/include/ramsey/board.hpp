#ifndef RAMSEY_BOARD_HPP
#define RAMSEY_BOARD_HPP

// The edge-coloured complete board K_N and the (p,q) turn structure.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

class GameError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

enum class Color : std::uint8_t { Uncolored = 0, Blue = 1, Red = 2 };
enum class Player : std::uint8_t { Alice, Bob };

/// Strong: first to complete their own copy wins, else draw.
/// Weak (Maker-Breaker): only blue copies count; Breaker wins at exhaustion.
enum class Mode : std::uint8_t { Strong, Weak };

constexpr Color color_of(Player p) { return p == Player::Alice ? Color::Blue : Color::Red; }
constexpr Player opponent(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }

inline std::string_view to_string(Player p) { return p == Player::Alice ? "alice" : "bob"; }
inline std::string_view to_string(Mode m) { return m == Mode::Strong ? "strong" : "weak"; }

inline Mode parse_mode(std::string_view s) {
  if (s == "strong") return Mode::Strong;
  if (s == "weak") return Mode::Weak;
  throw std::invalid_argument("mode must be 'strong' or 'weak'");
}

/// Largest board the engine accepts (vertex neighbourhoods are 64-bit masks).
inline constexpr int kMaxBoardOrder = 64;

struct Turn {
  Player player = Player::Alice;
  int remaining = 0;  // edges the player still owes in this block
  friend bool operator==(const Turn&, const Turn&) = default;
};

/// Turn order after `blue` blue and `red` red edges: Alice colours p, Bob q,
/// repeating. When fewer uncolored edges remain than the block needs, the
/// mover colours whatever is left.
constexpr Turn whose_turn(int blue, int red, int p, int q, int total_edges) {
  const int placed = blue + red;
  const int pos = placed % (p + q);
  const int left = total_edges - placed;
  Turn t;
  if (pos < p) {
    t.player = Player::Alice;
    t.remaining = p - pos;
  } else {
    t.player = Player::Bob;
    t.remaining = p + q - pos;
  }
  if (t.remaining > left) t.remaining = left;
  return t;
}

/// True when the colour counts are reachable under the round structure.
constexpr bool counts_consistent(int blue, int red, int p, int q) {
  const int placed = blue + red;
  const int rounds = placed / (p + q);
  const int pos = placed % (p + q);
  const int expect_blue = rounds * p + (pos < p ? pos : p);
  return blue == expect_blue && red == placed - expect_blue;
}

struct GameConfig {
  int order = 2;  // N
  int p = 1;
  int q = 1;
  Mode mode = Mode::Strong;
  TargetGraph target;

  int edge_total() const { return pair_count(order); }
};

struct Move {
  Edge edge;
  Color color = Color::Uncolored;
  friend bool operator==(const Move&, const Move&) = default;
};

class BoardState {
public:
  BoardState() = default;

  explicit BoardState(GameConfig config) : config_(std::move(config)) {
    if (config_.order < 2) throw GameError("board order must be at least 2");
    if (config_.order > kMaxBoardOrder)
      throw GameError("board order above " + std::to_string(kMaxBoardOrder));
    if (config_.q < 1 || config_.p < config_.q) throw GameError("need p >= q >= 1");
    colors_.assign(config_.edge_total(), Color::Uncolored);
    blue_deg_.assign(config_.order, 0);
    red_deg_.assign(config_.order, 0);
  }

  const GameConfig& config() const { return config_; }
  int order() const { return config_.order; }
  int edge_total() const { return static_cast<int>(colors_.size()); }
  int blue_count() const { return blue_count_; }
  int red_count() const { return red_count_; }
  int uncolored_count() const { return edge_total() - blue_count_ - red_count_; }
  bool full() const { return uncolored_count() == 0; }

  Color color(Edge e) const { return colors_[edge_index(e)]; }
  Color color(int a, int b) const { return color(Edge(a, b)); }
  Color color_at(int index) const { return colors_[index]; }
  const std::vector<Color>& colors() const { return colors_; }

  int blue_degree(int v) const { return blue_deg_[v]; }
  int red_degree(int v) const { return red_deg_[v]; }
  int degree(int v, Color c) const { return c == Color::Blue ? blue_deg_[v] : red_deg_[v]; }
  bool saturated(int v) const { return blue_deg_[v] + red_deg_[v] == order() - 1; }

  const std::vector<Move>& move_log() const { return log_; }

  Turn whose_turn() const {
    return ramsey::whose_turn(blue_count_, red_count_, config_.p, config_.q, edge_total());
  }

  /// Neighbourhood of v in the colour class, as a vertex bit mask.
  std::uint64_t neighbours(int v, Color c) const {
    std::uint64_t m = 0;
    for (int w = 0; w < order(); ++w)
      if (w != v && color(v, w) == c) m |= std::uint64_t{1} << w;
    return m;
  }

  std::vector<std::uint64_t> adjacency(Color c) const {
    std::vector<std::uint64_t> adj(order(), 0);
    for (int i = 0; i < edge_total(); ++i)
      if (colors_[i] == c) {
        Edge e = edge_at(i);
        adj[e.u] |= std::uint64_t{1} << e.v;
        adj[e.v] |= std::uint64_t{1} << e.u;
      }
    return adj;
  }

  /// Uncolored edges in increasing index order.
  std::vector<Edge> uncolored_edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < edge_total(); ++i)
      if (colors_[i] == Color::Uncolored) out.push_back(edge_at(i));
    return out;
  }

  /// Uncolored edges at v, ordered by edge index (equivalently by the other end).
  std::vector<Edge> uncolored_at(int v) const {
    std::vector<Edge> out;
    for (int w = 0; w < order(); ++w)
      if (w != v && color(v, w) == Color::Uncolored) out.emplace_back(v, w);
    return out;
  }

  /// Colours one edge without rule checks beyond "currently uncolored".
  /// Game rules live in apply_edge (game.hpp).
  void place(Edge e, Color c) {
    if (e.u < 0 || e.v >= order() || e.u == e.v) throw GameError("edge " + to_string(e) + " not on board");
    auto& slot = colors_[edge_index(e)];
    if (slot != Color::Uncolored) throw GameError("edge " + to_string(e) + " already coloured");
    if (c == Color::Uncolored) throw GameError("cannot place an uncolored edge");
    slot = c;
    if (c == Color::Blue) {
      ++blue_count_;
      ++blue_deg_[e.u];
      ++blue_deg_[e.v];
    } else {
      ++red_count_;
      ++red_deg_[e.u];
      ++red_deg_[e.v];
    }
    log_.push_back({e, c});
  }

private:
  GameConfig config_;
  std::vector<Color> colors_;
  std::vector<int> blue_deg_;
  std::vector<int> red_deg_;
  std::vector<Move> log_;
  int blue_count_ = 0;
  int red_count_ = 0;
};

}  // namespace ramsey

#endif  // RAMSEY_BOARD_HPP
