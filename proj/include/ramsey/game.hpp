#ifndef RAMSEY_GAME_HPP
#define RAMSEY_GAME_HPP

// Rules of the (p,q) achievement game on K_N and full-match execution.
//
// A win is checked after every single edge, so a copy completed in the middle
// of a p-block ends the game at that edge. In weak mode only blue copies end
// the game, and an exhausted board is reported as BobWin (Breaker held out).

#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/board.hpp"
#include "ramsey/copy_search.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

enum class Result : std::uint8_t { Ongoing, AliceWin, BobWin, Draw };

inline std::string_view to_string(Result r) {
  switch (r) {
    case Result::AliceWin: return "AliceWin";
    case Result::BobWin: return "BobWin";
    case Result::Draw: return "Draw";
    default: return "Ongoing";
  }
}

inline Result parse_result(std::string_view s) {
  if (s == "AliceWin") return Result::AliceWin;
  if (s == "BobWin") return Result::BobWin;
  if (s == "Draw") return Result::Draw;
  if (s == "Ongoing") return Result::Ongoing;
  throw std::invalid_argument("unknown result '" + std::string(s) + "'");
}

struct GameOutcome {
  Result value = Result::Ongoing;
  std::optional<int> winning_move_index;  // 0-based position in move_log
  friend bool operator==(const GameOutcome&, const GameOutcome&) = default;
};

inline BoardState new_game(int order, int p, int q, TargetGraph target, Mode mode) {
  if (q < 1 || p < q) throw GameError("need p >= q >= 1");
  if (order < 2) throw GameError("board order must be at least 2");
  return BoardState(GameConfig{order, p, q, mode, std::move(target)});
}

/// Outcome implied by the last placement of `s`, given the game was still
/// open before it. `finder` must have been built for the board's target.
inline GameOutcome judge_last_move(const BoardState& s, CopyFinder& finder) {
  GameOutcome out;
  if (s.move_log().empty()) return out;
  const Move& last = s.move_log().back();
  const int idx = static_cast<int>(s.move_log().size()) - 1;
  const bool counts = last.color == Color::Blue || s.config().mode == Mode::Strong;
  if (counts) {
    const auto adj = s.adjacency(last.color);
    if (finder.find_through(adj, last.edge)) {
      out.value = last.color == Color::Blue ? Result::AliceWin : Result::BobWin;
      out.winning_move_index = idx;
      return out;
    }
  }
  if (s.full()) out.value = s.config().mode == Mode::Strong ? Result::Draw : Result::BobWin;
  return out;
}

inline GameOutcome judge_last_move(const BoardState& s) {
  CopyFinder finder(s.config().target);
  return judge_last_move(s, finder);
}

struct Step {
  BoardState state;
  GameOutcome outcome;
};

/// Colours `e` for `by`. The position must still be open; the edge must be
/// uncolored and `by` must be the player to move.
inline Step apply_edge(const BoardState& state, Edge e, Player by) {
  if (state.full()) throw GameError("board is full");
  if (e.u < 0 || e.v >= state.order() || e.u == e.v) throw GameError("edge " + to_string(e) + " not on board");
  if (state.color(e) != Color::Uncolored) throw GameError("edge " + to_string(e) + " already coloured");
  if (state.whose_turn().player != by) throw GameError(std::string(to_string(by)) + " moved out of turn");
  Step step{state, {}};
  step.state.place(e, color_of(by));
  step.outcome = judge_last_move(step.state);
  return step;
}

class StrategyFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Deterministic move supplier with private memory. One instance plays one
/// match; clone() copies the memory for branching searches.
class Strategy {
public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  /// Next edge for the player to move in `state`. May throw StrategyFailure.
  virtual Edge next_move(const BoardState& state) = 0;
  virtual std::unique_ptr<Strategy> clone() const = 0;
};

struct Forfeit {
  Player by = Player::Alice;
  std::string diagnostic;
  friend bool operator==(const Forfeit&, const Forfeit&) = default;
};

struct MatchTranscript {
  GameConfig config;
  std::string alice_name;
  std::string bob_name;
  std::vector<Move> moves;
  GameOutcome outcome;
  std::optional<Forfeit> forfeit;
  std::vector<std::string> diagnostics;
};

/// Called after every placement with the new state and the outcome so far.
using MoveObserver = std::function<void(const BoardState&, const GameOutcome&)>;

inline MatchTranscript play_match(Strategy& alice, Strategy& bob, const GameConfig& config,
                                  const MoveObserver& observer = {}) {
  MatchTranscript tr;
  tr.config = config;
  tr.alice_name = alice.name();
  tr.bob_name = bob.name();
  BoardState state = new_game(config.order, config.p, config.q, config.target, config.mode);
  GameOutcome outcome;
  while (outcome.value == Result::Ongoing && !state.full()) {
    const Player mover = state.whose_turn().player;
    Strategy& s = mover == Player::Alice ? alice : bob;
    Edge e;
    try {
      e = s.next_move(state);
    } catch (const StrategyFailure& err) {
      tr.forfeit = Forfeit{mover, err.what()};
      break;
    }
    if (e.u < 0 || e.v >= state.order() || e.u == e.v || state.color(e) != Color::Uncolored) {
      tr.forfeit = Forfeit{mover, s.name() + " proposed illegal edge " + to_string(e)};
      break;
    }
    Step step = apply_edge(state, e, mover);
    state = std::move(step.state);
    outcome = step.outcome;
    if (observer) observer(state, outcome);
  }
  if (tr.forfeit) outcome.value = tr.forfeit->by == Player::Alice ? Result::BobWin : Result::AliceWin;
  tr.moves = state.move_log();
  tr.outcome = outcome;
  return tr;
}

// Transcript text format, one item per line:
//
//   ramsey-transcript 1
//   N 6
//   p 1
//   q 1
//   mode strong
//   target 6; 1-2 2-3 3-4 4-5 5-6
//   alice path-builder
//   bob random
//   1 1-2 B
//   2 3-4 R
//   ...
//   forfeit bob <diagnostic>        (only after a forfeit)
//   outcome AliceWin 11             (1-based winning move, or '-')

inline std::string serialize_transcript(const MatchTranscript& tr) {
  std::ostringstream out;
  out << "ramsey-transcript 1\n";
  out << "N " << tr.config.order << "\n";
  out << "p " << tr.config.p << "\n";
  out << "q " << tr.config.q << "\n";
  out << "mode " << to_string(tr.config.mode) << "\n";
  out << "target " << to_edge_list(tr.config.target) << "\n";
  out << "alice " << tr.alice_name << "\n";
  out << "bob " << tr.bob_name << "\n";
  for (std::size_t k = 0; k < tr.moves.size(); ++k)
    out << k + 1 << " " << to_string(tr.moves[k].edge) << " " << (tr.moves[k].color == Color::Blue ? 'B' : 'R')
        << "\n";
  if (tr.forfeit) out << "forfeit " << to_string(tr.forfeit->by) << " " << tr.forfeit->diagnostic << "\n";
  out << "outcome " << to_string(tr.outcome.value) << " ";
  if (tr.outcome.winning_move_index) {
    out << *tr.outcome.winning_move_index + 1;
  } else {
    out << "-";
  }
  out << "\n";
  return out.str();
}

inline MatchTranscript parse_transcript(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto expect = [&](std::string_view key) {
    if (!std::getline(in, line)) throw std::invalid_argument("transcript truncated before '" + std::string(key) + "'");
    if (line.rfind(std::string(key) + " ", 0) != 0)
      throw std::invalid_argument("expected '" + std::string(key) + "' line, got '" + line + "'");
    return line.substr(key.size() + 1);
  };
  if (expect("ramsey-transcript") != "1") throw std::invalid_argument("unsupported transcript version");
  MatchTranscript tr;
  tr.config.order = std::stoi(expect("N"));
  tr.config.p = std::stoi(expect("p"));
  tr.config.q = std::stoi(expect("q"));
  tr.config.mode = parse_mode(expect("mode"));
  tr.config.target = parse_graph(expect("target"));
  tr.alice_name = expect("alice");
  tr.bob_name = expect("bob");
  bool done = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (done) throw std::invalid_argument("text after outcome line");
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "forfeit") {
      std::string who;
      ls >> who;
      if (who != "alice" && who != "bob") throw std::invalid_argument("bad forfeit line");
      std::string diag;
      std::getline(ls, diag);
      if (!diag.empty() && diag[0] == ' ') diag.erase(0, 1);
      tr.forfeit = Forfeit{who == "alice" ? Player::Alice : Player::Bob, diag};
    } else if (head == "outcome") {
      std::string value, idx;
      ls >> value >> idx;
      tr.outcome.value = parse_result(value);
      if (idx != "-") tr.outcome.winning_move_index = std::stoi(idx) - 1;
      done = true;
    } else {
      const int k = std::stoi(head);
      if (k != static_cast<int>(tr.moves.size()) + 1) throw std::invalid_argument("move numbers out of sequence");
      std::string pair, colour;
      ls >> pair >> colour;
      auto dash = pair.find('-');
      if (dash == std::string::npos) throw std::invalid_argument("bad move '" + line + "'");
      const int a = std::stoi(pair.substr(0, dash)) - 1;
      const int b = std::stoi(pair.substr(dash + 1)) - 1;
      if (colour != "B" && colour != "R") throw std::invalid_argument("bad colour in '" + line + "'");
      tr.moves.push_back({Edge(a, b), colour == "B" ? Color::Blue : Color::Red});
    }
  }
  if (!done) throw std::invalid_argument("transcript has no outcome line");
  return tr;
}

/// Replays the moves under the engine rules. Throws on any illegal move or
/// if play continues after the game was decided.
inline std::pair<BoardState, GameOutcome> replay(const GameConfig& config, const std::vector<Move>& moves) {
  BoardState state = new_game(config.order, config.p, config.q, config.target, config.mode);
  GameOutcome outcome;
  for (const Move& m : moves) {
    if (outcome.value != Result::Ongoing) throw GameError("move after the game was decided");
    const Player by = m.color == Color::Blue ? Player::Alice : Player::Bob;
    Step step = apply_edge(state, m.edge, by);
    state = std::move(step.state);
    outcome = step.outcome;
  }
  return {std::move(state), outcome};
}

/// Replays a transcript and reports whether the recorded outcome is reproduced.
inline bool replay_matches(const MatchTranscript& tr) {
  auto [state, outcome] = replay(tr.config, tr.moves);
  if (tr.forfeit) {
    if (outcome.value != Result::Ongoing) return false;
    outcome.value = tr.forfeit->by == Player::Alice ? Result::BobWin : Result::AliceWin;
  }
  return outcome == tr.outcome;
}

}  // namespace ramsey

#endif  // RAMSEY_GAME_HPP
