#ifndef RAMSEY_STRATEGIES_HUMAN_HPP
#define RAMSEY_STRATEGIES_HUMAN_HPP

// Text-prompt player: shows the board as an upper-triangle grid and reads
// edges as "u v" or "u-v" (1-based). Bad input is answered with a new prompt.

#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>

#include "ramsey/game.hpp"

namespace ramsey {

/// Row i lists the colours of (i, j) for j > i: '.' free, 'B' blue, 'R' red.
inline std::string board_grid(const BoardState& s) {
  std::ostringstream out;
  const int n = s.order();
  const int w = static_cast<int>(std::to_string(n).size()) + 1;
  out << std::string(w, ' ');
  for (int j = 2; j <= n; ++j) out << std::string(w - std::to_string(j).size(), ' ') << j;
  out << "\n";
  for (int i = 0; i + 1 < n; ++i) {
    out << std::string(w - 1 - std::to_string(i + 1).size(), ' ') << i + 1 << " ";
    for (int j = 1; j < n; ++j) {
      char c = ' ';
      if (j > i) {
        const Color col = s.color(i, j);
        c = col == Color::Blue ? 'B' : col == Color::Red ? 'R' : '.';
      }
      out << std::string(w - 1, ' ') << c;
    }
    out << "\n";
  }
  return out.str();
}

class HumanStrategy : public Strategy {
public:
  HumanStrategy(std::istream& in, std::ostream& out) : in_(&in), out_(&out) {}

  std::string name() const override { return "human"; }

  Edge next_move(const BoardState& s) override {
    const Turn t = s.whose_turn();
    for (;;) {
      *out_ << board_grid(s) << to_string(t.player) << " (" << (t.player == Player::Alice ? "blue" : "red") << ", "
            << t.remaining << " to place) edge> " << std::flush;
      std::string line;
      if (!std::getline(*in_, line)) throw StrategyFailure("human: input closed");
      for (char& c : line)
        if (c == '-' || c == ',') c = ' ';
      std::istringstream ls(line);
      int a = 0, b = 0;
      std::string extra;
      if (!(ls >> a >> b) || (ls >> extra)) {
        *out_ << "enter two vertex numbers, e.g. 1 2\n";
        continue;
      }
      if (a < 1 || b < 1 || a > s.order() || b > s.order() || a == b) {
        *out_ << "vertices must be distinct and between 1 and " << s.order() << "\n";
        continue;
      }
      const Edge e(a - 1, b - 1);
      if (s.color(e) != Color::Uncolored) {
        *out_ << "edge " << to_string(e) << " is already coloured\n";
        continue;
      }
      return e;
    }
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<HumanStrategy>(*this); }

private:
  std::istream* in_;
  std::ostream* out_;
};

}  // namespace ramsey

#endif  // RAMSEY_STRATEGIES_HUMAN_HPP
