// Library walk-through: play a match, solve a small game, check a strategy.

#include <iostream>

#include "ramsey/bounds.hpp"
#include "ramsey/solver.hpp"
#include "ramsey/strategies.hpp"

int main() {
  using namespace ramsey;

  // Tree-builder against a random Bob: a spider on 6 vertices on K10.
  const TargetGraph spider = parse_graph("6; 1-2 1-3 1-4 4-5 5-6");
  const GameConfig match{tree_builder_board(6, 1, 1), 1, 1, Mode::Strong, spider};
  TreeBuilder alice(spider);
  RandomStrategy bob(7);
  const MatchTranscript tr = play_match(alice, bob, match);
  std::cout << serialize_transcript(tr) << "\n";

  // a(P4) by exhaustive search.
  const auto rep = achievement_number(path_graph(4), 1, 1, Mode::Strong, 6);
  for (const auto& [n, r] : rep.per_order)
    std::cout << "K" << n << ": " << to_string(r.outcome) << " (" << r.nodes_expanded << " nodes)\n";
  std::cout << "a(P4) = " << (rep.value ? std::to_string(*rep.value) : "?") << "\n\n";

  // The path strategy against every Bob on K6.
  const GameConfig k6{6, 1, 1, Mode::Strong, path_graph(6)};
  const VerifyResult v = verify_strategy(PathBuilder(k6.target, 6), Player::Alice, k6);
  std::cout << "path-builder on K6: " << to_string(v.verdict) << " over " << v.leaves << " lines\n";

  const auto tb = tree_bounds(6, 1, 1);
  std::cout << "trees of order 6: " << tb.lower << " <= a(T) <= " << tb.upper << "\n";
}
