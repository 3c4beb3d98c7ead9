#ifndef RAMSEY_STRATEGIES_HPP
#define RAMSEY_STRATEGIES_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/strategies/baselines.hpp"
#include "ramsey/strategies/path_builder.hpp"
#include "ramsey/strategies/star_blocker.hpp"
#include "ramsey/strategies/tree_builder.hpp"

namespace ramsey {

/// What a strategy may need to know about the match it is built for.
struct StrategyContext {
  GameConfig config;
  double eps = 0.5;         // star-blocker only
  std::uint64_t seed = 0;   // random only
};

inline const std::vector<std::string>& strategy_names() {
  static const std::vector<std::string> names{"tree-builder", "path-builder",          "star-blocker",   "random",
                                              "greedy-star",  "greedy-degree-blocker", "greedy-extender"};
  return names;
}

inline std::unique_ptr<Strategy> make_strategy(std::string_view name, const StrategyContext& ctx) {
  if (name == "tree-builder") return std::make_unique<TreeBuilder>(ctx.config.target);
  if (name == "path-builder") return std::make_unique<PathBuilder>(ctx.config.target, ctx.config.order);
  if (name == "star-blocker")
    return std::make_unique<StarBlocker>(make_blocker_params(ctx.config.p, ctx.config.q, ctx.eps));
  if (name == "random") return std::make_unique<RandomStrategy>(ctx.seed);
  if (name == "greedy-star") return std::make_unique<GreedyStar>();
  if (name == "greedy-degree-blocker") return std::make_unique<GreedyDegreeBlocker>();
  if (name == "greedy-extender") return std::make_unique<GreedyExtender>();
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

}  // namespace ramsey

#endif  // RAMSEY_STRATEGIES_HPP
