#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ramsey/copy_search.hpp"
#include "ramsey/enumerate.hpp"
#include "ramsey/oracles.hpp"
#include "ramsey/strategies.hpp"
#include "ramsey/strategies/human.hpp"

using namespace ramsey;

namespace {

BoardState board(int n, int p, int q, const TargetGraph& t = path_graph(2)) {
  return BoardState(GameConfig{n, p, q, Mode::Strong, t});
}

}  // namespace

TEST(TreeBuilder, FirstMoveIsLowestEdge) {
  TreeBuilder tb(path_graph(3));
  EXPECT_EQ(tb.next_move(board(4, 1, 1, path_graph(3))), Edge(0, 1));
}

TEST(TreeBuilder, GrowsFromTheParentImage) {
  const auto star = star_graph(3);
  auto s = board(5, 1, 1, star);
  TreeBuilder tb(star);
  const Edge first = tb.next_move(s);
  s.place(first, Color::Blue);
  s.place(Edge(0, 2), Color::Red);
  EXPECT_EQ(tb.next_move(s), Edge(0, 3));
}

TEST(TreeBuilder, RejectsNonTrees) {
  EXPECT_THROW(TreeBuilder(parse_graph("3; 1-2 2-3 1-3")), std::invalid_argument);
}

TEST(TreeBuilder, WinsAgainstRandomBobsOnTheGuaranteedBoard) {
  const std::vector<std::pair<int, int>> biases{{1, 1}, {2, 1}, {2, 2}, {3, 2}};
  std::uint64_t seed = 1;
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : nonisomorphic_trees(n))
      for (auto [p, q] : biases) {
        const GameConfig cfg{tree_builder_board(n, p, q), p, q, Mode::Strong, t};
        for (int k = 0; k < 60; ++k) {
          TreeBuilder alice(t);
          RandomStrategy bob(seed++);
          const auto tr = play_match(alice, bob, cfg);
          ASSERT_EQ(tr.outcome.value, Result::AliceWin) << to_edge_list(t) << " p=" << p << " q=" << q;
          ASSERT_FALSE(tr.forfeit);
          // one blue edge per tree edge, nothing wasted
          EXPECT_EQ(std::count_if(tr.moves.begin(), tr.moves.end(), [](const Move& m) { return m.color == Color::Blue; }),
                    t.edge_count());
        }
      }
}

TEST(TreeBuilder, BoardFormula) {
  EXPECT_EQ(tree_builder_board(6, 1, 1), 10);
  EXPECT_EQ(tree_builder_board(6, 2, 1), 8);
  EXPECT_EQ(tree_builder_board(2, 3, 2), 2);
}

TEST(Potential, AlphaConditionAtOne) {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= p; ++q)
      for (double eps : {0.1, 0.5, 1.0}) EXPECT_NEAR(static_cast<double>(alpha_condition(p, q, eps, 1.0L)), 0.0, 1e-15);
}

TEST(Potential, ChosenAlphaIsTheLargestGridPoint) {
  using HP = oracle::HighPrecision;
  const HP step = HP(1) / HP(1 << 20);
  struct Case { int p, q; double eps; HP eps_exact; };
  const std::vector<Case> cases{{1, 1, 0.5, HP("0.5")}, {2, 1, 1.0, HP(1)}, {1, 1, 0.25, HP("0.25")},
                                {3, 2, 0.5, HP("0.5")}, {2, 2, 0.1, HP("0.1")}};
  for (const auto& c : cases) {
    const double a = choose_alpha(c.p, c.q, c.eps);
    const HP x(a);
    // bq = 2p + eps regardless of q
    EXPECT_LT(oracle::alpha_condition(c.p, c.eps_exact, x), HP("-1e-9"));
    EXPECT_GE(oracle::alpha_condition(c.p, c.eps_exact, x + step), HP("-1e-9"));
    const HP k = (x - 1) / step;
    EXPECT_EQ(k, HP(static_cast<long long>(k.convert_to<double>() + 0.5)));
  }
  EXPECT_GE(choose_alpha(1, 1, 0.5), 1.1);
  EXPECT_GE(choose_alpha(2, 1, 1.0), 1.05);
  EXPECT_NEAR(static_cast<double>(alpha_condition(1, 1, 0.5, 1.1L)), -0.030, 5e-4);
  EXPECT_NEAR(static_cast<double>(alpha_condition(2, 1, 1.0, 1.05L)), -0.026, 5e-4);
}

TEST(Potential, BadParameters) {
  EXPECT_THROW(choose_alpha(1, 2, 0.5), ParameterError);
  EXPECT_THROW(choose_alpha(1, 1, 0.0), ParameterError);
  EXPECT_THROW(compute_n0(1, 1, 0.5, 1.0), ParameterError);
}

TEST(Potential, ThresholdMatchesScan) {
  using HP = oracle::HighPrecision;
  struct Case { int p, q; double eps; HP eps_exact; double alpha; };
  const std::vector<Case> cases{{1, 1, 0.5, HP("0.5"), 1.1},
                                {2, 1, 1.0, HP(1), choose_alpha(2, 1, 1.0)},
                                {1, 1, 0.5, HP("0.5"), choose_alpha(1, 1, 0.5)},
                                {3, 2, 0.5, HP("0.5"), choose_alpha(3, 2, 0.5)}};
  for (const auto& c : cases) {
    std::int64_t last_fail = 0;
    for (std::int64_t n = 1; n <= 20000; ++n)
      if (oracle::n0_slack(c.p, c.q, c.eps_exact, HP(c.alpha), n) < 0) last_fail = n;
    EXPECT_EQ(compute_n0(c.p, c.q, c.eps, c.alpha), last_fail + 1) << c.p << c.q << " alpha " << c.alpha;
  }
  const auto n0 = compute_n0(1, 1, 0.5, 1.1);
  EXPECT_GT(n0, 200);
  EXPECT_LT(n0, 320);
}

TEST(Potential, ThresholdFallsAsAlphaGrows) {
  const double top = choose_alpha(1, 1, 0.5);
  std::int64_t prev = compute_n0(1, 1, 0.5, 1.01);
  for (double a = 1.02; a <= top; a += 0.01) {
    const auto n0 = compute_n0(1, 1, 0.5, a);
    EXPECT_LE(n0, prev) << a;
    prev = n0;
  }
}

TEST(Potential, PhiValues) {
  BlockerParams bp;
  bp.alpha = 1.1;
  bp.beta = 2.5;
  EXPECT_DOUBLE_EQ(potential_from_degrees(0, 0, 10, bp), 1.0);
  EXPECT_DOUBLE_EQ(potential_from_degrees(5, 4, 10, bp), 0.0);
  EXPECT_NEAR(potential_from_degrees(2, 1, 10, bp), 0.95346, 5e-6);
  auto s = board(4, 1, 1);
  s.place(Edge(0, 1), Color::Blue);
  s.place(Edge(0, 2), Color::Blue);
  s.place(Edge(0, 3), Color::Red);
  EXPECT_DOUBLE_EQ(potential_phi(s, 0, bp), 0.0);
  EXPECT_DOUBLE_EQ(potential_phi(s, 1, bp), 1.1);
}

TEST(StarBlocker, EmptyBoardTakesLowestEdge) {
  const auto bp = make_blocker_params(1, 1, 0.5);
  auto s = board(6, 1, 1);
  s.place(Edge(4, 5), Color::Blue);
  // both ends of the blue edge tie; the lower one wins
  EXPECT_EQ(star_blocker_moves(s, bp), (std::vector<Edge>{Edge(0, 4)}));
  EXPECT_EQ(star_blocker_moves(board(6, 1, 1), bp), (std::vector<Edge>{Edge(0, 1)}));
}

TEST(StarBlocker, BlocksTheDensestVertex) {
  const auto bp = make_blocker_params(3, 1, 0.5);
  auto s = board(9, 3, 1);
  for (int x : {0, 1, 2}) s.place(Edge(6, x), Color::Blue);
  EXPECT_EQ(star_blocker_moves(s, bp), (std::vector<Edge>{Edge(3, 6)}));
}

TEST(StarBlocker, FillsFromTheNextVertex) {
  const auto bp = make_blocker_params(2, 2, 0.5);
  auto s = board(5, 2, 2);
  // vertex 1 has one free edge left (to 5); vertex 4 ranks next
  s.place(Edge(0, 1), Color::Blue);
  s.place(Edge(0, 2), Color::Blue);
  s.place(Edge(1, 2), Color::Red);
  s.place(Edge(0, 3), Color::Blue);
  s.place(Edge(1, 3), Color::Blue);
  const auto moves = star_blocker_moves(s, bp);
  ASSERT_EQ(moves.size(), 2u);
  EXPECT_EQ(moves[0], Edge(0, 4));
  EXPECT_EQ(moves[1], Edge(2, 3));
}

TEST(StarBlocker, TruncatesAtTheEnd) {
  const auto bp = make_blocker_params(2, 2, 0.5);
  auto s = board(3, 2, 2);
  s.place(Edge(0, 1), Color::Blue);
  s.place(Edge(0, 2), Color::Blue);
  EXPECT_EQ(star_blocker_moves(s, bp).size(), 1u);
}

TEST(StarBlocker, HoldsOffGreedyStar) {
  // n = 20, eps = 0.25, board floor(1.25 n) = 25
  const auto target = star_graph(20);
  const GameConfig cfg{25, 1, 1, Mode::Strong, target};
  GreedyStar alice;
  StarBlocker bob(make_blocker_params(1, 1, 0.25));
  const auto tr = play_match(alice, bob, cfg);
  EXPECT_NE(tr.outcome.value, Result::AliceWin);
  EXPECT_FALSE(tr.forfeit);
  BoardState end = replay(cfg, tr.moves).first;
  for (int v = 0; v < 25; ++v) EXPECT_LT(end.blue_degree(v), 20);
}

TEST(Baselines, Determinism) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const GameConfig cfg{4, 1, 1, Mode::Strong, path_graph(3)};
    RandomStrategy a1(seed), b1(seed + 7), a2(seed), b2(seed + 7);
    const auto t1 = play_match(a1, b1, cfg);
    const auto t2 = play_match(a2, b2, cfg);
    ASSERT_EQ(t1.moves, t2.moves);
    ASSERT_EQ(t1.outcome, t2.outcome);
  }
}

TEST(Baselines, RandomIsRoughlyUniform) {
  std::vector<int> hits(10, 0);
  const auto s = board(5, 1, 1);
  for (std::uint64_t seed = 0; seed < 5000; ++seed) {
    RandomStrategy r(seed);
    ++hits[edge_index(r.next_move(s))];
  }
  for (int h : hits) {
    EXPECT_GT(h, 400);
    EXPECT_LT(h, 600);
  }
}

TEST(Baselines, GreedyChoices) {
  auto s = board(5, 1, 1);
  GreedyDegreeBlocker gdb;
  EXPECT_EQ(gdb.next_move(s), Edge(0, 1));
  s.place(Edge(3, 4), Color::Blue);
  // Bob to move: blocks at vertex 4, the lowest blue-degree-1 vertex
  EXPECT_EQ(gdb.next_move(s), Edge(0, 3));
  s.place(Edge(0, 3), Color::Red);
  GreedyStar gs;
  EXPECT_EQ(gs.next_move(s), Edge(1, 3));
  GreedyExtender ge;
  s.place(Edge(1, 2), Color::Blue);
  s.place(Edge(0, 1), Color::Red);
  // joining {2,3} to {4,5} makes a component of 4
  EXPECT_EQ(ge.next_move(s), Edge(1, 3));
}

TEST(Baselines, Factory) {
  StrategyContext ctx{{6, 1, 1, Mode::Strong, path_graph(6)}, 0.5, 3};
  for (const auto& name : strategy_names()) EXPECT_EQ(make_strategy(name, ctx)->name(), name);
  EXPECT_THROW(make_strategy("nope", ctx), std::invalid_argument);
}

TEST(PathBuilder, Preconditions) {
  EXPECT_THROW(PathBuilder(star_graph(3), 5), std::invalid_argument);
  EXPECT_THROW(PathBuilder(path_graph(4), 4), std::invalid_argument);
  EXPECT_THROW(PathBuilder(path_graph(6), 7), std::invalid_argument);
  EXPECT_NO_THROW(PathBuilder(path_graph(3), 3));
  EXPECT_NO_THROW(PathBuilder(path_graph(8), 8));
  PathBuilder pb(path_graph(6), 6);
  EXPECT_THROW(pb.next_move(BoardState(GameConfig{6, 2, 1, Mode::Strong, path_graph(6)})), StrategyFailure);
}

TEST(PathBuilder, EndgameOpeningReplies) {
  // Watch the first endgame reply across many random games and check the two
  // listed cases: Bob on t2t5 -> t4t5, Bob on t1t3 -> t3t5.
  int case1 = 0, case3 = 0;
  for (int n = 6; n <= 10; ++n)
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
      const GameConfig cfg{n, 1, 1, Mode::Strong, path_graph(n)};
      BoardState s(cfg);
      PathBuilder alice(cfg.target, n);
      RandomStrategy bob(seed * 31 + n);
      CopyFinder finder(cfg.target);
      GameOutcome out;
      while (out.value == Result::Ongoing) {
        const Player mover = s.whose_turn().player;
        Edge e;
        if (mover == Player::Alice) {
          const bool before = alice.memory().phase == PathBuilderMemory::Phase::Endgame;
          e = alice.next_move(s);
          const auto& m = alice.memory();
          if (!before && m.phase == PathBuilderMemory::Phase::Endgame) {
            const Edge f = s.move_log().back().edge;
            const auto& t = m.t;
            if (m.assumed_red.empty() && f == Edge(t[2], t[5])) {
              EXPECT_EQ(e, Edge(t[4], t[5]));
              ++case1;
            }
            if (m.assumed_red.empty() && f == Edge(t[1], t[3])) {
              EXPECT_EQ(e, Edge(t[3], t[5]));
              ++case3;
            }
          }
          if (m.phase == PathBuilderMemory::Phase::Extend && s.blue_count() > 0) {
            EXPECT_LE(m.a, 1);
            EXPECT_EQ(m.b, 0);
            EXPECT_EQ(m.d, 0);
          }
        } else {
          e = bob.next_move(s);
        }
        s.place(e, color_of(mover));
        out = judge_last_move(s, finder);
      }
      ASSERT_EQ(out.value, Result::AliceWin) << "n=" << n << " seed=" << seed;
    }
  EXPECT_GT(case1, 0);
  EXPECT_GT(case3, 0);
}

TEST(PathBuilder, WinsAgainstEveryBaseline) {
  for (int n = 3; n <= 12; ++n) {
    const int order = n == 4 ? 5 : n;
    const GameConfig cfg{order, 1, 1, Mode::Strong, path_graph(n)};
    std::vector<std::unique_ptr<Strategy>> bobs;
    bobs.push_back(std::make_unique<GreedyDegreeBlocker>());
    bobs.push_back(std::make_unique<GreedyStar>());
    bobs.push_back(std::make_unique<GreedyExtender>());
    for (std::uint64_t seed = 0; seed < 50; ++seed) bobs.push_back(std::make_unique<RandomStrategy>(seed));
    for (auto& bob : bobs) {
      PathBuilder alice(cfg.target, order);
      const auto tr = play_match(alice, *bob, cfg);
      ASSERT_EQ(tr.outcome.value, Result::AliceWin) << "n=" << n << " vs " << bob->name();
      ASSERT_FALSE(tr.forfeit) << tr.forfeit->diagnostic;
    }
  }
}

TEST(Human, ReadsMovesAndRepromptsOnTypos) {
  std::istringstream in("hello\n1 1\n9 2\n1-2\n");
  std::ostringstream out;
  HumanStrategy h(in, out);
  auto s = board(4, 1, 1);
  EXPECT_EQ(h.next_move(s), Edge(0, 1));
  EXPECT_NE(out.str().find("enter two vertex numbers"), std::string::npos);
  EXPECT_NE(out.str().find("between 1 and 4"), std::string::npos);
  s.place(Edge(0, 1), Color::Blue);
  std::istringstream in2("2,1\n3 4\n");
  HumanStrategy h2(in2, out);
  EXPECT_EQ(h2.next_move(s), Edge(2, 3));
  EXPECT_THROW(h2.next_move(s), StrategyFailure);
}

TEST(Human, GridShowsColours) {
  auto s = board(3, 1, 1);
  s.place(Edge(0, 1), Color::Blue);
  s.place(Edge(1, 2), Color::Red);
  const auto g = board_grid(s);
  EXPECT_NE(g.find('B'), std::string::npos);
  EXPECT_NE(g.find('R'), std::string::npos);
  EXPECT_NE(g.find('.'), std::string::npos);
}
