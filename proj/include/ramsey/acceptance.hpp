#ifndef RAMSEY_ACCEPTANCE_HPP
#define RAMSEY_ACCEPTANCE_HPP

// The reproduction suite: criteria A1-A10, each returning PASS, FAIL or
// SKIPPED with a one-line detail. Shared by the acceptance test binary and
// the `reproduce` command.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/bounds.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/enumerate.hpp"
#include "ramsey/oracles.hpp"
#include "ramsey/potential.hpp"
#include "ramsey/solver.hpp"
#include "ramsey/strategies.hpp"

namespace ramsey::acceptance {

enum class Status { Pass, Fail, Skipped };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    default: return "SKIPPED";
  }
}

enum class Budget { Low, Full };

struct SuiteOptions {
  Budget budget = Budget::Full;
  std::vector<std::string> only;  // empty = every criterion
  int threads = 1;
};

struct CriterionResult {
  std::string id;
  Status status = Status::Fail;
  std::string detail;
  double seconds = 0;
};

namespace detail {

class Timer {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Collects failures; the criterion passes when none were recorded.
struct Check {
  std::vector<std::string> failures;
  std::ostringstream info;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  CriterionResult finish(std::string id, const Timer& t, double limit_seconds = 0) {
    CriterionResult r;
    r.id = std::move(id);
    r.seconds = t.seconds();
    if (limit_seconds > 0 && r.seconds >= limit_seconds)
      failures.push_back("took " + std::to_string(r.seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
    r.status = failures.empty() ? Status::Pass : Status::Fail;
    r.detail = info.str();
    if (!failures.empty()) {
      std::string joined;
      const std::size_t shown = std::min<std::size_t>(failures.size(), 3);
      for (std::size_t i = 0; i < shown; ++i) joined += (i ? "; " : "") + failures[i];
      if (failures.size() > shown) joined += "; ... " + std::to_string(failures.size()) + " failures in total";
      r.detail = joined + (r.detail.empty() ? "" : " | " + r.detail);
    }
    return r;
  }
};

inline CriterionResult skipped(std::string id, std::string why) { return {std::move(id), Status::Skipped, std::move(why), 0}; }

inline std::string value_or_dash(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

inline SolveOptions solve_options(const SuiteOptions& o) {
  SolveOptions s;
  s.threads = o.threads;
  s.want_pv = false;
  return s;
}

// The subtree on the first i + 1 vertices of the DFS order, relabelled 0..i.
inline TargetGraph dfs_prefix(const TargetGraph& tree, const DfsOrder& dfs, int i) {
  std::vector<int> label(tree.vertex_count(), -1);
  for (int k = 0; k <= i; ++k) label[dfs.order[k]] = k;
  std::vector<Edge> edges;
  for (int k = 1; k <= i; ++k) edges.emplace_back(label[dfs.order[k]], label[dfs.parent[dfs.order[k]]]);
  return TargetGraph(i + 1, std::move(edges));
}

// Canonical code of the graph formed by the blue edges, on the vertices they
// touch. Only meaningful for at most eight such vertices.
inline std::optional<std::uint64_t> blue_graph_code(const BoardState& s) {
  std::vector<int> label(s.order(), -1);
  int k = 0;
  std::vector<Edge> blue;
  for (const Move& m : s.move_log()) {
    if (m.color != Color::Blue) continue;
    for (int x : {m.edge.u, m.edge.v})
      if (label[x] < 0) label[x] = k++;
    blue.emplace_back(label[m.edge.u], label[m.edge.v]);
  }
  if (k > kCanonicalMaxOrder || k < 1) return std::nullopt;
  PackedBoard pb{k, 0, 0};
  for (const Edge& e : blue) pb.blue |= 1u << edge_index(e);
  return canonical_code(pb);
}

inline std::uint64_t graph_code(const TargetGraph& g) {
  PackedBoard pb{g.vertex_count(), 0, 0};
  for (const Edge& e : g.edges()) pb.blue |= 1u << edge_index(e);
  return canonical_code(pb);
}

inline std::vector<TargetGraph> trees_up_to(int n_max) {
  std::vector<TargetGraph> out;
  for (int n = 2; n <= n_max; ++n)
    for (auto& t : nonisomorphic_trees(n)) out.push_back(std::move(t));
  return out;
}

}  // namespace detail

// A1: a(P3) = 3, a(P4) = 5, a(P5) = 5, a(K_{1,3}) = 5 in the strong (1,1) game.
inline CriterionResult criterion_a1(const SuiteOptions& o) {
  detail::Timer t;
  detail::Check c;
  const int n_max = o.budget == Budget::Low ? 5 : 6;
  const std::vector<std::tuple<std::string, TargetGraph, int>> cases{
      {"P3", path_graph(3), 3}, {"P4", path_graph(4), 5}, {"P5", path_graph(5), 5}, {"K1,3", star_graph(3), 5}};
  for (const auto& [name, g, want] : cases) {
    const auto rep = achievement_number(g, 1, 1, Mode::Strong, n_max, detail::solve_options(o));
    c.info << "a(" << name << ")=" << detail::value_or_dash(rep.value) << " ";
    c.expect(rep.value == want, "a(" + name + ") expected " + std::to_string(want));
  }
  c.info << "(N<=" << n_max << ")";
  return c.finish("A1", t, 60);
}

// A2: a(P6) = 6.
inline CriterionResult criterion_a2(const SuiteOptions& o) {
  if (o.budget == Budget::Low) return detail::skipped("A2", "K6 solve skipped at low budget");
  detail::Timer t;
  detail::Check c;
  const auto p6 = path_graph(6);
  const auto r6 = solve(6, 1, 1, p6, Mode::Strong, detail::solve_options(o));
  const auto r5 = solve(5, 1, 1, p6, Mode::Strong, detail::solve_options(o));
  c.expect(r6.solved() && r6.outcome == Result::AliceWin, "K6 is not AliceWin");
  c.expect(r5.solved() && r5.outcome != Result::AliceWin && r5.nodes_expanded == 0, "K5 not rejected by size");
  const auto rep = achievement_number(p6, 1, 1, Mode::Strong, 6, detail::solve_options(o));
  c.expect(rep.value == 6, "a(P6) expected 6");
  c.info << "K6:" << ramsey::to_string(r6.outcome) << " (" << r6.nodes_expanded << " nodes, " << r6.table_hits
         << " hits) K5:" << ramsey::to_string(r5.outcome) << " (" << r5.diagnostic << ") a(P6)="
         << detail::value_or_dash(rep.value);
  return c.finish("A2", t, 1800);
}

// A3: a*(P5) = 5, a*(P6) = 6, and a* <= a on the targets of A1-A2.
inline CriterionResult criterion_a3(const SuiteOptions& o) {
  if (o.budget == Budget::Low) return detail::skipped("A3", "K6 weak solves skipped at low budget");
  detail::Timer t;
  detail::Check c;
  const std::vector<std::pair<std::string, TargetGraph>> targets{
      {"P3", path_graph(3)}, {"P4", path_graph(4)}, {"P5", path_graph(5)}, {"K1,3", star_graph(3)}, {"P6", path_graph(6)}};
  for (const auto& [name, g] : targets) {
    const auto rep = cross_check_weak_vs_strong(g, 1, 1, 6, detail::solve_options(o));
    c.info << name << ":a*=" << detail::value_or_dash(rep.weak.value) << ",a=" << detail::value_or_dash(rep.strong.value)
           << " ";
    c.expect(rep.consistent, name + ": " + rep.diagnostic);
    c.expect(rep.weak.value.has_value() && rep.strong.value.has_value(), name + ": unsolved");
    if (name == "P5") c.expect(rep.weak.value == 5, "a*(P5) expected 5");
    if (name == "P6") c.expect(rep.weak.value == 6, "a*(P6) expected 6");
  }
  return c.finish("A3", t, 1800);
}

// A4: path-builder wins every line on K6 (P6) and K7 (P7).
inline CriterionResult criterion_a4(const SuiteOptions& o) {
  if (o.budget == Budget::Low) return detail::skipped("A4", "K6/K7 verification skipped at low budget");
  detail::Timer t;
  detail::Check c;
  for (int n : {6, 7}) {
    const GameConfig cfg{n, 1, 1, Mode::Strong, path_graph(n)};
    const auto v = verify_strategy(PathBuilder(cfg.target, n), Player::Alice, cfg);
    c.info << "K" << n << ":" << ramsey::to_string(v.verdict) << " (" << v.leaves << " lines) ";
    c.expect(v.verdict == Verdict::Verified,
             "K" + std::to_string(n) + " " + std::string(ramsey::to_string(v.verdict)) +
                 (v.counterexample && v.counterexample->forfeit ? ": " + v.counterexample->forfeit->diagnostic : ""));
  }
  return c.finish("A4", t, 600);
}

// A5: tree-builder wins every line for every tree of order <= 5.
inline CriterionResult criterion_a5(const SuiteOptions&) {
  detail::Timer t;
  detail::Check c;
  int verified = 0, total = 0;
  for (const auto& tree : detail::trees_up_to(5)) {
    for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}}) {
      const int n = tree.vertex_count();
      const GameConfig cfg{tree_builder_board(n, p, q), p, q, Mode::Strong, tree};
      const auto v = verify_strategy(TreeBuilder(tree), Player::Alice, cfg);
      ++total;
      if (v.verdict == Verdict::Verified) ++verified;
      c.expect(v.verdict == Verdict::Verified, to_edge_list(tree) + " (p,q)=(" + std::to_string(p) + "," +
                                                   std::to_string(q) + ") " + std::string(ramsey::to_string(v.verdict)));
    }
  }
  c.info << verified << "/" << total << " (tree, p, q) configurations verified";
  return c.finish("A5", t, 600);
}

// A6: after Alice's i-th edge her blue graph is the DFS prefix tree T_i.
inline CriterionResult criterion_a6(const SuiteOptions&) {
  detail::Timer t;
  detail::Check c;
  constexpr int kMatches = 10000;
  std::uint64_t matches = 0, checks = 0, violations = 0;
  int config_no = 0;
  for (const auto& tree : detail::trees_up_to(6)) {
    const DfsOrder dfs = dfs_order(tree);
    std::vector<std::uint64_t> prefix_code(tree.vertex_count());
    for (int i = 1; i < tree.vertex_count(); ++i) prefix_code[i] = detail::graph_code(detail::dfs_prefix(tree, dfs, i));
    for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}}) {
      ++config_no;
      const GameConfig cfg{tree_builder_board(tree.vertex_count(), p, q), p, q, Mode::Strong, tree};
      for (int k = 0; k < kMatches; ++k) {
        TreeBuilder alice(tree);
        RandomStrategy bob(static_cast<std::uint64_t>(config_no) * 1000003u + static_cast<std::uint64_t>(k));
        bool bad = false;
        const auto tr = play_match(alice, bob, cfg, [&](const BoardState& s, const GameOutcome&) {
          if (s.move_log().back().color != Color::Blue) return;
          const int i = s.blue_count();
          ++checks;
          if (i >= tree.vertex_count() || detail::blue_graph_code(s) != prefix_code[i]) bad = true;
        });
        ++matches;
        if (bad || tr.outcome.value != Result::AliceWin) {
          ++violations;
          c.expect(false, to_edge_list(tree) + " seed " + std::to_string(k) + ": " + std::string(ramsey::to_string(tr.outcome.value)));
        }
      }
    }
  }
  c.info << matches << " matches, " << checks << " prefix checks, " << violations << " violations";
  return c.finish("A6", t);
}

// Watches a star-blocker match and checks the potential claims at every
// round boundary. Works only from the board; it does not look inside Bob.
class PotentialMonitor {
public:
  PotentialMonitor(const BlockerParams& bp, int order) : bp_(bp), order_(order) {
    last_sum_ = order;  // every potential starts at 1
    log_bound_ = std::log(static_cast<double>(order)) / std::log(bp.alpha) + bp.p + kSlack;
  }

  static constexpr double kSlack = 1e-9;

  void observe(const BoardState& s) {
    const Move& m = s.move_log().back();
    const Turn next = s.whose_turn();
    if (m.color == Color::Blue) {
      ++alice_in_round_;
      const bool block_done = s.full() || next.player == Player::Bob;
      if (block_done) {
        // Bob is about to start: record the vertex of largest potential.
        w_ = argmax(s);
        bob_in_round_ = bob_at_w_ = 0;
        check_exponents(s);
      }
      return;
    }
    ++bob_in_round_;
    if (w_ >= 0 && m.edge.touches(w_)) ++bob_at_w_;
    if (s.full() || next.player == Player::Alice) {
      const double sum = potential_sum(s, bp_);
      const bool qualifies = alice_in_round_ == bp_.p && bob_in_round_ == bp_.q && bob_at_w_ == bp_.q;
      if (qualifies) {
        ++qualifying_;
        // the drop has to clear the slack, not just stay flat
        if (!(sum < last_sum_ - kSlack)) fail("potential sum did not drop: " + fmt(last_sum_) + " to " + fmt(sum));
      } else {
        ++excluded_;
        history_clean_ = false;
      }
      if (history_clean_) {
        if (!(sum <= order_ + kSlack)) fail("potential sum " + fmt(sum) + " above N");
        for (int v = 0; v < s.order(); ++v)
          if (!(potential_phi(s, v, bp_) <= order_ + kSlack)) fail("phi above N at vertex " + std::to_string(v + 1));
        check_exponents(s);
      }
      last_sum_ = sum;
      alice_in_round_ = 0;
    }
  }

  int qualifying_rounds() const { return qualifying_; }
  int excluded_rounds() const { return excluded_; }
  const std::vector<std::string>& violations() const { return violations_; }

private:
  int argmax(const BoardState& s) const {
    int best = 0;
    double best_phi = -1;
    for (int v = 0; v < s.order(); ++v) {
      const double phi = potential_phi(s, v, bp_);
      if (phi > best_phi) {
        best_phi = phi;
        best = v;
      }
    }
    return best;
  }

  void check_exponents(const BoardState& s) {
    if (!history_clean_) return;
    for (int v = 0; v < s.order(); ++v) {
      const double x = s.blue_degree(v) - bp_.beta * s.red_degree(v);
      if (!(x <= log_bound_)) fail("d_B - beta d_R = " + fmt(x) + " above log_alpha N + p at vertex " + std::to_string(v + 1));
    }
  }

  static std::string fmt(double x) {
    std::ostringstream o;
    o << std::setprecision(12) << x;
    return o.str();
  }
  void fail(std::string what) { violations_.push_back(std::move(what)); }

  BlockerParams bp_;
  int order_;
  double last_sum_;
  double log_bound_;
  int w_ = -1;
  int alice_in_round_ = 0, bob_in_round_ = 0, bob_at_w_ = 0;
  int qualifying_ = 0, excluded_ = 0;
  bool history_clean_ = true;
  std::vector<std::string> violations_;
};

// A7: potential claims hold across star-blocker matches.
inline CriterionResult criterion_a7(const SuiteOptions&) {
  detail::Timer t;
  detail::Check c;
  constexpr double kEps = 0.25;
  long qualifying = 0, excluded = 0, violations = 0, matches = 0;
  for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
    const BlockerParams bp = make_blocker_params(p, q, kEps);
    for (const std::string alice_kind : {"random", "greedy-star"}) {
      for (int seed = 0; seed < 100; ++seed) {
        const int order = 10 + seed % 21;
        const GameConfig cfg{order, p, q, Mode::Weak, star_graph(order - 1)};
        std::unique_ptr<Strategy> alice;
        if (alice_kind == "random") alice = std::make_unique<RandomStrategy>(static_cast<std::uint64_t>(seed) * 7919u + 17u);
        else alice = std::make_unique<GreedyStar>();
        StarBlocker bob(bp);
        PotentialMonitor mon(bp, order);
        const auto tr = play_match(*alice, bob, cfg, [&](const BoardState& s, const GameOutcome&) { mon.observe(s); });
        ++matches;
        qualifying += mon.qualifying_rounds();
        excluded += mon.excluded_rounds();
        for (const auto& v : mon.violations()) {
          ++violations;
          c.expect(false, "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ") " + alice_kind + " N=" +
                              std::to_string(order) + ": " + v);
        }
        if (tr.forfeit) c.expect(false, "forfeit: " + tr.forfeit->diagnostic);
      }
    }
  }
  c.info << matches << " matches, " << qualifying << " qualifying rounds, " << excluded << " excluded, " << violations
         << " violations";
  return c.finish("A7", t);
}

// A8: closed forms against 50-digit evaluation.
inline CriterionResult criterion_a8(const SuiteOptions&) {
  detail::Timer t;
  detail::Check c;
  using oracle::HighPrecision;
  constexpr double kRel = 1e-12;
  double worst = 0;
  auto rel_err = [](double got, const HighPrecision& want) {
    const HighPrecision d = abs(HighPrecision(got) - want) / abs(want);
    return d.convert_to<double>();
  };

  for (std::int64_t n = 2; n <= 10000; ++n) {
    for (int p = 1; p <= 4; ++p)
      for (int q = 1; q <= p; ++q) {
        const auto tb = tree_bounds(n, p, q);
        c.expect(tb.lower == n && tb.upper == n + q * ((n - 2) / p), "tree_bounds(" + std::to_string(n) + ")");
        if (p == 1 && q == 1) c.expect(tb.upper == 2 * n - 2, "tree upper bound is not 2n - 2");
      }
    if (n >= 3) {
      const auto sb = star_bounds_classical(n);
      const double e = rel_err(sb.lower, oracle::star_lower_classical(n));
      worst = std::max(worst, e);
      c.expect(e <= kRel, "star_bounds_classical(" + std::to_string(n) + ")");
      c.expect(sb.upper == static_cast<double>(2 * n - 2), "classical star upper");
    }
  }

  const std::vector<std::tuple<int, int, double>> params{{1, 1, 0.5},  {1, 1, 0.25}, {1, 1, 0.1}, {2, 1, 1.0},
                                                         {2, 1, 0.1},  {2, 2, 0.25}, {3, 1, 0.5}, {3, 2, 0.2},
                                                         {4, 3, 0.05}, {4, 4, 0.3}};
  for (const auto& [p, q, eps] : params) {
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(eps) + ")";
    c.expect(alpha_condition(p, q, eps, 1.0L) == 0.0L, "f(1) != 0 for " + tag);
    c.expect(oracle::alpha_condition(p, HighPrecision(eps), HighPrecision(1)) == 0, "oracle f(1) != 0 for " + tag);
    const double alpha = choose_alpha(p, q, eps);
    const HighPrecision hp_eps(eps);
    c.expect(oracle::alpha_condition(p, hp_eps, HighPrecision(alpha)) < HighPrecision(-1e-9), "alpha fails f < 0 " + tag);
    const HighPrecision next = HighPrecision(alpha) + HighPrecision(1) / HighPrecision(1 << 20);
    c.expect(!(oracle::alpha_condition(p, hp_eps, next) < HighPrecision(-1e-9)) || next > 4, "alpha not largest " + tag);
    const std::int64_t n0 = compute_n0(p, q, eps, alpha);
    c.expect(oracle::n0_slack(p, q, hp_eps, HighPrecision(alpha), n0) >= 0, "n0 fails " + tag);
    if (n0 > 1) c.expect(oracle::n0_slack(p, q, hp_eps, HighPrecision(alpha), n0 - 1) < 0, "n0 not smallest " + tag);
    for (std::int64_t n = n0; n < n0 + 2000; ++n)
      if (!(oracle::n0_slack(p, q, hp_eps, HighPrecision(alpha), n) >= 0)) {
        c.expect(false, "slack negative past n0 at " + std::to_string(n) + " " + tag);
        break;
      }
    for (std::int64_t n = 1; n <= 10000; n += (n < 100 ? 1 : 37)) {
      const auto lb = star_lower_bound_biased(n, p, q, eps);
      const HighPrecision want = (1 + HighPrecision(q) / (2 * p) - hp_eps) * n;
      const double e = rel_err(lb.bound, want);
      worst = std::max(worst, e);
      c.expect(e <= kRel, "star_lower_bound_biased n=" + std::to_string(n) + " " + tag);
      c.expect(lb.n0 == n0 && lb.applicable == (n >= n0), "n0 mismatch " + tag);
    }
  }
  c.info << "worst relative error " << std::setprecision(3) << worst;
  return c.finish("A8", t);
}

// A9: discrepancy instances for 4 <= N <= 200 and the n = 100 draw certificate.
inline CriterionResult criterion_a9(const SuiteOptions&) {
  detail::Timer t;
  detail::Check c;
  double worst = 0;
  for (int order = 4; order <= 200; ++order) {
    const auto inst = build_discrepancy_instance(order);
    const auto tag = "N=" + std::to_string(order);
    c.expect(inst.elements.size() % 2 == 0, tag + ": odd board");
    c.expect(inst.elements.size() + inst.removed.size() == static_cast<std::size_t>(pair_count(order)), tag + ": size");
    std::size_t total = 0;
    for (int v = 0; v < order; ++v) {
      int removed_here = 0;
      for (const Edge& e : inst.removed) removed_here += e.touches(v);
      c.expect(inst.hyperedges[v].size() == static_cast<std::size_t>(order - 1 - removed_here), tag + ": hyperedge size");
      total += inst.hyperedges[v].size();
    }
    c.expect(total == 2 * inst.elements.size(), tag + ": sizes do not sum to 2|V(H)|");
    const auto bc = check_balancer_condition(inst);
    worst = std::max(worst, std::abs(bc.sum - 0.5));
    c.expect(bc.holds && std::abs(bc.sum - 0.5) <= 1e-12, tag + ": balancer sum " + std::to_string(bc.sum));
  }
  const auto cd = classical_draw_orders(100);
  c.expect(cd.floor_certified, "no draw certificate at N=" + std::to_string(cd.floor_order));
  const auto big = draw_degree_bound(198, 100, build_discrepancy_instance(198));
  c.expect(!big.draw_certified, "N=2n-2 wrongly certified");
  c.info << "max |sum - 1/2| = " << std::setprecision(3) << worst << "; n=100: N=" << cd.floor_order << " ("
         << (cd.floor_certified ? "certified" : "rejected") << "), N=" << cd.ceil_order << " ("
         << (cd.ceil_certified ? "certified" : "rejected") << "), N=198 " << (big.draw_certified ? "certified" : "rejected");
  return c.finish("A9", t);
}

// A10: copy detection against brute force, canonical form against relabelling.
inline CriterionResult criterion_a10(const SuiteOptions&) {
  detail::Timer t;
  detail::Check c;
  std::mt19937_64 rng(20240601);
  std::uint64_t comparisons = 0, disagreements = 0;
  std::vector<TargetGraph> targets;
  for (int n = 2; n <= 5; ++n)
    for (auto& g : nonisomorphic_graphs(n)) targets.push_back(std::move(g));
  auto random_board = [&](int order, const TargetGraph& target) {
    BoardState s(GameConfig{order, 1, 1, Mode::Strong, target});
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < s.edge_total(); ++i) {
      const int k = pick(rng);
      if (k) s.place(edge_at(i), k == 1 ? Color::Blue : Color::Red);
    }
    return s;
  };
  for (const auto& target : targets) {
    for (int order = 2; order <= 6; ++order) {
      for (int k = 0; k < 500; ++k) {
        const BoardState s = random_board(order, target);
        for (Color col : {Color::Blue, Color::Red}) {
          const auto emb = contains_copy(s, target, col);
          const bool want = oracle::injection_contains(s, target, col);
          ++comparisons;
          if (emb.has_value() != want || (emb && !embedding_valid(s, target, *emb, col))) {
            ++disagreements;
            c.expect(false, "copy search disagrees for " + to_edge_list(target) + " on K" + std::to_string(order));
          }
        }
      }
    }
  }
  std::uint64_t perms = 0, mismatches = 0;
  for (int k = 0; k < 100; ++k) {
    const int order = 2 + static_cast<int>(rng() % 7);
    const BoardState s = random_board(order, path_graph(2));
    const PackedBoard pb = pack(s);
    const std::uint64_t code = canonical_code(pb);
    std::vector<int> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    for (int j = 0; j < 20; ++j) {
      std::shuffle(perm.begin(), perm.end(), rng);
      ++perms;
      if (canonical_code(permuted(pb, perm)) != code) {
        ++mismatches;
        c.expect(false, "canonical code changed under relabelling on K" + std::to_string(order));
      }
    }
  }
  c.info << comparisons << " copy checks over " << targets.size() << " targets, " << disagreements
         << " disagreements; " << perms << " relabellings, " << mismatches << " mismatches";
  return c.finish("A10", t);
}

inline const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10"};
  return ids;
}

inline CriterionResult run_criterion(const std::string& id, const SuiteOptions& o) {
  static const std::map<std::string, std::function<CriterionResult(const SuiteOptions&)>> table{
      {"A1", criterion_a1}, {"A2", criterion_a2}, {"A3", criterion_a3}, {"A4", criterion_a4}, {"A5", criterion_a5},
      {"A6", criterion_a6}, {"A7", criterion_a7}, {"A8", criterion_a8}, {"A9", criterion_a9}, {"A10", criterion_a10}};
  auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown criterion '" + id + "'");
  try {
    return it->second(o);
  } catch (const std::exception& e) {
    return {id, Status::Fail, std::string("exception: ") + e.what(), 0};
  }
}

/// Runs the selected criteria in order, calling `each` as results arrive.
inline std::vector<CriterionResult> run_suite(const SuiteOptions& o,
                                              const std::function<void(const CriterionResult&)>& each = {}) {
  for (const auto& id : o.only)
    if (std::find(criterion_ids().begin(), criterion_ids().end(), id) == criterion_ids().end())
      throw std::invalid_argument("unknown criterion '" + id + "'");
  std::vector<CriterionResult> out;
  for (const auto& id : criterion_ids()) {
    if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), id) == o.only.end()) continue;
    out.push_back(run_criterion(id, o));
    if (each) each(out.back());
  }
  return out;
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream o;
  o << std::left << std::setw(4) << r.id << " " << std::setw(7) << to_string(r.status) << " " << r.detail << " ["
    << std::fixed << std::setprecision(2) << r.seconds << " s]";
  return o.str();
}

/// 1 if anything failed, else 2 if anything was skipped, else 0.
inline int exit_code(const std::vector<CriterionResult>& results) {
  bool skipped = false;
  for (const auto& r : results) {
    if (r.status == Status::Fail) return 1;
    if (r.status == Status::Skipped) skipped = true;
  }
  return skipped ? 2 : 0;
}

}  // namespace ramsey::acceptance

#endif  // RAMSEY_ACCEPTANCE_HPP
