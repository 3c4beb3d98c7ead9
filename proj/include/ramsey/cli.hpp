#ifndef RAMSEY_CLI_HPP
#define RAMSEY_CLI_HPP

// The `ramsey` command line. Exit codes: 0 solved / passed, 2 unsolved /
// skipped, 1 error or failed check.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/acceptance.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/report.hpp"
#include "ramsey/solver.hpp"
#include "ramsey/strategies.hpp"
#include "ramsey/strategies/human.hpp"

namespace ramsey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnsolved = 2;

inline TargetGraph complete_graph(int n) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) es.emplace_back(u, v);
  return TargetGraph(n, std::move(es));
}

/// A graph file, an inline edge list or bit string, or a name: Pn, Kn, K1,n, Sn.
inline TargetGraph resolve_target(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream f(spec);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_any_graph(ss.str());
  }
  std::smatch m;
  static const std::regex path_re(R"(P(\d+))"), star_re(R"((?:K1,|S)(\d+))"), complete_re(R"(K(\d+))");
  if (std::regex_match(spec, m, path_re)) return path_graph(std::stoi(m[1]));
  if (std::regex_match(spec, m, star_re)) return star_graph(std::stoi(m[1]));
  if (std::regex_match(spec, m, complete_re)) return complete_graph(std::stoi(m[1]));
  return parse_any_graph(spec);
}

inline Player parse_side(const std::string& s) {
  if (s == "alice") return Player::Alice;
  if (s == "bob") return Player::Bob;
  throw std::invalid_argument("side must be alice or bob");
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

/// Writes the report to `path`: CSV when the name ends in .csv, JSON otherwise.
inline void write_report(const RunReport& r, const std::string& path) {
  if (path.empty()) return;
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  write_file(path, csv ? report_csv(r) : serialize_report(r));
}

struct Common {
  int n = 0;
  int p = 1;
  int q = 1;
  std::string target;
  std::string mode = "strong";
  std::string out;
  bool json = false;
  int threads = 1;
};

inline void add_game_flags(CLI::App* cmd, Common& c, bool need_n) {
  auto* n = cmd->add_option("--n", c.n, "board order N");
  if (need_n) n->required();
  cmd->add_option("--p", c.p, "Alice's edges per round")->capture_default_str();
  cmd->add_option("--q", c.q, "Bob's edges per round")->capture_default_str();
  cmd->add_option("--target", c.target, "graph file, edge list, bit string, or Pn / Kn / K1,n")->required();
  cmd->add_option("--mode", c.mode, "strong or weak")->check(CLI::IsMember({"strong", "weak"}))->capture_default_str();
}

inline void add_output_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "write the report to FILE (.json or .csv)");
  cmd->add_flag("--json", c.json, "print the report as JSON");
}

inline std::string command_echo(int argc, const char* const* argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
  return s;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biased Ramsey achievement games: solve, play, verify, bound."};
  app.require_subcommand(1);
  Common c;
  std::uint64_t node_budget = 0;
  std::size_t table_limit = 0;
  bool no_table = false;
  int n_max = 0;
  std::string strategy, side = "alice", alice_name, bob_name, transcript_path, budget = "full", only, file;
  std::uint64_t seed = 0;
  double eps = 0.5;
  int disc_order = 0;
  std::int64_t star_n = 0;

  auto* solve_cmd = app.add_subcommand("solve", "exact value of the game on K_N");
  add_game_flags(solve_cmd, c, true);
  add_output_flags(solve_cmd, c);
  solve_cmd->add_option("--threads", c.threads, "worker threads")->capture_default_str();
  solve_cmd->add_option("--budget", node_budget, "node budget (0 = unlimited)");
  solve_cmd->add_option("--table-limit", table_limit, "maximum stored positions (0 = unlimited)");
  solve_cmd->add_flag("--no-table", no_table, "plain minimax without the transposition table");

  auto* anum_cmd = app.add_subcommand("anum", "achievement number: smallest N with an Alice win");
  add_game_flags(anum_cmd, c, false);
  add_output_flags(anum_cmd, c);
  anum_cmd->add_option("--max", n_max, "largest board order to solve")->required();
  anum_cmd->add_option("--threads", c.threads, "worker threads")->capture_default_str();
  anum_cmd->add_option("--budget", node_budget, "node budget per board (0 = unlimited)");

  auto* verify_cmd = app.add_subcommand("verify", "check a strategy against every opponent reply");
  add_game_flags(verify_cmd, c, true);
  add_output_flags(verify_cmd, c);
  verify_cmd->add_option("--strategy", strategy, "strategy name")->required();
  verify_cmd->add_option("--side", side, "alice or bob")->check(CLI::IsMember({"alice", "bob"}))->capture_default_str();
  verify_cmd->add_option("--eps", eps, "star-blocker epsilon")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "seed for randomised strategies");
  verify_cmd->add_option("--budget", node_budget, "position budget (0 = unlimited)");
  verify_cmd->add_option("--transcript", transcript_path, "write a counterexample transcript here");

  auto* play_cmd = app.add_subcommand("play", "play one match between two strategies");
  add_game_flags(play_cmd, c, true);
  add_output_flags(play_cmd, c);
  play_cmd->add_option("--alice", alice_name, "Alice's strategy (or human)")->required();
  play_cmd->add_option("--bob", bob_name, "Bob's strategy (or human)")->required();
  play_cmd->add_option("--seed", seed, "seed: Alice's random uses it, Bob's uses seed + 1");
  play_cmd->add_option("--eps", eps, "star-blocker epsilon")->capture_default_str();
  play_cmd->add_option("--transcript", transcript_path, "write the transcript here instead of stdout");

  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds");
  bounds_cmd->require_subcommand(1);
  auto* tree_cmd = bounds_cmd->add_subcommand("tree", "n <= a(p,q;T) <= n + q floor((n-2)/p)");
  tree_cmd->add_option("--n", star_n, "tree order")->required();
  tree_cmd->add_option("--p", c.p)->capture_default_str();
  tree_cmd->add_option("--q", c.q)->capture_default_str();
  auto* star_cmd = bounds_cmd->add_subcommand("star", "classical and biased star bounds");
  star_cmd->add_option("--n", star_n, "star parameter n")->required();
  star_cmd->add_option("--p", c.p)->capture_default_str();
  star_cmd->add_option("--q", c.q)->capture_default_str();
  star_cmd->add_option("--eps", eps)->capture_default_str();
  auto* disc_cmd = bounds_cmd->add_subcommand("discrepancy", "hypergraph balancing instance on K_N");
  disc_cmd->add_option("--N", disc_order, "board order")->required();
  disc_cmd->add_option("--n", star_n, "also certify a draw for K_{1,n-1}");
  for (auto* b : {tree_cmd, star_cmd, disc_cmd}) add_output_flags(b, c);

  auto* replay_cmd = app.add_subcommand("replay", "replay a transcript and confirm its outcome");
  replay_cmd->add_option("file", file, "transcript file")->required();
  add_output_flags(replay_cmd, c);

  auto* repro_cmd = app.add_subcommand("reproduce", "run the acceptance criteria");
  repro_cmd->add_option("--only", only, "comma-separated criterion ids, e.g. A1,A4");
  repro_cmd->add_option("--budget", budget, "low skips K6/K7 work")->check(CLI::IsMember({"low", "full"}))->capture_default_str();
  repro_cmd->add_option("--threads", c.threads, "worker threads")->capture_default_str();
  add_output_flags(repro_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.command = command_echo(argc, argv);
  int code = kExitOk;
  auto emit = [&] {
    report.wall_seconds = seconds_since(t0);
    if (c.json) out << serialize_report(report);
    write_report(report, c.out);
  };

  try {
    if (*solve_cmd) {
      const TargetGraph target = resolve_target(c.target);
      report.inputs = {{"N", c.n}, {"p", c.p}, {"q", c.q}, {"target", to_edge_list(target)}, {"mode", c.mode}};
      SolveOptions opt;
      opt.node_budget = node_budget;
      opt.table_limit = table_limit;
      opt.use_table = !no_table;
      opt.threads = c.threads;
      const SolveResult r = solve(c.n, c.p, c.q, target, parse_mode(c.mode), opt);
      report.results.push_back(solve_record(r));
      report.nodes = r.nodes_expanded;
      out << "K" << c.n << " " << to_edge_list(target) << " " << c.mode << " (" << c.p << "," << c.q
          << "): " << (r.solved() ? std::string(to_string(r.outcome)) : "unsolved (" + r.diagnostic + ")") << "  nodes "
          << r.nodes_expanded << ", table hits " << r.table_hits << "\n";
      if (!r.pv.empty()) {
        out << "pv:";
        for (const auto& m : format_moves(r.pv)) out << " " << m;
        out << "\n";
      }
      code = r.solved() ? kExitOk : kExitUnsolved;
    } else if (*anum_cmd) {
      const TargetGraph target = resolve_target(c.target);
      report.inputs = {{"target", to_edge_list(target)}, {"p", c.p}, {"q", c.q}, {"mode", c.mode}, {"max", n_max}};
      SolveOptions opt;
      opt.node_budget = node_budget;
      opt.threads = c.threads;
      opt.want_pv = false;
      const auto rep = achievement_number(target, c.p, c.q, parse_mode(c.mode), n_max, opt);
      for (const auto& [n, r] : rep.per_order) {
        auto row = solve_record(r);
        row.erase("pv");
        row["N"] = n;
        report.results.push_back(row);
        report.nodes += r.nodes_expanded;
        out << "K" << n << ": " << (r.solved() ? std::string(to_string(r.outcome)) : "unsolved") << "\n";
      }
      report.results.push_back({{"achievement_number", rep.value ? nlohmann::json(*rep.value) : nlohmann::json(nullptr)}});
      out << "achievement number: "
          << (rep.value ? std::to_string(*rep.value) : rep.diagnostic.empty() ? "none up to " + std::to_string(n_max) : "unknown")
          << "\n";
      if (!rep.diagnostic.empty()) err << rep.diagnostic;
      code = rep.diagnostic.empty() ? kExitOk : kExitUnsolved;
    } else if (*verify_cmd) {
      const TargetGraph target = resolve_target(c.target);
      const GameConfig cfg{c.n, c.p, c.q, parse_mode(c.mode), target};
      report.inputs = {{"strategy", strategy}, {"side", side}, {"N", c.n}, {"p", c.p}, {"q", c.q},
                       {"target", to_edge_list(target)}, {"mode", c.mode}};
      auto strat = make_strategy(strategy, StrategyContext{cfg, eps, seed});
      const VerifyResult v = verify_strategy(*strat, parse_side(side), cfg, VerifyOptions{node_budget});
      nlohmann::json row{{"verdict", to_string(v.verdict)}, {"nodes", v.nodes}, {"lines", v.leaves}};
      if (v.counterexample) {
        const std::string text = serialize_transcript(*v.counterexample);
        row["counterexample"] = text;
        if (!transcript_path.empty()) write_file(transcript_path, text);
      }
      report.results.push_back(row);
      report.nodes = v.nodes;
      out << strategy << " as " << side << " on K" << c.n << ": " << to_string(v.verdict) << " (" << v.leaves
          << " complete lines)\n";
      if (v.counterexample && transcript_path.empty()) out << serialize_transcript(*v.counterexample);
      code = v.verdict == Verdict::Verified ? kExitOk : v.verdict == Verdict::Unsolved ? kExitUnsolved : kExitError;
    } else if (*play_cmd) {
      const TargetGraph target = resolve_target(c.target);
      const GameConfig cfg{c.n, c.p, c.q, parse_mode(c.mode), target};
      report.inputs = {{"alice", alice_name}, {"bob", bob_name}, {"N", c.n},     {"p", c.p},
                       {"q", c.q},            {"seed", seed},     {"mode", c.mode}, {"target", to_edge_list(target)}};
      auto build = [&](const std::string& name, std::uint64_t s) -> std::unique_ptr<Strategy> {
        if (name == "human") return std::make_unique<HumanStrategy>(in, out);
        return make_strategy(name, StrategyContext{cfg, eps, s});
      };
      auto alice = build(alice_name, seed);
      auto bob = build(bob_name, seed + 1);
      const MatchTranscript tr = play_match(*alice, *bob, cfg);
      const std::string text = serialize_transcript(tr);
      if (transcript_path.empty()) out << text;
      else write_file(transcript_path, text);
      nlohmann::json row{{"outcome", to_string(tr.outcome.value)}, {"moves", tr.moves.size()}};
      if (tr.forfeit) row["forfeit"] = std::string(to_string(tr.forfeit->by)) + ": " + tr.forfeit->diagnostic;
      report.results.push_back(row);
      if (!transcript_path.empty()) out << "outcome: " << to_string(tr.outcome.value) << "\n";
    } else if (*tree_cmd) {
      const auto b = tree_bounds(star_n, c.p, c.q);
      report.inputs = {{"n", star_n}, {"p", c.p}, {"q", c.q}};
      report.results.push_back({{"bound", "tree"}, {"lower", b.lower}, {"upper", b.upper}});
      out << b.lower << " <= a(" << c.p << "," << c.q << ";T) <= " << b.upper << "\n";
    } else if (*star_cmd) {
      report.inputs = {{"n", star_n}, {"p", c.p}, {"q", c.q}, {"eps", eps}};
      if (star_n >= 3) {
        const auto b = star_bounds_classical(star_n);
        report.results.push_back({{"bound", "classical star K_{1,n-1}"}, {"lower", b.lower}, {"upper", b.upper}});
        out << std::setprecision(15) << b.lower << " <= a(K_1," << star_n - 1 << ") <= " << b.upper << "\n";
      }
      const auto lb = star_lower_bound_biased(star_n, c.p, c.q, eps);
      report.results.push_back({{"bound", "biased star K_{1,n}"},
                                {"lower", lb.bound},
                                {"alpha", lb.alpha},
                                {"n0", lb.n0},
                                {"applicable", lb.applicable}});
      out << std::setprecision(15) << "a*(" << c.p << "," << c.q << ";K_1," << star_n << ") >= " << lb.bound
          << (lb.applicable ? "" : " (not proven: n < n0)") << "  alpha " << lb.alpha << ", n0 " << lb.n0 << "\n";
    } else if (*disc_cmd) {
      const auto inst = build_discrepancy_instance(disc_order);
      const auto bc = check_balancer_condition(inst);
      std::vector<std::string> removed;
      for (const Edge& e : inst.removed) removed.push_back(to_string(e));
      std::vector<std::size_t> sizes;
      for (const auto& h : inst.hyperedges) sizes.push_back(h.size());
      report.inputs = {{"N", disc_order}};
      nlohmann::json row{{"elements", inst.elements.size()}, {"removed", removed},       {"hyperedge_sizes", sizes},
                         {"targets", inst.targets},          {"balancer_sum", bc.sum}, {"balancer_holds", bc.holds}};
      if (star_n > 0) {
        report.inputs["n"] = star_n;
        const auto cert = draw_degree_bound(disc_order, star_n, inst);
        row["draw_certified"] = cert.draw_certified;
        row["max_colour_degree_bound"] = cert.worst_degree;
      }
      report.results.push_back(row);
      out << "|V(H)| = " << inst.elements.size() << ", balancer sum " << std::setprecision(15) << bc.sum
          << (bc.holds ? " (holds)" : " (fails)");
      if (star_n > 0) out << ", draw " << (row["draw_certified"].get<bool>() ? "certified" : "not certified");
      out << "\n";
    } else if (*replay_cmd) {
      std::ifstream f(file);
      if (!f) throw std::runtime_error("cannot read " + file);
      std::stringstream ss;
      ss << f.rdbuf();
      const MatchTranscript tr = parse_transcript(ss.str());
      const bool same = replay_matches(tr);
      report.inputs = {{"file", file}};
      report.results.push_back({{"outcome", to_string(tr.outcome.value)}, {"replay_matches", same}});
      out << "recorded " << to_string(tr.outcome.value) << ", replay " << (same ? "agrees" : "DISAGREES") << "\n";
      code = same ? kExitOk : kExitError;
    } else if (*repro_cmd) {
      acceptance::SuiteOptions so;
      so.budget = budget == "low" ? acceptance::Budget::Low : acceptance::Budget::Full;
      so.threads = c.threads;
      std::stringstream ids(only);
      for (std::string id; std::getline(ids, id, ',');)
        if (!id.empty()) so.only.push_back(id);
      report.inputs = {{"budget", budget}, {"only", so.only}};
      const auto results = acceptance::run_suite(so, [&](const acceptance::CriterionResult& r) {
        out << acceptance::format_line(r) << std::endl;
      });
      for (const auto& r : results)
        report.results.push_back({{"id", r.id}, {"status", acceptance::to_string(r.status)}, {"detail", r.detail}});
      code = acceptance::exit_code(results);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  emit();
  return code;
}

}  // namespace ramsey::cli

#endif  // RAMSEY_CLI_HPP
