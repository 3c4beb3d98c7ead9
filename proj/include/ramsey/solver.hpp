#ifndef RAMSEY_SOLVER_HPP
#define RAMSEY_SOLVER_HPP

// Exact minimax over the (p,q) achievement game on K_N, N <= 8.
//
// Positions are keyed by the canonical code of the coloured board. The side
// to move is a function of the colour counts, so the key needs nothing else.
// A node stops early only once the mover has reached its best possible
// value, so every stored entry is the exact game value.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "ramsey/board.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/copy_search.hpp"
#include "ramsey/game.hpp"

namespace ramsey {

enum class SolveStatus : std::uint8_t { Solved, Unsolved };

struct SolveOptions {
  std::uint64_t node_budget = 0;  // expanded positions before giving up; 0 = no limit
  std::size_t table_limit = 0;    // stored positions; 0 = no limit
  bool use_table = true;          // false: plain minimax, no canonical codes at all
  int threads = 1;
  bool want_pv = true;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsolved;
  Result outcome = Result::Ongoing;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t table_hits = 0;
  std::vector<Move> pv;
  std::string diagnostic;

  bool solved() const { return status == SolveStatus::Solved; }
};

/// Alice's preference: AliceWin > Draw > BobWin.
constexpr int alice_rank(Result r) {
  switch (r) {
    case Result::AliceWin: return 2;
    case Result::Draw: return 1;
    default: return 0;
  }
}

/// Canonical code -> exact value. Safe for concurrent use; a second write of
/// a key must carry the same value.
class TranspositionTable {
public:
  explicit TranspositionTable(std::size_t limit = 0) : limit_(limit) {}

  std::optional<Result> lookup(std::uint64_t key) const {
    const Shard& s = shard(key);
    std::shared_lock lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  void store(std::uint64_t key, Result value) {
    Shard& s = shard(key);
    std::unique_lock lock(s.mu);
    auto it = s.map.find(key);
    if (it != s.map.end()) {
      if (it->second != value) throw std::logic_error("transposition table: conflicting values for one position");
      return;
    }
    if (limit_ != 0 && size_.load(std::memory_order_relaxed) >= limit_) return;
    s.map.emplace(key, value);
    size_.fetch_add(1, std::memory_order_relaxed);
  }

  std::size_t size() const { return size_.load(); }

private:
  static constexpr int kShards = 64;
  struct Shard {
    mutable std::shared_mutex mu;
    std::unordered_map<std::uint64_t, Result> map;
  };

  Shard& shard(std::uint64_t key) { return shards_[(key * 0x9E3779B97F4A7C15ull) >> 58]; }
  const Shard& shard(std::uint64_t key) const { return shards_[(key * 0x9E3779B97F4A7C15ull) >> 58]; }

  std::array<Shard, kShards> shards_;
  std::atomic<std::size_t> size_{0};
  std::size_t limit_;
};

namespace detail {

struct SearchAborted {};

struct Pos {
  PackedBoard board;
  std::array<std::uint64_t, kCanonicalMaxOrder> blue_adj{};
  std::array<std::uint64_t, kCanonicalMaxOrder> red_adj{};
  int blue = 0;
  int red = 0;

  void place(int index, Color c) {
    const Edge e = edge_at(index);
    auto& adj = c == Color::Blue ? blue_adj : red_adj;
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
    if (c == Color::Blue) {
      board.blue |= 1u << index;
      ++blue;
    } else {
      board.red |= 1u << index;
      ++red;
    }
  }
};

struct SharedSearch {
  GameConfig config;
  SolveOptions options;
  TranspositionTable table;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> hits{0};
  std::atomic<bool> cancel{false};
  std::atomic<bool> budget_hit{false};

  SharedSearch(GameConfig c, SolveOptions o) : config(std::move(c)), options(o), table(o.table_limit) {}
};

class Searcher {
public:
  explicit Searcher(SharedSearch& shared)
      : sh_(shared), finder_(shared.config.target), n_(shared.config.order), total_(pair_count(n_)) {}

  ~Searcher() { flush(); }

  /// Value of the child reached by colouring `index`, if the game ends there.
  std::optional<Result> terminal_after(const Pos& child, int index, Color c) {
    if (c == Color::Blue || sh_.config.mode == Mode::Strong) {
      const auto& adj = c == Color::Blue ? child.blue_adj : child.red_adj;
      if (finder_.exists_through(std::span<const std::uint64_t>(adj.data(), n_), edge_at(index)))
        return c == Color::Blue ? Result::AliceWin : Result::BobWin;
    }
    if (child.blue + child.red == total_) return sh_.config.mode == Mode::Strong ? Result::Draw : Result::BobWin;
    return std::nullopt;
  }

  std::uint64_t key(const Pos& pos) const { return canonical_code(pos.board); }

  /// Value of an open position, consulting and filling the table.
  Result value(const Pos& pos) {
    if (!sh_.options.use_table) return search(pos, 0);
    const std::uint64_t k = key(pos);
    if (auto hit = sh_.table.lookup(k)) {
      ++hits_;
      return *hit;
    }
    return search(pos, k);
  }

  Turn turn(const Pos& pos) const {
    return whose_turn(pos.blue, pos.red, sh_.config.p, sh_.config.q, total_);
  }

  /// Uncolored edges, best first: most blue degree at the ends, then index.
  std::vector<int> ordered_moves(const Pos& pos) const {
    std::vector<std::pair<int, int>> scored;
    const std::uint32_t used = pos.board.blue | pos.board.red;
    for (int i = 0; i < total_; ++i) {
      if (used >> i & 1u) continue;
      const Edge e = edge_at(i);
      const int score = std::popcount(pos.blue_adj[e.u]) + std::popcount(pos.blue_adj[e.v]);
      scored.emplace_back(-score, i);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<int> out;
    out.reserve(scored.size());
    for (auto& [s, i] : scored) out.push_back(i);
    return out;
  }

  Result search(const Pos& pos, std::uint64_t k) {
    tick();
    const Turn t = turn(pos);
    const bool alice = t.player == Player::Alice;
    const Color c = color_of(t.player);
    const Result goal = alice ? Result::AliceWin : Result::BobWin;
    const auto moves = ordered_moves(pos);

    // A move that ends the game in the mover's favour settles the node.
    std::array<std::optional<Result>, 32> term{};
    for (int i : moves) {
      Pos child = pos;
      child.place(i, c);
      term[i] = terminal_after(child, i, c);
      if (term[i] == goal) return finish(k, goal);
    }

    Result best = alice ? Result::BobWin : Result::AliceWin;
    bool any = false;
    std::array<std::uint64_t, 32> seen{};
    int nseen = 0;
    for (int i : moves) {
      Pos child = pos;
      child.place(i, c);
      Result v;
      if (term[i]) {
        v = *term[i];
      } else if (sh_.options.use_table) {
        const std::uint64_t ck = key(child);
        if (std::find(seen.begin(), seen.begin() + nseen, ck) != seen.begin() + nseen) continue;
        seen[nseen++] = ck;
        if (auto hit = sh_.table.lookup(ck)) {
          ++hits_;
          v = *hit;
        } else {
          v = search(child, ck);
        }
      } else {
        v = search(child, 0);
      }
      if (!any || (alice ? alice_rank(v) > alice_rank(best) : alice_rank(v) < alice_rank(best))) best = v;
      any = true;
      if (best == goal) break;
    }
    return finish(k, best);
  }

  void flush() {
    if (nodes_) sh_.nodes.fetch_add(nodes_);
    if (hits_) sh_.hits.fetch_add(hits_);
    nodes_ = hits_ = 0;
  }

private:
  Result finish(std::uint64_t k, Result v) {
    if (sh_.options.use_table) sh_.table.store(k, v);
    return v;
  }

  void tick() {
    ++nodes_;
    if ((nodes_ & 1023) == 0) {
      const std::uint64_t total = sh_.nodes.fetch_add(nodes_) + nodes_;
      nodes_ = 0;
      if (sh_.options.node_budget != 0 && total > sh_.options.node_budget) {
        sh_.budget_hit = true;
        sh_.cancel = true;
      }
    }
    if (sh_.cancel.load(std::memory_order_relaxed)) throw SearchAborted{};
    if (sh_.options.node_budget != 0 && sh_.options.node_budget < 1024 &&
        sh_.nodes.load(std::memory_order_relaxed) + nodes_ > sh_.options.node_budget) {
      sh_.budget_hit = true;
      throw SearchAborted{};
    }
  }

  SharedSearch& sh_;
  CopyFinder finder_;
  int n_;
  int total_;
  std::uint64_t nodes_ = 0;
  std::uint64_t hits_ = 0;
};

// Runs the open position `pos` with several workers. Forced single-child
// chains are walked first so the split happens where there is real choice.
inline Result parallel_value(SharedSearch& sh, const Pos& pos, int threads) {
  Searcher lead(sh);
  const Turn t = lead.turn(pos);
  const bool alice = t.player == Player::Alice;
  const Color c = color_of(t.player);
  const Result goal = alice ? Result::AliceWin : Result::BobWin;
  const bool keyed = sh.options.use_table;

  std::vector<Pos> open;
  std::vector<std::uint64_t> keys;
  std::vector<Result> settled;
  for (int i : lead.ordered_moves(pos)) {
    Pos child = pos;
    child.place(i, c);
    if (auto term = lead.terminal_after(child, i, c)) {
      if (*term == goal) return goal;
      settled.push_back(*term);
      continue;
    }
    const std::uint64_t k = keyed ? lead.key(child) : 0;
    if (keyed && std::find(keys.begin(), keys.end(), k) != keys.end()) continue;
    open.push_back(child);
    keys.push_back(k);
  }
  auto better = [&](Result a, Result b) { return alice ? alice_rank(a) > alice_rank(b) : alice_rank(a) < alice_rank(b); };

  if (open.size() == 1 && settled.empty()) {
    const auto hit = keyed ? sh.table.lookup(keys[0]) : std::nullopt;
    const Result v = hit ? *hit : parallel_value(sh, open[0], threads);
    if (keyed) sh.table.store(keys[0], v);
    return v;
  }

  std::vector<std::optional<Result>> values(open.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> reached_goal{false};
  auto work = [&] {
    Searcher s(sh);
    try {
      for (std::size_t j; (j = next.fetch_add(1)) < open.size();) {
        const Result v = s.value(open[j]);
        values[j] = v;
        if (v == goal) {
          reached_goal = true;
          sh.cancel = true;
        }
      }
    } catch (const SearchAborted&) {
    }
    s.flush();
  };
  std::vector<std::thread> pool;
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(open.size())));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  if (reached_goal) {
    sh.cancel = sh.budget_hit.load();
    return goal;
  }
  if (sh.budget_hit) throw SearchAborted{};
  bool any = false;
  Result best = alice ? Result::BobWin : Result::AliceWin;
  for (Result v : settled) {
    if (!any || better(v, best)) best = v;
    any = true;
  }
  for (const auto& v : values) {
    if (!v) throw SearchAborted{};
    if (!any || better(*v, best)) best = *v;
    any = true;
  }
  return best;
}

inline Pos to_pos(const BoardState& s) {
  Pos pos;
  pos.board.n = s.order();
  for (int i = 0; i < s.edge_total(); ++i) {
    const Color c = s.color_at(i);
    if (c != Color::Uncolored) pos.place(i, c);
  }
  return pos;
}

}  // namespace detail

/// Exact value of an open position under optimal play from here on.
inline SolveResult solve_position(const BoardState& state, const SolveOptions& options = {}) {
  SolveResult res;
  const GameConfig& cfg = state.config();
  if (cfg.order > kCanonicalMaxOrder) {
    res.diagnostic = "solver handles boards up to K_" + std::to_string(kCanonicalMaxOrder);
    return res;
  }
  {
    const auto blue = contains_copy(state, cfg.target, Color::Blue);
    const auto red = cfg.mode == Mode::Strong ? contains_copy(state, cfg.target, Color::Red) : std::nullopt;
    if (blue || red) throw GameError("position is already decided");
  }
  res.status = SolveStatus::Solved;
  if (cfg.target.vertex_count() > cfg.order) {
    res.outcome = cfg.mode == Mode::Strong ? Result::Draw : Result::BobWin;
    res.diagnostic = "board smaller than target";
    return res;
  }
  if (state.full()) {
    res.outcome = cfg.mode == Mode::Strong ? Result::Draw : Result::BobWin;
    return res;
  }

  detail::SharedSearch sh(cfg, options);
  const detail::Pos root = detail::to_pos(state);
  try {
    if (options.threads > 1) {
      res.outcome = detail::parallel_value(sh, root, options.threads);
    } else {
      detail::Searcher s(sh);
      res.outcome = s.value(root);
    }
  } catch (const detail::SearchAborted&) {
    res.status = SolveStatus::Unsolved;
    res.outcome = Result::Ongoing;
    res.diagnostic = "node budget of " + std::to_string(options.node_budget) + " exhausted";
  }
  sh.cancel = false;
  res.nodes_expanded = sh.nodes.load();
  res.table_hits = sh.hits.load();
  if (!res.solved() || !options.want_pv) return res;

  // Principal variation: at each step take the lowest-index move that keeps
  // the value. Table entries make these re-evaluations cheap.
  SolveOptions pv_opts = options;
  pv_opts.node_budget = 0;
  detail::SharedSearch pv_sh(cfg, pv_opts);
  detail::Searcher s(pv_sh);
  detail::Pos pos = root;
  Result want = res.outcome;
  for (;;) {
    const Turn t = s.turn(pos);
    const Color c = color_of(t.player);
    bool moved = false;
    for (int i = 0; i < pos.board.edge_total() && !moved; ++i) {
      if ((pos.board.blue | pos.board.red) >> i & 1u) continue;
      detail::Pos child = pos;
      child.place(i, c);
      const auto term = s.terminal_after(child, i, c);
      Result v;
      if (term) {
        v = *term;
      } else if (auto hit = options.use_table ? sh.table.lookup(s.key(child)) : std::nullopt) {
        v = *hit;
      } else {
        v = s.value(child);
      }
      if (v != want) continue;
      res.pv.push_back({edge_at(i), c});
      pos = child;
      moved = true;
      if (term) return res;
    }
    if (!moved) {
      res.diagnostic = "principal variation incomplete";
      return res;
    }
  }
}

/// Exact value of the game from the empty K_N.
inline SolveResult solve(int order, int p, int q, const TargetGraph& target, Mode mode,
                         const SolveOptions& options = {}) {
  return solve_position(new_game(order, p, q, target, mode), options);
}

struct AchievementReport {
  std::optional<int> value;                          // smallest N <= n_max with AliceWin
  std::vector<std::pair<int, SolveResult>> per_order;  // every N from 2 to n_max
  std::string diagnostic;
};

/// Solves every board order up to n_max. Any unsolved order leaves the value
/// absent, since an earlier win might be hiding there.
inline AchievementReport achievement_number(const TargetGraph& target, int p, int q, Mode mode, int n_max,
                                            const SolveOptions& options = {}) {
  AchievementReport rep;
  bool clean = true;
  for (int n = 2; n <= n_max; ++n) {
    SolveResult r = solve(n, p, q, target, mode, options);
    if (!r.solved()) {
      clean = false;
      rep.diagnostic += "K_" + std::to_string(n) + " unsolved: " + r.diagnostic + "\n";
    } else if (clean && !rep.value && r.outcome == Result::AliceWin) {
      rep.value = n;
    }
    rep.per_order.emplace_back(n, std::move(r));
  }
  if (!clean) rep.value.reset();
  return rep;
}

struct CrossCheckReport {
  AchievementReport strong;
  AchievementReport weak;
  bool consistent = true;  // a* <= a, and a strong win on K_N is a weak win on K_N
  std::string diagnostic;
};

inline CrossCheckReport cross_check_weak_vs_strong(const TargetGraph& target, int p, int q, int n_max,
                                                   const SolveOptions& options = {}) {
  CrossCheckReport rep;
  rep.strong = achievement_number(target, p, q, Mode::Strong, n_max, options);
  rep.weak = achievement_number(target, p, q, Mode::Weak, n_max, options);
  for (std::size_t i = 0; i < rep.strong.per_order.size(); ++i) {
    const auto& [n, s] = rep.strong.per_order[i];
    const auto& w = rep.weak.per_order[i].second;
    if (!s.solved() || !w.solved()) continue;
    if (s.outcome == Result::AliceWin && w.outcome != Result::AliceWin) {
      rep.consistent = false;
      rep.diagnostic += "K_" + std::to_string(n) + ": strong AliceWin but weak " + std::string(to_string(w.outcome)) + "\n";
    }
  }
  if (rep.strong.value && rep.weak.value && *rep.weak.value > *rep.strong.value) {
    rep.consistent = false;
    rep.diagnostic += "weak number exceeds strong number\n";
  }
  if (rep.strong.value && !rep.weak.value && rep.weak.diagnostic.empty()) {
    rep.consistent = false;
    rep.diagnostic += "strong number exists but Maker never wins the weak game\n";
  }
  rep.diagnostic += rep.strong.diagnostic + rep.weak.diagnostic;
  return rep;
}

// Exhaustive check of a fixed strategy against every reply of the opponent.

enum class Verdict : std::uint8_t { Verified, Refuted, Unsolved };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Refuted: return "refuted";
    default: return "unsolved";
  }
}

struct VerifyOptions {
  std::uint64_t node_budget = 0;  // positions visited; 0 = no limit
};

struct VerifyResult {
  Verdict verdict = Verdict::Unsolved;
  std::optional<MatchTranscript> counterexample;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::string diagnostic;
};

namespace detail {

class StrategyVerifier {
public:
  StrategyVerifier(Player side, const GameConfig& config, const std::string& fixed_name, VerifyOptions opt)
      : side_(side), config_(config), name_(fixed_name), opt_(opt), finder_(config.target) {}

  bool run(BoardState& s, Strategy& strat) {
    for (;;) {
      if (opt_.node_budget != 0 && ++nodes_ > opt_.node_budget) throw SearchAborted{};
      if (opt_.node_budget == 0) ++nodes_;
      const Player mover = s.whose_turn().player;
      if (mover == side_) {
        Edge e;
        try {
          e = strat.next_move(s);
        } catch (const StrategyFailure& err) {
          return fail(s, Forfeit{side_, err.what()});
        }
        if (e.u < 0 || e.v >= s.order() || e.u == e.v || s.color(e) != Color::Uncolored)
          return fail(s, Forfeit{side_, strat.name() + " proposed illegal edge " + to_string(e)});
        s.place(e, color_of(side_));
        const GameOutcome o = judge_last_move(s, finder_);
        if (o.value != Result::Ongoing) return leaf(s, o);
        continue;
      }
      for (const Edge& e : s.uncolored_edges()) {
        BoardState child = s;
        child.place(e, color_of(mover));
        const GameOutcome o = judge_last_move(child, finder_);
        if (o.value != Result::Ongoing) {
          if (!leaf(child, o)) return false;
          continue;
        }
        auto branch = strat.clone();
        if (!run(child, *branch)) return false;
      }
      return true;
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t leaves() const { return leaves_; }
  std::optional<MatchTranscript> counterexample;

private:
  bool goal(Result r) const { return side_ == Player::Alice ? r == Result::AliceWin : r != Result::AliceWin; }

  bool leaf(const BoardState& s, const GameOutcome& o) {
    ++leaves_;
    if (goal(o.value)) return true;
    counterexample = transcript(s, o, std::nullopt);
    return false;
  }

  bool fail(const BoardState& s, Forfeit f) {
    GameOutcome o;
    o.value = side_ == Player::Alice ? Result::BobWin : Result::AliceWin;
    counterexample = transcript(s, o, std::move(f));
    return false;
  }

  MatchTranscript transcript(const BoardState& s, const GameOutcome& o, std::optional<Forfeit> f) const {
    MatchTranscript tr;
    tr.config = config_;
    tr.alice_name = side_ == Player::Alice ? name_ : "exhaustive";
    tr.bob_name = side_ == Player::Bob ? name_ : "exhaustive";
    tr.moves = s.move_log();
    tr.outcome = o;
    tr.forfeit = std::move(f);
    return tr;
  }

  Player side_;
  GameConfig config_;
  std::string name_;
  VerifyOptions opt_;
  CopyFinder finder_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
};

}  // namespace detail

/// Plays `fixed` for `side` against every possible opponent line. Alice's
/// goal is a win; Bob's goal is that Alice does not win.
inline VerifyResult verify_strategy(const Strategy& fixed, Player side, const GameConfig& config,
                                    const VerifyOptions& options = {}) {
  VerifyResult res;
  BoardState start = new_game(config.order, config.p, config.q, config.target, config.mode);
  detail::StrategyVerifier v(side, config, fixed.name(), options);
  auto strat = fixed.clone();
  try {
    const bool ok = v.run(start, *strat);
    res.verdict = ok ? Verdict::Verified : Verdict::Refuted;
    res.counterexample = std::move(v.counterexample);
  } catch (const detail::SearchAborted&) {
    res.verdict = Verdict::Unsolved;
    res.diagnostic = "node budget of " + std::to_string(options.node_budget) + " exhausted";
  }
  res.nodes = v.nodes();
  res.leaves = v.leaves();
  return res;
}

}  // namespace ramsey

#endif  // RAMSEY_SOLVER_HPP
