#ifndef RAMSEY_STRATEGIES_PATH_BUILDER_HPP
#define RAMSEY_STRATEGIES_PATH_BUILDER_HPP

// Alice's strategy for P_n on K_n (p = q = 1).
//
// Extend phase: keep one blue path with endpoints u and v and let H be the
// vertices off the path. After every Alice move, u has at most one red edge
// into H + {v} (its other end is the marked vertex u'), v has none into
// H + {u}, and H spans no red edge. Each move answers Bob's last edge f:
//
//   f touches u                 extend u to the lowest free w in H
//   f touches v (not u)         extend v to the lowest free w in H - {u'}
//   f misses u, v, leaves H     extend u to the lowest free w in H, avoiding
//                               u' and f's end in H
//   f lies inside H             extend u to an end of f other than u'
//
// Endgame: once the path has n - 4 edges, H = {t3, t4, t5}, t1 = u, t2 = v,
// t1t5 red (real or assumed). What remains is a Hamiltonian path on the five
// vertices through the "virtual" blue edge t1t2, played from a fixed table
// keyed on Bob's next two edges.
//
// n = 3, 4, 5 use the short explicit lines instead (n = 4 on K_5).

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/game.hpp"

namespace ramsey {

struct PathBuilderMemory {
  enum class Phase { Extend, Endgame };

  std::vector<int> path;  // path.front() = u, path.back() = v
  int marked = -1;        // u', the red neighbour of u inside H, or -1
  Phase phase = Phase::Extend;
  std::array<int, 6> t{-1, -1, -1, -1, -1, -1};  // t[1..5]
  int endgame_case = 0;                          // 1..5, by Bob's first endgame edge
  bool branch_a = false;                         // Bob's second endgame edge hit the listed edge
  std::vector<Edge> assumed_red;                 // edges treated as red though they are not
  int a = 0, b = 0, d = 0;                       // red counts checked after each extend move
};

/// Red edges from u into H + {v}, from v into H + {u}, and inside H.
struct PathCounts {
  int a = 0, b = 0, d = 0;
  int marked = -1;
};

inline PathCounts path_counts(const BoardState& s, const std::vector<int>& path) {
  const int n = s.order();
  std::vector<char> on_path(n, 0);
  for (int x : path) on_path[x] = 1;
  const int u = path.front(), v = path.back();
  PathCounts c;
  for (int x = 0; x < n; ++x) {
    if (on_path[x]) continue;
    if (s.color(u, x) == Color::Red) {
      ++c.a;
      c.marked = x;
    }
    if (s.color(v, x) == Color::Red) ++c.b;
    for (int y = x + 1; y < n; ++y)
      if (!on_path[y] && s.color(x, y) == Color::Red) ++c.d;
  }
  if (s.color(u, v) == Color::Red) {
    ++c.a;
    ++c.b;
  }
  return c;
}

class PathBuilder : public Strategy {
public:
  PathBuilder(const TargetGraph& target, int board_order) : n_(target.vertex_count()), order_(board_order) {
    if (target.kind() != GraphKind::Path) throw std::invalid_argument("path-builder needs a path target");
    if (n_ < 3) throw std::invalid_argument("path-builder needs a path on at least 3 vertices");
    const bool ok = (n_ == 3 && order_ >= 3) || (n_ == 4 && order_ == 5) || (n_ >= 5 && order_ == n_);
    if (!ok)
      throw std::invalid_argument("path-builder plays P3 on K_N (N >= 3), P4 on K5, and P_n on K_n (n >= 5)");
  }

  std::string name() const override { return "path-builder"; }

  Edge next_move(const BoardState& s) override {
    if (s.config().p != 1 || s.config().q != 1) throw StrategyFailure("path-builder plays the (1,1) game only");
    if (s.order() != order_) throw StrategyFailure("path-builder: board order changed");
    const int m = s.blue_count() + 1;  // index of the edge Alice is about to colour
    if (n_ == 3) return small_p3(s, m);
    if (n_ == 4 || n_ == 5) return small_k5(s, m);
    if (m == 1) {
      const Edge e = s.uncolored_edges().front();
      mem_.path = {e.u, e.v};
      return e;
    }
    if (m <= n_ - 4) return extend(s);
    return endgame(s, m);
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<PathBuilder>(*this); }

  const PathBuilderMemory& memory() const { return mem_; }

private:
  static Edge last_red(const BoardState& s) {
    const auto& log = s.move_log();
    for (auto it = log.rbegin(); it != log.rend(); ++it)
      if (it->color == Color::Red) return it->edge;
    throw StrategyFailure("path-builder: expected a red edge from Bob");
  }

  std::vector<int> off_path(const BoardState& s) const {
    std::vector<int> h;
    for (int x = 0; x < s.order(); ++x)
      if (std::find(mem_.path.begin(), mem_.path.end(), x) == mem_.path.end()) h.push_back(x);
    return h;
  }

  std::optional<int> lowest_free(const BoardState& s, int from, const std::vector<int>& h,
                                 std::initializer_list<int> avoid) const {
    for (int w : h) {
      if (std::find(avoid.begin(), avoid.end(), w) != avoid.end()) continue;
      if (s.color(from, w) == Color::Uncolored) return w;
    }
    return std::nullopt;
  }

  Edge extend(const BoardState& s) {
    const PathCounts before = path_counts(s, mem_.path);
    const Edge f = last_red(s);
    const int u = mem_.path.front(), v = mem_.path.back();
    const auto h = off_path(s);
    const int marked = mem_.marked;
    auto in_h = [&](int x) { return std::find(h.begin(), h.end(), x) != h.end(); };
    (void)before;

    std::optional<int> w;
    bool from_u = true;
    if (f.touches(u)) {
      w = lowest_free(s, u, h, {});
    } else if (f.touches(v)) {
      from_u = false;
      w = lowest_free(s, v, h, {marked});
    } else if (!in_h(f.u) || !in_h(f.v)) {
      const int h_end = in_h(f.u) ? f.u : (in_h(f.v) ? f.v : -1);
      w = lowest_free(s, u, h, {marked, h_end});
    } else {
      // Bob coloured inside H: step onto an end of his edge that is not u'.
      const int y = f.u != marked ? f.u : f.v;
      if (s.color(u, y) == Color::Uncolored) w = y;
    }
    if (!w) throw StrategyFailure("path-builder: no extension edge available");

    const Edge e(from_u ? u : v, *w);
    if (from_u) {
      mem_.path.insert(mem_.path.begin(), *w);
    } else {
      mem_.path.push_back(*w);
    }
    check_invariants(s);
    return e;
  }

  // Red counts only change through Bob's edges, so the position after Alice's
  // move has the same red edges as `s`.
  void check_invariants(const BoardState& s) {
    const PathCounts c = path_counts(s, mem_.path);
    mem_.a = c.a;
    mem_.b = c.b;
    mem_.d = c.d;
    mem_.marked = c.a == 1 ? c.marked : -1;
    if (c.a > 1 || c.b != 0 || c.d != 0)
      throw StrategyFailure("path-builder: path invariant broken (a=" + std::to_string(c.a) +
                            ", b=" + std::to_string(c.b) + ", d=" + std::to_string(c.d) + ")");
  }

  Edge tt(int i, int j) const { return Edge(mem_.t[i], mem_.t[j]); }

  Edge must_be_free(const BoardState& s, Edge e) const {
    if (s.color(e) != Color::Uncolored)
      throw StrategyFailure("path-builder: endgame edge " + to_string(e) + " is not free");
    return e;
  }

  // Labels t1..t5 from Bob's first endgame edge and fixes the table case.
  void label_endgame(const BoardState& s) {
    mem_.phase = PathBuilderMemory::Phase::Endgame;
    auto h = off_path(s);  // three vertices, ascending
    if (h.size() != 3) throw StrategyFailure("path-builder: endgame needs three free vertices");
    auto& t = mem_.t;
    t[1] = mem_.path.front();
    t[2] = mem_.path.back();
    const Edge f = last_red(s);
    auto rest = [&](std::initializer_list<int> taken) {
      std::vector<int> r;
      for (int x : h)
        if (std::find(taken.begin(), taken.end(), x) == taken.end()) r.push_back(x);
      return r;
    };
    auto in_h = [&](int x) { return std::find(h.begin(), h.end(), x) != h.end(); };
    const bool f_in_h = in_h(f.u) && in_h(f.v);
    const int f_h_end = in_h(f.u) ? f.u : f.v;

    if (mem_.marked >= 0) {
      t[5] = mem_.marked;
      auto x = rest({t[5]});
      if (f == Edge(t[2], t[5])) {
        mem_.endgame_case = 1;
        t[3] = x[0], t[4] = x[1];
      } else if (f.touches(t[2]) && in_h(f.other(t[2]))) {
        mem_.endgame_case = 2;
        t[4] = f.other(t[2]);
        t[3] = t[4] == x[0] ? x[1] : x[0];
      } else if (f.touches(t[1]) && in_h(f.other(t[1]))) {
        mem_.endgame_case = 3;
        t[3] = f.other(t[1]);
        t[4] = t[3] == x[0] ? x[1] : x[0];
      } else if (f_in_h && f.touches(t[5])) {
        mem_.endgame_case = 4;
        t[3] = f.other(t[5]);
        t[4] = t[3] == x[0] ? x[1] : x[0];
      } else if (f_in_h) {
        mem_.endgame_case = 5;
        t[3] = x[0], t[4] = x[1];
      } else {
        // Bob played away from the five endgame vertices: pretend t3t4.
        mem_.endgame_case = 5;
        t[3] = x[0], t[4] = x[1];
        mem_.assumed_red.push_back(tt(3, 4));
      }
      return;
    }

    // a = 0: choose t5 so that Bob's edge fits a case and assume t1t5 red.
    if (f.touches(t[1]) && in_h(f.other(t[1]))) {
      mem_.endgame_case = 3;
      t[3] = f.other(t[1]);
      auto x = rest({t[3]});
      t[5] = x[0], t[4] = x[1];
    } else if (f.touches(t[2]) && in_h(f.other(t[2]))) {
      mem_.endgame_case = 1;
      t[5] = f.other(t[2]);
      auto x = rest({t[5]});
      t[3] = x[0], t[4] = x[1];
    } else if (f_in_h) {
      mem_.endgame_case = 4;
      t[3] = f.u, t[5] = f.v;
      t[4] = rest({f.u, f.v})[0];
    } else {
      mem_.endgame_case = 5;
      t[5] = h[0], t[3] = h[1], t[4] = h[2];
      mem_.assumed_red.push_back(tt(3, 4));
    }
    (void)f_h_end;
    mem_.assumed_red.push_back(tt(1, 5));
  }

  Edge endgame(const BoardState& s, int m) {
    const int stage = m - (n_ - 4);  // 1, 2, 3
    if (stage == 1) {
      label_endgame(s);
      switch (mem_.endgame_case) {
        case 3: return must_be_free(s, tt(3, 5));
        default: return must_be_free(s, tt(4, 5));
      }
    }
    if (stage == 2) {
      const Edge f = last_red(s);
      switch (mem_.endgame_case) {
        case 1:
          mem_.branch_a = f == tt(3, 5);
          return must_be_free(s, mem_.branch_a ? tt(2, 3) : tt(3, 5));
        case 2:
          mem_.branch_a = f == tt(3, 5);
          return must_be_free(s, mem_.branch_a ? tt(3, 4) : tt(3, 5));
        case 3:
          mem_.branch_a = f == tt(4, 5);
          return must_be_free(s, mem_.branch_a ? tt(3, 4) : tt(4, 5));
        case 4:
          mem_.branch_a = f == tt(1, 3);
          return must_be_free(s, mem_.branch_a ? tt(2, 3) : tt(1, 3));
        default:
          mem_.branch_a = f == tt(1, 3);
          return must_be_free(s, mem_.branch_a ? tt(3, 5) : tt(1, 3));
      }
    }
    if (stage == 3) {
      std::vector<Edge> options;
      const bool a = mem_.branch_a;
      switch (mem_.endgame_case) {
        case 1:
          options = a ? std::vector{tt(1, 4), tt(3, 4)} : std::vector{tt(1, 4), tt(2, 4), tt(1, 3), tt(2, 3)};
          break;
        case 2:
          options = a ? std::vector{tt(1, 3), tt(2, 3), tt(2, 5)} : std::vector{tt(1, 3), tt(2, 3), tt(1, 4)};
          break;
        case 3:
          options = a ? std::vector{tt(1, 4), tt(2, 4), tt(2, 5)} : std::vector{tt(1, 4), tt(2, 4), tt(2, 3)};
          break;
        case 4:
          options = a ? std::vector{tt(1, 4), tt(3, 4)} : std::vector{tt(2, 4), tt(2, 5), tt(3, 4)};
          break;
        default:
          options = a ? std::vector{tt(1, 3), tt(1, 4), tt(2, 3), tt(2, 4)}
                      : std::vector{tt(2, 4), tt(2, 5), tt(3, 5)};
          break;
      }
      std::sort(options.begin(), options.end(), [](Edge x, Edge y) { return edge_index(x) < edge_index(y); });
      for (const Edge& e : options)
        if (s.color(e) == Color::Uncolored) return e;
      throw StrategyFailure("path-builder: every closing edge is red");
    }
    throw StrategyFailure("path-builder: game should already be won");
  }

  // P3: any first edge, then any free edge touching it.
  Edge small_p3(const BoardState& s, int m) {
    const auto free = s.uncolored_edges();
    if (m == 1) {
      mem_.path = {free.front().u, free.front().v};
      return free.front();
    }
    const int u = mem_.path.front(), v = mem_.path.back();
    for (const Edge& e : free)
      if (e.touches(u) || e.touches(v)) return e;
    throw StrategyFailure("path-builder: no edge touches the first blue edge");
  }

  // P4 and P5 on K5. Second edge: disjoint from the first, both ends fresh,
  // and exactly one vertex shared with Bob's first edge. Then relabel so that
  // the blue edges are v1v2, v4v5 and Bob's edge is v3v4.
  Edge small_k5(const BoardState& s, int m) {
    const auto free = s.uncolored_edges();
    auto& t = mem_.t;
    if (m == 1) {
      mem_.path = {free.front().u, free.front().v};
      return free.front();
    }
    if (m == 2) {
      const Edge e1(mem_.path.front(), mem_.path.back());
      const Edge f1 = last_red(s);
      for (const Edge& e : free) {
        if (s.blue_degree(e.u) != 0 || s.blue_degree(e.v) != 0) continue;
        int shared = 0;
        for (int x : {e1.u, e1.v, e.u, e.v})
          if (f1.touches(x)) ++shared;
        if (shared != 1) continue;
        // relabel
        t[3] = -1;
        for (int x = 0; x < 5; ++x)
          if (!e1.touches(x) && !e.touches(x)) t[3] = x;
        t[4] = f1.other(t[3]);
        const Edge& holder = e.touches(t[4]) ? e : e1;
        const Edge& other = e.touches(t[4]) ? e1 : e;
        t[5] = holder.other(t[4]);
        t[1] = other.u, t[2] = other.v;
        return e;
      }
      throw StrategyFailure("path-builder: no admissible second edge");
    }
    if (n_ == 4) {
      if (m != 3) throw StrategyFailure("path-builder: game should already be won");
      for (const Edge& e : free)
        if ((e.touches(t[1]) || e.touches(t[2])) && (e.touches(t[4]) || e.touches(t[5]))) return e;
      throw StrategyFailure("path-builder: both blue edges are cut off");
    }
    if (m == 3) {
      mem_.branch_a = last_red(s) == tt(3, 5);
      return must_be_free(s, mem_.branch_a ? tt(1, 3) : tt(3, 5));
    }
    if (m == 4) {
      std::vector<Edge> options = mem_.branch_a ? std::vector{tt(2, 4), tt(2, 5)}
                                                : std::vector{tt(1, 3), tt(1, 4), tt(2, 3), tt(2, 4)};
      std::sort(options.begin(), options.end(), [](Edge x, Edge y) { return edge_index(x) < edge_index(y); });
      for (const Edge& e : options)
        if (s.color(e) == Color::Uncolored) return e;
      throw StrategyFailure("path-builder: every closing edge is red");
    }
    throw StrategyFailure("path-builder: game should already be won");
  }

  int n_;
  int order_;
  PathBuilderMemory mem_;
};

}  // namespace ramsey

#endif  // RAMSEY_STRATEGIES_PATH_BUILDER_HPP
