#ifndef RAMSEY_BOUNDS_HPP
#define RAMSEY_BOUNDS_HPP

// Closed-form bounds on achievement numbers and the discrepancy-game
// construction that certifies draws for the star K_{1,n-1}.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/potential.hpp"

namespace ramsey {

struct IntBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

struct RealBounds {
  double lower = 0;
  double upper = 0;
};

/// Trees of order n: n <= a(p,q;T) <= n + q floor((n - 2) / p).
inline IntBounds tree_bounds(std::int64_t n, std::int64_t p, std::int64_t q) {
  if (n < 2) throw ParameterError("tree order must be at least 2");
  if (q < 1 || p < q) throw ParameterError("need p >= q >= 1");
  return {n, n + q * ((n - 2) / p)};
}

struct StarLowerBound {
  double bound = 0;      // (1 + q/2p - eps) n
  std::int64_t n0 = 0;   // the bound is proven for n >= n0
  double alpha = 0;
  bool applicable = false;
};

/// a*(p,q;K_{1,n}) >= (1 + q/(2p) - eps) n once n >= n0.
inline StarLowerBound star_lower_bound_biased(std::int64_t n, int p, int q, double eps) {
  StarLowerBound r;
  r.alpha = choose_alpha(p, q, eps);
  r.n0 = compute_n0(p, q, eps, r.alpha);
  r.bound = (1.0 + static_cast<double>(q) / (2.0 * p) - eps) * static_cast<double>(n);
  r.applicable = n >= r.n0;
  return r;
}

/// 2n - 2 - sqrt((4n - 8) ln(4n - 4)) <= a(K_{1,n-1}) <= 2n - 2.
inline RealBounds star_bounds_classical(std::int64_t n) {
  if (n < 3) throw ParameterError("star bounds need n >= 3");
  const long double x = static_cast<long double>(n);
  const long double lower = 2 * x - 2 - std::sqrt((4 * x - 8) * std::log(4 * x - 4));
  return {static_cast<double>(lower), static_cast<double>(2 * n - 2)};
}

/// Board of K_N minus one or two edges (so the element count is even), one
/// hyperedge per vertex holding its incident edges, and the discrepancy
/// targets b_i = sqrt(2 |e_i| ln 2N).
struct DiscrepancyInstance {
  int order = 0;
  std::vector<Edge> elements;
  std::vector<std::vector<int>> hyperedges;  // element indices, one list per vertex
  std::vector<double> targets;
  std::vector<Edge> removed;
};

inline DiscrepancyInstance build_discrepancy_instance(int order) {
  if (order < 2) throw ParameterError("discrepancy instance needs N >= 2");
  const std::int64_t pairs = pair_count(order);
  DiscrepancyInstance inst;
  inst.order = order;
  inst.removed.push_back(Edge(0, 1));
  if (pairs % 2 == 0) {
    if (order < 4) throw ParameterError("two disjoint edges must be removed, which needs N >= 4");
    inst.removed.push_back(Edge(2, 3));
  }
  inst.hyperedges.resize(order);
  for (std::int64_t i = 0; i < pairs; ++i) {
    const Edge e = edge_at(static_cast<int>(i));
    if (e == inst.removed[0] || (inst.removed.size() > 1 && e == inst.removed[1])) continue;
    const int idx = static_cast<int>(inst.elements.size());
    inst.elements.push_back(e);
    inst.hyperedges[e.u].push_back(idx);
    inst.hyperedges[e.v].push_back(idx);
  }
  const double log2n = std::log(2.0 * order);
  for (const auto& h : inst.hyperedges) inst.targets.push_back(std::sqrt(2.0 * static_cast<double>(h.size()) * log2n));
  return inst;
}

struct BalancerCheck {
  bool holds = false;
  double sum = 0;
};

inline constexpr double kBalancerSlack = 1e-12;

/// sum_i exp(-b_i^2 / (2 |e_i|)) <= 1/2. Empty hyperedges contribute nothing.
inline BalancerCheck check_balancer_condition(const DiscrepancyInstance& inst) {
  if (inst.targets.size() != inst.hyperedges.size()) throw ParameterError("one target per hyperedge required");
  long double sum = 0;
  for (std::size_t i = 0; i < inst.hyperedges.size(); ++i) {
    const auto size = static_cast<long double>(inst.hyperedges[i].size());
    if (size == 0) continue;
    const long double b = inst.targets[i];
    sum += std::exp(-b * b / (2 * size));
  }
  return {sum <= 0.5L + kBalancerSlack, static_cast<double>(sum)};
}

struct DrawCertificate {
  bool draw_certified = false;
  int failing_vertex = -1;  // first vertex whose degree bound reaches n - 1
  double worst_degree = 0;  // largest bound on max(d_B, d_R) over all vertices
};

/// If Balancer keeps |d_B - d_R| within b_i at every vertex (one more where a
/// removed edge is incident), each colour degree is at most
/// (N - 1 + b_i + delta_i) / 2. Below n - 1 everywhere means neither colour
/// can hold K_{1,n-1}.
inline DrawCertificate draw_degree_bound(int order, std::int64_t n, const DiscrepancyInstance& inst) {
  if (!inst.hyperedges.empty() && inst.order != order) throw ParameterError("instance was built for another N");
  DrawCertificate cert;
  cert.draw_certified = true;
  for (std::size_t i = 0; i < inst.hyperedges.size(); ++i) {
    int delta = 0;
    for (const Edge& e : inst.removed)
      if (e.touches(static_cast<int>(i))) delta = 1;
    const double bound = (order - 1 + inst.targets[i] + delta) / 2.0;
    if (bound > cert.worst_degree) cert.worst_degree = bound;
    if (!(bound < static_cast<double>(n - 1)) && cert.draw_certified) {
      cert.draw_certified = false;
      cert.failing_vertex = static_cast<int>(i);
    }
  }
  return cert;
}

/// The board order 2n - 2 - sqrt((4n - 8) ln(4n - 4)) rounded both ways,
/// each checked with draw_degree_bound.
struct ClassicalDraw {
  double exact = 0;
  int floor_order = 0;
  int ceil_order = 0;
  bool floor_certified = false;
  bool ceil_certified = false;
};

inline ClassicalDraw classical_draw_orders(std::int64_t n) {
  ClassicalDraw d;
  d.exact = star_bounds_classical(n).lower;
  d.floor_order = static_cast<int>(std::floor(d.exact));
  d.ceil_order = static_cast<int>(std::ceil(d.exact));
  auto certify = [&](int order) {
    if (order < 2) return true;  // no edges to colour, nothing to build
    if (pair_count(order) % 2 == 0 && order < 4) return true;
    return draw_degree_bound(order, n, build_discrepancy_instance(order)).draw_certified;
  };
  d.floor_certified = certify(d.floor_order);
  d.ceil_certified = certify(d.ceil_order);
  return d;
}

}  // namespace ramsey

#endif  // RAMSEY_BOUNDS_HPP
