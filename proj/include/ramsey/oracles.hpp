#ifndef RAMSEY_ORACLES_HPP
#define RAMSEY_ORACLES_HPP

// Slow reference computations the fast paths are checked against. None of
// them shares code with the code they check.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstdint>
#include <vector>

#include "ramsey/board.hpp"
#include "ramsey/graph.hpp"

namespace ramsey::oracle {

using HighPrecision = boost::multiprecision::cpp_dec_float_50;

/// Tries every injective map of target vertices into board vertices.
inline bool injection_contains(const BoardState& s, const TargetGraph& target, Color c) {
  const int tn = target.vertex_count();
  const int n = s.order();
  if (tn > n) return false;
  std::vector<int> image(tn, -1);
  std::vector<char> used(n, 0);
  const auto& edges = target.edges();
  auto all_edges_ok = [&] {
    for (const Edge& e : edges)
      if (s.color(image[e.u], image[e.v]) != c) return false;
    return true;
  };
  auto rec = [&](auto&& self, int t) -> bool {
    if (t == tn) return all_edges_ok();
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      image[t] = x;
      if (self(self, t + 1)) return true;
      used[x] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

/// 2n - 2 - sqrt((4n - 8) ln(4n - 4)) to 50 digits.
inline HighPrecision star_lower_classical(std::int64_t n) {
  const HighPrecision x(n);
  return 2 * x - 2 - sqrt((4 * x - 8) * log(4 * x - 4));
}

/// 2p - 1 + x^(-(2p + eps)) - 2p / x, with eps given exactly as a decimal.
inline HighPrecision alpha_condition(int p, const HighPrecision& eps, const HighPrecision& x) {
  const HighPrecision bq = 2 * p + eps;
  return 2 * p - 1 + pow(x, -bq) - HighPrecision(2 * p) / x;
}

/// ((2p^2 - 2p + q) / 2pq) eps n - log_alpha((2p + q) n / 2p) - p.
inline HighPrecision n0_slack(int p, int q, const HighPrecision& eps, const HighPrecision& alpha, std::int64_t n) {
  const HighPrecision c = HighPrecision(2 * p * p - 2 * p + q) / (2 * p * q);
  const HighPrecision arg = HighPrecision(2 * p + q) * n / (2 * p);
  return c * eps * n - log(arg) / log(alpha) - p;
}

}  // namespace ramsey::oracle

#endif  // RAMSEY_ORACLES_HPP
