#ifndef RAMSEY_POTENTIAL_HPP
#define RAMSEY_POTENTIAL_HPP

// Arithmetic behind the star-blocking potential
//
//   phi(v) = 0                          if v is saturated (d_B + d_R = N - 1)
//          = alpha^(d_B(v) - beta d_R(v)) otherwise,
//
// with beta = (2p + eps) / q and alpha > 1 chosen so that
// f(alpha) = 2p - 1 + alpha^(-beta q) - 2p / alpha < 0.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ramsey/board.hpp"

namespace ramsey {

class ParameterError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct BlockerParams {
  int p = 1;
  int q = 1;
  double eps = 0.5;
  double alpha = 1.0;
  double beta = 2.5;
};

inline constexpr long double kAlphaGridStep = 1.0L / (1u << 20);
inline constexpr long double kAlphaMargin = 1e-9L;
inline constexpr long double kAlphaCap = 4.0L;

inline long double blocker_beta(int p, int q, long double eps) { return (2.0L * p + eps) / q; }

/// f(x) = 2p - 1 + x^(-beta q) - 2p x^(-1); f(1) = 0 for every (p, q, eps).
inline long double alpha_condition(int p, int q, long double eps, long double x) {
  const long double bq = blocker_beta(p, q, eps) * q;
  return 2.0L * p - 1.0L + std::pow(x, -bq) - 2.0L * p / x;
}

/// Largest alpha = 1 + k 2^-20 (k >= 1, alpha <= 4) with f(alpha) < -1e-9.
///
/// f falls from f(1) = 0, bottoms out at x* = (beta q / 2p)^(1/(beta q - 1)),
/// then rises towards 2p - 1, so the admissible grid points form one run.
/// Start at the grid point nearest x*, step upward with doubling strides
/// until f fails, then bisect the last stride.
inline double choose_alpha(int p, int q, double eps) {
  if (q < 1 || p < q) throw ParameterError("need p >= q >= 1");
  if (!(eps > 0)) throw ParameterError("eps must be positive");
  const long double bq = blocker_beta(p, q, eps) * q;
  const long double xstar = std::pow(bq / (2.0L * p), 1.0L / (bq - 1.0L));
  const auto kcap = static_cast<std::int64_t>((kAlphaCap - 1.0L) / kAlphaGridStep);
  auto good = [&](std::int64_t k) {
    return k >= 1 && k <= kcap && alpha_condition(p, q, eps, 1.0L + k * kAlphaGridStep) < -kAlphaMargin;
  };
  auto k0 = static_cast<std::int64_t>(std::floor((xstar - 1.0L) / kAlphaGridStep));
  if (k0 < 1) k0 = 1;
  if (k0 > kcap) k0 = kcap;
  if (!good(k0)) {
    if (good(k0 + 1)) {
      ++k0;
    } else {
      throw ParameterError("no alpha in (1, 4] with f(alpha) < 0 for p=" + std::to_string(p) +
                           " q=" + std::to_string(q) + " eps=" + std::to_string(eps));
    }
  }
  std::int64_t lo = k0, stride = 1;
  while (good(lo + stride)) {
    lo += stride;
    stride *= 2;
  }
  std::int64_t hi = lo + stride;  // not good
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (good(mid)) lo = mid;
    else hi = mid;
  }
  return static_cast<double>(1.0L + lo * kAlphaGridStep);
}

/// g(n) = ((2p^2 - 2p + q) / (2pq)) eps n - log_alpha((2p + q) n / (2p)) - p.
inline long double n0_slack(int p, int q, long double eps, long double alpha, long double n) {
  const long double c = (2.0L * p * p - 2.0L * p + q) / (2.0L * p * q);
  return c * eps * n - std::log((2.0L * p + q) * n / (2.0L * p)) / std::log(alpha) - p;
}

/// Smallest n0 >= 1 with g(n) >= 0 for every integer n >= n0.
///
/// g is convex with its minimum at 1 / (c eps ln alpha); past that point it is
/// increasing, so the last failure sits at or beyond the minimum and is found
/// by doubling then bisecting.
inline std::int64_t compute_n0(int p, int q, double eps, double alpha) {
  if (!(alpha > 1)) throw ParameterError("alpha must exceed 1");
  if (!(eps > 0)) throw ParameterError("eps must be positive");
  const long double c = (2.0L * p * p - 2.0L * p + q) / (2.0L * p * q);
  const long double nmin = 1.0L / (c * eps * std::log(static_cast<long double>(alpha)));
  auto ok = [&](std::int64_t n) { return n0_slack(p, q, eps, alpha, static_cast<long double>(n)) >= 0; };
  std::int64_t lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(nmin)));
  if (ok(lo)) {
    // the integer minimum is at lo or lo - 1; everything left of it is larger
    if (lo == 1 || ok(lo - 1)) return 1;
    return lo;
  }
  std::int64_t stride = 1;
  while (!ok(lo + stride)) {
    lo += stride;
    stride *= 2;
  }
  std::int64_t hi = lo + stride;  // ok(hi), !ok(lo)
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

inline BlockerParams make_blocker_params(int p, int q, double eps) {
  BlockerParams bp;
  bp.p = p;
  bp.q = q;
  bp.eps = eps;
  bp.beta = static_cast<double>(blocker_beta(p, q, eps));
  bp.alpha = choose_alpha(p, q, eps);
  return bp;
}

inline double potential_from_degrees(int blue, int red, int order, const BlockerParams& bp) {
  if (blue + red == order - 1) return 0.0;
  return std::pow(bp.alpha, blue - bp.beta * red);
}

inline double potential_phi(const BoardState& s, int v, const BlockerParams& bp) {
  return potential_from_degrees(s.blue_degree(v), s.red_degree(v), s.order(), bp);
}

inline double potential_sum(const BoardState& s, const BlockerParams& bp) {
  double total = 0;
  for (int v = 0; v < s.order(); ++v) total += potential_phi(s, v, bp);
  return total;
}

}  // namespace ramsey

#endif  // RAMSEY_POTENTIAL_HPP
