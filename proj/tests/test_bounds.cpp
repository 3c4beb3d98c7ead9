#include <gtest/gtest.h>

#include <cmath>

#include "ramsey/bounds.hpp"
#include "ramsey/oracles.hpp"

using namespace ramsey;

TEST(TreeBounds, Examples) {
  EXPECT_EQ(tree_bounds(6, 1, 1).lower, 6);
  EXPECT_EQ(tree_bounds(6, 1, 1).upper, 10);
  EXPECT_EQ(tree_bounds(6, 2, 1).upper, 8);
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= p; ++q) {
      EXPECT_EQ(tree_bounds(2, p, q).lower, 2);
      EXPECT_EQ(tree_bounds(2, p, q).upper, 2);
    }
  EXPECT_THROW(tree_bounds(1, 1, 1), ParameterError);
  EXPECT_THROW(tree_bounds(5, 1, 2), ParameterError);
}

TEST(TreeBounds, Sweep) {
  for (int n = 2; n <= 200; ++n)
    for (int p = 1; p <= 5; ++p)
      for (int q = 1; q <= p; ++q) {
        const auto b = tree_bounds(n, p, q);
        // every extra tree vertex past the first edge costs at most q/p red edges
        std::int64_t extra = 0;
        for (int k = 1; k <= n - 2; ++k)
          if (k % p == 0) extra += q;
        EXPECT_EQ(b.upper, n + extra);
        EXPECT_LE(b.lower, b.upper);
      }
}

TEST(StarBounds, BiasedLowerBound) {
  const auto a = star_lower_bound_biased(100, 2, 1, 0.1);
  EXPECT_NEAR(a.bound, 115.0, 1e-9);
  const auto b = star_lower_bound_biased(400, 1, 1, 0.5);
  EXPECT_NEAR(b.bound, 400.0, 1e-9);
  EXPECT_TRUE(b.applicable);
  EXPECT_LE(b.n0, 400);
  EXPECT_FALSE(star_lower_bound_biased(10, 1, 1, 0.5).applicable);
  // eps -> 0 approaches 1.5 n for p = q = 1
  EXPECT_NEAR(star_lower_bound_biased(1000, 1, 1, 0.01).bound / 1000.0, 1.49, 1e-12);
}

TEST(StarBounds, ClassicalAgainstHighPrecision) {
  const auto b3 = star_bounds_classical(3);
  EXPECT_NEAR(b3.lower, 1.1159, 1e-4);
  EXPECT_EQ(b3.upper, 4.0);
  EXPECT_NEAR(star_bounds_classical(10).lower, 7.292, 1e-3);
  for (std::int64_t n = 3; n <= 5000; n += (n < 100 ? 1 : 97)) {
    const double want = oracle::star_lower_classical(n).convert_to<double>();
    EXPECT_NEAR(star_bounds_classical(n).lower, want, 1e-12 * std::max(1.0, std::abs(want))) << n;
    EXPECT_EQ(star_bounds_classical(n).upper, static_cast<double>(2 * n - 2));
  }
  EXPECT_THROW(star_bounds_classical(2), ParameterError);
}

TEST(Discrepancy, InstanceShapes) {
  const auto i5 = build_discrepancy_instance(5);
  EXPECT_EQ(i5.elements.size(), 8u);
  EXPECT_EQ(i5.removed.size(), 2u);
  for (int v = 0; v < 5; ++v) {
    const bool touched = v < 4;
    EXPECT_EQ(i5.hyperedges[v].size(), touched ? 3u : 4u) << v;
  }
  const auto i4 = build_discrepancy_instance(4);
  EXPECT_EQ(i4.elements.size(), 4u);
  for (const auto& h : i4.hyperedges) EXPECT_EQ(h.size(), 2u);
  EXPECT_FALSE(i4.removed[0].touches(i4.removed[1].u));
  EXPECT_FALSE(i4.removed[0].touches(i4.removed[1].v));
  const auto i6 = build_discrepancy_instance(6);
  EXPECT_EQ(i6.elements.size(), 14u);
  EXPECT_EQ(i6.removed.size(), 1u);
  EXPECT_THROW(build_discrepancy_instance(1), ParameterError);
}

TEST(Discrepancy, HyperedgesAreVertexStars) {
  for (int n = 4; n <= 30; ++n) {
    const auto inst = build_discrepancy_instance(n);
    EXPECT_EQ(inst.elements.size() % 2, 0u);
    for (int v = 0; v < n; ++v)
      for (int idx : inst.hyperedges[v]) EXPECT_TRUE(inst.elements[idx].touches(v));
    std::size_t incidences = 0;
    for (const auto& h : inst.hyperedges) incidences += h.size();
    EXPECT_EQ(incidences, 2 * inst.elements.size());
  }
}

TEST(Discrepancy, BalancerConditionIsTight) {
  // N = 2 leaves no elements once the single edge is removed
  for (int n = 3; n <= 300; ++n) {
    auto inst = build_discrepancy_instance(n);
    const auto c = check_balancer_condition(inst);
    EXPECT_TRUE(c.holds);
    EXPECT_NEAR(c.sum, 0.5, 1e-12) << n;
    for (double& b : inst.targets) b /= 2;
    const auto halved = check_balancer_condition(inst);
    EXPECT_FALSE(halved.holds);
    EXPECT_NEAR(halved.sum, n * std::pow(2.0 * n, -0.25), 1e-9 * n);
  }
  EXPECT_TRUE(check_balancer_condition(DiscrepancyInstance{}).holds);
  EXPECT_EQ(check_balancer_condition(DiscrepancyInstance{}).sum, 0.0);
}

TEST(Discrepancy, DrawCertificates) {
  const auto d = classical_draw_orders(100);
  EXPECT_TRUE(d.floor_certified);
  EXPECT_TRUE(d.ceil_certified);
  EXPECT_EQ(d.floor_order, static_cast<int>(std::floor(oracle::star_lower_classical(100).convert_to<double>())));
  const auto top = draw_degree_bound(198, 100, build_discrepancy_instance(198));
  EXPECT_FALSE(top.draw_certified);
  EXPECT_GE(top.failing_vertex, 0);
  EXPECT_TRUE(draw_degree_bound(1, 3, DiscrepancyInstance{}).draw_certified);
  EXPECT_THROW(draw_degree_bound(7, 10, build_discrepancy_instance(6)), ParameterError);
}

TEST(Discrepancy, CertificateMatchesDirectInequality) {
  for (int n = 5; n <= 120; n += 5)
    for (int order = 4; order <= 2 * n - 2; order += 3) {
      const auto inst = build_discrepancy_instance(order);
      bool expect = true;
      const double ln = std::log(2.0 * order);
      for (int v = 0; v < order; ++v) {
        const double size = order - 1 - ((v < 2 || (inst.removed.size() > 1 && v < 4)) ? 1 : 0);
        const double b = std::sqrt(2 * size * ln);
        const double delta = size < order - 1 ? 1 : 0;
        if ((order - 1 + b + delta) / 2 >= n - 1) expect = false;
      }
      EXPECT_EQ(draw_degree_bound(order, n, inst).draw_certified, expect) << n << " " << order;
    }
}
