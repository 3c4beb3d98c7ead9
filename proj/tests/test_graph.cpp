#include <gtest/gtest.h>

#include <set>

#include "ramsey/enumerate.hpp"
#include "ramsey/graph.hpp"

using namespace ramsey;

TEST(Edge, NormalisesEndpoints) {
  const Edge e(5, 2);
  EXPECT_EQ(e.u, 2);
  EXPECT_EQ(e.v, 5);
  EXPECT_EQ(e, Edge(2, 5));
  EXPECT_TRUE(e.touches(5));
  EXPECT_EQ(e.other(2), 5);
  EXPECT_EQ(to_string(Edge(0, 1)), "1-2");
}

TEST(Edge, ColexIndexMatchesEnumeration) {
  // Enumerate pairs in colex order directly and compare.
  int expected = 0;
  for (int v = 1; v < 40; ++v)
    for (int u = 0; u < v; ++u, ++expected) {
      EXPECT_EQ(edge_index(Edge(u, v)), expected);
      EXPECT_EQ(edge_at(expected), Edge(u, v));
    }
  EXPECT_EQ(pair_count(6), 15);
}

TEST(TargetGraph, RejectsBadInput) {
  EXPECT_THROW(TargetGraph(3, {Edge(0, 0)}), GraphError);
  EXPECT_THROW(TargetGraph(3, {Edge(0, 1), Edge(1, 0), Edge(1, 2)}), GraphError);
  EXPECT_THROW(TargetGraph(3, {Edge(0, 3), Edge(1, 2)}), GraphError);
  EXPECT_THROW(TargetGraph(4, {Edge(0, 1), Edge(1, 2)}), GraphError);  // vertex 4 isolated
}

TEST(TargetGraph, Classifies) {
  EXPECT_EQ(path_graph(2).kind(), GraphKind::Path);
  EXPECT_EQ(path_graph(3).kind(), GraphKind::Path);
  EXPECT_TRUE(path_graph(3).is_star());
  EXPECT_EQ(path_graph(6).kind(), GraphKind::Path);
  EXPECT_FALSE(path_graph(6).is_star());
  EXPECT_EQ(star_graph(3).kind(), GraphKind::Star);
  EXPECT_TRUE(star_graph(3).is_star());
  EXPECT_EQ(parse_graph("5; 1-2 1-3 1-4 2-5").kind(), GraphKind::Tree);
  EXPECT_EQ(parse_graph("3; 1-2 2-3 1-3").kind(), GraphKind::Generic);
  EXPECT_EQ(parse_graph("4; 1-2 3-4").kind(), GraphKind::Generic);
}

TEST(Parse, EdgeListFormat) {
  const auto g = parse_graph("# a path\n4; 1-2, 2-3\n3-4  # tail\n");
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_TRUE(g.has_edge(2, 3));
  EXPECT_EQ(to_edge_list(g), "4; 1-2 2-3 3-4");
  EXPECT_EQ(to_edge_list(parse_graph(to_edge_list(g))), to_edge_list(g));
}

TEST(Parse, MalformedEdgeListsThrow) {
  EXPECT_THROW(parse_graph("1-2 2-3"), GraphError);
  EXPECT_THROW(parse_graph("x; 1-2"), GraphError);
  EXPECT_THROW(parse_graph("3; 1-2 2-"), GraphError);
  EXPECT_THROW(parse_graph("3; 1-2 2-4"), GraphError);
  EXPECT_THROW(parse_graph("3; 1-2 2-2"), GraphError);
  EXPECT_THROW(parse_graph("3; 1-2 a-3"), GraphError);
}

TEST(Parse, BitStringRoundTrip) {
  const auto g = star_graph(3);
  EXPECT_EQ(to_bitstring(g), "111000");
  EXPECT_EQ(to_edge_list(parse_bitstring("111000")), to_edge_list(g));
  EXPECT_EQ(to_edge_list(parse_any_graph("111 000")), to_edge_list(g));
  EXPECT_THROW(parse_bitstring("11100"), GraphError);
  EXPECT_THROW(parse_bitstring("11120"), GraphError);
}

TEST(Dfs, PrefixesAreConnected) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& t : nonisomorphic_trees(n)) {
      const auto d = dfs_order(t);
      ASSERT_EQ(static_cast<int>(d.order.size()), n);
      EXPECT_EQ(d.order[0], 0);
      std::set<int> seen{d.order[0]};
      for (int i = 1; i < n; ++i) {
        const int v = d.order[i];
        ASSERT_TRUE(seen.count(d.parent[v])) << to_edge_list(t);
        EXPECT_TRUE(t.has_edge(v, d.parent[v]));
        seen.insert(v);
      }
    }
  }
  EXPECT_THROW(dfs_order(parse_graph("3; 1-2 2-3 1-3")), GraphError);
}

TEST(Dfs, ChildrenInIncreasingOrder) {
  const auto d = dfs_order(parse_graph("5; 1-4 1-2 2-5 1-3"));
  EXPECT_EQ(d.order, (std::vector<int>{0, 1, 4, 2, 3}));
}

TEST(Enumerate, TreeCountsMatchKnownSequence) {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 6, 11, 23};  // n = 2..8
  for (int n = 2; n <= 8; ++n) {
    const auto trees = nonisomorphic_trees(n);
    EXPECT_EQ(trees.size(), counts[n - 2]) << n;
    for (const auto& t : trees) EXPECT_TRUE(t.is_tree());
  }
}

TEST(Enumerate, GraphsWithoutIsolatedVertices) {
  const std::vector<std::size_t> counts{1, 2, 7, 23, 122};  // n = 2..6
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(nonisomorphic_graphs(n).size(), counts[n - 2]) << n;
}

TEST(Dfs, PathAndStarOrders) {
  const auto p = dfs_order(path_graph(4));
  EXPECT_EQ(p.order, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(p.parent, (std::vector<int>{-1, 0, 1, 2}));
  const auto s = dfs_order(star_graph(3));
  EXPECT_EQ(s.parent, (std::vector<int>{-1, 0, 0, 0}));
}

TEST(Parse, IsolatedVertexRejected) { EXPECT_THROW(parse_graph("3; 1-2"), GraphError); }
