#ifndef RAMSEY_GRAPH_HPP
#define RAMSEY_GRAPH_HPP

// Target graphs: the small graph F a player tries to complete in their colour.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey {

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Unordered vertex pair, always stored with u < v (0-based).
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool touches(int x) const { return u == x || v == x; }
  constexpr int other(int x) const { return x == u ? v : u; }
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Colexicographic rank of the pair: (0,1)=0, (0,2)=1, (1,2)=2, (0,3)=3, ...
constexpr int edge_index(Edge e) { return e.v * (e.v - 1) / 2 + e.u; }

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

constexpr Edge edge_at(int index) {
  int v = 1;
  while ((v + 1) * v / 2 <= index) ++v;
  return Edge(index - v * (v - 1) / 2, v);
}

/// "u-v" with 1-based labels.
inline std::string to_string(Edge e) {
  return std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
}

enum class GraphKind { Generic, Tree, Path, Star };

inline std::string_view to_string(GraphKind k) {
  switch (k) {
    case GraphKind::Tree: return "tree";
    case GraphKind::Path: return "path";
    case GraphKind::Star: return "star";
    default: return "generic";
  }
}

class TargetGraph {
public:
  TargetGraph() = default;

  /// Validates and classifies. Throws GraphError on self-loops, duplicate
  /// edges, out-of-range endpoints and isolated vertices.
  TargetGraph(int vertex_count, std::vector<Edge> edges)
      : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 1) throw GraphError("graph needs at least one vertex");
    std::vector<int> deg(n_, 0);
    for (const Edge& e : edges_) {
      if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u + 1));
      if (e.u < 0 || e.v >= n_) throw GraphError("edge " + to_string(e) + " out of range");
      ++deg[e.u];
      ++deg[e.v];
    }
    std::sort(edges_.begin(), edges_.end(),
              [](Edge a, Edge b) { return edge_index(a) < edge_index(b); });
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw GraphError("duplicate edge");
    for (int v = 0; v < n_; ++v)
      if (deg[v] == 0) throw GraphError("vertex " + std::to_string(v + 1) + " is isolated");
    degree_ = std::move(deg);
    classify();
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(int v) const { return degree_[v]; }
  int max_degree() const {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
  }
  GraphKind kind() const { return kind_; }

  bool is_tree() const { return kind_ != GraphKind::Generic; }
  /// K_{1,m}; includes P2 and P3 which are classified as paths.
  bool is_star() const { return is_tree() && max_degree() == edge_count(); }

  bool has_edge(int a, int b) const {
    return std::find(edges_.begin(), edges_.end(), Edge(a, b)) != edges_.end();
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (const Edge& e : edges_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }

  friend bool operator==(const TargetGraph& a, const TargetGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  bool connected() const {
    auto adj = adjacency();
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
    }
    return count == n_;
  }

  void classify() {
    kind_ = GraphKind::Generic;
    if (edge_count() != n_ - 1 || !connected()) return;
    kind_ = GraphKind::Tree;
    if (max_degree() <= 2) {
      kind_ = GraphKind::Path;
    } else if (max_degree() == edge_count()) {
      kind_ = GraphKind::Star;
    }
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  GraphKind kind_ = GraphKind::Generic;
};

inline TargetGraph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return TargetGraph(n, std::move(es));
}

/// K_{1,leaves}, centre at vertex 0.
inline TargetGraph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return TargetGraph(leaves + 1, std::move(es));
}

/// Edge-list text: "n; u-v u-v ..." with 1-based labels. Separators between
/// pairs may be spaces, commas or newlines; '#' starts a comment line.
inline TargetGraph parse_graph(std::string_view text) {
  std::string clean;
  {
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      clean += line;
      clean += ' ';
    }
  }
  auto semi = clean.find(';');
  if (semi == std::string::npos) throw GraphError("expected 'n; u-v ...'");
  int n = 0;
  {
    std::istringstream head(clean.substr(0, semi));
    if (!(head >> n) || n < 1) throw GraphError("bad vertex count");
    std::string rest;
    if (head >> rest) throw GraphError("unexpected text before ';'");
  }
  std::string body = clean.substr(semi + 1);
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  std::vector<Edge> edges;
  std::string token;
  while (in >> token) {
    auto dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
      throw GraphError("malformed pair '" + token + "'");
    int a = 0, b = 0;
    try {
      std::size_t used_a = 0, used_b = 0;
      a = std::stoi(token.substr(0, dash), &used_a);
      b = std::stoi(token.substr(dash + 1), &used_b);
      if (used_a != dash || used_b != token.size() - dash - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw GraphError("malformed pair '" + token + "'");
    }
    if (a < 1 || b < 1 || a > n || b > n) throw GraphError("pair '" + token + "' out of range");
    if (a == b) throw GraphError("self-loop '" + token + "'");
    edges.emplace_back(a - 1, b - 1);
  }
  return TargetGraph(n, std::move(edges));
}

inline std::string to_edge_list(const TargetGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + ";";
  for (const Edge& e : g.edges()) out += " " + to_string(e);
  return out;
}

/// Upper triangle of the adjacency matrix, row-major: (1,2),(1,3)...(1,n),(2,3),...
inline std::string to_bitstring(const TargetGraph& g) {
  const int n = g.vertex_count();
  std::string bits;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) bits += g.has_edge(i, j) ? '1' : '0';
  return bits;
}

inline TargetGraph parse_bitstring(std::string_view bits) {
  const auto len = static_cast<int>(bits.size());
  int n = 1;
  while (pair_count(n) < len) ++n;
  if (pair_count(n) != len) throw GraphError("bit string length is not n(n-1)/2");
  std::vector<Edge> edges;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      if (bits[k] == '1') {
        edges.emplace_back(i, j);
      } else if (bits[k] != '0') {
        throw GraphError("bit string may only contain '0' and '1'");
      }
    }
  return TargetGraph(n, std::move(edges));
}

/// Accepts either interchange format.
inline TargetGraph parse_any_graph(std::string_view text) {
  if (text.find(';') != std::string_view::npos) return parse_graph(text);
  std::string bits;
  for (char c : text)
    if (c != ' ' && c != '\n' && c != '\r' && c != '\t') bits += c;
  return parse_bitstring(bits);
}

struct DfsOrder {
  std::vector<int> order;   // v0 .. v_{n-1}
  std::vector<int> parent;  // parent[v], -1 for the root
};

/// Depth-first order rooted at vertex 0, children in increasing label order.
/// Every prefix of the order induces a connected subtree.
inline DfsOrder dfs_order(const TargetGraph& tree) {
  if (!tree.is_tree()) throw GraphError("dfs_order needs a tree");
  const int n = tree.vertex_count();
  auto adj = tree.adjacency();
  DfsOrder out;
  out.parent.assign(n, -1);
  std::vector<char> seen(n, 0);
  // explicit stack of (vertex, next child position)
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  seen[0] = 1;
  out.order.push_back(0);
  while (!stack.empty()) {
    auto& [x, pos] = stack.back();
    if (pos == adj[x].size()) {
      stack.pop_back();
      continue;
    }
    int y = adj[x][pos++];
    if (seen[y]) continue;
    seen[y] = 1;
    out.parent[y] = x;
    out.order.push_back(y);
    stack.emplace_back(y, 0);
  }
  return out;
}

}  // namespace ramsey

#endif  // RAMSEY_GRAPH_HPP
