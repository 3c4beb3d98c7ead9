#ifndef RAMSEY_CANONICAL_HPP
#define RAMSEY_CANONICAL_HPP

// Canonical form of an edge-3-coloured complete graph.
//
// Exact individualisation/refinement: vertices are partitioned by their
// (blue, red) neighbour counts into each cell until stable, then the first
// non-singleton cell is split on each of its vertices in turn. Every discrete
// partition gives a relabelling; the lexicographically smallest colour
// sequence (edges in colex order) is the canonical code. Twin vertices of a
// cell (same colour to every other vertex) span only one branch, which keeps
// sparse boards cheap.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "ramsey/board.hpp"

namespace ramsey {

/// Largest order canonical_form accepts (2 bits per edge, 28 edges).
inline constexpr int kCanonicalMaxOrder = 8;

/// Colour classes as edge-index bit masks.
struct PackedBoard {
  int n = 0;
  std::uint32_t blue = 0;
  std::uint32_t red = 0;

  Color color_at(int index) const {
    if (blue >> index & 1u) return Color::Blue;
    if (red >> index & 1u) return Color::Red;
    return Color::Uncolored;
  }
  int edge_total() const { return pair_count(n); }
  friend bool operator==(const PackedBoard&, const PackedBoard&) = default;
};

inline PackedBoard pack(const BoardState& s) {
  if (s.order() > kCanonicalMaxOrder)
    throw GameError("canonical form supports boards up to K_" + std::to_string(kCanonicalMaxOrder));
  PackedBoard pb{s.order(), 0, 0};
  for (int i = 0; i < s.edge_total(); ++i) {
    if (s.color_at(i) == Color::Blue) pb.blue |= 1u << i;
    if (s.color_at(i) == Color::Red) pb.red |= 1u << i;
  }
  return pb;
}

/// Image of the board under the vertex map old v -> perm[v].
template <class Perm>
PackedBoard permuted(const PackedBoard& b, const Perm& perm) {
  PackedBoard out{b.n, 0, 0};
  for (int i = 0; i < b.edge_total(); ++i) {
    const Edge e = edge_at(i);
    const int j = edge_index(Edge(perm[e.u], perm[e.v]));
    if (b.blue >> i & 1u) out.blue |= 1u << j;
    if (b.red >> i & 1u) out.red |= 1u << j;
  }
  return out;
}

namespace detail {

class Canonicaliser {
public:
  explicit Canonicaliser(const PackedBoard& b) : n_(b.n) {
    blue_.fill(0);
    red_.fill(0);
    for (int i = 0; i < b.edge_total(); ++i) {
      const Edge e = edge_at(i);
      if (b.blue >> i & 1u) {
        blue_[e.u] |= 1u << e.v;
        blue_[e.v] |= 1u << e.u;
      } else if (b.red >> i & 1u) {
        red_[e.u] |= 1u << e.v;
        red_[e.v] |= 1u << e.u;
      }
    }
  }

  std::uint64_t run() {
    Cells cells{};
    cells[0] = n_ == 32 ? ~0u : ((1u << n_) - 1);
    search(cells, 1);
    return best_;
  }

private:
  using Cells = std::array<std::uint32_t, kCanonicalMaxOrder>;

  std::uint64_t signature(int v, const Cells& cells, int ncells) const {
    std::uint64_t sig = 0;
    for (int j = 0; j < ncells; ++j) {
      const auto nb = static_cast<std::uint64_t>(std::popcount(blue_[v] & cells[j]));
      const auto nr = static_cast<std::uint64_t>(std::popcount(red_[v] & cells[j]));
      sig |= (nb | nr << 4) << (8 * j);
    }
    return sig;
  }

  // Splits cells by signature until nothing changes. Sub-cells are ordered by
  // signature, so the result is labelling-independent.
  int refine(Cells& cells, int ncells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < ncells && !changed; ++i) {
        if (std::popcount(cells[i]) < 2) continue;
        std::array<std::pair<std::uint64_t, int>, kCanonicalMaxOrder> sv{};
        int k = 0;
        for (std::uint32_t m = cells[i]; m; m &= m - 1) {
          const int v = std::countr_zero(m);
          sv[k++] = {signature(v, cells, ncells), v};
        }
        std::sort(sv.begin(), sv.begin() + k);
        if (sv[0].first == sv[k - 1].first) continue;
        Cells next{};
        int nn = 0;
        for (int j = 0; j < i; ++j) next[nn++] = cells[j];
        for (int a = 0; a < k;) {
          std::uint32_t part = 0;
          int b = a;
          while (b < k && sv[b].first == sv[a].first) part |= 1u << sv[b++].second;
          next[nn++] = part;
          a = b;
        }
        for (int j = i + 1; j < ncells; ++j) next[nn++] = cells[j];
        cells = next;
        ncells = nn;
        changed = true;
      }
    }
    return ncells;
  }

  bool twins(int u, int v) const {
    const std::uint32_t mu = ~(1u << v), mv = ~(1u << u);
    return (blue_[u] & mu) == (blue_[v] & mv) && (red_[u] & mu) == (red_[v] & mv);
  }

  void search(Cells cells, int ncells) {
    ncells = refine(cells, ncells);
    if (ncells == n_) {
      leaf(cells);
      return;
    }
    int i = 0;
    while (std::popcount(cells[i]) < 2) ++i;
    std::uint32_t tried = 0;
    for (std::uint32_t m = cells[i]; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      bool redundant = false;
      for (std::uint32_t t = tried; t && !redundant; t &= t - 1) redundant = twins(std::countr_zero(t), v);
      if (redundant) continue;
      tried |= 1u << v;
      Cells next{};
      int nn = 0;
      for (int j = 0; j < i; ++j) next[nn++] = cells[j];
      next[nn++] = 1u << v;
      next[nn++] = cells[i] & ~(1u << v);
      for (int j = i + 1; j < ncells; ++j) next[nn++] = cells[j];
      search(next, nn);
    }
  }

  void leaf(const Cells& cells) {
    std::array<int, kCanonicalMaxOrder> old{};
    for (int k = 0; k < n_; ++k) old[k] = std::countr_zero(cells[k]);
    std::uint64_t code = 0;
    const int total = pair_count(n_);
    for (int i = 0; i < total; ++i) {
      const Edge e = edge_at(i);
      const int a = old[e.u], b = old[e.v];
      std::uint64_t c = 0;
      if (blue_[a] >> b & 1u) c = 1;
      else if (red_[a] >> b & 1u) c = 2;
      code = code << 2 | c;
    }
    if (code < best_) best_ = code;
  }

  int n_;
  std::array<std::uint32_t, kCanonicalMaxOrder> blue_{};
  std::array<std::uint32_t, kCanonicalMaxOrder> red_{};
  std::uint64_t best_ = ~std::uint64_t{0};
};

}  // namespace detail

/// Packed canonical code: 2 bits per edge (0 uncolored, 1 blue, 2 red) in the
/// canonical labelling's colex order, first edge most significant. Two boards
/// of the same order share a code iff they are isomorphic.
inline std::uint64_t canonical_code(const PackedBoard& b) {
  if (b.n > kCanonicalMaxOrder || b.n < 1)
    throw GameError("canonical form supports boards up to K_" + std::to_string(kCanonicalMaxOrder));
  if (b.n == 1) return 0;
  return detail::Canonicaliser(b).run();
}

/// Byte string: the order, then the canonical colour sequence packed four
/// edges per byte, most significant bits first.
inline std::string canonical_form(const BoardState& s) {
  const PackedBoard pb = pack(s);
  const std::uint64_t code = canonical_code(pb);
  const int total = pb.edge_total();
  std::string out(1, static_cast<char>(pb.n));
  unsigned char byte = 0;
  for (int i = 0; i < total; ++i) {
    const auto c = static_cast<unsigned char>(code >> (2 * (total - 1 - i)) & 3u);
    byte = static_cast<unsigned char>(byte << 2 | c);
    if (i % 4 == 3 || i + 1 == total) {
      if (i % 4 != 3) byte = static_cast<unsigned char>(byte << (2 * (3 - i % 4)));
      out.push_back(static_cast<char>(byte));
      byte = 0;
    }
  }
  return out;
}

}  // namespace ramsey

#endif  // RAMSEY_CANONICAL_HPP
