#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wdr {

inline constexpr int kMaxOrder = 64;
inline constexpr std::uint8_t kUnreachable = 0xff;

/// Invalid or malformed input (bad arc lists, bad spec strings).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its stated preconditions.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Arc = std::pair<int, int>;

/// Loop-free digraph on vertices 0..order-1. Adjacency is kept as one
/// 64-bit row per vertex (successors) plus the transposed rows, so order
/// is capped at 64. Immutable after construction.
class Digraph {
 public:
  Digraph() = default;

  /// Wraps precomputed adjacency rows without validation. Rows must have
  /// no diagonal bits and no bits at or above `order`.
  static Digraph from_rows(int order, std::vector<std::uint64_t> rows) {
    Digraph d;
    d.order_ = order;
    d.out_ = std::move(rows);
    d.in_.assign(static_cast<std::size_t>(order), 0);
    for (int u = 0; u < order; ++u)
      for (std::uint64_t m = d.out_[static_cast<std::size_t>(u)]; m; m &= m - 1)
        d.in_[static_cast<std::size_t>(std::countr_zero(m))] |= std::uint64_t{1} << u;
    return d;
  }

  int order() const { return order_; }

  bool has_arc(int u, int v) const {
    return out_[static_cast<std::size_t>(u)] >> v & 1;
  }
  std::uint64_t out_row(int u) const { return out_[static_cast<std::size_t>(u)]; }
  std::uint64_t in_row(int v) const { return in_[static_cast<std::size_t>(v)]; }

  int out_degree(int u) const { return std::popcount(out_row(u)); }
  int in_degree(int v) const { return std::popcount(in_row(v)); }

  int arc_count() const {
    int c = 0;
    for (int u = 0; u < order_; ++u) c += out_degree(u);
    return c;
  }

  /// All arcs in ascending (u, v) order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> a;
    a.reserve(static_cast<std::size_t>(arc_count()));
    for (int u = 0; u < order_; ++u)
      for (std::uint64_t m = out_row(u); m; m &= m - 1)
        a.emplace_back(u, std::countr_zero(m));
    return a;
  }

  /// True when no one-way arc exists, i.e. every arc is paired with its
  /// reverse. A digraph without arcs counts as undirected.
  bool is_undirected() const {
    for (int u = 0; u < order_; ++u)
      if (out_[static_cast<std::size_t>(u)] != in_[static_cast<std::size_t>(u)]) return false;
    return true;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int order_ = 0;
  std::vector<std::uint64_t> out_, in_;
};

/// Validating constructor. Duplicate arcs are rejected, not merged, so a
/// corrupted arc list fails loudly.
inline Digraph build_digraph(int order, std::span<const Arc> arcs,
                             bool require_not_undirected) {
  if (order < 1) throw input_error("digraph order must be at least 1");
  if (order > kMaxOrder)
    throw input_error("digraph order " + std::to_string(order) +
                      " exceeds the supported maximum of 64");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(order), 0);
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= order || v < 0 || v >= order)
      throw input_error("arc (" + std::to_string(u) + "," + std::to_string(v) +
                        ") has an endpoint out of range");
    if (u == v) throw input_error("loop at vertex " + std::to_string(u));
    if (rows[static_cast<std::size_t>(u)] >> v & 1)
      throw input_error("duplicate arc (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
    rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  }
  Digraph d = Digraph::from_rows(order, std::move(rows));
  if (require_not_undirected && d.is_undirected())
    throw input_error("digraph is undirected: no arc lacks its reverse");
  return d;
}

inline Digraph build_digraph(int order, std::initializer_list<Arc> arcs,
                             bool require_not_undirected) {
  return build_digraph(order, std::span<const Arc>(arcs.begin(), arcs.size()),
                       require_not_undirected);
}

namespace detail {

/// BFS levels from src over the given adjacency rows; unreachable
/// vertices keep kUnreachable.
inline void bfs_levels(const std::uint64_t* rows, int n, int src,
                       std::uint8_t* dist) {
  std::fill(dist, dist + n, kUnreachable);
  dist[src] = 0;
  std::uint64_t seen = std::uint64_t{1} << src;
  std::uint64_t frontier = seen;
  for (std::uint8_t level = 1; frontier; ++level) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1)
      next |= rows[std::countr_zero(m)];
    next &= ~seen;
    for (std::uint64_t m = next; m; m &= m - 1)
      dist[std::countr_zero(m)] = level;
    seen |= next;
    frontier = next;
  }
}

inline std::uint64_t all_vertices_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace detail

inline bool is_strongly_connected(const Digraph& g) {
  const std::uint64_t all = detail::all_vertices_mask(g.order());
  auto reach = [](auto row) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1)
        next |= row(std::countr_zero(m));
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen;
  };
  return reach([&g](int u) { return g.out_row(u); }) == all &&
         reach([&g](int u) { return g.in_row(u); }) == all;
}

/// All-pairs shortest-path distances, row-major.
struct DistanceMatrix {
  int order = 0;
  std::vector<std::uint8_t> d;

  std::uint8_t at(int x, int y) const {
    return d[static_cast<std::size_t>(x) * order + y];
  }
  int diameter() const {
    std::uint8_t m = 0;
    for (std::uint8_t v : d) m = std::max(m, v);
    return m;
  }
};

/// BFS from every source. Throws precondition_error naming a witness pair
/// when the digraph is not strongly connected.
inline DistanceMatrix distance_matrix(const Digraph& g) {
  const int n = g.order();
  DistanceMatrix dm;
  dm.order = n;
  dm.d.assign(static_cast<std::size_t>(n) * n, kUnreachable);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) rows[static_cast<std::size_t>(u)] = g.out_row(u);
  for (int x = 0; x < n; ++x) {
    std::uint8_t* row = dm.d.data() + static_cast<std::size_t>(x) * n;
    detail::bfs_levels(rows.data(), n, x, row);
    for (int y = 0; y < n; ++y)
      if (row[y] == kUnreachable)
        throw precondition_error("digraph is not strongly connected: no path from " +
                                 std::to_string(x) + " to " + std::to_string(y));
  }
  return dm;
}

}  // namespace wdr
