#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "wdr/digraph.hpp"

namespace testutil {

inline wdr::Digraph triangle() {
  return wdr::build_digraph(3, {{0, 1}, {1, 2}, {2, 0}}, true);
}

/// 5-cycle with a chord (0,2); strongly connected but not weakly
/// distance-regular.
inline wdr::Digraph chorded_five_cycle() {
  return wdr::build_digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}, true);
}

/// Relabels vertices: perm[v] is the new label of v.
inline wdr::Digraph relabel(const wdr::Digraph& g, const std::vector<int>& perm) {
  std::vector<wdr::Arc> arcs;
  for (auto [u, v] : g.arcs())
    arcs.emplace_back(perm[static_cast<std::size_t>(u)],
                      perm[static_cast<std::size_t>(v)]);
  return wdr::build_digraph(g.order(), arcs, false);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline wdr::Digraph random_digraph(int n, double arc_probability, std::mt19937& rng) {
  std::bernoulli_distribution coin(arc_probability);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng)) rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  return wdr::Digraph::from_rows(n, std::move(rows));
}

}  // namespace testutil
