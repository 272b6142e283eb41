#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wdr/digraph.hpp"
#include "wdr/two_way.hpp"

namespace wdr {

/// Partition of V x V by two-way distance type, with per-vertex fibers
/// kept as bitmasks. Types are sorted lexicographically by
/// (forward, backward); the diagonal type (0,0) is always first.
struct RelationPartition {
  int order = 0;
  int diameter = 0;
  std::vector<TwoWayType> types;
  std::vector<std::vector<Arc>> pairs_by_type;  // aligned with types, each ascending
  std::vector<std::optional<int>> valencies;    // nullopt marks a non-constant fiber size
  std::vector<std::int16_t> type_of_pair;       // order*order, row-major
  std::vector<std::uint64_t> fibers;            // order*types.size() bitmasks

  int type_count() const { return static_cast<int>(types.size()); }

  /// Index of t in types, or -1 when absent.
  int type_index(TwoWayType t) const {
    auto it = std::lower_bound(types.begin(), types.end(), t);
    return it != types.end() && *it == t ? static_cast<int>(it - types.begin()) : -1;
  }

  TwoWayType type_of(int x, int y) const {
    return types[static_cast<std::size_t>(
        type_of_pair[static_cast<std::size_t>(x) * order + y])];
  }

  /// Bitmask of { y : type(x,y) == types[t] }.
  std::uint64_t fiber(int x, int t) const {
    return fibers[static_cast<std::size_t>(x) * types.size() + t];
  }

  bool valencies_constant() const {
    for (const auto& k : valencies)
      if (!k) return false;
    return true;
  }
};

/// Computes the two-way distance partition. Requires strong connectivity
/// (propagated from distance_matrix).
inline RelationPartition two_way_partition(const Digraph& g) {
  const DistanceMatrix dm = distance_matrix(g);
  const int n = g.order();

  RelationPartition part;
  part.order = n;
  part.diameter = dm.diameter();

  std::vector<TwoWayType> all;
  all.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) all.push_back({dm.at(x, y), dm.at(y, x)});
  part.types = all;
  std::sort(part.types.begin(), part.types.end());
  part.types.erase(std::unique(part.types.begin(), part.types.end()),
                   part.types.end());

  const std::size_t tcount = part.types.size();
  part.pairs_by_type.assign(tcount, {});
  part.type_of_pair.assign(static_cast<std::size_t>(n) * n, 0);
  part.fibers.assign(static_cast<std::size_t>(n) * tcount, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int t = part.type_index(all[static_cast<std::size_t>(x) * n + y]);
      part.type_of_pair[static_cast<std::size_t>(x) * n + y] =
          static_cast<std::int16_t>(t);
      part.pairs_by_type[static_cast<std::size_t>(t)].emplace_back(x, y);
      part.fibers[static_cast<std::size_t>(x) * tcount + t] |= std::uint64_t{1} << y;
    }

  part.valencies.assign(tcount, std::nullopt);
  for (std::size_t t = 0; t < tcount; ++t) {
    const int k0 = std::popcount(part.fiber(0, static_cast<int>(t)));
    bool constant = true;
    for (int x = 1; x < n && constant; ++x)
      constant = std::popcount(part.fiber(x, static_cast<int>(t))) == k0;
    if (constant) part.valencies[t] = k0;
  }
  return part;
}

}  // namespace wdr
