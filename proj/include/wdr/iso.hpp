#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdr/digraph.hpp"

namespace wdr {

inline constexpr int kMaxIsoOrder = 16;

/// Relabeling-invariant identity of a digraph: the order byte followed by
/// the lexicographically minimal adjacency encoding over an
/// invariant-pruned permutation search. Equal certificates and
/// isomorphism coincide for orders up to 16.
struct Certificate {
  std::vector<std::uint8_t> bytes;

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
      s.push_back(digits[b >> 4]);
      s.push_back(digits[b & 0xf]);
    }
    return s;
  }

  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

namespace detail {

/// Relabeling-invariant vertex fingerprint: degrees plus the sorted
/// multisets of forward and backward BFS levels (0xff = unreachable).
/// Works on digraphs that are not strongly connected.
inline std::vector<std::uint8_t> vertex_profile(const Digraph& g, int v) {
  const int n = g.order();
  std::vector<std::uint64_t> out_rows(static_cast<std::size_t>(n)),
      in_rows(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    out_rows[static_cast<std::size_t>(u)] = g.out_row(u);
    in_rows[static_cast<std::size_t>(u)] = g.in_row(u);
  }
  std::vector<std::uint8_t> profile;
  profile.push_back(static_cast<std::uint8_t>(g.out_degree(v)));
  profile.push_back(static_cast<std::uint8_t>(g.in_degree(v)));
  std::array<std::uint8_t, 64> dist{};
  bfs_levels(out_rows.data(), n, v, dist.data());
  std::vector<std::uint8_t> level(dist.begin(), dist.begin() + n);
  std::sort(level.begin(), level.end());
  profile.insert(profile.end(), level.begin(), level.end());
  bfs_levels(in_rows.data(), n, v, dist.data());
  level.assign(dist.begin(), dist.begin() + n);
  std::sort(level.begin(), level.end());
  profile.insert(profile.end(), level.begin(), level.end());
  return profile;
}

inline std::vector<std::vector<std::uint8_t>> vertex_profiles(const Digraph& g) {
  std::vector<std::vector<std::uint8_t>> p;
  p.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) p.push_back(vertex_profile(g, v));
  return p;
}

}  // namespace detail

/// Finds a vertex bijection f with (u,v) in A(a) iff (f(u),f(v)) in A(b),
/// or nothing. Backtracking over profile-compatible assignments.
inline std::optional<std::vector<int>> are_isomorphic(const Digraph& a,
                                                      const Digraph& b) {
  if (a.order() > kMaxIsoOrder || b.order() > kMaxIsoOrder)
    throw precondition_error("isomorphism search supports order <= 16");
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return std::nullopt;
  const int n = a.order();

  const auto pa = detail::vertex_profiles(a);
  const auto pb = detail::vertex_profiles(b);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Assign a-vertices in order of rarest profile first.
  std::vector<int> freq(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (pa[static_cast<std::size_t>(u)] == pa[static_cast<std::size_t>(v)])
        ++freq[static_cast<std::size_t>(u)];
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) order[static_cast<std::size_t>(u)] = u;
  std::sort(order.begin(), order.end(), [&](int u, int v) {
    if (freq[static_cast<std::size_t>(u)] != freq[static_cast<std::size_t>(v)])
      return freq[static_cast<std::size_t>(u)] < freq[static_cast<std::size_t>(v)];
    return u < v;
  });

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;

  auto consistent = [&](int av, int bv) {
    for (int u = 0; u < n; ++u) {
      const int bu = map[static_cast<std::size_t>(u)];
      if (bu < 0) continue;
      if (a.has_arc(av, u) != b.has_arc(bv, bu)) return false;
      if (a.has_arc(u, av) != b.has_arc(bu, bv)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int av = order[static_cast<std::size_t>(depth)];
    for (int bv = 0; bv < n; ++bv) {
      if (used >> bv & 1) continue;
      if (pa[static_cast<std::size_t>(av)] != pb[static_cast<std::size_t>(bv)]) continue;
      if (!consistent(av, bv)) continue;
      map[static_cast<std::size_t>(av)] = bv;
      used |= std::uint64_t{1} << bv;
      if (self(self, depth + 1)) return true;
      used &= ~(std::uint64_t{1} << bv);
      map[static_cast<std::size_t>(av)] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

/// Canonical certificate via branch-and-bound over class-respecting
/// relabelings. Positions are grouped by sorted vertex profile; within
/// that constraint the adjacency encoding is minimized bit by bit.
/// The encoding appends, for k = 1..n-1, the column bits M[i][k] (i < k)
/// followed by the row bits M[k][j] (j < k).
inline Certificate canonical_certificate(const Digraph& g) {
  const int n = g.order();
  if (n > kMaxIsoOrder)
    throw precondition_error("certificate computation supports order <= 16");

  const auto profiles = detail::vertex_profiles(g);
  auto sorted_profiles = profiles;
  std::sort(sorted_profiles.begin(), sorted_profiles.end());
  sorted_profiles.erase(std::unique(sorted_profiles.begin(), sorted_profiles.end()),
                        sorted_profiles.end());
  // class_of_pos[k] = profile class a vertex must belong to at position k
  std::vector<int> class_of(static_cast<std::size_t>(n));
  std::vector<int> class_sizes(sorted_profiles.size(), 0);
  for (int v = 0; v < n; ++v) {
    const auto it = std::lower_bound(sorted_profiles.begin(), sorted_profiles.end(),
                                     profiles[static_cast<std::size_t>(v)]);
    class_of[static_cast<std::size_t>(v)] =
        static_cast<int>(it - sorted_profiles.begin());
    ++class_sizes[static_cast<std::size_t>(class_of[static_cast<std::size_t>(v)])];
  }
  std::vector<int> class_of_pos(static_cast<std::size_t>(n));
  {
    int pos = 0;
    for (std::size_t c = 0; c < class_sizes.size(); ++c)
      for (int i = 0; i < class_sizes[c]; ++i)
        class_of_pos[static_cast<std::size_t>(pos++)] = static_cast<int>(c);
  }

  const std::size_t total_bits = static_cast<std::size_t>(n) * (n - 1);
  std::vector<std::uint8_t> bits;
  bits.reserve(total_bits);
  std::vector<std::uint8_t> best;
  bool have_best = false;

  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(n));
  std::uint64_t used = 0;

  // Bounds degenerate inputs (complete digraphs and the like); the
  // classification corpus stays orders of magnitude below this.
  long long budget = 1ll << 22;

  struct Cand {
    std::vector<std::uint8_t> seg;
    int v;
    bool operator<(const Cand& o) const {
      return seg != o.seg ? seg < o.seg : v < o.v;
    }
  };

  auto rec = [&](auto&& self, int k) -> void {
    if (--budget < 0)
      throw precondition_error("certificate search budget exceeded");
    if (k == n) {
      if (!have_best || bits < best) {
        best = bits;
        have_best = true;
      }
      return;
    }
    std::vector<Cand> cands;
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      if (class_of[static_cast<std::size_t>(v)] !=
          class_of_pos[static_cast<std::size_t>(k)])
        continue;
      Cand c;
      c.v = v;
      c.seg.reserve(static_cast<std::size_t>(2 * k));
      for (int i = 0; i < k; ++i)
        c.seg.push_back(g.has_arc(perm[static_cast<std::size_t>(i)], v) ? 1 : 0);
      for (int j = 0; j < k; ++j)
        c.seg.push_back(g.has_arc(v, perm[static_cast<std::size_t>(j)]) ? 1 : 0);
      cands.push_back(std::move(c));
    }
    std::sort(cands.begin(), cands.end());
    const std::size_t off = bits.size();
    for (const auto& c : cands) {
      if (have_best && std::equal(bits.begin(), bits.end(), best.begin())) {
        // Prefix is tight against the current best: a larger segment can
        // never improve it, and candidates are sorted.
        const auto ord = std::lexicographical_compare_three_way(
            c.seg.begin(), c.seg.end(), best.begin() + static_cast<std::ptrdiff_t>(off),
            best.begin() + static_cast<std::ptrdiff_t>(off + c.seg.size()));
        if (ord == std::strong_ordering::greater) break;
      }
      bits.insert(bits.end(), c.seg.begin(), c.seg.end());
      perm.push_back(c.v);
      used |= std::uint64_t{1} << c.v;
      self(self, k + 1);
      used &= ~(std::uint64_t{1} << c.v);
      perm.pop_back();
      bits.resize(off);
    }
  };
  rec(rec, 0);

  Certificate cert;
  cert.bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t acc = 0;
  int nbits = 0;
  for (std::uint8_t b : best) {
    acc = static_cast<std::uint8_t>(acc << 1 | b);
    if (++nbits == 8) {
      cert.bytes.push_back(acc);
      acc = 0;
      nbits = 0;
    }
  }
  if (nbits) cert.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
  return cert;
}

}  // namespace wdr
