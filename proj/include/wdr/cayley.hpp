#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wdr/digraph.hpp"

namespace wdr {

/// Connection-set description of a Cayley digraph over Z_n or Z_q x Z_m.
struct CayleySpec {
  enum class Group { cyclic, product };

  Group group = Group::cyclic;
  int n = 0;                                     // cyclic modulus
  int q = 0, m = 0;                              // product factors
  std::vector<int> cyclic_set;                   // sorted nonzero residues
  std::vector<std::pair<int, int>> product_set;  // sorted nonzero pairs

  std::string to_string() const {
    std::string s;
    if (group == Group::cyclic) {
      s = "cay:zn:" + std::to_string(n) + ":";
      for (std::size_t i = 0; i < cyclic_set.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cyclic_set[i]);
      }
    } else {
      s = "cay:prod:" + std::to_string(q) + "x" + std::to_string(m) + ":";
      for (std::size_t i = 0; i < product_set.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(product_set[i].first) + "." +
             std::to_string(product_set[i].second);
      }
    }
    return s;
  }

  Digraph build() const;

  friend bool operator==(const CayleySpec&, const CayleySpec&) = default;
};

/// Cay(Z_n, s): arcs x -> x + c (mod n) for every c in s.
inline Digraph cayley_cyclic(int n, std::span<const int> s) {
  if (n < 2) throw input_error("cyclic group order must be at least 2");
  if (n > kMaxOrder) throw input_error("cyclic group order exceeds 64");
  if (s.empty()) throw input_error("connection set must be nonempty");
  std::uint64_t set_mask = 0;
  for (int c : s) {
    if (c <= 0 || c >= n)
      throw input_error("connection element " + std::to_string(c) +
                        " is not a nonzero residue mod " + std::to_string(n));
    if (set_mask >> c & 1)
      throw input_error("duplicate connection element " + std::to_string(c));
    set_mask |= std::uint64_t{1} << c;
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int c : s) rows[static_cast<std::size_t>(x)] |= std::uint64_t{1} << ((x + c) % n);
  return Digraph::from_rows(n, std::move(rows));
}

inline Digraph cayley_cyclic(int n, std::initializer_list<int> s) {
  return cayley_cyclic(n, std::span<const int>(s.begin(), s.size()));
}

/// Cay(Z_q x Z_m, s); vertex (a, b) is indexed a*m + b. m = 1 degenerates
/// to the cyclic case.
inline Digraph cayley_product(int q, int m, std::span<const std::pair<int, int>> s) {
  if (q < 2 || m < 1) throw input_error("product group needs q >= 2 and m >= 1");
  if (q * m > kMaxOrder) throw input_error("product group order exceeds 64");
  if (s.empty()) throw input_error("connection set must be nonempty");
  std::vector<std::pair<int, int>> norm;
  for (auto [a, b] : s) {
    a %= q;
    if (a < 0) a += q;
    b %= m;
    if (b < 0) b += m;
    if (a == 0 && b == 0) throw input_error("identity element in connection set");
    norm.emplace_back(a, b);
  }
  std::sort(norm.begin(), norm.end());
  if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
    throw input_error("duplicate element in connection set");
  const int order = q * m;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(order), 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < m; ++b)
      for (auto [da, db] : norm) {
        const int to = ((a + da) % q) * m + (b + db) % m;
        rows[static_cast<std::size_t>(a * m + b)] |= std::uint64_t{1} << to;
      }
  return Digraph::from_rows(order, std::move(rows));
}

inline Digraph cayley_product(int q, int m,
                              std::initializer_list<std::pair<int, int>> s) {
  return cayley_product(q, m, std::span<const std::pair<int, int>>(s.begin(), s.size()));
}

inline Digraph CayleySpec::build() const {
  if (group == Group::cyclic) return cayley_cyclic(n, cyclic_set);
  return cayley_product(q, m, product_set);
}

inline CayleySpec cyclic_spec(int n, std::vector<int> set) {
  CayleySpec s;
  s.group = CayleySpec::Group::cyclic;
  s.n = n;
  s.cyclic_set = std::move(set);
  std::sort(s.cyclic_set.begin(), s.cyclic_set.end());
  return s;
}

inline CayleySpec product_spec(int q, int m, std::vector<std::pair<int, int>> set) {
  CayleySpec s;
  s.group = CayleySpec::Group::product;
  s.q = q;
  s.m = m;
  s.product_set = std::move(set);
  std::sort(s.product_set.begin(), s.product_set.end());
  return s;
}

struct CatalogEntry {
  std::string label;
  CayleySpec spec;
};

/// The nine commutative weakly distance-regular digraphs of diameter 2
/// with regular attached scheme, as circulant connection sets.
inline const std::vector<CatalogEntry>& classification_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {"i", cyclic_spec(3, {1})},
      {"ii", cyclic_spec(4, {1, 2})},
      {"iii", cyclic_spec(6, {1, 3, 4})},
      {"iv", cyclic_spec(6, {1, 2, 3, 5})},
      {"v", cyclic_spec(8, {1, 2, 5, 6})},
      {"vi", cyclic_spec(8, {1, 2, 3, 5, 7})},
      {"vii", cyclic_spec(12, {1, 3, 4, 7, 9, 10})},
      {"viii", cyclic_spec(12, {1, 3, 4, 5, 7, 9, 11})},
      {"ix", cyclic_spec(12, {1, 2, 3, 5, 7, 8, 9, 11})},
  };
  return catalog;
}

/// Every nonempty connection set over Z_n for n in [n_min, n_max], in
/// deterministic order: n ascending, then the set bitmask ascending
/// (residue c maps to bit c-1). With exclude_undirected set, sets equal
/// to their negation are skipped.
inline std::vector<CayleySpec> enumerate_circulants(int n_min, int n_max,
                                                    bool exclude_undirected) {
  if (n_min < 2 || n_min > n_max || n_max > 16)
    throw precondition_error("circulant range must satisfy 2 <= min <= max <= 16");
  std::vector<CayleySpec> out;
  for (int n = n_min; n <= n_max; ++n) {
    const std::uint32_t limit = std::uint32_t{1} << (n - 1);
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      std::vector<int> set;
      for (int c = 1; c < n; ++c)
        if (mask >> (c - 1) & 1) set.push_back(c);
      if (exclude_undirected) {
        bool symmetric = true;
        for (int c : set)
          if (!(mask >> (n - c - 1) & 1)) {
            symmetric = false;
            break;
          }
        if (symmetric) continue;
      }
      out.push_back(cyclic_spec(n, std::move(set)));
    }
  }
  return out;
}

}  // namespace wdr
