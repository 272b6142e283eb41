#pragma once

#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wdr/partition.hpp"

namespace wdr {

/// Two pairs of the same type whose z-counts disagree for some (i, j);
/// produced when the constancy test fails. A non-constant fiber size is
/// reported through the same shape with h = (0,0) and j = i*.
struct WdrWitness {
  TwoWayType h, i, j;
  Arc pair1{0, 0}, pair2{0, 0};
  int count1 = 0, count2 = 0;

  friend bool operator==(const WdrWitness&, const WdrWitness&) = default;
};

inline std::string to_string(const WdrWitness& w) {
  return "h=" + to_string(w.h) + " i=" + to_string(w.i) + " j=" + to_string(w.j) +
         " pair(" + std::to_string(w.pair1.first) + "," + std::to_string(w.pair1.second) +
         ")->" + std::to_string(w.count1) + " pair(" + std::to_string(w.pair2.first) +
         "," + std::to_string(w.pair2.second) + ")->" + std::to_string(w.count2);
}

/// Intersection numbers p^h_{i,j} of the two-way distance partition; only
/// defined when the digraph is weakly distance-regular. Types are sorted
/// lexicographically and addressed by index.
class IntersectionTensor {
 public:
  IntersectionTensor(std::vector<TwoWayType> types, std::vector<int> valencies,
                     std::vector<int> p)
      : types_(std::move(types)),
        valencies_(std::move(valencies)),
        p_(std::move(p)) {}

  const std::vector<TwoWayType>& types() const { return types_; }
  int type_count() const { return static_cast<int>(types_.size()); }
  const std::vector<int>& valencies() const { return valencies_; }
  int valency(int i) const { return valencies_[static_cast<std::size_t>(i)]; }

  int index(TwoWayType t) const {
    auto it = std::lower_bound(types_.begin(), types_.end(), t);
    return it != types_.end() && *it == t ? static_cast<int>(it - types_.begin()) : -1;
  }
  int index_checked(TwoWayType t) const {
    const int i = index(t);
    if (i < 0) throw input_error("unknown relation type " + to_string(t));
    return i;
  }
  /// Index of types[i]*.
  int conj(int i) const { return index(types_[static_cast<std::size_t>(i)].conjugate()); }

  int p(int h, int i, int j) const {
    const auto t = static_cast<std::size_t>(type_count());
    return p_[(static_cast<std::size_t>(h) * t + static_cast<std::size_t>(i)) * t +
              static_cast<std::size_t>(j)];
  }
  /// p^h_{i,j} by type; zero when any type is absent.
  int p(TwoWayType h, TwoWayType i, TwoWayType j) const {
    const int hi = index(h), ii = index(i), ji = index(j);
    if (hi < 0 || ii < 0 || ji < 0) return 0;
    return p(hi, ii, ji);
  }

  friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;

 private:
  std::vector<TwoWayType> types_;
  std::vector<int> valencies_;
  std::vector<int> p_;  // type_count^3, [h][i][j]
};

struct TensorResult {
  std::optional<IntersectionTensor> tensor;
  std::optional<WdrWitness> witness;
  bool ok() const { return tensor.has_value(); }
};

/// Verifies that for every h and every pair (x,y) of type h the count
/// |{z : type(x,z)=i, type(z,y)=j}| is constant, and builds the tensor.
/// Aborts at the first non-constant triple, returning both conflicting
/// counts. Fiber-size constancy is checked first.
inline TensorResult intersection_tensor(const RelationPartition& part) {
  const int n = part.order;
  const int tc = part.type_count();

  // Non-constant valency is already a WDR failure: k_i = p^(0,0)_{i,i*}.
  for (int t = 0; t < tc; ++t) {
    if (part.valencies[static_cast<std::size_t>(t)]) continue;
    const int k0 = std::popcount(part.fiber(0, t));
    for (int x = 1; x < n; ++x) {
      const int kx = std::popcount(part.fiber(x, t));
      if (kx != k0) {
        WdrWitness w;
        w.h = TwoWayType{0, 0};
        w.i = part.types[static_cast<std::size_t>(t)];
        w.j = w.i.conjugate();
        w.pair1 = {0, 0};
        w.pair2 = {x, x};
        w.count1 = k0;
        w.count2 = kx;
        return {std::nullopt, w};
      }
    }
  }

  std::vector<int> conj_index(static_cast<std::size_t>(tc));
  for (int t = 0; t < tc; ++t)
    conj_index[static_cast<std::size_t>(t)] =
        part.type_index(part.types[static_cast<std::size_t>(t)].conjugate());

  std::vector<int> p(static_cast<std::size_t>(tc) * tc * tc, 0);
  auto slot = [&](int h, int i, int j) -> int& {
    return p[(static_cast<std::size_t>(h) * tc + static_cast<std::size_t>(i)) * tc +
             static_cast<std::size_t>(j)];
  };

  for (int h = 0; h < tc; ++h) {
    const auto& pairs = part.pairs_by_type[static_cast<std::size_t>(h)];
    const auto [rx, ry] = pairs.front();
    for (int i = 0; i < tc; ++i)
      for (int j = 0; j < tc; ++j)
        slot(h, i, j) = std::popcount(part.fiber(rx, i) &
                                      part.fiber(ry, conj_index[static_cast<std::size_t>(j)]));
    for (std::size_t pi = 1; pi < pairs.size(); ++pi) {
      const auto [x, y] = pairs[pi];
      for (int i = 0; i < tc; ++i)
        for (int j = 0; j < tc; ++j) {
          const int c = std::popcount(part.fiber(x, i) &
                                      part.fiber(y, conj_index[static_cast<std::size_t>(j)]));
          if (c != slot(h, i, j)) {
            WdrWitness w;
            w.h = part.types[static_cast<std::size_t>(h)];
            w.i = part.types[static_cast<std::size_t>(i)];
            w.j = part.types[static_cast<std::size_t>(j)];
            w.pair1 = pairs.front();
            w.pair2 = pairs[pi];
            w.count1 = slot(h, i, j);
            w.count2 = c;
            return {std::nullopt, w};
          }
        }
    }
  }

  std::vector<int> valencies(static_cast<std::size_t>(tc));
  for (int t = 0; t < tc; ++t)
    valencies[static_cast<std::size_t>(t)] = *part.valencies[static_cast<std::size_t>(t)];
  return {IntersectionTensor(part.types, std::move(valencies), std::move(p)),
          std::nullopt};
}

inline TensorResult intersection_tensor(const Digraph& g) {
  return intersection_tensor(two_way_partition(g));
}

/// Set product EF = { h : sum_{i in E, j in F} p^h_{i,j} != 0 }, returned
/// sorted. Throws input_error on a type not present in the tensor.
inline std::vector<TwoWayType> relation_product(std::span<const TwoWayType> E,
                                                std::span<const TwoWayType> F,
                                                const IntersectionTensor& t) {
  std::vector<int> ei, fi;
  for (auto e : E) ei.push_back(t.index_checked(e));
  for (auto f : F) fi.push_back(t.index_checked(f));
  std::vector<TwoWayType> out;
  for (int h = 0; h < t.type_count(); ++h) {
    long long sum = 0;
    for (int i : ei)
      for (int j : fi) sum += t.p(h, i, j);
    if (sum != 0) out.push_back(t.types()[static_cast<std::size_t>(h)]);
  }
  return out;
}

inline std::vector<TwoWayType> relation_product(std::initializer_list<TwoWayType> E,
                                                std::initializer_list<TwoWayType> F,
                                                const IntersectionTensor& t) {
  return relation_product(std::span<const TwoWayType>(E.begin(), E.size()),
                          std::span<const TwoWayType>(F.begin(), F.size()), t);
}

/// Minimal closed subset containing the generators: the fixpoint of
/// E -> E u { types of G_{i*} G_j : i, j in E }. Always contains (0,0).
inline std::vector<TwoWayType> closed_subset(std::span<const TwoWayType> generators,
                                             const IntersectionTensor& t) {
  if (generators.empty())
    throw precondition_error("closed_subset requires a nonempty generator set");
  const int tc = t.type_count();
  std::vector<char> in(static_cast<std::size_t>(tc), 0);
  for (auto g : generators) in[static_cast<std::size_t>(t.index_checked(g))] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < tc; ++i) {
      if (!in[static_cast<std::size_t>(i)]) continue;
      for (int j = 0; j < tc; ++j) {
        if (!in[static_cast<std::size_t>(j)]) continue;
        const int ic = t.conj(i);
        for (int h = 0; h < tc; ++h)
          if (!in[static_cast<std::size_t>(h)] && t.p(h, ic, j) != 0) {
            in[static_cast<std::size_t>(h)] = 1;
            grew = true;
          }
      }
    }
  }
  std::vector<TwoWayType> out;
  for (int i = 0; i < tc; ++i)
    if (in[static_cast<std::size_t>(i)]) out.push_back(t.types()[static_cast<std::size_t>(i)]);
  return out;
}

inline std::vector<TwoWayType> closed_subset(std::initializer_list<TwoWayType> generators,
                                             const IntersectionTensor& t) {
  return closed_subset(std::span<const TwoWayType>(generators.begin(), generators.size()), t);
}

/// P_{i,j}(x,y) = fiber_i(x) n fiber_{j*}(y), ascending. Empty when a type
/// is absent from the partition.
inline std::vector<int> pset(const RelationPartition& part, TwoWayType i,
                             TwoWayType j, int x, int y) {
  if (x < 0 || x >= part.order || y < 0 || y >= part.order)
    throw precondition_error("pset vertex out of range");
  const int ii = part.type_index(i);
  const int ji = part.type_index(j.conjugate());
  if (ii < 0 || ji < 0) return {};
  std::vector<int> out;
  for (std::uint64_t m = part.fiber(x, ii) & part.fiber(y, ji); m; m &= m - 1)
    out.push_back(std::countr_zero(m));
  return out;
}

/// Scheme-level flags computed from a valid tensor.
struct SchemeReport {
  bool is_wdr = false;
  std::optional<WdrWitness> wdr_witness;
  bool commutative = false;
  bool regular = false;  // G_{i*} G_i^2 = {G_i} for every type i
  int max_valency = 0;
  bool thin = false;
  bool quasi_thin = false;
  std::optional<int> equivalenced;  // common nonidentity valency, when one exists

  friend bool operator==(const SchemeReport&, const SchemeReport&) = default;
};

inline SchemeReport scheme_flags(const IntersectionTensor& t) {
  SchemeReport r;
  r.is_wdr = true;

  const int tc = t.type_count();
  r.commutative = true;
  for (int h = 0; h < tc && r.commutative; ++h)
    for (int i = 0; i < tc && r.commutative; ++i)
      for (int j = 0; j < tc; ++j)
        if (t.p(h, i, j) != t.p(h, j, i)) {
          r.commutative = false;
          break;
        }

  for (int i = 0; i < tc; ++i) r.max_valency = std::max(r.max_valency, t.valency(i));
  r.thin = r.max_valency == 1;
  r.quasi_thin = r.max_valency == 2;

  bool any_nonidentity = false;
  int common = 0;
  bool same = true;
  for (int i = 0; i < tc; ++i) {
    if (t.types()[static_cast<std::size_t>(i)].is_identity()) continue;
    if (!any_nonidentity) {
      any_nonidentity = true;
      common = t.valency(i);
    } else if (t.valency(i) != common) {
      same = false;
    }
  }
  if (any_nonidentity && same) r.equivalenced = common;

  // The identity type joins the regularity loop; it holds trivially there.
  r.regular = true;
  for (int i = 0; i < tc && r.regular; ++i) {
    const TwoWayType ti = t.types()[static_cast<std::size_t>(i)];
    const auto square = relation_product({ti}, {ti}, t);
    const std::vector<TwoWayType> star{ti.conjugate()};
    const auto triple = relation_product(std::span<const TwoWayType>(star),
                                         std::span<const TwoWayType>(square), t);
    r.regular = triple.size() == 1 && triple.front() == ti;
  }
  return r;
}

/// Outcome of the tensor consistency identities: the triple identity
/// k_f p^f_{d,e} = k_d p^d_{f,e*} = k_e p^e_{d*,f} and the product-size
/// bound |G_d G_e| <= gcd(k_d, k_e). A violation indicates an
/// implementation bug, not a mathematical possibility.
struct IdentityReport {
  bool ok = true;
  std::string first_violation;

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

inline IdentityReport check_scheme_identities(const IntersectionTensor& t) {
  const int tc = t.type_count();
  for (int d = 0; d < tc; ++d)
    for (int e = 0; e < tc; ++e)
      for (int f = 0; f < tc; ++f) {
        const long long a = static_cast<long long>(t.valency(f)) * t.p(f, d, e);
        const long long b = static_cast<long long>(t.valency(d)) * t.p(d, f, t.conj(e));
        const long long c = static_cast<long long>(t.valency(e)) * t.p(e, t.conj(d), f);
        if (a != b || a != c)
          return {false,
                  "triple identity fails at d=" + to_string(t.types()[static_cast<std::size_t>(d)]) +
                      " e=" + to_string(t.types()[static_cast<std::size_t>(e)]) +
                      " f=" + to_string(t.types()[static_cast<std::size_t>(f)]) + ": " +
                      std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c)};
      }
  for (int d = 0; d < tc; ++d)
    for (int e = 0; e < tc; ++e) {
      const TwoWayType td = t.types()[static_cast<std::size_t>(d)];
      const TwoWayType te = t.types()[static_cast<std::size_t>(e)];
      const auto prod = relation_product({td}, {te}, t);
      const int bound = std::gcd(t.valency(d), t.valency(e));
      if (static_cast<int>(prod.size()) > bound)
        return {false, "|G_d G_e| = " + std::to_string(prod.size()) +
                           " exceeds gcd(" + std::to_string(t.valency(d)) + "," +
                           std::to_string(t.valency(e)) + ") at d=" + to_string(td) +
                           " e=" + to_string(te)};
    }
  return {};
}

}  // namespace wdr
