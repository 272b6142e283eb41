#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wdr/cayley.hpp"
#include "wdr/iso.hpp"
#include "wdr/scheme.hpp"

namespace wdr {

/// Closed walk (w_0, ..., w_{r-1}); arcs are taken cyclically and
/// vertices may repeat.
struct Circuit {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }

  friend auto operator<=>(const Circuit&, const Circuit&) = default;
};

inline std::string to_string(const Circuit& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.vertices[i]);
  }
  return s + ")";
}

/// Every length-q closed walk in which `arc` appears as a consecutive
/// cyclic step, rotated so the arc sits at position 0 and deduplicated by
/// cyclic equality. Deterministic ascending order.
inline std::vector<Circuit> circuits_through_arc(const Digraph& g, Arc arc, int q,
                                                 bool simple_only = false) {
  if (q < 2) throw precondition_error("circuit length must be at least 2");
  if (!g.has_arc(arc.first, arc.second))
    throw precondition_error("arc (" + std::to_string(arc.first) + "," +
                             std::to_string(arc.second) + ") not present");

  std::set<std::vector<int>> out;
  std::vector<int> walk{arc.first, arc.second};
  walk.reserve(static_cast<std::size_t>(q));

  auto emit = [&](const std::vector<int>& w) {
    if (simple_only) {
      std::uint64_t seen = 0;
      for (int v : w) {
        if (seen >> v & 1) return;
        seen |= std::uint64_t{1} << v;
      }
    }
    // Canonical representative among rotations anchoring the probed arc.
    std::vector<int> bestrot = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (w[k] != arc.first || w[(k + 1) % w.size()] != arc.second) continue;
      std::vector<int> rot;
      rot.reserve(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) rot.push_back(w[(k + i) % w.size()]);
      if (rot < bestrot) bestrot = rot;
    }
    out.insert(std::move(bestrot));
  };

  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(walk.size()) == q) {
      if (g.has_arc(walk.back(), walk.front())) emit(walk);
      return;
    }
    for (std::uint64_t m = g.out_row(walk.back()); m; m &= m - 1) {
      walk.push_back(std::countr_zero(m));
      self(self);
      walk.pop_back();
    }
  };
  rec(rec);

  std::vector<Circuit> result;
  result.reserve(out.size());
  for (auto& w : out) result.push_back(Circuit{w});
  return result;
}

/// Per-arc-type purity: (1,q-1) is pure when every length-q circuit
/// through every arc of that type consists of arcs of type (1,q-1).
struct PurityEntry {
  int q = 0;
  bool pure = true;
  std::optional<Circuit> mixed_witness;
  std::vector<TwoWayType> witness_arc_types;  // aligned with the witness arcs

  friend bool operator==(const PurityEntry&, const PurityEntry&) = default;
};

struct PurityReport {
  std::vector<PurityEntry> entries;  // ascending q, one per present arc type

  const PurityEntry* find(int q) const {
    for (const auto& e : entries)
      if (e.q == q) return &e;
    return nullptr;
  }

  friend bool operator==(const PurityReport&, const PurityReport&) = default;
};

inline PurityReport purity_report(const Digraph& g, const RelationPartition& part,
                                  bool simple_only = false) {
  PurityReport report;
  for (int t = 0; t < part.type_count(); ++t) {
    const TwoWayType type = part.types[static_cast<std::size_t>(t)];
    if (!type.is_arc()) continue;
    PurityEntry entry;
    entry.q = type.backward + 1;
    // Short-circuits on the first mixed circuit; pairs and circuits are
    // scanned in canonical order so the witness is the smallest one.
    for (const Arc& arc : part.pairs_by_type[static_cast<std::size_t>(t)]) {
      for (const Circuit& c : circuits_through_arc(g, arc, entry.q, simple_only)) {
        bool all_same = true;
        for (int i = 0; i < c.length(); ++i) {
          const int u = c.vertices[static_cast<std::size_t>(i)];
          const int v = c.vertices[static_cast<std::size_t>((i + 1) % c.length())];
          if (part.type_of(u, v) != type) {
            all_same = false;
            break;
          }
        }
        if (!all_same) {
          entry.pure = false;
          entry.mixed_witness = c;
          for (int i = 0; i < c.length(); ++i)
            entry.witness_arc_types.push_back(part.type_of(
                c.vertices[static_cast<std::size_t>(i)],
                c.vertices[static_cast<std::size_t>((i + 1) % c.length())]));
          break;
        }
      }
      if (!entry.pure) break;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

/// Existence of the configurations attached to each arc type (1,q-1):
/// C(q) needs p^{(1,q-2)}_{(1,q-1),(1,q-1)} != 0, D(q) needs
/// p^{(1,q-1)}_{(1,q-2),(q-2,1)} != 0, and both need (1,q-2) pure.
struct ConfigEntry {
  int q = 0;
  bool c_exists = false;
  bool d_exists = false;
  bool c_p_nonzero = false;
  bool d_p_nonzero = false;
  bool prev_pure = false;  // purity of (1,q-2); false when the type is absent

  friend bool operator==(const ConfigEntry&, const ConfigEntry&) = default;
};

struct ConfigReport {
  std::vector<ConfigEntry> entries;  // aligned with the purity entries

  const ConfigEntry* find(int q) const {
    for (const auto& e : entries)
      if (e.q == q) return &e;
    return nullptr;
  }

  friend bool operator==(const ConfigReport&, const ConfigReport&) = default;
};

inline ConfigReport config_report(const IntersectionTensor& t, const PurityReport& pr) {
  ConfigReport report;
  for (const auto& pe : pr.entries) {
    ConfigEntry e;
    e.q = pe.q;
    if (e.q >= 3) {
      const TwoWayType cur{1, static_cast<std::uint8_t>(e.q - 1)};
      const TwoWayType prev{1, static_cast<std::uint8_t>(e.q - 2)};
      e.c_p_nonzero = t.p(prev, cur, cur) != 0;
      e.d_p_nonzero = t.p(cur, prev, prev.conjugate()) != 0;
      const PurityEntry* pp = pr.find(e.q - 1);
      e.prev_pure = pp != nullptr && pp->pure;
      e.c_exists = e.c_p_nonzero && e.prev_pure;
      e.d_exists = e.d_p_nonzero && e.prev_pure;
    }
    report.entries.push_back(e);
  }
  return report;
}

/// Per-q verdict for the mixed-arc characterization: an arc type (1,q-1)
/// is mixed exactly when C(q) or D(q) exists. Only applicable to
/// commutative weakly distance-regular digraphs with regular scheme.
struct MixedArcPerQ {
  int q = 0;
  bool pure = false;
  bool c_exists = false;
  bool d_exists = false;
  bool consistent = false;

  friend bool operator==(const MixedArcPerQ&, const MixedArcPerQ&) = default;
};

struct MixedArcVerdict {
  bool applicable = false;
  bool consistent = false;  // conjunction over per_q when applicable
  std::vector<MixedArcPerQ> per_q;

  friend bool operator==(const MixedArcVerdict&, const MixedArcVerdict&) = default;
};

inline MixedArcVerdict verify_mixed_arc_characterization(const PurityReport& pr,
                                                         const ConfigReport& cr,
                                                         const SchemeReport& flags) {
  MixedArcVerdict v;
  if (!(flags.is_wdr && flags.commutative && flags.regular)) return v;
  v.applicable = true;
  v.consistent = true;
  for (const auto& pe : pr.entries) {
    const ConfigEntry* ce = cr.find(pe.q);
    MixedArcPerQ mq;
    mq.q = pe.q;
    mq.pure = pe.pure;
    mq.c_exists = ce != nullptr && ce->c_exists;
    mq.d_exists = ce != nullptr && ce->d_exists;
    mq.consistent = !pe.pure == (mq.c_exists || mq.d_exists);
    v.consistent = v.consistent && mq.consistent;
    v.per_q.push_back(mq);
  }
  return v;
}

/// Induced subdigraph on the weakly connected component, under arcs of
/// type (1,q-1) only, that contains x. Second element maps new vertex ids
/// back to the original labels (ascending).
inline std::pair<Digraph, std::vector<int>> delta_component(const Digraph& g,
                                                            const RelationPartition& part,
                                                            int q, int x) {
  const TwoWayType type{1, static_cast<std::uint8_t>(q - 1)};
  const int ti = part.type_index(type);
  if (ti < 0)
    throw precondition_error("arc type " + to_string(type) + " not present");
  if (x < 0 || x >= part.order) throw precondition_error("vertex out of range");
  const int tci = part.type_index(type.conjugate());

  std::uint64_t comp = std::uint64_t{1} << x;
  std::uint64_t frontier = comp;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      next |= part.fiber(u, ti) | part.fiber(u, tci);
    }
    frontier = next & ~comp;
    comp |= frontier;
  }

  std::vector<int> map;
  for (std::uint64_t m = comp; m; m &= m - 1) map.push_back(std::countr_zero(m));
  std::vector<int> newid(static_cast<std::size_t>(part.order), -1);
  for (std::size_t i = 0; i < map.size(); ++i)
    newid[static_cast<std::size_t>(map[i])] = static_cast<int>(i);

  std::vector<std::uint64_t> rows(map.size(), 0);
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::uint64_t m = part.fiber(map[i], ti) & comp; m; m &= m - 1)
      rows[i] |= std::uint64_t{1}
                 << newid[static_cast<std::size_t>(std::countr_zero(m))];
  return {Digraph::from_rows(static_cast<int>(map.size()), std::move(rows)),
          std::move(map)};
}

enum class CheckStatus { holds, vacuous, fails, not_applicable };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::vacuous: return "vacuous";
    case CheckStatus::fails: return "fails";
    default: return "not_applicable";
  }
}

/// Structure of the arc-type components under a regular commutative
/// scheme: with k_{1,1} = n > 0 every Delta_2 component is a complete
/// bipartite graph K_{n,n}; with p^{(2,q-2)}_{(1,q-1),(1,q-1)} = m > 0
/// every Delta_q component is Cay(Z_q x Z_m, {(1,0),...,(1,m-1)}) and the
/// l-fold products collapse to single relations.
struct DeltaStructureVerdict {
  CheckStatus delta2_complete_bipartite = CheckStatus::not_applicable;
  std::string delta2_witness;
  CheckStatus deltaq_cayley_structure = CheckStatus::not_applicable;
  std::string deltaq_witness;

  friend bool operator==(const DeltaStructureVerdict&, const DeltaStructureVerdict&) = default;
};

namespace detail {

/// Direct check: connected digraph equals K_{n,n} with both arc
/// directions present across parts and none within.
inline bool is_complete_bipartite(const Digraph& g, int n, std::string* why) {
  if (g.order() != 2 * n) {
    if (why) *why = "component order " + std::to_string(g.order()) + " != 2n";
    return false;
  }
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (std::uint64_t m = g.out_row(u) | g.in_row(u); m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (color[static_cast<std::size_t>(v)] < 0) {
        color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
        stack.push_back(v);
      } else if (color[static_cast<std::size_t>(v)] ==
                 color[static_cast<std::size_t>(u)]) {
        if (why) *why = "odd cycle through vertex " + std::to_string(v);
        return false;
      }
    }
  }
  int part0 = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (color[static_cast<std::size_t>(v)] < 0) {
      if (why) *why = "component not connected";
      return false;
    }
    if (color[static_cast<std::size_t>(v)] == 0) ++part0;
  }
  if (part0 != n) {
    if (why) *why = "part sizes " + std::to_string(part0) + "/" +
                    std::to_string(g.order() - part0);
    return false;
  }
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) {
      if (u == v) continue;
      const bool cross = color[static_cast<std::size_t>(u)] !=
                         color[static_cast<std::size_t>(v)];
      if (g.has_arc(u, v) != cross) {
        if (why) *why = std::string(cross ? "missing" : "extra") + " arc (" +
                        std::to_string(u) + "," + std::to_string(v) + ")";
        return false;
      }
    }
  return true;
}

}  // namespace detail

inline DeltaStructureVerdict check_delta_structure(const Digraph& g,
                                                   const RelationPartition& part,
                                                   const IntersectionTensor& t) {
  DeltaStructureVerdict v;
  const SchemeReport flags = scheme_flags(t);
  if (!(flags.commutative && flags.regular)) return v;

  const int i11 = part.type_index({1, 1});
  if (i11 < 0) {
    v.delta2_complete_bipartite = CheckStatus::vacuous;
  } else {
    const int n = t.valency(i11);
    v.delta2_complete_bipartite = CheckStatus::holds;
    std::uint64_t visited = 0;
    for (int x = 0; x < g.order(); ++x) {
      if (visited >> x & 1) continue;
      auto [comp, map] = delta_component(g, part, 2, x);
      for (int orig : map) visited |= std::uint64_t{1} << orig;
      std::string why;
      if (!detail::is_complete_bipartite(comp, n, &why)) {
        v.delta2_complete_bipartite = CheckStatus::fails;
        v.delta2_witness = "component of " + std::to_string(x) + ": " + why;
        break;
      }
    }
  }

  bool fired = false;
  for (const auto& type : part.types) {
    if (!type.is_arc() || type.backward < 2) continue;
    const int q = type.backward + 1;
    const TwoWayType two_step{2, static_cast<std::uint8_t>(q - 2)};
    const int m = t.p(two_step, type, type);
    if (m <= 0) continue;
    fired = true;
    std::vector<std::pair<int, int>> conn;
    for (int j = 0; j < m; ++j) conn.emplace_back(1, j);
    const Digraph model = cayley_product(q, m, conn);
    std::uint64_t visited = 0;
    for (int x = 0; x < g.order() && v.deltaq_cayley_structure != CheckStatus::fails;
         ++x) {
      if (visited >> x & 1) continue;
      auto [comp, map] = delta_component(g, part, q, x);
      for (int orig : map) visited |= std::uint64_t{1} << orig;
      if (!are_isomorphic(comp, model)) {
        v.deltaq_cayley_structure = CheckStatus::fails;
        v.deltaq_witness = "q=" + std::to_string(q) + " component of " +
                           std::to_string(x) + " is not the Cayley model";
      }
    }
    // l-fold product collapse: G_{1,q-1}^l = {G_{l,q-l}} for l < q.
    std::vector<TwoWayType> power{type};
    for (int l = 1; l <= q - 1 && v.deltaq_cayley_structure != CheckStatus::fails;
         ++l) {
      if (l > 1) power = relation_product(std::span<const TwoWayType>(power),
                                          std::span<const TwoWayType>(&type, 1), t);
      const TwoWayType expect{static_cast<std::uint8_t>(l),
                              static_cast<std::uint8_t>(q - l)};
      if (power.size() != 1 || power.front() != expect) {
        v.deltaq_cayley_structure = CheckStatus::fails;
        v.deltaq_witness = "q=" + std::to_string(q) + " power l=" + std::to_string(l) +
                           " does not collapse to " + to_string(expect);
      }
    }
  }
  if (v.deltaq_cayley_structure != CheckStatus::fails)
    v.deltaq_cayley_structure = fired ? CheckStatus::holds : CheckStatus::vacuous;
  return v;
}

/// One conditional statement evaluated on a digraph: vacuous when no
/// hypothesis instance fires, holds when every fired instance's
/// conclusion checks out.
struct LemmaVerdict {
  std::string name;
  CheckStatus status = CheckStatus::vacuous;
  std::string witness;

  friend bool operator==(const LemmaVerdict&, const LemmaVerdict&) = default;
};

struct LemmaSuiteReport {
  std::vector<LemmaVerdict> verdicts;

  bool all_ok() const {
    for (const auto& v : verdicts)
      if (v.status == CheckStatus::fails) return false;
    return true;
  }
  const LemmaVerdict* find(const std::string& name) const {
    for (const auto& v : verdicts)
      if (v.name == name) return &v;
    return nullptr;
  }

  friend bool operator==(const LemmaSuiteReport&, const LemmaSuiteReport&) = default;
};

inline const std::vector<std::string>& lemma_suite_names() {
  static const std::vector<std::string> names = {
      "square_cross_disjoint",     // G^2_{1,q-1} disjoint from G_{1,q-1} G_{1,p-1}
      "conjugate_product_valency", // |G_i G_{i*}| = 2 forces k_i = 2
      "c_config_circuits",         // C(q): square support + circuit arc types
      "d_product_square",          // p^{(1,q-1)}_{(1,q-2),(q-2,1)} != 0: square collapses
      "mixed_product_membership",  // p^{(1,q-1)}_{(1,s-1),(1,t-1)} != 0, s != t: q in {s,t}
      "pure_symmetric_product",    // (1,1) times a pure (1,q-1) collapses
  };
  return names;
}

/// Evaluates the conditional structure statements on a digraph that
/// passed the WDR, commutativity and regularity gates. A fails status is
/// a bug witness, not an expected outcome.
inline LemmaSuiteReport conditional_lemma_suite(const Digraph& g,
                                                const RelationPartition& part,
                                                const IntersectionTensor& t,
                                                const PurityReport& pr,
                                                const ConfigReport& cr) {
  LemmaSuiteReport report;
  auto add = [&](const std::string& name, bool fired, bool failed,
                 const std::string& witness) {
    LemmaVerdict v;
    v.name = name;
    v.status = failed ? CheckStatus::fails
                      : (fired ? CheckStatus::holds : CheckStatus::vacuous);
    if (failed) v.witness = witness;
    report.verdicts.push_back(std::move(v));
  };

  std::vector<int> qs;
  for (const auto& e : pr.entries) qs.push_back(e.q);
  auto arc_type = [](int q) {
    return TwoWayType{1, static_cast<std::uint8_t>(q - 1)};
  };
  auto intersects = [](const std::vector<TwoWayType>& a,
                       const std::vector<TwoWayType>& b) {
    for (const auto& x : a)
      for (const auto& y : b)
        if (x == y) return true;
    return false;
  };

  {  // squares of one arc type never meet cross products with another
    bool fired = false, failed = false;
    std::string witness;
    for (int q : qs) {
      const auto square = relation_product({arc_type(q)}, {arc_type(q)}, t);
      for (int p : qs) {
        if (p == q) continue;
        fired = true;
        const auto cross = relation_product({arc_type(q)}, {arc_type(p)}, t);
        if (intersects(square, cross)) {
          failed = true;
          witness = "q=" + std::to_string(q) + " p=" + std::to_string(p);
          break;
        }
      }
      if (failed) break;
    }
    add("square_cross_disjoint", fired, failed, witness);
  }

  {  // |G_i G_{i*}| = 2 forces valency 2
    bool fired = false, failed = false;
    std::string witness;
    for (const auto& type : t.types()) {
      const auto prod = relation_product({type}, {type.conjugate()}, t);
      if (prod.size() != 2) continue;
      fired = true;
      if (t.valency(t.index(type)) != 2) {
        failed = true;
        witness = "type " + to_string(type) + " has valency " +
                  std::to_string(t.valency(t.index(type)));
        break;
      }
    }
    add("conjugate_product_valency", fired, failed, witness);
  }

  {  // consequences of C(q): square support and circuit arc types
    bool fired = false, failed = false;
    std::string witness;
    for (const auto& ce : cr.entries) {
      if (!ce.c_exists) continue;
      fired = true;
      const int q = ce.q;
      const TwoWayType cur = arc_type(q);
      const TwoWayType prev{1, static_cast<std::uint8_t>(q - 2)};
      const TwoWayType skew{2, static_cast<std::uint8_t>(q - 1)};
      const auto square = relation_product({cur}, {cur}, t);
      const std::vector<TwoWayType> opt1{prev};
      std::vector<TwoWayType> opt2{prev, skew};
      std::sort(opt2.begin(), opt2.end());
      if (square != opt1 && square != opt2) {
        failed = true;
        witness = "q=" + std::to_string(q) + " square has unexpected support";
        break;
      }
      const int ti = part.type_index(cur);
      for (const Arc& arc : part.pairs_by_type[static_cast<std::size_t>(ti)]) {
        for (const Circuit& c : circuits_through_arc(g, arc, q)) {
          for (int i = 0; i < c.length() && !failed; ++i) {
            const int u = c.vertices[static_cast<std::size_t>(i)];
            const int v = c.vertices[static_cast<std::size_t>((i + 1) % c.length())];
            const TwoWayType at = part.type_of(u, v);
            if (at != cur && at != prev) {
              failed = true;
              witness = "q=" + std::to_string(q) + " circuit " + to_string(c) +
                        " holds arc type " + to_string(at);
            }
          }
          if (failed) break;
        }
        if (failed) break;
      }
      if (failed) break;
    }
    add("c_config_circuits", fired, failed, witness);
  }

  {  // p^{(1,q-1)}_{(1,q-2),(q-2,1)} != 0 collapses the square
    bool fired = false, failed = false;
    std::string witness;
    for (int q : qs) {
      if (q < 3) continue;
      const TwoWayType cur = arc_type(q);
      const TwoWayType prev{1, static_cast<std::uint8_t>(q - 2)};
      if (t.p(cur, prev, prev.conjugate()) == 0) continue;
      fired = true;
      const auto square = relation_product({cur}, {cur}, t);
      const std::vector<TwoWayType> opt1{{2, static_cast<std::uint8_t>(q - 2)}};
      const std::vector<TwoWayType> opt2{{2, static_cast<std::uint8_t>(q - 1)}};
      if (square != opt1 && square != opt2) {
        failed = true;
        witness = "q=" + std::to_string(q) + " square has unexpected support";
        break;
      }
    }
    add("d_product_square", fired, failed, witness);
  }

  {  // nonzero p^{(1,q-1)}_{(1,s-1),(1,t-1)} with s != t forces q in {s,t}
    bool fired = false, failed = false;
    std::string witness;
    for (int q : qs) {
      for (int s : qs) {
        for (int tt : qs) {
          if (s == tt) continue;
          if (t.p(arc_type(q), arc_type(s), arc_type(tt)) == 0) continue;
          fired = true;
          if (q != s && q != tt) {
            failed = true;
            witness = "q=" + std::to_string(q) + " s=" + std::to_string(s) +
                      " t=" + std::to_string(tt);
          }
        }
      }
    }
    add("mixed_product_membership", fired, failed, witness);
  }

  {  // (1,1) times a pure (1,q-1), q >= 3, collapses to one relation
    bool fired = false, failed = false;
    std::string witness;
    if (part.type_index({1, 1}) >= 0) {
      for (const auto& pe : pr.entries) {
        if (pe.q < 3 || !pe.pure) continue;
        fired = true;
        const auto prod = relation_product({TwoWayType{1, 1}}, {arc_type(pe.q)}, t);
        const std::vector<TwoWayType> opt1{arc_type(pe.q)};
        const std::vector<TwoWayType> opt2{{2, static_cast<std::uint8_t>(pe.q)}};
        if (prod != opt1 && prod != opt2) {
          failed = true;
          witness = "q=" + std::to_string(pe.q) + " product has unexpected support";
          break;
        }
      }
    }
    add("pure_symmetric_product", fired, failed, witness);
  }

  return report;
}

/// Placeholder suite for digraphs that never reached the lemma gates.
inline LemmaSuiteReport lemma_suite_not_applicable() {
  LemmaSuiteReport report;
  for (const auto& name : lemma_suite_names()) {
    LemmaVerdict v;
    v.name = name;
    v.status = CheckStatus::not_applicable;
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

}  // namespace wdr
