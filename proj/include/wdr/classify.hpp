#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "wdr/arcs.hpp"

namespace wdr {

/// Runs f(0..count-1) over `workers` threads; results must be written to
/// per-index slots so output does not depend on scheduling. workers <= 0
/// means one thread per hardware core.
template <typename F>
inline void parallel_for_index(int count, int workers, F&& f) {
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(count);
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

/// Aggregated result of the full analysis pipeline on one digraph. The
/// pipeline stops at the first stage whose precondition fails and records
/// which one; downstream verdicts stay in their not-applicable defaults.
struct AnalysisReport {
  int order = 0;
  bool strongly_connected = false;
  bool undirected = false;
  std::string certificate_hex;  // empty when not computed (order > 16 or skipped)
  std::string stopped_at;       // empty when the pipeline ran to completion
  int diameter = -1;
  std::vector<TwoWayType> types;
  std::vector<std::optional<int>> valencies;  // aligned with types
  SchemeReport scheme;
  IdentityReport identities;
  PurityReport purity;
  ConfigReport configs;
  MixedArcVerdict mixed_arc;
  DeltaStructureVerdict delta;
  LemmaSuiteReport lemmas;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  bool with_certificate = true;
  bool simple_circuits = false;  // restrict purity circuits to distinct vertices
};

inline AnalysisReport analyze(const Digraph& g, const AnalyzeOptions& opt = {}) {
  AnalysisReport r;
  r.order = g.order();
  r.undirected = g.is_undirected();
  r.strongly_connected = is_strongly_connected(g);
  r.lemmas = lemma_suite_not_applicable();
  if (opt.with_certificate && g.order() <= kMaxIsoOrder)
    r.certificate_hex = canonical_certificate(g).hex();
  if (!r.strongly_connected) {
    r.stopped_at = "strong_connectivity";
    return r;
  }

  const RelationPartition part = two_way_partition(g);
  r.diameter = part.diameter;
  r.types = part.types;
  r.valencies = part.valencies;

  TensorResult tr = intersection_tensor(part);
  if (!tr.ok()) {
    r.scheme.is_wdr = false;
    r.scheme.wdr_witness = tr.witness;
    r.stopped_at = "weak_distance_regularity";
    return r;
  }
  const IntersectionTensor& tensor = *tr.tensor;

  r.scheme = scheme_flags(tensor);
  r.identities = check_scheme_identities(tensor);
  r.purity = purity_report(g, part, opt.simple_circuits);
  r.configs = config_report(tensor, r.purity);
  r.mixed_arc = verify_mixed_arc_characterization(r.purity, r.configs, r.scheme);
  r.delta = check_delta_structure(g, part, tensor);
  if (r.scheme.commutative && r.scheme.regular)
    r.lemmas = conditional_lemma_suite(g, part, tensor, r.purity, r.configs);
  return r;
}

/// Classification filter: strongly connected, not undirected, weakly
/// distance-regular, commutative, regular scheme, optional diameter.
inline bool classification_survivor(const AnalysisReport& r,
                                    std::optional<int> diameter) {
  return r.strongly_connected && !r.undirected && r.scheme.is_wdr &&
         r.scheme.commutative && r.scheme.regular &&
         (!diameter || r.diameter == *diameter);
}

struct Survivor {
  std::string source;  // Cayley spec string or compact arc list
  std::string certificate_hex;
  AnalysisReport report;

  friend bool operator==(const Survivor&, const Survivor&) = default;
};

struct ClassificationResult {
  int candidates = 0;
  std::vector<Survivor> survivors;                  // certificate-deduped, first occurrence kept
  std::vector<std::optional<int>> matched_catalog;  // aligned with survivors
  std::vector<int> unmatched;                       // survivor indices without a catalog match

  int matched_count() const {
    int c = 0;
    for (const auto& m : matched_catalog)
      if (m) ++c;
    return c;
  }

  friend bool operator==(const ClassificationResult&, const ClassificationResult&) = default;
};

inline const std::map<std::string, int>& catalog_certificates() {
  static const std::map<std::string, int> certs = [] {
    std::map<std::string, int> m;
    const auto& catalog = classification_catalog();
    for (std::size_t i = 0; i < catalog.size(); ++i)
      m[canonical_certificate(catalog[i].spec.build()).hex()] = static_cast<int>(i);
    return m;
  }();
  return certs;
}

namespace detail {

inline ClassificationResult collect_classification(
    int candidates, std::vector<std::unique_ptr<Survivor>>& slots) {
  ClassificationResult out;
  out.candidates = candidates;
  const auto& catalog = catalog_certificates();
  std::map<std::string, int> seen;
  for (auto& slot : slots) {
    if (!slot) continue;
    if (seen.contains(slot->certificate_hex)) continue;
    const int idx = static_cast<int>(out.survivors.size());
    seen[slot->certificate_hex] = idx;
    const auto it = catalog.find(slot->certificate_hex);
    out.matched_catalog.push_back(
        it == catalog.end() ? std::optional<int>{} : std::optional<int>{it->second});
    if (it == catalog.end()) out.unmatched.push_back(idx);
    out.survivors.push_back(std::move(*slot));
  }
  return out;
}

}  // namespace detail

/// Analyzes every circulant in [n_min, n_max] (undirected connection sets
/// excluded), keeps the classification survivors deduplicated by
/// certificate, and matches them against the catalog.
inline ClassificationResult search_circulants(int n_min, int n_max,
                                              std::optional<int> diameter,
                                              int workers = 1) {
  const auto specs = enumerate_circulants(n_min, n_max, true);
  std::vector<std::unique_ptr<Survivor>> slots(specs.size());
  AnalyzeOptions opt;
  opt.with_certificate = false;
  parallel_for_index(static_cast<int>(specs.size()), workers, [&](int i) {
    const Digraph d = specs[static_cast<std::size_t>(i)].build();
    AnalysisReport rep = analyze(d, opt);
    if (!classification_survivor(rep, diameter)) return;
    rep.certificate_hex = canonical_certificate(d).hex();
    auto s = std::make_unique<Survivor>();
    s->source = specs[static_cast<std::size_t>(i)].to_string();
    s->certificate_hex = rep.certificate_hex;
    s->report = std::move(rep);
    slots[static_cast<std::size_t>(i)] = std::move(s);
  });
  return detail::collect_classification(static_cast<int>(specs.size()), slots);
}

namespace detail {

/// Arc bit layout for exhaustive enumeration: ordered pairs (u,v), u != v,
/// listed row by row.
inline int arc_bit_index(int n, int u, int v) {
  return u * (n - 1) + (v < u ? v : v - 1);
}

inline void rows_from_mask(int n, std::uint32_t mask, std::uint64_t* rows) {
  for (int u = 0; u < n; ++u) rows[u] = 0;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (mask >> bit & 1) rows[u] |= std::uint64_t{1} << v;
      ++bit;
    }
}

/// Cheap filters evaluated before a full analysis: not undirected,
/// strongly connected, per-vertex two-way type histogram constant.
inline bool passes_prefilters(int n, const std::uint64_t* rows) {
  std::uint64_t cols[5] = {};
  for (int u = 0; u < n; ++u)
    for (std::uint64_t m = rows[u]; m; m &= m - 1)
      cols[std::countr_zero(m)] |= std::uint64_t{1} << u;
  bool symmetric = true;
  for (int u = 0; u < n && symmetric; ++u) symmetric = rows[u] == cols[u];
  if (symmetric) return false;  // undirected (or empty)

  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  auto closure = [&](const std::uint64_t* adj) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)];
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen;
  };
  if (closure(rows) != all || closure(cols) != all) return false;

  // Floyd-Warshall on <= 5 vertices; 15 = unreachable sentinel.
  std::uint8_t dist[5][5];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dist[i][j] = i == j ? 0 : (rows[i] >> j & 1 ? 1 : 15);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (dist[i][k] + dist[k][j] < dist[i][j])
          dist[i][j] = static_cast<std::uint8_t>(dist[i][k] + dist[k][j]);

  std::uint8_t hist0[256] = {};
  for (int x = 0; x < n; ++x) {
    std::uint8_t hist[256] = {};
    for (int y = 0; y < n; ++y)
      ++hist[static_cast<std::uint8_t>(dist[x][y] << 4 | dist[y][x])];
    if (x == 0) {
      for (int i = 0; i < 256; ++i) hist0[i] = hist[i];
    } else {
      for (int i = 0; i < 256; ++i)
        if (hist[i] != hist0[i]) return false;
    }
  }
  return true;
}

inline std::string mask_source_string(int n, std::uint32_t mask) {
  std::string s = "digraph:n=" + std::to_string(n) + ":";
  bool first = true;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (mask >> bit & 1) {
        if (!first) s += ",";
        s += std::to_string(u) + ">" + std::to_string(v);
        first = false;
      }
      ++bit;
    }
  return s;
}

}  // namespace detail

/// Exhaustive search over every simple digraph on up to max_n vertices
/// (2^{n(n-1)} arc subsets per n). Pruning skips candidates that cannot
/// survive before the full analysis runs; disabling it yields the same
/// survivor set and is only sensible for max_n <= 4.
inline ClassificationResult search_all_digraphs(int max_n, std::optional<int> diameter,
                                                int workers = 1, bool prune = true) {
  if (max_n < 1 || max_n > 5)
    throw precondition_error("exhaustive digraph search supports 1 <= max_n <= 5");

  struct Block {
    int n;
    long long base;
    long long count;
  };
  std::vector<Block> blocks;
  long long total = 0;
  for (int n = 1; n <= max_n; ++n) {
    const long long count = 1ll << (n * (n - 1));
    blocks.push_back({n, total, count});
    total += count;
  }

  std::vector<std::unique_ptr<Survivor>> slots(static_cast<std::size_t>(total));
  AnalyzeOptions opt;
  opt.with_certificate = false;

  // Chunked so two cores do not fight over one atomic per candidate.
  const long long chunk = 8192;
  const int chunks = static_cast<int>((total + chunk - 1) / chunk);
  parallel_for_index(chunks, workers, [&](int ci) {
    const long long lo = static_cast<long long>(ci) * chunk;
    const long long hi = std::min(total, lo + chunk);
    std::size_t bi = 0;
    for (long long idx = lo; idx < hi; ++idx) {
      while (idx >= blocks[bi].base + blocks[bi].count) ++bi;
      while (idx < blocks[bi].base) --bi;
      const int n = blocks[bi].n;
      const auto mask = static_cast<std::uint32_t>(idx - blocks[bi].base);
      std::uint64_t rows[5];
      detail::rows_from_mask(n, mask, rows);
      if (prune && !detail::passes_prefilters(n, rows)) continue;
      const Digraph d = Digraph::from_rows(
          n, std::vector<std::uint64_t>(rows, rows + n));
      AnalysisReport rep = analyze(d, opt);
      if (!classification_survivor(rep, diameter)) continue;
      rep.certificate_hex = canonical_certificate(d).hex();
      auto s = std::make_unique<Survivor>();
      s->source = detail::mask_source_string(n, mask);
      s->certificate_hex = rep.certificate_hex;
      s->report = std::move(rep);
      slots[static_cast<std::size_t>(idx)] = std::move(s);
    }
  });
  return detail::collect_classification(static_cast<int>(total), slots);
}

struct CorpusItem {
  std::string label;
  Digraph digraph;
};

inline std::vector<CorpusItem> corpus_from_circulants(int n_min, int n_max) {
  std::vector<CorpusItem> items;
  for (const auto& spec : enumerate_circulants(n_min, n_max, true))
    items.push_back({spec.to_string(), spec.build()});
  return items;
}

inline std::vector<CorpusItem> corpus_from_catalog() {
  std::vector<CorpusItem> items;
  for (const auto& entry : classification_catalog())
    items.push_back({entry.spec.to_string(), entry.spec.build()});
  return items;
}

struct CorpusCounterexample {
  std::string label;
  std::string check;
  std::string detail;

  friend bool operator==(const CorpusCounterexample&, const CorpusCounterexample&) = default;
};

/// Corpus-wide aggregate: members failing the WDR/commutative/regular
/// gates are counted but not verified; every gated member must satisfy
/// the tensor identities, the mixed-arc characterization, the delta
/// structure checks and the conditional lemma suite.
struct CorpusAggregate {
  int total = 0;
  int gated = 0;  // members that passed the gates and were verified
  bool pass = true;
  std::optional<CorpusCounterexample> counterexample;  // first failure
  std::map<std::string, std::map<std::string, int>> lemma_counts;

  friend bool operator==(const CorpusAggregate&, const CorpusAggregate&) = default;
};

struct CorpusOptions {
  /// Also recompute purity with circuits restricted to distinct vertices
  /// and require agreement with the closed-walk reading.
  bool compare_circuit_modes = true;
};

inline CorpusAggregate corpus_verify(std::span<const CorpusItem> items,
                                     const CorpusOptions& opt = {}) {
  CorpusAggregate agg;
  for (const auto& name : lemma_suite_names()) {
    agg.lemma_counts[name]["holds"] = 0;
    agg.lemma_counts[name]["vacuous"] = 0;
  }
  auto fail = [&](const CorpusItem& item, const std::string& check,
                  const std::string& detail) {
    if (agg.pass) agg.counterexample = CorpusCounterexample{item.label, check, detail};
    agg.pass = false;
  };

  AnalyzeOptions aopt;
  aopt.with_certificate = false;
  for (const auto& item : items) {
    ++agg.total;
    const AnalysisReport rep = analyze(item.digraph, aopt);
    if (!(rep.strongly_connected && !rep.undirected && rep.scheme.is_wdr &&
          rep.scheme.commutative && rep.scheme.regular))
      continue;
    ++agg.gated;
    if (!rep.identities.ok)
      fail(item, "scheme_identities", rep.identities.first_violation);
    if (!rep.mixed_arc.applicable || !rep.mixed_arc.consistent)
      fail(item, "mixed_arc_characterization", "per-q verdict inconsistent");
    if (rep.delta.delta2_complete_bipartite == CheckStatus::fails)
      fail(item, "delta2_complete_bipartite", rep.delta.delta2_witness);
    if (rep.delta.deltaq_cayley_structure == CheckStatus::fails)
      fail(item, "deltaq_cayley_structure", rep.delta.deltaq_witness);
    for (const auto& v : rep.lemmas.verdicts) {
      if (v.status == CheckStatus::fails) fail(item, v.name, v.witness);
      ++agg.lemma_counts[v.name][to_string(v.status)];
    }
    if (opt.compare_circuit_modes) {
      const RelationPartition part = two_way_partition(item.digraph);
      const PurityReport walk = purity_report(item.digraph, part, false);
      const PurityReport simple = purity_report(item.digraph, part, true);
      for (std::size_t i = 0; i < walk.entries.size(); ++i)
        if (walk.entries[i].pure != simple.entries[i].pure)
          fail(item, "circuit_mode_agreement",
               "q=" + std::to_string(walk.entries[i].q));
    }
  }
  return agg;
}

}  // namespace wdr
