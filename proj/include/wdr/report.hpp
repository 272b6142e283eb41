#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wdr/classify.hpp"

namespace nlohmann {

template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v)
      j = *v;
    else
      j = nullptr;
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null())
      v.reset();
    else
      v = j.get<T>();
  }
};

}  // namespace nlohmann

namespace wdr {

using nlohmann::json;

inline void to_json(json& j, const TwoWayType& t) {
  j = json::array({t.forward, t.backward});
}
inline void from_json(const json& j, TwoWayType& t) {
  t.forward = j.at(0).get<std::uint8_t>();
  t.backward = j.at(1).get<std::uint8_t>();
}

inline void to_json(json& j, const WdrWitness& w) {
  j = json{{"h", w.h},           {"i", w.i},           {"j", w.j},
           {"pair1", w.pair1},   {"pair2", w.pair2},   {"count1", w.count1},
           {"count2", w.count2}};
}
inline void from_json(const json& j, WdrWitness& w) {
  j.at("h").get_to(w.h);
  j.at("i").get_to(w.i);
  j.at("j").get_to(w.j);
  j.at("pair1").get_to(w.pair1);
  j.at("pair2").get_to(w.pair2);
  j.at("count1").get_to(w.count1);
  j.at("count2").get_to(w.count2);
}

inline void to_json(json& j, const SchemeReport& r) {
  j = json{{"is_wdr", r.is_wdr},
           {"wdr_witness", r.wdr_witness},
           {"commutative", r.commutative},
           {"regular", r.regular},
           {"max_valency", r.max_valency},
           {"thin", r.thin},
           {"quasi_thin", r.quasi_thin},
           {"equivalenced", r.equivalenced}};
}
inline void from_json(const json& j, SchemeReport& r) {
  j.at("is_wdr").get_to(r.is_wdr);
  j.at("wdr_witness").get_to(r.wdr_witness);
  j.at("commutative").get_to(r.commutative);
  j.at("regular").get_to(r.regular);
  j.at("max_valency").get_to(r.max_valency);
  j.at("thin").get_to(r.thin);
  j.at("quasi_thin").get_to(r.quasi_thin);
  j.at("equivalenced").get_to(r.equivalenced);
}

inline void to_json(json& j, const IdentityReport& r) {
  j = json{{"ok", r.ok}, {"first_violation", r.first_violation}};
}
inline void from_json(const json& j, IdentityReport& r) {
  j.at("ok").get_to(r.ok);
  j.at("first_violation").get_to(r.first_violation);
}

inline void to_json(json& j, const Circuit& c) { j = c.vertices; }
inline void from_json(const json& j, Circuit& c) { j.get_to(c.vertices); }

inline void to_json(json& j, const PurityEntry& e) {
  j = json{{"q", e.q},
           {"pure", e.pure},
           {"mixed_witness", e.mixed_witness},
           {"witness_arc_types", e.witness_arc_types}};
}
inline void from_json(const json& j, PurityEntry& e) {
  j.at("q").get_to(e.q);
  j.at("pure").get_to(e.pure);
  j.at("mixed_witness").get_to(e.mixed_witness);
  j.at("witness_arc_types").get_to(e.witness_arc_types);
}

inline void to_json(json& j, const PurityReport& r) { j = json{{"entries", r.entries}}; }
inline void from_json(const json& j, PurityReport& r) { j.at("entries").get_to(r.entries); }

inline void to_json(json& j, const ConfigEntry& e) {
  j = json{{"q", e.q},
           {"c_exists", e.c_exists},
           {"d_exists", e.d_exists},
           {"c_p_nonzero", e.c_p_nonzero},
           {"d_p_nonzero", e.d_p_nonzero},
           {"prev_pure", e.prev_pure}};
}
inline void from_json(const json& j, ConfigEntry& e) {
  j.at("q").get_to(e.q);
  j.at("c_exists").get_to(e.c_exists);
  j.at("d_exists").get_to(e.d_exists);
  j.at("c_p_nonzero").get_to(e.c_p_nonzero);
  j.at("d_p_nonzero").get_to(e.d_p_nonzero);
  j.at("prev_pure").get_to(e.prev_pure);
}

inline void to_json(json& j, const ConfigReport& r) { j = json{{"entries", r.entries}}; }
inline void from_json(const json& j, ConfigReport& r) { j.at("entries").get_to(r.entries); }

inline void to_json(json& j, const MixedArcPerQ& e) {
  j = json{{"q", e.q},
           {"pure", e.pure},
           {"c_exists", e.c_exists},
           {"d_exists", e.d_exists},
           {"consistent", e.consistent}};
}
inline void from_json(const json& j, MixedArcPerQ& e) {
  j.at("q").get_to(e.q);
  j.at("pure").get_to(e.pure);
  j.at("c_exists").get_to(e.c_exists);
  j.at("d_exists").get_to(e.d_exists);
  j.at("consistent").get_to(e.consistent);
}

inline void to_json(json& j, const MixedArcVerdict& v) {
  j = json{{"applicable", v.applicable},
           {"consistent", v.consistent},
           {"per_q", v.per_q}};
}
inline void from_json(const json& j, MixedArcVerdict& v) {
  j.at("applicable").get_to(v.applicable);
  j.at("consistent").get_to(v.consistent);
  j.at("per_q").get_to(v.per_q);
}

NLOHMANN_JSON_SERIALIZE_ENUM(CheckStatus, {
                                              {CheckStatus::holds, "holds"},
                                              {CheckStatus::vacuous, "vacuous"},
                                              {CheckStatus::fails, "fails"},
                                              {CheckStatus::not_applicable, "not_applicable"},
                                          })

inline void to_json(json& j, const DeltaStructureVerdict& v) {
  j = json{{"delta2_complete_bipartite", v.delta2_complete_bipartite},
           {"delta2_witness", v.delta2_witness},
           {"deltaq_cayley_structure", v.deltaq_cayley_structure},
           {"deltaq_witness", v.deltaq_witness}};
}
inline void from_json(const json& j, DeltaStructureVerdict& v) {
  j.at("delta2_complete_bipartite").get_to(v.delta2_complete_bipartite);
  j.at("delta2_witness").get_to(v.delta2_witness);
  j.at("deltaq_cayley_structure").get_to(v.deltaq_cayley_structure);
  j.at("deltaq_witness").get_to(v.deltaq_witness);
}

inline void to_json(json& j, const LemmaVerdict& v) {
  j = json{{"name", v.name}, {"status", v.status}, {"witness", v.witness}};
}
inline void from_json(const json& j, LemmaVerdict& v) {
  j.at("name").get_to(v.name);
  j.at("status").get_to(v.status);
  j.at("witness").get_to(v.witness);
}

inline void to_json(json& j, const LemmaSuiteReport& r) { j = json{{"verdicts", r.verdicts}}; }
inline void from_json(const json& j, LemmaSuiteReport& r) { j.at("verdicts").get_to(r.verdicts); }

inline void to_json(json& j, const AnalysisReport& r) {
  j = json{{"order", r.order},
           {"strongly_connected", r.strongly_connected},
           {"undirected", r.undirected},
           {"certificate", r.certificate_hex},
           {"stopped_at", r.stopped_at},
           {"diameter", r.diameter},
           {"types", r.types},
           {"valencies", r.valencies},
           {"scheme", r.scheme},
           {"identities", r.identities},
           {"purity", r.purity},
           {"configs", r.configs},
           {"mixed_arc", r.mixed_arc},
           {"delta", r.delta},
           {"lemmas", r.lemmas}};
}
inline void from_json(const json& j, AnalysisReport& r) {
  j.at("order").get_to(r.order);
  j.at("strongly_connected").get_to(r.strongly_connected);
  j.at("undirected").get_to(r.undirected);
  j.at("certificate").get_to(r.certificate_hex);
  j.at("stopped_at").get_to(r.stopped_at);
  j.at("diameter").get_to(r.diameter);
  j.at("types").get_to(r.types);
  j.at("valencies").get_to(r.valencies);
  j.at("scheme").get_to(r.scheme);
  j.at("identities").get_to(r.identities);
  j.at("purity").get_to(r.purity);
  j.at("configs").get_to(r.configs);
  j.at("mixed_arc").get_to(r.mixed_arc);
  j.at("delta").get_to(r.delta);
  j.at("lemmas").get_to(r.lemmas);
}

inline void to_json(json& j, const Survivor& s) {
  j = json{{"source", s.source},
           {"certificate", s.certificate_hex},
           {"report", s.report}};
}
inline void from_json(const json& j, Survivor& s) {
  j.at("source").get_to(s.source);
  j.at("certificate").get_to(s.certificate_hex);
  j.at("report").get_to(s.report);
}

inline void to_json(json& j, const ClassificationResult& r) {
  j = json{{"candidates", r.candidates},
           {"survivors", r.survivors},
           {"matched_catalog", r.matched_catalog},
           {"unmatched", r.unmatched}};
}
inline void from_json(const json& j, ClassificationResult& r) {
  j.at("candidates").get_to(r.candidates);
  j.at("survivors").get_to(r.survivors);
  j.at("matched_catalog").get_to(r.matched_catalog);
  j.at("unmatched").get_to(r.unmatched);
}

inline void to_json(json& j, const CorpusCounterexample& c) {
  j = json{{"label", c.label}, {"check", c.check}, {"detail", c.detail}};
}
inline void from_json(const json& j, CorpusCounterexample& c) {
  j.at("label").get_to(c.label);
  j.at("check").get_to(c.check);
  j.at("detail").get_to(c.detail);
}

inline void to_json(json& j, const CorpusAggregate& a) {
  j = json{{"total", a.total},
           {"gated", a.gated},
           {"pass", a.pass},
           {"counterexample", a.counterexample},
           {"lemma_counts", a.lemma_counts}};
}
inline void from_json(const json& j, CorpusAggregate& a) {
  j.at("total").get_to(a.total);
  j.at("gated").get_to(a.gated);
  j.at("pass").get_to(a.pass);
  j.at("counterexample").get_to(a.counterexample);
  j.at("lemma_counts").get_to(a.lemma_counts);
}

enum class ReportFormat { text, structured };

namespace detail {

inline std::string types_line(const std::vector<TwoWayType>& types,
                              const std::vector<std::optional<int>>& valencies) {
  std::string s;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) s += ", ";
    s += to_string(types[i]) + " k=";
    s += valencies[i] ? std::to_string(*valencies[i]) : "non-constant";
  }
  return s;
}

inline std::string circuit_with_types(const Circuit& c,
                                      const std::vector<TwoWayType>& types) {
  std::string s = to_string(c) + " types ";
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) s += ",";
    s += to_string(types[i]);
  }
  return s;
}

}  // namespace detail

/// Witness circuits print as vertex sequences with per-arc types; the
/// partition is not part of the report, so the caller-facing renderer
/// recomputes nothing and types come from the report's own type list.
inline std::string render_report(const AnalysisReport& r, ReportFormat format) {
  if (format == ReportFormat::structured) return json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "order: " << r.order << "\n";
  out << "strongly_connected: " << (r.strongly_connected ? "true" : "false") << "\n";
  out << "undirected: " << (r.undirected ? "true" : "false") << "\n";
  if (!r.certificate_hex.empty()) out << "certificate: " << r.certificate_hex << "\n";
  if (!r.stopped_at.empty()) out << "stopped_at: " << r.stopped_at << "\n";
  if (!r.strongly_connected) return std::move(out).str();
  out << "diameter: " << r.diameter << "\n";
  out << "types: " << detail::types_line(r.types, r.valencies) << "\n";
  out << "wdr: " << (r.scheme.is_wdr ? "true" : "false") << "\n";
  if (!r.scheme.is_wdr) {
    if (r.scheme.wdr_witness)
      out << "wdr_witness: " << to_string(*r.scheme.wdr_witness) << "\n";
    return std::move(out).str();
  }
  out << "commutative: " << (r.scheme.commutative ? "true" : "false") << "\n";
  out << "regular: " << (r.scheme.regular ? "true" : "false") << "\n";
  out << "max_valency: " << r.scheme.max_valency << "\n";
  out << "thin: " << (r.scheme.thin ? "true" : "false") << "\n";
  out << "quasi_thin: " << (r.scheme.quasi_thin ? "true" : "false") << "\n";
  out << "equivalenced: "
      << (r.scheme.equivalenced ? std::to_string(*r.scheme.equivalenced) : "none")
      << "\n";
  out << "identities: " << (r.identities.ok ? "ok" : r.identities.first_violation)
      << "\n";
  for (const auto& e : r.purity.entries) {
    out << "purity q=" << e.q << ": " << (e.pure ? "pure" : "mixed");
    if (e.mixed_witness)
      out << " witness " << detail::circuit_with_types(*e.mixed_witness, e.witness_arc_types);
    out << "\n";
  }
  for (const auto& e : r.configs.entries)
    if (e.q >= 3)
      out << "config q=" << e.q << ": C=" << (e.c_exists ? "true" : "false")
          << " D=" << (e.d_exists ? "true" : "false") << "\n";
  if (r.mixed_arc.applicable) {
    out << "mixed_arc_characterization: "
        << (r.mixed_arc.consistent ? "consistent" : "inconsistent") << "\n";
    for (const auto& e : r.mixed_arc.per_q)
      out << "  q=" << e.q << ": pure=" << (e.pure ? "true" : "false")
          << " C=" << (e.c_exists ? "true" : "false")
          << " D=" << (e.d_exists ? "true" : "false")
          << " consistent=" << (e.consistent ? "true" : "false") << "\n";
  } else {
    out << "mixed_arc_characterization: not_applicable\n";
  }
  out << "delta2_complete_bipartite: " << to_string(r.delta.delta2_complete_bipartite);
  if (!r.delta.delta2_witness.empty()) out << " (" << r.delta.delta2_witness << ")";
  out << "\n";
  out << "deltaq_cayley_structure: " << to_string(r.delta.deltaq_cayley_structure);
  if (!r.delta.deltaq_witness.empty()) out << " (" << r.delta.deltaq_witness << ")";
  out << "\n";
  for (const auto& v : r.lemmas.verdicts) {
    out << "lemma " << v.name << ": " << to_string(v.status);
    if (!v.witness.empty()) out << " (" << v.witness << ")";
    out << "\n";
  }
  return std::move(out).str();
}

inline std::string render_report(const ClassificationResult& r, ReportFormat format) {
  if (format == ReportFormat::structured) return json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "candidates: " << r.candidates << "\n";
  const auto& catalog = classification_catalog();
  for (std::size_t i = 0; i < r.survivors.size(); ++i) {
    const auto& s = r.survivors[i];
    out << "survivor " << i << ": source=" << s.source
        << " order=" << s.report.order << " diameter=" << s.report.diameter
        << " certificate=" << s.certificate_hex << " catalog=";
    if (r.matched_catalog[i])
      out << catalog[static_cast<std::size_t>(*r.matched_catalog[i])].label;
    else
      out << "unmatched";
    out << "\n";
  }
  out << "survivors: " << r.survivors.size() << " / catalog matched: "
      << r.matched_count() << " / unmatched: " << r.unmatched.size() << "\n";
  return std::move(out).str();
}

inline std::string render_report(const CorpusAggregate& a, ReportFormat format) {
  if (format == ReportFormat::structured) return json(a).dump(2) + "\n";
  std::ostringstream out;
  out << "corpus total: " << a.total << "\n";
  out << "corpus verified: " << a.gated << "\n";
  for (const auto& [name, counts] : a.lemma_counts) {
    out << "lemma " << name << ":";
    for (const auto& [status, count] : counts) out << " " << status << "=" << count;
    out << "\n";
  }
  if (a.counterexample)
    out << "counterexample: " << a.counterexample->label << " check "
        << a.counterexample->check << ": " << a.counterexample->detail << "\n";
  out << "corpus verdict: " << (a.pass ? "pass" : "fail") << "\n";
  return std::move(out).str();
}

inline AnalysisReport parse_analysis_report(const std::string& text) {
  return json::parse(text).get<AnalysisReport>();
}
inline ClassificationResult parse_classification_result(const std::string& text) {
  return json::parse(text).get<ClassificationResult>();
}
inline CorpusAggregate parse_corpus_aggregate(const std::string& text) {
  return json::parse(text).get<CorpusAggregate>();
}

}  // namespace wdr
