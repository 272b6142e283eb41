#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "wdr/classify.hpp"
#include "wdr/report.hpp"

using wdr::CheckStatus;

TEST_CASE("analyze runs the full pipeline on Cay(Z_3,{1})") {
  const auto r = wdr::analyze(wdr::cayley_cyclic(3, {1}));
  CHECK(r.strongly_connected);
  CHECK_FALSE(r.undirected);
  CHECK(r.stopped_at.empty());
  CHECK(r.diameter == 2);
  CHECK(r.scheme.is_wdr);
  CHECK(r.scheme.commutative);
  CHECK(r.scheme.regular);
  CHECK(r.scheme.thin);
  CHECK(r.identities.ok);
  CHECK(r.mixed_arc.applicable);
  CHECK(r.mixed_arc.consistent);
  CHECK_FALSE(r.certificate_hex.empty());
}

TEST_CASE("analyze on Cay(Z_8,{1,2,5,6})") {
  const auto r = wdr::analyze(wdr::cayley_cyclic(8, {1, 2, 5, 6}));
  CHECK(r.diameter == 2);
  CHECK(r.scheme.quasi_thin);
  REQUIRE(r.mixed_arc.applicable);
  CHECK(r.mixed_arc.consistent);
  bool saw_q3 = false;
  for (const auto& e : r.mixed_arc.per_q)
    if (e.q == 3) {
      saw_q3 = true;
      CHECK_FALSE(e.pure);
      CHECK(e.c_exists);
    }
  CHECK(saw_q3);
}

TEST_CASE("analyze stops at the failing stage") {
  {
    const auto r = wdr::analyze(testutil::chorded_five_cycle());
    CHECK(r.strongly_connected);
    CHECK_FALSE(r.scheme.is_wdr);
    REQUIRE(r.scheme.wdr_witness.has_value());
    CHECK(r.stopped_at == "weak_distance_regularity");
    CHECK(r.purity.entries.empty());
    CHECK_FALSE(r.mixed_arc.applicable);
    for (const auto& v : r.lemmas.verdicts) CHECK(v.status == CheckStatus::not_applicable);
  }
  {
    const auto r = wdr::analyze(wdr::build_digraph(3, {{0, 1}, {1, 2}}, false));
    CHECK_FALSE(r.strongly_connected);
    CHECK(r.stopped_at == "strong_connectivity");
    CHECK(r.diameter == -1);
  }
}

TEST_CASE("search_circulants over small orders finds the two smallest entries") {
  const auto result = wdr::search_circulants(3, 5, 2);
  CHECK(result.candidates == 18);  // 2 + 4 + 12 directed sets
  REQUIRE(result.survivors.size() == 2);
  CHECK(result.unmatched.empty());
  REQUIRE(result.matched_catalog[0].has_value());
  REQUIRE(result.matched_catalog[1].has_value());
  CHECK(*result.matched_catalog[0] == 0);
  CHECK(*result.matched_catalog[1] == 1);
  CHECK(result.survivors[0].source == "cay:zn:3:1");
}

TEST_CASE("exhaustive search at order 3 finds only the directed triangle") {
  const auto result = wdr::search_all_digraphs(3, std::nullopt);
  REQUIRE(result.survivors.size() == 1);
  CHECK(result.survivors[0].certificate_hex ==
        wdr::canonical_certificate(testutil::triangle()).hex());
  REQUIRE(result.matched_catalog[0].has_value());
  CHECK(*result.matched_catalog[0] == 0);
}

TEST_CASE("exhaustive search rejects out-of-range orders") {
  CHECK_THROWS_AS(wdr::search_all_digraphs(6, 2), wdr::precondition_error);
  CHECK_THROWS_AS(wdr::search_all_digraphs(0, 2), wdr::precondition_error);
}

TEST_CASE("pruning does not change the survivor set") {
  const auto pruned = wdr::search_all_digraphs(4, std::nullopt, 1, true);
  const auto full = wdr::search_all_digraphs(4, std::nullopt, 1, false);
  REQUIRE(pruned.survivors.size() == full.survivors.size());
  for (std::size_t i = 0; i < pruned.survivors.size(); ++i) {
    CHECK(pruned.survivors[i].certificate_hex == full.survivors[i].certificate_hex);
    CHECK(pruned.survivors[i].source == full.survivors[i].source);
  }
}

TEST_CASE("diameter-2 exhaustive survivors at order 4 are circulant") {
  const auto all = wdr::search_all_digraphs(4, 2);
  const auto circ = wdr::search_circulants(3, 12, 2);
  std::set<std::string> circ_certs;
  for (const auto& s : circ.survivors) circ_certs.insert(s.certificate_hex);
  for (const auto& s : all.survivors) CHECK(circ_certs.contains(s.certificate_hex));
}

TEST_CASE("unfiltered circulant search covers the catalog") {
  const auto result = wdr::search_circulants(3, 12, std::nullopt);
  std::set<std::string> certs;
  for (const auto& s : result.survivors) {
    certs.insert(s.certificate_hex);
    REQUIRE(s.report.mixed_arc.applicable);
    CHECK(s.report.mixed_arc.consistent);
  }
  CHECK(result.survivors.size() > 9);
  for (const auto& [cert, idx] : wdr::catalog_certificates())
    CHECK(certs.contains(cert));
}

TEST_CASE("searches are deterministic across runs and worker counts") {
  const auto a = wdr::search_circulants(3, 8, 2, 1);
  const auto b = wdr::search_circulants(3, 8, 2, 1);
  const auto c = wdr::search_circulants(3, 8, 2, 4);
  CHECK(wdr::render_report(a, wdr::ReportFormat::structured) ==
        wdr::render_report(b, wdr::ReportFormat::structured));
  CHECK(wdr::render_report(a, wdr::ReportFormat::structured) ==
        wdr::render_report(c, wdr::ReportFormat::structured));
}

TEST_CASE("parallel_for_index propagates exceptions") {
  CHECK_THROWS_AS(wdr::parallel_for_index(64, 4,
                                          [](int i) {
                                            if (i == 13)
                                              throw wdr::precondition_error("boom");
                                          }),
                  wdr::precondition_error);
}

TEST_CASE("corpus verification on the catalog") {
  const auto items = wdr::corpus_from_catalog();
  const auto agg = wdr::corpus_verify(items);
  CHECK(agg.total == 9);
  CHECK(agg.gated == 9);
  CHECK(agg.pass);
  CHECK_FALSE(agg.counterexample.has_value());
  for (const auto& [name, counts] : agg.lemma_counts) {
    CHECK(counts.count("fails") == 0);
    CHECK(counts.count("not_applicable") == 0);
  }
}

TEST_CASE("corpus verification of an empty stream passes") {
  const auto agg = wdr::corpus_verify(std::vector<wdr::CorpusItem>{});
  CHECK(agg.total == 0);
  CHECK(agg.gated == 0);
  CHECK(agg.pass);
}

TEST_CASE("non-gated members are counted but not verified") {
  std::vector<wdr::CorpusItem> items;
  items.push_back({"chord", testutil::chorded_five_cycle()});
  items.push_back({"nonregular", wdr::cayley_cyclic(9, {1, 4, 7})});
  items.push_back({"triangle", testutil::triangle()});
  const auto agg = wdr::corpus_verify(items);
  CHECK(agg.total == 3);
  CHECK(agg.gated == 1);
  CHECK(agg.pass);
}
