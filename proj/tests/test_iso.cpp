#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "wdr/cayley.hpp"
#include "wdr/classify.hpp"
#include "wdr/iso.hpp"

TEST_CASE("inverse connection sets give isomorphic digraphs") {
  const auto a = wdr::cayley_cyclic(3, {1});
  const auto b = wdr::cayley_cyclic(3, {2});
  const auto f = wdr::are_isomorphic(a, b);
  REQUIRE(f.has_value());
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      CHECK(a.has_arc(u, v) ==
            b.has_arc((*f)[static_cast<std::size_t>(u)], (*f)[static_cast<std::size_t>(v)]));
}

TEST_CASE("degree mismatch is detected without search") {
  CHECK_FALSE(wdr::are_isomorphic(wdr::cayley_cyclic(6, {1, 3, 4}),
                                  wdr::cayley_cyclic(6, {1, 2, 3, 5}))
                  .has_value());
}

TEST_CASE("returned bijections preserve arcs on random relabelings") {
  std::mt19937 rng(4242);
  for (int round = 0; round < 10; ++round) {
    const wdr::Digraph g = testutil::random_digraph(7, 0.35, rng);
    const auto perm = testutil::random_permutation(7, rng);
    const wdr::Digraph h = testutil::relabel(g, perm);
    const auto f = wdr::are_isomorphic(g, h);
    REQUIRE(f.has_value());
    for (int u = 0; u < 7; ++u)
      for (int v = 0; v < 7; ++v)
        CHECK(g.has_arc(u, v) ==
              h.has_arc((*f)[static_cast<std::size_t>(u)],
                        (*f)[static_cast<std::size_t>(v)]));
  }
}

TEST_CASE("certificates are stable under 100 random relabelings") {
  const auto g = wdr::cayley_cyclic(12, {1, 3, 4, 7, 9, 10});
  const auto reference = wdr::canonical_certificate(g);
  std::mt19937 rng(7);
  for (int round = 0; round < 100; ++round) {
    const auto perm = testutil::random_permutation(12, rng);
    CHECK(wdr::canonical_certificate(testutil::relabel(g, perm)) == reference);
  }
}

TEST_CASE("certificate equality matches isomorphism") {
  std::vector<wdr::Digraph> pool;
  for (const auto& entry : wdr::classification_catalog()) pool.push_back(entry.spec.build());
  std::mt19937 rng(11);
  pool.push_back(testutil::relabel(pool[2], testutil::random_permutation(6, rng)));
  pool.push_back(testutil::relabel(pool[4], testutil::random_permutation(8, rng)));
  for (int round = 0; round < 6; ++round) {
    const wdr::Digraph g = testutil::random_digraph(6, 0.4, rng);
    pool.push_back(g);
    pool.push_back(testutil::relabel(g, testutil::random_permutation(6, rng)));
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (pool[i].order() != pool[j].order()) continue;
      const bool same_cert =
          wdr::canonical_certificate(pool[i]) == wdr::canonical_certificate(pool[j]);
      CHECK(same_cert == wdr::are_isomorphic(pool[i], pool[j]).has_value());
    }
}

TEST_CASE("order limits are enforced") {
  std::vector<std::uint64_t> rows(17, 0);
  for (int u = 0; u < 17; ++u) rows[static_cast<std::size_t>(u)] = 1ull << ((u + 1) % 17);
  const auto big = wdr::Digraph::from_rows(17, std::move(rows));
  CHECK_THROWS_AS(wdr::canonical_certificate(big), wdr::precondition_error);
  CHECK_THROWS_AS(wdr::are_isomorphic(big, big), wdr::precondition_error);
}

TEST_CASE("isomorphic digraphs get identical analysis flags") {
  std::mt19937 rng(2025);
  for (const auto& spec : {wdr::cyclic_spec(6, {1, 2, 3, 5}), wdr::cyclic_spec(8, {1, 2, 5, 6}),
                           wdr::cyclic_spec(9, {1, 4, 7})}) {
    const auto g = spec.build();
    const auto h = testutil::relabel(g, testutil::random_permutation(g.order(), rng));
    const auto ra = wdr::analyze(g);
    const auto rb = wdr::analyze(h);
    CHECK(ra.certificate_hex == rb.certificate_hex);
    CHECK(ra.diameter == rb.diameter);
    CHECK(ra.types == rb.types);
    CHECK(ra.valencies == rb.valencies);
    CHECK(ra.scheme == rb.scheme);
    REQUIRE(ra.purity.entries.size() == rb.purity.entries.size());
    for (std::size_t i = 0; i < ra.purity.entries.size(); ++i) {
      CHECK(ra.purity.entries[i].q == rb.purity.entries[i].q);
      CHECK(ra.purity.entries[i].pure == rb.purity.entries[i].pure);
    }
    CHECK(ra.configs == rb.configs);
    CHECK(ra.mixed_arc == rb.mixed_arc);
    CHECK(ra.delta.delta2_complete_bipartite == rb.delta.delta2_complete_bipartite);
    CHECK(ra.delta.deltaq_cayley_structure == rb.delta.deltaq_cayley_structure);
    REQUIRE(ra.lemmas.verdicts.size() == rb.lemmas.verdicts.size());
    for (std::size_t i = 0; i < ra.lemmas.verdicts.size(); ++i)
      CHECK(ra.lemmas.verdicts[i].status == rb.lemmas.verdicts[i].status);
  }
}
