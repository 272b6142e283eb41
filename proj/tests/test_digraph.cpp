#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "wdr/cayley.hpp"
#include "wdr/digraph.hpp"

using wdr::Arc;
using wdr::Digraph;

TEST_CASE("build_digraph accepts the directed triangle") {
  const Digraph tri = testutil::triangle();
  CHECK(tri.order() == 3);
  CHECK(tri.arc_count() == 3);
  CHECK(tri.has_arc(0, 1));
  CHECK_FALSE(tri.has_arc(1, 0));
  CHECK(tri.arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(tri.is_undirected());
}

TEST_CASE("build_digraph rejects invalid input") {
  CHECK_THROWS_AS(wdr::build_digraph(2, {{0, 1}, {1, 0}}, true), wdr::input_error);
  CHECK_THROWS_AS(wdr::build_digraph(3, {{0, 0}}, false), wdr::input_error);
  CHECK_THROWS_AS(wdr::build_digraph(3, {{0, 1}, {0, 1}}, false), wdr::input_error);
  CHECK_THROWS_AS(wdr::build_digraph(2, {{0, 5}}, false), wdr::input_error);
  CHECK_THROWS_AS(wdr::build_digraph(3, {{-1, 2}}, false), wdr::input_error);
  CHECK_THROWS_AS(wdr::build_digraph(0, std::vector<Arc>{}, false), wdr::input_error);
  CHECK_THROWS_AS(wdr::build_digraph(65, std::vector<Arc>{}, false), wdr::input_error);
  // a digraph without arcs counts as undirected
  CHECK_THROWS_AS(wdr::build_digraph(1, std::vector<Arc>{}, true), wdr::input_error);
  CHECK_NOTHROW(wdr::build_digraph(1, std::vector<Arc>{}, false));
}

TEST_CASE("strong connectivity") {
  CHECK(wdr::is_strongly_connected(testutil::triangle()));
  const Digraph two_islands =
      wdr::build_digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}, false);
  CHECK_FALSE(wdr::is_strongly_connected(two_islands));
  CHECK(wdr::is_strongly_connected(wdr::cayley_cyclic(6, {1, 3, 4})));
  CHECK_FALSE(wdr::is_strongly_connected(wdr::cayley_cyclic(6, {2, 4})));
}

TEST_CASE("distance matrix on small digraphs") {
  const auto dm = wdr::distance_matrix(testutil::triangle());
  CHECK(dm.at(0, 2) == 2);
  CHECK(dm.at(2, 0) == 1);
  CHECK(dm.at(0, 0) == 0);
  CHECK(dm.diameter() == 2);

  const auto z4 = wdr::distance_matrix(wdr::cayley_cyclic(4, {1, 2}));
  CHECK(z4.at(0, 3) == 2);
  CHECK(z4.at(3, 0) == 1);

  const auto z6 = wdr::distance_matrix(wdr::cayley_cyclic(6, {1, 3, 4}));
  CHECK(z6.at(1, 0) == 2);
}

TEST_CASE("distance matrix requires strong connectivity") {
  const Digraph path = wdr::build_digraph(3, {{0, 1}, {1, 2}}, false);
  CHECK_THROWS_WITH_AS(wdr::distance_matrix(path),
                       doctest::Contains("not strongly connected"),
                       wdr::precondition_error);
}

TEST_CASE("distance matrix agrees with the queue BFS oracle") {
  std::vector<Digraph> samples = {
      testutil::triangle(),
      wdr::cayley_cyclic(4, {1, 2}),
      wdr::cayley_cyclic(6, {1, 3, 4}),
      wdr::cayley_cyclic(12, {1, 3, 4, 7, 9, 10}),
  };
  std::mt19937 rng(20240811);
  int found = 0;
  while (found < 25) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Digraph g = testutil::random_digraph(n, 0.4, rng);
    if (!wdr::is_strongly_connected(g)) continue;
    samples.push_back(g);
    ++found;
  }
  for (const auto& g : samples) {
    const auto dm = wdr::distance_matrix(g);
    const auto ref = oracle::bfs_distances(g);
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y)
        CHECK(static_cast<int>(dm.at(x, y)) ==
              ref[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
  }
}
