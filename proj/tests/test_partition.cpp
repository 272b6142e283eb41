#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "wdr/cayley.hpp"
#include "wdr/partition.hpp"

using wdr::TwoWayType;

TEST_CASE("two-way partition of the directed triangle") {
  const auto part = wdr::two_way_partition(testutil::triangle());
  CHECK(part.types == std::vector<TwoWayType>{{0, 0}, {1, 2}, {2, 1}});
  CHECK(part.diameter == 2);
  REQUIRE(part.valencies_constant());
  CHECK(*part.valencies[static_cast<std::size_t>(part.type_index({1, 2}))] == 1);
}

TEST_CASE("two-way partition of Cay(Z_6,{1,3,4})") {
  const auto part = wdr::two_way_partition(wdr::cayley_cyclic(6, {1, 3, 4}));
  CHECK(part.types == std::vector<TwoWayType>{{0, 0}, {1, 1}, {1, 2}, {2, 1}});
  REQUIRE(part.valencies_constant());
  CHECK(*part.valencies[static_cast<std::size_t>(part.type_index({1, 1}))] == 1);
  CHECK(*part.valencies[static_cast<std::size_t>(part.type_index({1, 2}))] == 2);
  CHECK(*part.valencies[static_cast<std::size_t>(part.type_index({2, 1}))] == 2);
}

TEST_CASE("Cay(Z_4,{1,2}) is thin at the partition level") {
  const auto part = wdr::two_way_partition(wdr::cayley_cyclic(4, {1, 2}));
  for (std::size_t t = 0; t < part.types.size(); ++t) {
    REQUIRE(part.valencies[t].has_value());
    CHECK(*part.valencies[t] == 1);
  }
}

TEST_CASE("partition invariants hold on a sample corpus") {
  std::vector<wdr::Digraph> samples = {
      testutil::triangle(),
      wdr::cayley_cyclic(4, {1, 2}),
      wdr::cayley_cyclic(6, {1, 3, 4}),
      wdr::cayley_cyclic(6, {1, 2, 3, 5}),
      wdr::cayley_cyclic(8, {1, 2, 5, 6}),
      wdr::cayley_cyclic(12, {1, 3, 4, 5, 7, 9, 11}),
      testutil::chorded_five_cycle(),
  };
  std::mt19937 rng(99);
  int found = 0;
  while (found < 10) {
    const wdr::Digraph g = testutil::random_digraph(5, 0.5, rng);
    if (!wdr::is_strongly_connected(g)) continue;
    samples.push_back(g);
    ++found;
  }

  for (const auto& g : samples) {
    const auto part = wdr::two_way_partition(g);
    const int n = g.order();

    // pairs_by_type partitions V x V
    std::size_t total = 0;
    for (const auto& pairs : part.pairs_by_type) total += pairs.size();
    CHECK(total == static_cast<std::size_t>(n) * static_cast<std::size_t>(n));

    // |G_i| == |G_{i*}| and the conjugate flip
    for (std::size_t t = 0; t < part.types.size(); ++t) {
      const int tc = part.type_index(part.types[t].conjugate());
      REQUIRE(tc >= 0);
      CHECK(part.pairs_by_type[t].size() ==
            part.pairs_by_type[static_cast<std::size_t>(tc)].size());
      for (const auto& [x, y] : part.pairs_by_type[t])
        CHECK(part.type_of(y, x) == part.types[t].conjugate());
    }

    // the (0,0) class is the diagonal
    const int id = part.type_index({0, 0});
    REQUIRE(id >= 0);
    CHECK(part.pairs_by_type[static_cast<std::size_t>(id)].size() ==
          static_cast<std::size_t>(n));
    for (const auto& [x, y] : part.pairs_by_type[static_cast<std::size_t>(id)])
      CHECK(x == y);

    // fibers agree with pairs
    for (std::size_t t = 0; t < part.types.size(); ++t)
      for (const auto& [x, y] : part.pairs_by_type[t])
        CHECK((part.fiber(x, static_cast<int>(t)) >> y & 1) == 1);
  }
}

TEST_CASE("Cayley digraph types depend only on the difference") {
  for (const auto& g : {wdr::cayley_cyclic(6, {1, 2, 3, 5}),
                        wdr::cayley_cyclic(12, {1, 3, 4, 7, 9, 10})}) {
    const auto part = wdr::two_way_partition(g);
    const int n = g.order();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        CHECK(part.type_of(x, y) == part.type_of(0, ((y - x) % n + n) % n));
  }
  // product group: translate both coordinates
  const int q = 4, m = 2;
  const auto g = wdr::cayley_product(q, m, {{1, 0}, {1, 1}});
  const auto part = wdr::two_way_partition(g);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < m; ++d) {
          const int x = a * m + b, y = c * m + d;
          const int diff = (((c - a) % q + q) % q) * m + (((d - b) % m + m) % m);
          CHECK(part.type_of(x, y) == part.type_of(0, diff));
        }
}

TEST_CASE("non-constant fibers are marked") {
  const auto part = wdr::two_way_partition(testutil::chorded_five_cycle());
  CHECK_FALSE(part.valencies_constant());
}
