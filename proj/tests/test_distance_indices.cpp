#include <catch2/catch_amalgamated.hpp>

#include <signet/distance_indices.hpp>

#include "support.hpp"

using namespace signet;

TEST_CASE("all_pairs_distances") {
  SECTION("signed path") {
    const auto m = all_pairs_distances(testsupport::p3_pm());
    const std::vector<std::int32_t> expected{0, 1, 2, 1, 0, 1, 2, 1, 0};
    REQUIRE(m.hops == expected);
  }
  SECTION("complete graph is all ones off the diagonal") {
    const auto m = all_pairs_distances(testsupport::k3_all_plus());
    for (VertexId u = 0; u < 3; ++u) {
      for (VertexId v = 0; v < 3; ++v) {
        REQUIRE(m.at(u, v) == (u == v ? 0 : 1));
      }
    }
  }
  SECTION("disconnected input is an error") {
    REQUIRE_THROWS_AS(all_pairs_distances(testsupport::two_disjoint_edges()),
                      DisconnectedGraphError);
    REQUIRE_THROWS_AS(schultz(testsupport::two_disjoint_edges()), DisconnectedGraphError);
    REQUIRE_THROWS_AS(gutman(testsupport::two_disjoint_edges()), DisconnectedGraphError);
  }
  SECTION("single vertex") {
    const auto m = all_pairs_distances(SignedGraph(1, {}));
    REQUIRE(m.hops == std::vector<std::int32_t>{0});
  }
}

TEST_CASE("distance matrix invariants on random connected graphs") {
  for (const auto& g : testsupport::random_connected_corpus(30)) {
    const auto m = all_pairs_distances(g);
    const auto n = g.vertex_count();
    for (VertexId u = 0; u < n; ++u) {
      REQUIRE(m.at(u, u) == 0);
      for (VertexId v = 0; v < n; ++v) {
        REQUIRE(m.at(u, v) == m.at(v, u));
        if (u != v) REQUIRE(m.at(u, v) >= 1);
        for (VertexId w = 0; w < n; ++w) {
          REQUIRE(m.at(u, w) <= m.at(u, v) + m.at(v, w));
        }
      }
    }
  }
}

TEST_CASE("schultz family") {
  SECTION("signed path") {
    REQUIRE(schultz(testsupport::p3_pm()) == SchultzReport{5, 5, 0, 10});
  }
  SECTION("single positive edge") {
    const SignedGraph k2(2, {{0, 1, Sign::plus}});
    REQUIRE(schultz(k2) == SchultzReport{2, 0, 2, 2});
  }
  SECTION("alternating 4-cycle has zero net index") {
    REQUIRE(schultz(testsupport::c4_alternating()).s_net == 0);
  }
}

TEST_CASE("gutman family") {
  SECTION("signed path") {
    REQUIRE(gutman(testsupport::p3_pm()) == GutmanReport{1, 1, 4, -2, 6});
  }
  SECTION("alternating 4-cycle") {
    REQUIRE(gutman(testsupport::c4_alternating()) == GutmanReport{8, 8, 16, 0, 32});
  }
  SECTION("single positive edge") {
    const SignedGraph k2(2, {{0, 1, Sign::plus}});
    REQUIRE(gutman(k2) == GutmanReport{1, 0, 0, 1, 1});
  }
}

TEST_CASE("schultz and gutman identities hold on random connected graphs") {
  for (const auto& g : testsupport::random_connected_corpus(60)) {
    const auto s = schultz(g);
    REQUIRE(s.s_underlying == s.s_pos + s.s_neg);
    REQUIRE(s.s_net == s.s_pos - s.s_neg);
    REQUIRE(s.s_underlying + s.s_net == 2 * s.s_pos);
    REQUIRE(s.s_underlying - s.s_net == 2 * s.s_neg);
    REQUIRE(s.s_underlying >= s.s_net);

    const auto gm = gutman(g);
    REQUIRE(gm.g_underlying == gm.g_pos + gm.g_neg + gm.g_mixed);
    REQUIRE(gm.g_net == gm.g_pos + gm.g_neg - gm.g_mixed);
  }
}

TEST_CASE("sign negation acts on the distance families as expected") {
  for (const auto& g : testsupport::random_connected_corpus(40)) {
    const auto f = negated(g);

    const auto s = schultz(g);
    const auto sn = schultz(f);
    CHECK(sn.s_pos == s.s_neg);
    CHECK(sn.s_neg == s.s_pos);
    CHECK(sn.s_net == -s.s_net);
    CHECK(sn.s_underlying == s.s_underlying);

    const auto gm = gutman(g);
    const auto gmn = gutman(f);
    CHECK(gmn.g_pos == gm.g_neg);
    CHECK(gmn.g_neg == gm.g_pos);
    CHECK(gmn.g_mixed == gm.g_mixed);
    CHECK(gmn.g_net == gm.g_net);
    CHECK(gmn.g_underlying == gm.g_underlying);
  }
}

TEST_CASE("all-positive signatures collapse onto the underlying indices") {
  for (int i = 0; i < 15; ++i) {
    const auto g = gen::random_signed(
        {7, 0.6, gen::SignPattern::all_plus(), 700 + static_cast<std::uint64_t>(i), true});
    const auto s = schultz(g);
    CHECK(s.s_pos == s.s_underlying);
    CHECK(s.s_neg == 0);
    CHECK(s.s_net == s.s_underlying);
    const auto gm = gutman(g);
    CHECK(gm.g_pos == gm.g_underlying);
    CHECK(gm.g_neg == 0);
    CHECK(gm.g_mixed == 0);
    CHECK(gm.g_net == gm.g_underlying);
  }
}
