#include <catch2/catch_amalgamated.hpp>

#include <signet/degree_indices.hpp>

#include "support.hpp"

using namespace signet;

// Golden values for the signed path +,- on three vertices were derived by
// enumerating its degree triples (1,0), (1,1), (0,1) by hand.

TEST_CASE("first Zagreb family") {
  SECTION("signed path") {
    REQUIRE(first_zagreb(testsupport::p3_pm()) == FirstZagrebReport{2, 2, 1, 2, 6});
  }
  SECTION("edgeless graph") {
    REQUIRE(first_zagreb(SignedGraph(5, {})) == FirstZagrebReport{0, 0, 0, 0, 0});
  }
  SECTION("all-positive triangle") {
    REQUIRE(first_zagreb(testsupport::k3_all_plus()) == FirstZagrebReport{12, 0, 0, 12, 12});
  }
}

TEST_CASE("second Zagreb family") {
  SECTION("signed path") {
    REQUIRE(second_zagreb(testsupport::p3_pm()) == SecondZagrebReport{1, 1, 2, 0, 4});
  }
  SECTION("edgeless graph") {
    REQUIRE(second_zagreb(SignedGraph(3, {})) == SecondZagrebReport{0, 0, 0, 0, 0});
  }
  SECTION("all-positive triangle") {
    REQUIRE(second_zagreb(testsupport::k3_all_plus()) == SecondZagrebReport{12, 0, 0, 12, 12});
  }
}

TEST_CASE("edge imbalances") {
  SECTION("signed path") {
    const auto imbs = edge_imbalances(testsupport::p3_pm());
    REQUIRE(imbs.size() == 2);
    REQUIRE(imbs[0] == EdgeImbalance{0, 1, 0, 1, 1, 1});
    REQUIRE(imbs[1] == EdgeImbalance{1, 2, 1, 0, 1, 1});
  }
  SECTION("net-regular all-positive cycle has no imbalance") {
    const auto c4 = gen::cycle(4, gen::SignPattern::all_plus());
    for (const auto& imb : edge_imbalances(c4)) {
      REQUIRE(imb == EdgeImbalance{imb.u, imb.v, 0, 0, 0, 0});
    }
  }
}

TEST_CASE("irregularity family") {
  SECTION("signed path") {
    REQUIRE(irregularity(testsupport::p3_pm()) ==
            IrregularityReport{1, 1, 2, 2, 2, 2, 4, 2});
  }
  SECTION("alternating 4-cycle is flat") {
    REQUIRE(irregularity(testsupport::c4_alternating()) ==
            IrregularityReport{0, 0, 0, 0, 0, 0, 0, 0});
  }
  SECTION("edgeless graph") {
    REQUIRE(irregularity(SignedGraph(4, {})) == IrregularityReport{0, 0, 0, 0, 0, 0, 0, 0});
  }
}

TEST_CASE("Zagreb decompositions hold exactly on random graphs") {
  for (const auto& g : testsupport::random_corpus(80)) {
    const auto fz = first_zagreb(g);
    REQUIRE(fz.m1_underlying == fz.m1_pos + fz.m1_neg + 2 * fz.m1_mixed);
    REQUIRE(fz.m1_underlying == fz.m1_net + 4 * fz.m1_mixed);
    const auto sz = second_zagreb(g);
    REQUIRE(sz.m2_underlying == sz.m2_pos + sz.m2_neg + sz.m2_mixed);
    REQUIRE(sz.m2_underlying == sz.m2_net + 2 * sz.m2_mixed);
  }
}

TEST_CASE("imbalance and irregularity bounds hold on random graphs") {
  for (const auto& g : testsupport::random_corpus(80)) {
    for (const auto& imb : edge_imbalances(g)) {
      REQUIRE(imb.imb_underlying <= imb.imb_pos + imb.imb_neg);
      REQUIRE(imb.imb_net >= imb.imb_pos - imb.imb_neg);
    }
    const auto ir = irregularity(g);
    REQUIRE(ir.irr_underlying <= ir.irr_pos + ir.irr_neg);
    REQUIRE(ir.irrt_underlying <= ir.irrt_pos + ir.irrt_neg);
    REQUIRE(ir.irr_net >= ir.irr_pos - ir.irr_neg);
    REQUIRE(ir.irrt_net >= ir.irrt_pos - ir.irrt_neg);
  }
}

TEST_CASE("net-regular graphs have zero net irregularity") {
  const auto instances = {testsupport::c4_alternating(), testsupport::k3_all_plus(),
                          gen::cycle(6, gen::SignPattern::alternating()),
                          SignedGraph(4, {})};
  for (const auto& g : instances) {
    REQUIRE(is_net_regular(g).has_value());
    const auto ir = irregularity(g);
    CHECK(ir.irr_net == 0);
    CHECK(ir.irrt_net == 0);
  }
}

TEST_CASE("all-positive signatures collapse onto the underlying indices") {
  for (int i = 0; i < 20; ++i) {
    const auto g = gen::random_signed(
        {6, 0.5, gen::SignPattern::all_plus(), 500 + static_cast<std::uint64_t>(i), false});
    const auto fz = first_zagreb(g);
    CHECK(fz.m1_pos == fz.m1_underlying);
    CHECK(fz.m1_neg == 0);
    CHECK(fz.m1_mixed == 0);
    CHECK(fz.m1_net == fz.m1_underlying);
    const auto sz = second_zagreb(g);
    CHECK(sz.m2_pos == sz.m2_underlying);
    CHECK(sz.m2_neg == 0);
    CHECK(sz.m2_mixed == 0);
    CHECK(sz.m2_net == sz.m2_underlying);
  }
}

TEST_CASE("global sign negation swaps pos and neg fields") {
  for (const auto& g : testsupport::random_corpus(60)) {
    const auto f = negated(g);

    const auto fz = first_zagreb(g);
    const auto fzn = first_zagreb(f);
    CHECK(fzn.m1_pos == fz.m1_neg);
    CHECK(fzn.m1_neg == fz.m1_pos);
    CHECK(fzn.m1_mixed == fz.m1_mixed);
    CHECK(fzn.m1_net == fz.m1_net);
    CHECK(fzn.m1_underlying == fz.m1_underlying);

    const auto sz = second_zagreb(g);
    const auto szn = second_zagreb(f);
    CHECK(szn.m2_pos == sz.m2_neg);
    CHECK(szn.m2_neg == sz.m2_pos);
    CHECK(szn.m2_mixed == sz.m2_mixed);
    CHECK(szn.m2_net == sz.m2_net);
    CHECK(szn.m2_underlying == sz.m2_underlying);

    const auto ir = irregularity(g);
    const auto irn = irregularity(f);
    CHECK(irn.irr_pos == ir.irr_neg);
    CHECK(irn.irr_neg == ir.irr_pos);
    CHECK(irn.irr_net == ir.irr_net);
    CHECK(irn.irr_underlying == ir.irr_underlying);
    CHECK(irn.irrt_pos == ir.irrt_neg);
    CHECK(irn.irrt_neg == ir.irrt_pos);
    CHECK(irn.irrt_net == ir.irrt_net);
    CHECK(irn.irrt_underlying == ir.irrt_underlying);
  }
}
