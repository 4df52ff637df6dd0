#include <doctest.h>

#include "ctgames/centipede.hpp"
#include "ctgames/errors.hpp"
#include "ctgames/strategy.hpp"
#include "support.hpp"

using namespace ctgames;
using ctgtest::R;

TEST_CASE("pure strategy enumeration is the ordered Cartesian product") {
  GameTree tree = make_centipede(4);
  auto pures = enumerate_pure_strategies(tree, Seat::one);
  REQUIRE(pures.size() == 4);
  // Nodes (d1, d3), last node varying fastest, actions in (S, C) order.
  CHECK(pures[0].choices == std::map<std::string, std::string>{{"d1", "S"}, {"d3", "S"}});
  CHECK(pures[1].choices == std::map<std::string, std::string>{{"d1", "S"}, {"d3", "C"}});
  CHECK(pures[2].choices == std::map<std::string, std::string>{{"d1", "C"}, {"d3", "S"}});
  CHECK(pures[3].choices == std::map<std::string, std::string>{{"d1", "C"}, {"d3", "C"}});

  CHECK(enumerate_pure_strategies(make_centipede(6), Seat::one).size() == 8);
}

TEST_CASE("a seat owning no nodes has exactly one empty pure strategy") {
  RawTree raw;
  raw.root = "d1";
  raw.nodes["d1"] = RawDecision{1, {{"a", "t1"}, {"b", "t2"}}};
  raw.nodes["t1"] = RawTerminal{{R("1"), R("0")}};
  raw.nodes["t2"] = RawTerminal{{R("0"), R("0")}};
  GameTree tree = validate_tree(raw);
  auto pures = enumerate_pure_strategies(tree, Seat::two);
  REQUIRE(pures.size() == 1);
  CHECK(pures[0].choices.empty());
}

TEST_CASE("reach distribution") {
  SUBCASE("deterministic all-stop path") {
    GameTree tree = make_centipede(4);
    StrategyProfile profile{ctgtest::pure(Seat::one, {{"d1", "S"}, {"d3", "S"}}),
                            ctgtest::pure(Seat::two, {{"d2", "S"}, {"d4", "S"}})};
    auto reach = reach_distribution(tree, profile);
    CHECK(reach == ReachDistribution{{"t1", R("1")}});
  }
  SUBCASE("half-continue profile on centipede(2)") {
    GameTree tree = make_centipede(2);
    StrategyProfile profile{
        ctgtest::behavioral(Seat::one, {{"d1", {{"S", "1/2"}, {"C", "1/2"}}}}),
        ctgtest::behavioral(Seat::two, {{"d2", {{"S", "1/2"}, {"C", "1/2"}}}})};
    auto reach = reach_distribution(tree, profile);
    CHECK(reach ==
          ReachDistribution{{"t1", R("1/2")}, {"t2", R("1/4")}, {"t3", R("1/4")}});
  }
}

TEST_CASE("expected utility") {
  GameTree tree = make_centipede(2);
  SUBCASE("pure profile hits a single terminal") {
    StrategyProfile profile{ctgtest::pure(Seat::one, {{"d1", "C"}}),
                            ctgtest::pure(Seat::two, {{"d2", "S"}})};
    CHECK(expected_utility(tree, profile) == std::pair{R("1"), R("4")});
  }
  SUBCASE("mixed reach averages the terminals") {
    StrategyProfile profile{
        ctgtest::behavioral(Seat::one, {{"d1", {{"S", "1/2"}, {"C", "1/2"}}}}),
        ctgtest::behavioral(Seat::two, {{"d2", {{"S", "1/2"}, {"C", "1/2"}}}})};
    CHECK(expected_utility(tree, profile) == std::pair{R("9/4"), R("9/4")});
  }
}

TEST_CASE("mixed to behavioral by conditional realization weights") {
  GameTree tree = make_centipede(4);

  SUBCASE("uniform over (S,S) and (C,C)") {
    MixedStrategy mixed;
    mixed.seat = Seat::one;
    mixed.atoms.emplace_back(ctgtest::pure(Seat::one, {{"d1", "S"}, {"d3", "S"}}),
                             R("1/2"));
    mixed.atoms.emplace_back(ctgtest::pure(Seat::one, {{"d1", "C"}, {"d3", "C"}}),
                             R("1/2"));
    auto b = mixed_to_behavioral(tree, mixed);
    CHECK(b.probs.at("d1") ==
          std::map<std::string, Rational>{{"S", R("1/2")}, {"C", R("1/2")}});
    // Only (C,C) reaches d3, so d3 plays C surely.
    CHECK(b.probs.at("d3") == std::map<std::string, Rational>{{"S", R("0")}, {"C", R("1")}});
  }

  SUBCASE("single atom gives a deterministic copy") {
    MixedStrategy mixed;
    mixed.seat = Seat::one;
    mixed.atoms.emplace_back(ctgtest::pure(Seat::one, {{"d1", "C"}, {"d3", "S"}}),
                             R("1"));
    auto b = mixed_to_behavioral(tree, mixed);
    CHECK(b.probs.at("d1").at("C") == 1);
    CHECK(b.probs.at("d3").at("S") == 1);
  }

  SUBCASE("unreachable node falls back to the first action") {
    MixedStrategy mixed;
    mixed.seat = Seat::one;
    mixed.atoms.emplace_back(ctgtest::pure(Seat::one, {{"d1", "S"}, {"d3", "S"}}),
                             R("1/2"));
    mixed.atoms.emplace_back(ctgtest::pure(Seat::one, {{"d1", "S"}, {"d3", "C"}}),
                             R("1/2"));
    auto b = mixed_to_behavioral(tree, mixed);
    CHECK(b.probs.at("d1").at("S") == 1);
    CHECK(b.probs.at("d3").at("S") == 1);  // d3 unreachable; S is the first action
  }
}

TEST_CASE("strategy checks reject domain mismatches") {
  GameTree tree = make_centipede(4);
  SUBCASE("missing node") {
    CHECK_THROWS_AS(check_strategy(tree, ctgtest::pure(Seat::one, {{"d1", "S"}})),
                    DomainError);
  }
  SUBCASE("foreign node") {
    CHECK_THROWS_AS(
        check_strategy(tree, ctgtest::pure(Seat::one,
                                           {{"d1", "S"}, {"d3", "S"}, {"d2", "S"}})),
        DomainError);
  }
  SUBCASE("unknown label") {
    CHECK_THROWS_AS(
        check_strategy(tree, ctgtest::pure(Seat::one, {{"d1", "X"}, {"d3", "S"}})),
        DomainError);
  }
  SUBCASE("probabilities must sum to one") {
    auto s = ctgtest::behavioral(
        Seat::two, {{"d2", {{"S", "1/2"}, {"C", "1/4"}}}, {"d4", {{"S", "1"}}}});
    CHECK_THROWS_AS(check_strategy(tree, s), DomainError);
  }
  SUBCASE("negative probability") {
    auto s = ctgtest::behavioral(
        Seat::two, {{"d2", {{"S", "2"}, {"C", "-1"}}}, {"d4", {{"S", "1"}}}});
    CHECK_THROWS_AS(check_strategy(tree, s), DomainError);
  }
  SUBCASE("mixed weights must sum to one") {
    MixedStrategy mixed;
    mixed.seat = Seat::one;
    mixed.atoms.emplace_back(ctgtest::pure(Seat::one, {{"d1", "S"}, {"d3", "S"}}),
                             R("1/2"));
    CHECK_THROWS_AS(check_strategy(tree, mixed), DomainError);
  }
}
