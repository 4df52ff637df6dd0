// Randomized properties over generated trees, fixed seeds throughout.
#include <doctest.h>

#include <random>

#include "ctgames/json_io.hpp"
#include "ctgames/solvers.hpp"
#include "support.hpp"

using namespace ctgames;
using namespace ctgtest;

TEST_CASE("reach distributions always have mass one") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    GameTree tree = random_tree(rng);
    StrategyProfile profile{random_behavioral(rng, tree, Seat::one),
                            random_behavioral(rng, tree, Seat::two)};
    Rational mass = 0;
    for (const auto& [terminal, p] : reach_distribution(tree, profile)) {
      CHECK(p >= 0);
      mass += p;
    }
    CHECK(mass == 1);
  }
}

TEST_CASE("best-response value equals the brute-force pure maximum") {
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    GameTree tree = random_tree(rng);
    for (Seat seat : {Seat::one, Seat::two}) {
      auto opponent = random_behavioral(rng, tree, other(seat));
      auto br = best_response(tree, seat, opponent);
      bool attained = false;
      for (const auto& pure : enumerate_pure_strategies(tree, seat)) {
        StrategyProfile profile = seat == Seat::one
                                      ? StrategyProfile{pure, opponent}
                                      : StrategyProfile{opponent, pure};
        auto [u1, u2] = expected_utility(tree, profile);
        Rational value = seat == Seat::one ? u1 : u2;
        CHECK(value <= br.value);
        if (value == br.value) attained = true;
      }
      CHECK(attained);
    }
  }
}

TEST_CASE("mixed and behavioral forms are realization equivalent") {
  std::mt19937 rng(37);
  RandomTreeOptions small;
  small.max_decisions = 4;
  for (int i = 0; i < 50; ++i) {
    GameTree tree = random_tree(rng, small);
    for (Seat seat : {Seat::one, Seat::two}) {
      MixedStrategy mixed = random_mixed(rng, tree, seat);
      BehavioralStrategy behavioral = mixed_to_behavioral(tree, mixed);
      for (const auto& opp : enumerate_pure_strategies(tree, other(seat))) {
        StrategyProfile pm = seat == Seat::one ? StrategyProfile{mixed, opp}
                                               : StrategyProfile{opp, mixed};
        StrategyProfile pb = seat == Seat::one ? StrategyProfile{behavioral, opp}
                                               : StrategyProfile{opp, behavioral};
        CHECK(expected_utility(tree, pm) == expected_utility(tree, pb));
      }
    }
  }
}

TEST_CASE("backward induction always yields a subgame perfect profile") {
  std::mt19937 rng(41);
  for (int i = 0; i < 50; ++i) {
    GameTree tree = random_tree(rng);
    auto solved = backward_induction(tree);
    StrategyProfile profile{solved.seat1, solved.seat2};
    CHECK(expected_utility(tree, profile) == solved.root_payoffs);
    auto spne = is_spne(tree, profile);
    CHECK(spne.is_spne);
    CHECK(is_nash(tree, profile).is_nash);  // SPNE implies Nash on the full tree
  }
}

TEST_CASE("subgame at the root is idempotent") {
  std::mt19937 rng(43);
  for (int i = 0; i < 20; ++i) {
    GameTree tree = random_tree(rng);
    GameTree sub = subgame(tree, tree.node(tree.root()).id);
    CHECK(dump_canonical(game_to_json(sub)) == dump_canonical(game_to_json(tree)));
  }
}

TEST_CASE("pure strategy count is the product of action counts") {
  std::mt19937 rng(47);
  for (int i = 0; i < 20; ++i) {
    GameTree tree = random_tree(rng);
    for (Seat seat : {Seat::one, Seat::two}) {
      std::size_t expected = 1;
      for (int index : tree.decision_nodes(seat)) {
        expected *= tree.decision(index).actions.size();
      }
      CHECK(enumerate_pure_strategies(tree, seat).size() == expected);
    }
  }
}

TEST_CASE("serialization round-trips on random instances") {
  std::mt19937 rng(53);
  for (int i = 0; i < 30; ++i) {
    GameTree tree = random_tree(rng);
    std::string first = dump_canonical(game_to_json(tree));
    GameTree back = game_from_json(Json::parse(first));
    CHECK(dump_canonical(game_to_json(back)) == first);

    for (Seat seat : {Seat::one, Seat::two}) {
      for (Strategy s : {Strategy{random_pure(rng, tree, seat)},
                         Strategy{random_behavioral(rng, tree, seat)},
                         Strategy{random_mixed(rng, tree, seat)}}) {
        std::string doc = dump_canonical(strategy_to_json(s));
        Strategy parsed = strategy_from_json(Json::parse(doc));
        check_strategy(tree, parsed);
        CHECK(dump_canonical(strategy_to_json(parsed)) == doc);
      }
    }
  }
}
