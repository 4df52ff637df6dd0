// Shared helpers for the test suite: tree builders and seeded random
// generators for games and strategies.
#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ctgames/game_tree.hpp"
#include "ctgames/strategy.hpp"

namespace ctgtest {

using namespace ctgames;

inline Rational R(const std::string& text) { return parse_rational(text); }

inline PureStrategy pure(Seat seat,
                         std::vector<std::pair<std::string, std::string>> choices) {
  PureStrategy s;
  s.seat = seat;
  for (auto& [node, label] : choices) s.choices[node] = label;
  return s;
}

inline BehavioralStrategy behavioral(
    Seat seat,
    std::vector<std::pair<std::string,
                          std::vector<std::pair<std::string, std::string>>>> rows) {
  BehavioralStrategy s;
  s.seat = seat;
  for (auto& [node, dist] : rows) {
    for (auto& [label, prob] : dist) s.probs[node][label] = R(prob);
  }
  return s;
}

struct RandomTreeOptions {
  int max_decisions = 12;
  int max_actions = 3;
  // Chance (out of 100) that a fresh child becomes another decision node
  // while the decision quota lasts.
  int branch_percent = 55;
};

// Random two-seat tree, at least one decision node, payoffs small rationals.
inline GameTree random_tree(std::mt19937& rng, const RandomTreeOptions& opt = {}) {
  RawTree raw;
  int decisions = 0;
  int terminals = 0;
  auto payoff = [&]() {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
  };
  std::uniform_int_distribution<int> owner_pick(1, 2);
  std::uniform_int_distribution<int> percent(0, 99);

  // Returns the id of a fresh subtree root.
  auto build = [&](auto&& self, int depth) -> std::string {
    bool want_decision =
        decisions < opt.max_decisions &&
        (decisions == 0 || (depth < 8 && percent(rng) < opt.branch_percent));
    if (!want_decision) {
      std::string id = "t" + std::to_string(++terminals);
      raw.nodes[id] = RawTerminal{{payoff(), payoff()}};
      return id;
    }
    std::string id = "d" + std::to_string(++decisions);
    RawDecision dec;
    dec.owner = owner_pick(rng);
    std::uniform_int_distribution<int> action_count(1, opt.max_actions);
    int n = action_count(rng);
    raw.nodes[id] = RawDecision{};  // reserve the id before recursing
    for (int a = 0; a < n; ++a) {
      dec.actions.push_back({"a" + std::to_string(a), self(self, depth + 1)});
    }
    raw.nodes[id] = std::move(dec);
    return id;
  };
  raw.root = build(build, 0);
  return validate_tree(raw);
}

// Random exact behavioral strategy on a small denominator lattice.
inline BehavioralStrategy random_behavioral(std::mt19937& rng, const GameTree& tree,
                                            Seat seat) {
  BehavioralStrategy s;
  s.seat = seat;
  std::uniform_int_distribution<int> weight(0, 4);
  for (int index : tree.decision_nodes(seat)) {
    const auto& actions = tree.decision(index).actions;
    std::vector<int> w(actions.size());
    int total = 0;
    for (auto& x : w) total += (x = weight(rng));
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    for (std::size_t a = 0; a < actions.size(); ++a) {
      s.probs[tree.node(index).id][actions[a].label] = Rational(w[a], total);
    }
  }
  return s;
}

inline PureStrategy random_pure(std::mt19937& rng, const GameTree& tree, Seat seat) {
  PureStrategy s;
  s.seat = seat;
  for (int index : tree.decision_nodes(seat)) {
    const auto& actions = tree.decision(index).actions;
    std::uniform_int_distribution<std::size_t> pick(0, actions.size() - 1);
    s.choices[tree.node(index).id] = actions[pick(rng)].label;
  }
  return s;
}

inline MixedStrategy random_mixed(std::mt19937& rng, const GameTree& tree, Seat seat,
                                  int max_atoms = 4) {
  MixedStrategy s;
  s.seat = seat;
  std::uniform_int_distribution<int> atom_count(1, max_atoms);
  int n = atom_count(rng);
  std::uniform_int_distribution<int> weight(1, 5);
  std::vector<int> w(n);
  int total = 0;
  for (auto& x : w) total += (x = weight(rng));
  for (int i = 0; i < n; ++i) {
    s.atoms.emplace_back(random_pure(rng, tree, seat), Rational(w[i], total));
  }
  return s;
}

}  // namespace ctgtest
