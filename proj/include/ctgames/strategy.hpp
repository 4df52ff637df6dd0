#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ctgames/game_tree.hpp"
#include "ctgames/rational.hpp"

namespace ctgames {

/// One action label per owned decision node.
struct PureStrategy {
  Seat seat = Seat::one;
  std::map<std::string, std::string> choices;  // node id -> action label
};

/// Exact distribution over action labels at every owned decision node.
struct BehavioralStrategy {
  Seat seat = Seat::one;
  std::map<std::string, std::map<std::string, Rational>> probs;
};

/// Distribution over complete pure strategies of one seat.
struct MixedStrategy {
  Seat seat = Seat::one;
  std::vector<std::pair<PureStrategy, Rational>> atoms;
};

using Strategy = std::variant<PureStrategy, BehavioralStrategy, MixedStrategy>;

Seat seat_of(const Strategy& strategy);

struct StrategyProfile {
  Strategy seat1;
  Strategy seat2;
};

/// Terminal node id -> exact reach probability; mass sums to 1.
using ReachDistribution = std::map<std::string, Rational>;

/// Domain and normalization checks against a concrete tree. Throws
/// DomainError on mismatch (wrong seat coverage, unknown labels, weights
/// that do not sum to 1, ...).
void check_strategy(const GameTree& tree, const PureStrategy& s);
void check_strategy(const GameTree& tree, const BehavioralStrategy& s);
void check_strategy(const GameTree& tree, const MixedStrategy& s);
void check_strategy(const GameTree& tree, const Strategy& s);
void check_profile(const GameTree& tree, const StrategyProfile& profile);

/// Deterministic behavioral copy of a pure strategy.
BehavioralStrategy to_behavioral(const GameTree& tree, const PureStrategy& s);

/// Kuhn conversion by conditional realization weights. At owned nodes no
/// supporting atom can reach, falls back to the first action with
/// probability 1.
BehavioralStrategy mixed_to_behavioral(const GameTree& tree,
                                       const MixedStrategy& s);

/// Any strategy as an equivalent behavioral one (identity for behavioral).
BehavioralStrategy as_behavioral(const GameTree& tree, const Strategy& s);

/// Full Cartesian product over owned nodes in preorder, last node varying
/// fastest, actions in declared order.
std::vector<PureStrategy> enumerate_pure_strategies(const GameTree& tree,
                                                    Seat seat);

ReachDistribution reach_distribution(const GameTree& tree,
                                     const StrategyProfile& profile);

/// Exact expected payoff pair (seat 1, seat 2).
std::pair<Rational, Rational> expected_utility(const GameTree& tree,
                                               const StrategyProfile& profile);

}  // namespace ctgames
