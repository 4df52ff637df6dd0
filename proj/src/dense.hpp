// Library-internal dense strategy tables keyed by node index.
#pragma once

#include <vector>

#include "ctgames/strategy.hpp"

namespace ctgames::detail {

// Per-node action probabilities for one seat; empty rows at nodes the seat
// does not own. Rows align with the node's declared action order.
struct DenseBehavioral {
  Seat seat = Seat::one;
  std::vector<std::vector<Rational>> rows;
};

DenseBehavioral compile(const GameTree& tree, const BehavioralStrategy& s);
DenseBehavioral compile(const GameTree& tree, const PureStrategy& s);

// Weighted behavioral atoms equivalent to an arbitrary strategy: a pure or
// behavioral strategy is a single atom of weight 1; a mixed strategy
// contributes one deterministic atom per support point.
std::vector<std::pair<DenseBehavioral, Rational>> atomize(
    const GameTree& tree, const Strategy& s);

// Expected payoffs of one dense behavioral profile.
std::pair<Rational, Rational> evaluate(const GameTree& tree,
                                       const DenseBehavioral& s1,
                                       const DenseBehavioral& s2);

}  // namespace ctgames::detail
