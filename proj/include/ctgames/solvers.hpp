#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctgames/strategy.hpp"

namespace ctgames {

struct SolveResult {
  PureStrategy seat1;
  PureStrategy seat2;
  std::pair<Rational, Rational> root_payoffs;
  // True iff no payoff tie was encountered at any decision node.
  bool unique = true;
};

struct BestResponseResult {
  Seat seat = Seat::one;
  PureStrategy response;
  Rational value;
  // Number of decision nodes where some non-chosen action tied the maximum.
  int tie_count = 0;
};

struct Deviation {
  Seat seat = Seat::one;
  PureStrategy strategy;
  Rational gain;
};

struct NashVerdict {
  bool is_nash = false;
  Rational max_gain;  // 0 when the profile is an equilibrium
  std::optional<Deviation> witness;
};

struct SpneVerdict {
  bool is_spne = false;
  std::optional<std::string> witness_node;
};

struct PureNashEntry {
  PureStrategy seat1;
  PureStrategy seat2;
  std::pair<Rational, Rational> outcome;  // payoff of the reached terminal
};

inline constexpr std::uint64_t kDefaultPureNashCap = std::uint64_t{1} << 20;

/// Leaves-up solve; ties broken by first action in declared order and
/// flagged via `unique = false`. The result always passes is_spne.
SolveResult backward_induction(const GameTree& tree);

/// Exact pure best response of `seat` against a committed opponent strategy,
/// by dynamic programming over the tree with opponent nodes treated as
/// fixed-probability branch points. Deterministic first-maximizer tie-break.
BestResponseResult best_response(const GameTree& tree, Seat seat,
                                 const Strategy& opponent);

NashVerdict is_nash(const GameTree& tree, const StrategyProfile& profile);

/// Nash in every subgame. Accepts pure and behavioral profiles; mixed
/// strategies are rejected (convert first).
SpneVerdict is_spne(const GameTree& tree, const StrategyProfile& profile);

/// Brute-force oracle: tests every pure profile with is_nash. Throws
/// BudgetError when the profile count exceeds `cap`.
std::vector<PureNashEntry> enumerate_pure_nash(
    const GameTree& tree, std::uint64_t cap = kDefaultPureNashCap);

}  // namespace ctgames
