#include "ctgames/solvers.hpp"

#include <functional>

#include "ctgames/errors.hpp"
#include "dense.hpp"

namespace ctgames {

SolveResult backward_induction(const GameTree& tree) {
  SolveResult result;
  result.seat1.seat = Seat::one;
  result.seat2.seat = Seat::two;
  std::function<std::pair<Rational, Rational>(int)> solve =
      [&](int index) -> std::pair<Rational, Rational> {
    if (tree.is_terminal(index)) {
      const auto& payoffs = tree.terminal(index).payoffs;
      return {payoffs[0], payoffs[1]};
    }
    const auto& dec = tree.decision(index);
    int own = seat_index(dec.owner);
    std::pair<Rational, Rational> best;
    int best_action = 0;
    for (std::size_t a = 0; a < dec.actions.size(); ++a) {
      auto value = solve(dec.actions[a].child);
      Rational mine = own == 0 ? value.first : value.second;
      if (a == 0) {
        best = value;
        continue;
      }
      Rational best_mine = own == 0 ? best.first : best.second;
      if (mine == best_mine) result.unique = false;
      if (mine > best_mine) {
        best = value;
        best_action = static_cast<int>(a);
      }
    }
    auto& strategy = dec.owner == Seat::one ? result.seat1 : result.seat2;
    strategy.choices[tree.node(index).id] = dec.actions[best_action].label;
    return best;
  };
  result.root_payoffs = solve(tree.root());
  return result;
}

BestResponseResult best_response(const GameTree& tree, Seat seat,
                                 const Strategy& opponent) {
  if (seat_of(opponent) != other(seat)) {
    throw DomainError("opponent strategy belongs to the responding seat");
  }
  auto opp = detail::compile(tree, as_behavioral(tree, opponent));
  BestResponseResult result;
  result.seat = seat;
  result.response.seat = seat;
  int own = seat_index(seat);
  std::function<Rational(int)> value = [&](int index) -> Rational {
    if (tree.is_terminal(index)) return tree.terminal(index).payoffs[own];
    const auto& dec = tree.decision(index);
    if (dec.owner != seat) {
      Rational total = 0;
      // Opponent nodes are fixed-probability branch points; children with
      // zero probability still need a response below them, so recurse into
      // all of them.
      std::vector<Rational> child_values;
      for (const auto& action : dec.actions) {
        child_values.push_back(value(action.child));
      }
      for (std::size_t a = 0; a < dec.actions.size(); ++a) {
        total += opp.rows[index][a] * child_values[a];
      }
      return total;
    }
    Rational best;
    int best_action = 0;
    bool tied = false;
    for (std::size_t a = 0; a < dec.actions.size(); ++a) {
      Rational v = value(dec.actions[a].child);
      if (a == 0) {
        best = v;
        continue;
      }
      if (v == best) tied = true;
      if (v > best) {
        best = v;
        best_action = static_cast<int>(a);
      }
    }
    if (tied) result.tie_count += 1;
    result.response.choices[tree.node(index).id] =
        dec.actions[best_action].label;
    return best;
  };
  result.value = value(tree.root());
  return result;
}

NashVerdict is_nash(const GameTree& tree, const StrategyProfile& profile) {
  check_profile(tree, profile);
  auto current = expected_utility(tree, profile);
  NashVerdict verdict;
  verdict.max_gain = 0;
  verdict.is_nash = true;
  for (Seat seat : {Seat::one, Seat::two}) {
    const Strategy& opponent =
        seat == Seat::one ? profile.seat2 : profile.seat1;
    auto br = best_response(tree, seat, opponent);
    Rational mine = seat == Seat::one ? current.first : current.second;
    Rational gain = br.value - mine;
    if (gain > 0) {
      verdict.is_nash = false;
      if (gain > verdict.max_gain) {
        verdict.max_gain = gain;
        verdict.witness = Deviation{seat, br.response, gain};
      }
    }
  }
  return verdict;
}

namespace {

// Restriction s|x: drop map entries outside the subgame's node set.
PureStrategy restrict_pure(const GameTree& sub, const PureStrategy& s) {
  PureStrategy out;
  out.seat = s.seat;
  for (const auto& [id, label] : s.choices) {
    if (sub.find(id) >= 0) out.choices.emplace(id, label);
  }
  return out;
}

BehavioralStrategy restrict_behavioral(const GameTree& sub,
                                       const BehavioralStrategy& s) {
  BehavioralStrategy out;
  out.seat = s.seat;
  for (const auto& [id, dist] : s.probs) {
    if (sub.find(id) >= 0) out.probs.emplace(id, dist);
  }
  return out;
}

Strategy restrict_strategy(const GameTree& sub, const Strategy& s) {
  if (auto* pure = std::get_if<PureStrategy>(&s)) {
    return restrict_pure(sub, *pure);
  }
  if (auto* behavioral = std::get_if<BehavioralStrategy>(&s)) {
    return restrict_behavioral(sub, *behavioral);
  }
  throw DomainError(
      "subgame-perfection check requires a pure or behavioral profile");
}

}  // namespace

SpneVerdict is_spne(const GameTree& tree, const StrategyProfile& profile) {
  check_profile(tree, profile);
  SpneVerdict verdict;
  // Leaves-up (reverse preorder), so the witness is a deepest failing
  // subgame rather than an ancestor that fails only by propagation.
  auto decisions = tree.decision_nodes();
  for (auto it = decisions.rbegin(); it != decisions.rend(); ++it) {
    int index = *it;
    const std::string& id = tree.node(index).id;
    GameTree sub = subgame(tree, id);
    StrategyProfile restricted{restrict_strategy(sub, profile.seat1),
                               restrict_strategy(sub, profile.seat2)};
    if (!is_nash(sub, restricted).is_nash) {
      verdict.is_spne = false;
      verdict.witness_node = id;
      return verdict;
    }
  }
  verdict.is_spne = true;
  return verdict;
}

std::vector<PureNashEntry> enumerate_pure_nash(const GameTree& tree,
                                               std::uint64_t cap) {
  BigInt count1 = 1, count2 = 1;
  for (int index : tree.decision_nodes(Seat::one)) {
    count1 *= static_cast<int>(tree.decision(index).actions.size());
  }
  for (int index : tree.decision_nodes(Seat::two)) {
    count2 *= static_cast<int>(tree.decision(index).actions.size());
  }
  if (count1 * count2 > cap) {
    throw BudgetError("pure profile count " + BigInt(count1 * count2).str() +
                      " exceeds cap " + std::to_string(cap));
  }
  auto pures1 = enumerate_pure_strategies(tree, Seat::one);
  auto pures2 = enumerate_pure_strategies(tree, Seat::two);
  std::vector<PureNashEntry> out;
  for (const auto& s1 : pures1) {
    for (const auto& s2 : pures2) {
      StrategyProfile profile{s1, s2};
      if (is_nash(tree, profile).is_nash) {
        out.push_back({s1, s2, expected_utility(tree, profile)});
      }
    }
  }
  return out;
}

}  // namespace ctgames
