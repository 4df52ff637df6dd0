#include "ctgames/strategy.hpp"

#include <functional>

#include "ctgames/errors.hpp"
#include "dense.hpp"

namespace ctgames {

Seat seat_of(const Strategy& strategy) {
  return std::visit([](const auto& s) { return s.seat; }, strategy);
}

namespace {

std::string describe(const GameTree& tree, int index) {
  return tree.node(index).id;
}

// Shared domain check: `keys` must be exactly the owner's decision nodes.
template <typename Map>
void check_domain(const GameTree& tree, Seat seat, const Map& map,
                  const char* what) {
  auto owned = tree.decision_nodes(seat);
  if (map.size() != owned.size()) {
    throw DomainError(std::string(what) + ": domain has " +
                      std::to_string(map.size()) + " nodes, seat " +
                      std::to_string(static_cast<int>(seat)) + " owns " +
                      std::to_string(owned.size()));
  }
  for (int index : owned) {
    if (!map.count(tree.node(index).id)) {
      throw DomainError(std::string(what) + ": missing node " +
                        describe(tree, index));
    }
  }
}

int action_index(const GameTree& tree, int node, const std::string& label) {
  const auto& actions = tree.decision(node).actions;
  for (std::size_t a = 0; a < actions.size(); ++a) {
    if (actions[a].label == label) return static_cast<int>(a);
  }
  return -1;
}

}  // namespace

void check_strategy(const GameTree& tree, const PureStrategy& s) {
  check_domain(tree, s.seat, s.choices, "pure strategy");
  for (const auto& [id, label] : s.choices) {
    int node = tree.find(id);
    if (node < 0 || tree.is_terminal(node) ||
        tree.decision(node).owner != s.seat) {
      throw DomainError("pure strategy: node " + id +
                        " is not a decision node of this seat");
    }
    if (action_index(tree, node, label) < 0) {
      throw DomainError("pure strategy: no action \"" + label + "\" at node " +
                        id);
    }
  }
}

void check_strategy(const GameTree& tree, const BehavioralStrategy& s) {
  check_domain(tree, s.seat, s.probs, "behavioral strategy");
  for (const auto& [id, dist] : s.probs) {
    int node = tree.find(id);
    if (node < 0 || tree.is_terminal(node) ||
        tree.decision(node).owner != s.seat) {
      throw DomainError("behavioral strategy: node " + id +
                        " is not a decision node of this seat");
    }
    Rational total = 0;
    for (const auto& [label, prob] : dist) {
      if (action_index(tree, node, label) < 0) {
        throw DomainError("behavioral strategy: no action \"" + label +
                          "\" at node " + id);
      }
      if (prob < 0) {
        throw DomainError("behavioral strategy: negative probability at node " +
                          id);
      }
      total += prob;
    }
    if (total != 1) {
      throw DomainError("behavioral strategy: probabilities at node " + id +
                        " sum to " + to_canonical(total) + ", expected 1");
    }
  }
}

void check_strategy(const GameTree& tree, const MixedStrategy& s) {
  if (s.atoms.empty()) throw DomainError("mixed strategy: no atoms");
  Rational total = 0;
  for (const auto& [pure, weight] : s.atoms) {
    if (pure.seat != s.seat) {
      throw DomainError("mixed strategy: atom seat mismatch");
    }
    if (weight < 0) throw DomainError("mixed strategy: negative weight");
    check_strategy(tree, pure);
    total += weight;
  }
  if (total != 1) {
    throw DomainError("mixed strategy: weights sum to " + to_canonical(total) +
                      ", expected 1");
  }
}

void check_strategy(const GameTree& tree, const Strategy& s) {
  std::visit([&](const auto& inner) { check_strategy(tree, inner); }, s);
}

void check_profile(const GameTree& tree, const StrategyProfile& profile) {
  if (seat_of(profile.seat1) != Seat::one) {
    throw DomainError("profile: first strategy is not for seat 1");
  }
  if (seat_of(profile.seat2) != Seat::two) {
    throw DomainError("profile: second strategy is not for seat 2");
  }
  check_strategy(tree, profile.seat1);
  check_strategy(tree, profile.seat2);
}

BehavioralStrategy to_behavioral(const GameTree& tree, const PureStrategy& s) {
  check_strategy(tree, s);
  BehavioralStrategy out;
  out.seat = s.seat;
  for (const auto& [id, label] : s.choices) {
    int node = tree.index_of(id);
    std::map<std::string, Rational> dist;
    for (const auto& action : tree.decision(node).actions) {
      dist[action.label] = action.label == label ? 1 : 0;
    }
    out.probs.emplace(id, std::move(dist));
  }
  return out;
}

BehavioralStrategy mixed_to_behavioral(const GameTree& tree,
                                       const MixedStrategy& s) {
  check_strategy(tree, s);
  BehavioralStrategy out;
  out.seat = s.seat;
  for (int node : tree.decision_nodes(s.seat)) {
    const std::string& id = tree.node(node).id;
    auto path = tree.path_from_root(node);
    // An atom is consistent with reaching `node` iff at every own node on
    // the path it picks the path action; opponent nodes do not constrain.
    Rational reach_weight = 0;
    std::vector<Rational> action_weight(tree.decision(node).actions.size(), 0);
    for (const auto& [pure, weight] : s.atoms) {
      bool consistent = true;
      for (const auto& [path_node, path_action] : path) {
        if (tree.decision(path_node).owner != s.seat) continue;
        const auto& chosen = pure.choices.at(tree.node(path_node).id);
        if (chosen != tree.decision(path_node).actions[path_action].label) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      reach_weight += weight;
      int a = 0;
      for (const auto& action : tree.decision(node).actions) {
        if (pure.choices.at(id) == action.label) action_weight[a] += weight;
        ++a;
      }
    }
    std::map<std::string, Rational> dist;
    const auto& actions = tree.decision(node).actions;
    if (reach_weight == 0) {
      // Unreachable under every supporting atom: first action, deterministic.
      for (std::size_t a = 0; a < actions.size(); ++a) {
        dist[actions[a].label] = a == 0 ? 1 : 0;
      }
    } else {
      for (std::size_t a = 0; a < actions.size(); ++a) {
        dist[actions[a].label] = action_weight[a] / reach_weight;
      }
    }
    out.probs.emplace(id, std::move(dist));
  }
  return out;
}

BehavioralStrategy as_behavioral(const GameTree& tree, const Strategy& s) {
  if (auto* behavioral = std::get_if<BehavioralStrategy>(&s)) {
    check_strategy(tree, *behavioral);
    return *behavioral;
  }
  if (auto* pure = std::get_if<PureStrategy>(&s)) {
    return to_behavioral(tree, *pure);
  }
  return mixed_to_behavioral(tree, std::get<MixedStrategy>(s));
}

std::vector<PureStrategy> enumerate_pure_strategies(const GameTree& tree,
                                                    Seat seat) {
  auto owned = tree.decision_nodes(seat);
  std::vector<PureStrategy> out;
  std::vector<std::size_t> odometer(owned.size(), 0);
  while (true) {
    PureStrategy s;
    s.seat = seat;
    for (std::size_t i = 0; i < owned.size(); ++i) {
      s.choices[tree.node(owned[i]).id] =
          tree.decision(owned[i]).actions[odometer[i]].label;
    }
    out.push_back(std::move(s));
    // Last node varies fastest.
    std::size_t pos = owned.size();
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < tree.decision(owned[pos]).actions.size()) break;
      odometer[pos] = 0;
      if (pos == 0) return out;
    }
    if (owned.empty()) return out;  // single empty strategy
  }
}

namespace detail {

DenseBehavioral compile(const GameTree& tree, const BehavioralStrategy& s) {
  DenseBehavioral dense;
  dense.seat = s.seat;
  dense.rows.resize(tree.size());
  for (const auto& [id, dist] : s.probs) {
    int node = tree.index_of(id);
    const auto& actions = tree.decision(node).actions;
    std::vector<Rational> row(actions.size(), 0);
    for (const auto& [label, prob] : dist) {
      for (std::size_t a = 0; a < actions.size(); ++a) {
        if (actions[a].label == label) row[a] = prob;
      }
    }
    dense.rows[node] = std::move(row);
  }
  return dense;
}

DenseBehavioral compile(const GameTree& tree, const PureStrategy& s) {
  DenseBehavioral dense;
  dense.seat = s.seat;
  dense.rows.resize(tree.size());
  for (const auto& [id, label] : s.choices) {
    int node = tree.index_of(id);
    const auto& actions = tree.decision(node).actions;
    std::vector<Rational> row(actions.size(), 0);
    for (std::size_t a = 0; a < actions.size(); ++a) {
      if (actions[a].label == label) row[a] = 1;
    }
    dense.rows[node] = std::move(row);
  }
  return dense;
}

std::vector<std::pair<DenseBehavioral, Rational>> atomize(
    const GameTree& tree, const Strategy& s) {
  std::vector<std::pair<DenseBehavioral, Rational>> atoms;
  if (auto* mixed = std::get_if<MixedStrategy>(&s)) {
    check_strategy(tree, *mixed);
    for (const auto& [pure, weight] : mixed->atoms) {
      atoms.emplace_back(compile(tree, pure), weight);
    }
  } else if (auto* pure = std::get_if<PureStrategy>(&s)) {
    check_strategy(tree, *pure);
    atoms.emplace_back(compile(tree, *pure), Rational(1));
  } else {
    const auto& behavioral = std::get<BehavioralStrategy>(s);
    check_strategy(tree, behavioral);
    atoms.emplace_back(compile(tree, behavioral), Rational(1));
  }
  return atoms;
}

std::pair<Rational, Rational> evaluate(const GameTree& tree,
                                       const DenseBehavioral& s1,
                                       const DenseBehavioral& s2) {
  std::function<std::pair<Rational, Rational>(int)> value =
      [&](int index) -> std::pair<Rational, Rational> {
    if (tree.is_terminal(index)) {
      const auto& payoffs = tree.terminal(index).payoffs;
      return {payoffs[0], payoffs[1]};
    }
    const auto& dec = tree.decision(index);
    const auto& row =
        dec.owner == Seat::one ? s1.rows[index] : s2.rows[index];
    std::pair<Rational, Rational> total{0, 0};
    for (std::size_t a = 0; a < dec.actions.size(); ++a) {
      if (row[a] == 0) continue;
      auto child = value(dec.actions[a].child);
      total.first += row[a] * child.first;
      total.second += row[a] * child.second;
    }
    return total;
  };
  return value(tree.root());
}

}  // namespace detail

namespace {

ReachDistribution reach_of_dense(const GameTree& tree,
                                 const detail::DenseBehavioral& s1,
                                 const detail::DenseBehavioral& s2) {
  ReachDistribution reach;
  for (int t : tree.terminal_nodes()) reach[tree.node(t).id] = 0;
  std::function<void(int, const Rational&)> walk = [&](int index,
                                                       const Rational& prefix) {
    if (tree.is_terminal(index)) {
      reach[tree.node(index).id] += prefix;
      return;
    }
    const auto& dec = tree.decision(index);
    const auto& row =
        dec.owner == Seat::one ? s1.rows[index] : s2.rows[index];
    for (std::size_t a = 0; a < dec.actions.size(); ++a) {
      if (row[a] == 0) continue;
      walk(dec.actions[a].child, prefix * row[a]);
    }
  };
  walk(tree.root(), Rational(1));
  return reach;
}

}  // namespace

ReachDistribution reach_distribution(const GameTree& tree,
                                     const StrategyProfile& profile) {
  check_profile(tree, profile);
  auto atoms1 = detail::atomize(tree, profile.seat1);
  auto atoms2 = detail::atomize(tree, profile.seat2);
  ReachDistribution reach;
  for (const auto& [a1, w1] : atoms1) {
    for (const auto& [a2, w2] : atoms2) {
      auto partial = reach_of_dense(tree, a1, a2);
      for (auto& [id, prob] : partial) reach[id] += w1 * w2 * prob;
    }
  }
  // Zero-mass terminals are omitted entirely.
  for (auto it = reach.begin(); it != reach.end();) {
    it = it->second == 0 ? reach.erase(it) : std::next(it);
  }
  return reach;
}

std::pair<Rational, Rational> expected_utility(const GameTree& tree,
                                               const StrategyProfile& profile) {
  check_profile(tree, profile);
  auto atoms1 = detail::atomize(tree, profile.seat1);
  auto atoms2 = detail::atomize(tree, profile.seat2);
  std::pair<Rational, Rational> total{0, 0};
  for (const auto& [a1, w1] : atoms1) {
    for (const auto& [a2, w2] : atoms2) {
      auto value = detail::evaluate(tree, a1, a2);
      total.first += w1 * w2 * value.first;
      total.second += w1 * w2 * value.second;
    }
  }
  return total;
}

}  // namespace ctgames
