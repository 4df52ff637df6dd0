#include "ctgames/harness.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>

#include "ctgames/errors.hpp"
#include "ctgames/solvers.hpp"
#include "dense.hpp"

namespace ctgames {

namespace {

// ---------------------------------------------------------------------------
// Grid machinery
// ---------------------------------------------------------------------------

// Grid step must be a unit fraction so that complements stay on the grid.
std::int64_t grid_resolution(const Rational& grid) {
  if (grid <= 0 || grid > 1 || numerator(grid) != 1) {
    throw DomainError("grid step must be a unit fraction 1/q in (0,1], got " +
                      to_canonical(grid));
  }
  return static_cast<std::int64_t>(denominator(grid));
}

// All distributions over `parts` slots with numerators summing to q,
// lexicographically ascending in the numerator tuple.
std::vector<std::vector<std::int64_t>> grid_distributions(int parts,
                                                          std::int64_t q) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> current(parts, 0);
  std::function<void(int, std::int64_t)> fill = [&](int slot,
                                                    std::int64_t remaining) {
    if (slot == parts - 1) {
      current[slot] = remaining;
      out.push_back(current);
      return;
    }
    for (std::int64_t n = 0; n <= remaining; ++n) {
      current[slot] = n;
      fill(slot + 1, remaining - n);
    }
  };
  if (parts > 0) fill(0, q);
  return out;
}

// One seat's grid strategies: numerator tuples per owned node (preorder,
// last node varying fastest) plus the equivalent behavioral strategy.
struct GridSide {
  std::vector<int> nodes;  // owned decision-node indices, preorder
  // strategy s, node k, action a -> numerator over q
  std::vector<std::vector<std::vector<std::int64_t>>> numerators;
  std::vector<BehavioralStrategy> strategies;
};

GridSide enumerate_grid_side(const GameTree& tree, Seat seat, std::int64_t q) {
  GridSide side;
  side.nodes = tree.decision_nodes(seat);
  std::vector<std::vector<std::vector<std::int64_t>>> per_node;
  for (int node : side.nodes) {
    per_node.push_back(grid_distributions(
        static_cast<int>(tree.decision(node).actions.size()), q));
  }
  std::vector<std::size_t> odometer(side.nodes.size(), 0);
  while (true) {
    std::vector<std::vector<std::int64_t>> nums;
    BehavioralStrategy s;
    s.seat = seat;
    for (std::size_t k = 0; k < side.nodes.size(); ++k) {
      const auto& dist = per_node[k][odometer[k]];
      nums.push_back(dist);
      std::map<std::string, Rational> row;
      const auto& actions = tree.decision(side.nodes[k]).actions;
      for (std::size_t a = 0; a < actions.size(); ++a) {
        row[actions[a].label] = Rational(dist[a], q);
      }
      s.probs.emplace(tree.node(side.nodes[k]).id, std::move(row));
    }
    side.numerators.push_back(std::move(nums));
    side.strategies.push_back(std::move(s));
    std::size_t pos = side.nodes.size();
    bool done = side.nodes.empty();
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < per_node[pos].size()) break;
      odometer[pos] = 0;
      if (pos == 0) done = true;
    }
    if (done) break;
  }
  return side;
}

// ---------------------------------------------------------------------------
// Path-shaped games (the centipede family): stop/continue per node, integer
// payoffs. Enables an exact scaled-int64 fast path for grid pair loops.
// ---------------------------------------------------------------------------

struct PathModel {
  struct Step {
    Seat owner = Seat::one;
    int stop_action = 0;  // action whose child is the stop terminal
    int cont_action = 1;
    std::int64_t stop_u1 = 0, stop_u2 = 0;
  };
  std::vector<Step> steps;  // in play order; steps[0] is the root
  std::int64_t pass_u1 = 0, pass_u2 = 0;
};

std::optional<std::int64_t> as_int64(const Rational& value) {
  if (denominator(value) != 1) return std::nullopt;
  BigInt n = numerator(value);
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(n);
}

std::optional<PathModel> path_model(const GameTree& tree) {
  PathModel model;
  int index = tree.root();
  while (true) {
    if (tree.is_terminal(index)) return std::nullopt;
    const auto& dec = tree.decision(index);
    if (dec.actions.size() != 2) return std::nullopt;
    bool t0 = tree.is_terminal(dec.actions[0].child);
    bool t1 = tree.is_terminal(dec.actions[1].child);
    PathModel::Step step;
    step.owner = dec.owner;
    int next = -1;
    if (t0 && t1) {
      step.stop_action = 0;
      step.cont_action = 1;
    } else if (t0 != t1) {
      step.stop_action = t0 ? 0 : 1;
      step.cont_action = t0 ? 1 : 0;
      next = dec.actions[step.cont_action].child;
    } else {
      return std::nullopt;
    }
    const auto& stop_pay =
        tree.terminal(dec.actions[step.stop_action].child).payoffs;
    auto u1 = as_int64(stop_pay[0]), u2 = as_int64(stop_pay[1]);
    if (!u1 || !u2) return std::nullopt;
    step.stop_u1 = *u1;
    step.stop_u2 = *u2;
    model.steps.push_back(step);
    if (next < 0) {
      const auto& pass_pay =
          tree.terminal(dec.actions[step.cont_action].child).payoffs;
      auto p1 = as_int64(pass_pay[0]), p2 = as_int64(pass_pay[1]);
      if (!p1 || !p2) return std::nullopt;
      model.pass_u1 = *p1;
      model.pass_u2 = *p2;
      return model;
    }
    index = next;
  }
}

// q^depth with an overflow guard against the largest partial product the
// scaled evaluation can form.
std::optional<std::int64_t> scale_for(const PathModel& model, std::int64_t q) {
  BigInt scale = 1;
  std::int64_t max_pay = 1;
  for (const auto& step : model.steps) {
    scale *= q;
    max_pay = std::max({max_pay, std::abs(step.stop_u1), std::abs(step.stop_u2)});
  }
  max_pay = std::max({max_pay, std::abs(model.pass_u1), std::abs(model.pass_u2)});
  BigInt worst = scale * max_pay * static_cast<std::int64_t>(model.steps.size() + 1);
  if (worst > (BigInt(1) << 62)) return std::nullopt;
  return static_cast<std::int64_t>(scale);
}

// Exact expected payoffs scaled by q^m, given per-step stop numerators.
std::pair<std::int64_t, std::int64_t> eval_path_scaled(
    const PathModel& model, std::int64_t q, std::int64_t scale,
    const std::vector<std::int64_t>& stop_numerators) {
  std::int64_t u1 = 0, u2 = 0, reach = scale;
  for (std::size_t i = 0; i < model.steps.size(); ++i) {
    std::int64_t unit = reach / q;  // exact: reach = q^(m-i) * products
    std::int64_t n = stop_numerators[i];
    u1 += unit * n * model.steps[i].stop_u1;
    u2 += unit * n * model.steps[i].stop_u2;
    reach = unit * (q - n);
  }
  u1 += reach * model.pass_u1;
  u2 += reach * model.pass_u2;
  return {u1, u2};
}

// Interleave the two sides' numerator tuples into play order. For two-action
// path nodes a grid distribution is (stop, continue), so entry 0 is the stop
// numerator.
std::vector<std::int64_t> interleave_stops(const PathModel& model,
                                           const GridSide& seat1,
                                           const GridSide& seat2,
                                           std::size_t i1, std::size_t i2) {
  std::vector<std::int64_t> stops;
  std::size_t k1 = 0, k2 = 0;
  for (const auto& step : model.steps) {
    if (step.owner == Seat::one) {
      stops.push_back(seat1.numerators[i1][k1++][0]);
    } else {
      stops.push_back(seat2.numerators[i2][k2++][0]);
    }
  }
  return stops;
}

std::string step_status_name(StepStatus status) {
  switch (status) {
    case StepStatus::passed: return "passed";
    case StepStatus::passed_with_note: return "passed_with_note";
    case StepStatus::failed: return "failed";
    case StepStatus::skipped_budget: return "skipped_budget";
  }
  return "?";
}

const char* verdict_name(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::below: return "below";
    case BoundVerdict::equal: return "equal";
    case BoundVerdict::above: return "above";
  }
  return "?";
}

std::uint64_t fnv1a(std::uint64_t hash, const std::string& text) {
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string strategy_digest_text(const BehavioralStrategy& s) {
  std::ostringstream out;
  for (const auto& [id, dist] : s.probs) {
    out << id << "{";
    for (const auto& [label, prob] : dist) {
      out << label << "=" << to_canonical(prob) << ";";
    }
    out << "}";
  }
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Step A: SPNE uniqueness and root-stop outcome
// ---------------------------------------------------------------------------

StepResult audit_spne_claim(int m, std::uint64_t budget) {
  GameTree tree = make_centipede(m);
  StepResult step;
  step.name = "spne_claim";
  step.status = StepStatus::passed;

  SolveResult solved = backward_induction(tree);
  bool all_stop = true;
  for (const auto& [id, label] : solved.seat1.choices) {
    if (label != "S") all_stop = false;
  }
  for (const auto& [id, label] : solved.seat2.choices) {
    if (label != "S") all_stop = false;
  }
  step.values.emplace_back("root_payoff_1", to_canonical(solved.root_payoffs.first));
  step.values.emplace_back("root_payoff_2", to_canonical(solved.root_payoffs.second));
  step.values.emplace_back("all_stop", all_stop ? "true" : "false");
  step.values.emplace_back("unique", solved.unique ? "true" : "false");
  if (!all_stop || !solved.unique || solved.root_payoffs.first != 2 ||
      solved.root_payoffs.second != 1) {
    step.status = StepStatus::failed;
    step.notes.push_back("backward induction did not give the unique all-S profile");
    return step;
  }

  try {
    auto equilibria = enumerate_pure_nash(tree, budget);
    std::size_t off_outcome = 0;
    for (const auto& entry : equilibria) {
      if (entry.outcome.first != 2 || entry.outcome.second != 1) ++off_outcome;
    }
    step.values.emplace_back("pure_nash_count", std::to_string(equilibria.size()));
    step.values.emplace_back("pure_nash_off_root_stop", std::to_string(off_outcome));
    if (equilibria.empty() || off_outcome > 0) {
      step.status = StepStatus::failed;
      step.notes.push_back("a pure Nash equilibrium has a non-root-stop outcome");
    }
  } catch (const BudgetError& e) {
    step.status = StepStatus::passed_with_note;
    step.notes.push_back(std::string("pure-Nash enumeration skipped: ") + e.what());
  }
  return step;
}

// ---------------------------------------------------------------------------
// Step B: below-average bound arithmetic
// ---------------------------------------------------------------------------

StepResult audit_bound_claim(int m, const Rational& grid) {
  std::int64_t q = grid_resolution(grid);
  StepResult step;
  step.name = "bound_claim";
  step.status = StepStatus::passed;

  const Rational three_quarters(3, 4);
  BoundResult at_pivot = below_average_bound(m, three_quarters);
  step.values.emplace_back("bound_at_3_4", to_canonical(at_pivot.bound));
  step.values.emplace_back("benchmark", to_canonical(at_pivot.benchmark));
  step.values.emplace_back("verdict_at_3_4", verdict_name(at_pivot.verdict));

  int checked = 0;
  for (std::int64_t i = 0; i <= q; ++i) {
    Rational p(i, q);
    if (p <= three_quarters) continue;
    ++checked;
    BoundResult at_p = below_average_bound(m, p);
    if (!(at_p.bound < at_pivot.bound)) {
      step.status = StepStatus::failed;
      step.notes.push_back("bound(" + to_canonical(p) +
                           ") does not fall below bound(3/4)");
    }
  }
  step.values.emplace_back("grid_points_above_3_4", std::to_string(checked));

  if (m >= 10) {
    if (at_pivot.verdict != BoundVerdict::below) {
      step.status = StepStatus::failed;
      step.notes.push_back("bound(3/4) is not strictly below m/2 for m >= 10");
    }
  } else if (m == 8) {
    if (at_pivot.verdict == BoundVerdict::equal) {
      if (step.status == StepStatus::passed) {
        step.status = StepStatus::passed_with_note;
      }
      step.notes.push_back(
          "boundary equality at m=8: bound(3/4) equals m/2 exactly; "
          "strict below-average requires a stop probability above 3/4");
    } else {
      step.status = StepStatus::failed;
      step.notes.push_back("expected bound(3/4) = m/2 at m=8");
    }
  } else {
    if (step.status == StepStatus::passed) {
      step.status = StepStatus::passed_with_note;
    }
    step.notes.push_back("the below-average claim is stated for m >= 8; "
                         "values reported for reference only");
  }
  step.notes.push_back(
      "the root continue-probability floor is taken as >= 1/4; a strict "
      "reading (more than 1/4) would exclude the boundary point");
  return step;
}

// ---------------------------------------------------------------------------
// Step C: mutual best responses force the root stop
// ---------------------------------------------------------------------------

StepResult audit_mutual_best_response(int m, const Rational& grid,
                                      std::uint64_t budget) {
  std::int64_t q = grid_resolution(grid);
  GameTree tree = make_centipede(m);
  GridSide side1 = enumerate_grid_side(tree, Seat::one, q);
  GridSide side2 = enumerate_grid_side(tree, Seat::two, q);
  BigInt pairs = BigInt(side1.strategies.size()) * side2.strategies.size();
  if (pairs > budget) {
    throw BudgetError("mutual best-response grid has " + pairs.str() +
                      " profile pairs, budget " + std::to_string(budget) +
                      "; coarsen the grid or lower m");
  }

  // Best-response values against each committed side.
  std::vector<Rational> br1, br2;
  br1.reserve(side2.strategies.size());
  for (const auto& b : side2.strategies) {
    br1.push_back(best_response(tree, Seat::one, b).value);
  }
  br2.reserve(side1.strategies.size());
  for (const auto& a : side1.strategies) {
    br2.push_back(best_response(tree, Seat::two, a).value);
  }

  std::uint64_t mutual = 0, violations = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;

  auto model = path_model(tree);
  auto scale = model ? scale_for(*model, q) : std::nullopt;
  if (model && scale) {
    // Scaled-int64 route: exact, no allocation in the pair loop.
    std::vector<std::int64_t> br1_scaled(br1.size()), br2_scaled(br2.size());
    for (std::size_t j = 0; j < br1.size(); ++j) {
      br1_scaled[j] = static_cast<std::int64_t>(
          numerator(Rational(br1[j] * *scale)));  // exact by construction
    }
    for (std::size_t i = 0; i < br2.size(); ++i) {
      br2_scaled[i] = static_cast<std::int64_t>(numerator(Rational(br2[i] * *scale)));
    }
    int root_slot1 = model->steps[0].owner == Seat::one ? 0 : -1;
    for (std::size_t i = 0; i < side1.strategies.size(); ++i) {
      for (std::size_t j = 0; j < side2.strategies.size(); ++j) {
        auto stops = interleave_stops(*model, side1, side2, i, j);
        auto [u1, u2] = eval_path_scaled(*model, q, *scale, stops);
        if (u1 != br1_scaled[j] || u2 != br2_scaled[i]) continue;
        ++mutual;
        // Mass 1 on the root-stop terminal means stopping surely at the root.
        std::int64_t root_stop =
            root_slot1 == 0 ? side1.numerators[i][0][0] : side2.numerators[j][0][0];
        if (root_stop != q) {
          ++violations;
          if (!first_violation) first_violation = {i, j};
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < side1.strategies.size(); ++i) {
      auto dense1 = detail::compile(tree, side1.strategies[i]);
      for (std::size_t j = 0; j < side2.strategies.size(); ++j) {
        auto dense2 = detail::compile(tree, side2.strategies[j]);
        auto [u1, u2] = detail::evaluate(tree, dense1, dense2);
        if (u1 != br1[j] || u2 != br2[i]) continue;
        ++mutual;
        ReachDistribution reach = reach_distribution(
            tree, {side1.strategies[i], side2.strategies[j]});
        // Root-stop terminal: child of the root's first terminal action.
        const auto& root_dec = tree.decision(tree.root());
        std::string stop_id;
        for (const auto& action : root_dec.actions) {
          if (tree.is_terminal(action.child)) {
            stop_id = tree.node(action.child).id;
            break;
          }
        }
        if (stop_id.empty() || reach.at(stop_id) != 1) {
          ++violations;
          if (!first_violation) first_violation = {i, j};
        }
      }
    }
  }

  StepResult step;
  step.name = "mutual_best_response";
  step.values.emplace_back("profile_pairs", pairs.str());
  step.values.emplace_back("mutual_count", std::to_string(mutual));
  step.values.emplace_back("violations", std::to_string(violations));
  if (violations == 0) {
    step.status = StepStatus::passed;
  } else {
    step.status = StepStatus::failed;
    step.notes.push_back(
        "mutual best-response profile without sure root stop: seat1 " +
        strategy_digest_text(side1.strategies[first_violation->first]) +
        " seat2 " +
        strategy_digest_text(side2.strategies[first_violation->second]));
  }
  return step;
}

// ---------------------------------------------------------------------------
// Step D: outperformance sweep
// ---------------------------------------------------------------------------

SweepOutcome sweep_outperformance(const AuditConfig& config) {
  std::int64_t q = grid_resolution(config.grid);
  if (config.c_min < 0 || config.c_min > 1) {
    throw DomainError("c_min must lie in [0,1]");
  }
  GameTree tree = make_centipede(config.m);
  auto model = path_model(tree);
  if (!model) throw Error("centipede tree is not path shaped");

  SweepOutcome outcome;
  Rational benchmark = Rational(config.m) / 2;

  // AI-as-seat-1 candidates, evaluated in G2 (H responds as seat 2).
  {
    GridSide grid_side = enumerate_grid_side(tree, Seat::one, q);
    for (std::size_t i = 0; i < grid_side.strategies.size(); ++i) {
      // Root continue-probability floor of the audited argument.
      Rational cont(q - grid_side.numerators[i][0][0], q);
      if (cont < config.c_min) continue;
      auto br = best_response(tree, Seat::two, grid_side.strategies[i]);
      auto u = expected_utility(tree, {grid_side.strategies[i], br.response});
      Rational u_ai = u.first, u_h = u.second;
      BoundVerdict flag = benchmark_verdict(config.m, u_ai);
      if (config.filter == FilterMode::root_benchmark &&
          flag == BoundVerdict::below) {
        continue;
      }
      outcome.seat1.strategies.push_back(grid_side.strategies[i]);
      outcome.seat1.h_responses.push_back(std::move(br.response));
      outcome.seat1.u_h.push_back(u_h);
      outcome.seat1.u_ai.push_back(u_ai);
      outcome.seat1.benchmark.push_back(flag);
    }
  }
  // AI-as-seat-2 candidates, evaluated in G1 (H responds as seat 1).
  {
    GridSide grid_side = enumerate_grid_side(tree, Seat::two, q);
    for (std::size_t j = 0; j < grid_side.strategies.size(); ++j) {
      auto br = best_response(tree, Seat::one, grid_side.strategies[j]);
      auto u = expected_utility(tree, {br.response, grid_side.strategies[j]});
      Rational u_h = u.first, u_ai = u.second;
      BoundVerdict flag = benchmark_verdict(config.m, u_ai);
      if (config.filter == FilterMode::root_benchmark &&
          flag == BoundVerdict::below) {
        continue;
      }
      outcome.seat2.strategies.push_back(grid_side.strategies[j]);
      outcome.seat2.h_responses.push_back(std::move(br.response));
      outcome.seat2.u_h.push_back(u_h);
      outcome.seat2.u_ai.push_back(u_ai);
      outcome.seat2.benchmark.push_back(flag);
    }
  }

  std::size_t n1 = outcome.seat1.strategies.size();
  std::size_t n2 = outcome.seat2.strategies.size();
  BigInt pairs = BigInt(n1) * n2;
  if (pairs > config.budget) {
    throw BudgetError("sweep has " + pairs.str() +
                      " surviving strategy pairs, budget " +
                      std::to_string(config.budget) +
                      "; coarsen the grid or lower m");
  }
  outcome.pair_count = static_cast<std::uint64_t>(pairs);

  // margin(i, j) = d1[i] + d2[j] with d = u_H - u_AI per stage game.
  std::vector<Rational> d1(n1), d2(n2);
  for (std::size_t i = 0; i < n1; ++i) {
    d1[i] = outcome.seat1.u_h[i] - outcome.seat1.u_ai[i];
  }
  for (std::size_t j = 0; j < n2; ++j) {
    d2[j] = outcome.seat2.u_h[j] - outcome.seat2.u_ai[j];
  }

  BigInt common = 1;
  for (const auto& d : d1) common = lcm(common, BigInt(denominator(d)));
  for (const auto& d : d2) common = lcm(common, BigInt(denominator(d)));
  BigInt worst = 0;
  for (const auto& d : d1) worst = std::max(worst, BigInt(abs(numerator(Rational(d * common)))));
  for (const auto& d : d2) worst = std::max(worst, BigInt(abs(numerator(Rational(d * common)))));
  Rational min_margin;
  bool have_margin = false;
  if (worst * 2 < (BigInt(1) << 62)) {
    std::vector<std::int64_t> s1(n1), s2(n2);
    for (std::size_t i = 0; i < n1; ++i) {
      s1[i] = static_cast<std::int64_t>(numerator(d1[i] * Rational(common)));
    }
    for (std::size_t j = 0; j < n2; ++j) {
      s2[j] = static_cast<std::int64_t>(numerator(d2[j] * Rational(common)));
    }
    std::int64_t min_scaled = 0;
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t j = 0; j < n2; ++j) {
        std::int64_t margin = s1[i] + s2[j];
        if (margin <= 0) {
          outcome.records.emplace_back(static_cast<std::uint32_t>(i),
                                       static_cast<std::uint32_t>(j));
          if (!have_margin || margin < min_scaled) {
            min_scaled = margin;
            have_margin = true;
          }
        }
      }
    }
    if (have_margin) min_margin = Rational(min_scaled) / Rational(common);
  } else {
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t j = 0; j < n2; ++j) {
        Rational margin = d1[i] + d2[j];
        if (margin <= 0) {
          outcome.records.emplace_back(static_cast<std::uint32_t>(i),
                                       static_cast<std::uint32_t>(j));
          if (!have_margin || margin < min_margin) {
            min_margin = margin;
            have_margin = true;
          }
        }
      }
    }
  }

  outcome.step.name = "outperformance_sweep";
  outcome.step.values.emplace_back("seat1_candidates", std::to_string(n1));
  outcome.step.values.emplace_back("seat2_candidates", std::to_string(n2));
  outcome.step.values.emplace_back("pair_count", std::to_string(outcome.pair_count));
  outcome.step.values.emplace_back("record_count",
                                   std::to_string(outcome.records.size()));
  if (have_margin) {
    outcome.step.values.emplace_back("min_margin", to_canonical(min_margin));
  }
  outcome.step.values.emplace_back("benchmark", to_canonical(benchmark));
  outcome.step.status =
      outcome.records.empty() ? StepStatus::passed : StepStatus::failed;
  if (!outcome.records.empty()) {
    outcome.step.notes.push_back(
        "H fails to strictly outperform on " +
        std::to_string(outcome.records.size()) +
        " surviving strategy pairs; see the counterexample records");
  }
  return outcome;
}

CounterexampleRecord materialize_record(const SweepOutcome& outcome, int m,
                                        std::size_t index) {
  const auto& [i, j] = outcome.records.at(index);
  CounterexampleRecord record;
  record.ai_as_seat1 = outcome.seat1.strategies[i];
  record.ai_as_seat2 = outcome.seat2.strategies[j];
  record.h_response_g1 = outcome.seat2.h_responses[j];
  record.h_response_g2 = outcome.seat1.h_responses[i];
  record.g1 = {outcome.seat2.u_h[j], outcome.seat2.u_ai[j]};
  record.g2 = {outcome.seat1.u_h[i], outcome.seat1.u_ai[i]};
  record.margin = (record.g1.human + record.g2.human) -
                  (record.g1.ai + record.g2.ai);
  record.ai_benchmark_g1 = outcome.seat2.benchmark[j];
  record.ai_benchmark_g2 = outcome.seat1.benchmark[i];
  return record;
}

// ---------------------------------------------------------------------------
// Full audit
// ---------------------------------------------------------------------------

AuditReport run_audit(const AuditConfig& config) {
  AuditReport report;
  report.config = config;
  report.steps.push_back(audit_spne_claim(config.m, config.budget));
  report.steps.push_back(audit_bound_claim(config.m, config.grid));
  try {
    report.steps.push_back(
        audit_mutual_best_response(config.m, config.grid, config.budget));
  } catch (const BudgetError& e) {
    StepResult skipped;
    skipped.name = "mutual_best_response";
    skipped.status = StepStatus::skipped_budget;
    skipped.notes.push_back(e.what());
    report.steps.push_back(std::move(skipped));
  }
  report.sweep = sweep_outperformance(config);
  report.steps.push_back(report.sweep.step);

  std::uint64_t hash = 0xcbf29ce484222325ull;
  hash = fnv1a(hash, "m=" + std::to_string(config.m));
  hash = fnv1a(hash, "grid=" + to_canonical(config.grid));
  hash = fnv1a(hash, "c_min=" + to_canonical(config.c_min));
  hash = fnv1a(hash, std::string("filter=") +
                         (config.filter == FilterMode::root_only
                              ? "root-only"
                              : "root+benchmark"));
  hash = fnv1a(hash, "budget=" + std::to_string(config.budget));
  for (const auto& step : report.steps) {
    hash = fnv1a(hash, "|" + step.name + ":" + step_status_name(step.status));
    for (const auto& [key, value] : step.values) {
      hash = fnv1a(hash, key + "=" + value);
    }
    for (const auto& note : step.notes) hash = fnv1a(hash, note);
  }
  for (const auto& [i, j] : report.sweep.records) {
    hash = fnv1a(hash, std::to_string(i) + "," + std::to_string(j));
  }
  std::ostringstream digest;
  digest << std::hex;
  digest.width(16);
  digest.fill('0');
  digest << hash;
  report.digest = digest.str();
  return report;
}

}  // namespace ctgames
