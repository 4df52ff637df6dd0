#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ctgames/centipede.hpp"
#include "ctgames/contest.hpp"

namespace ctgames {

enum class FilterMode { root_only, root_benchmark };

struct AuditConfig {
  int m = 10;
  Rational grid = Rational(1) / 4;
  Rational c_min = Rational(1) / 4;  // root continue-probability floor
  FilterMode filter = FilterMode::root_only;
  // Cap on enumerated items per step (pure profiles, grid profile pairs).
  std::uint64_t budget = std::uint64_t{1} << 24;
};

enum class StepStatus { passed, passed_with_note, failed, skipped_budget };

struct StepResult {
  std::string name;
  StepStatus status = StepStatus::passed;
  // Exact numbers the step compared, in insertion order.
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::string> notes;
};

/// One AI strategy pair for which best-responding H failed to strictly
/// outperform (margin = u_H - u_AI <= 0).
struct CounterexampleRecord {
  BehavioralStrategy ai_as_seat1;
  BehavioralStrategy ai_as_seat2;
  PureStrategy h_response_g1;
  PureStrategy h_response_g2;
  GamePayoffs g1;
  GamePayoffs g2;
  Rational margin;
  BoundVerdict ai_benchmark_g1 = BoundVerdict::below;  // g1.ai vs m/2
  BoundVerdict ai_benchmark_g2 = BoundVerdict::below;  // g2.ai vs m/2
};

/// Per-side precomputation of the sweep: the stage game a committed
/// strategy appears in depends only on that strategy, so each side is
/// evaluated once and pairs reduce to margin sums.
struct SweepSide {
  std::vector<BehavioralStrategy> strategies;  // grid order, post filter
  std::vector<PureStrategy> h_responses;
  std::vector<Rational> u_h;
  std::vector<Rational> u_ai;
  std::vector<BoundVerdict> benchmark;  // u_ai vs m/2
};

struct SweepOutcome {
  StepResult step;
  SweepSide seat1;  // AI-as-seat-1 candidates (evaluated in G2)
  SweepSide seat2;  // AI-as-seat-2 candidates (evaluated in G1)
  // (seat1 index, seat2 index), seat1-major, both ascending in grid order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> records;
  std::uint64_t pair_count = 0;
};

struct AuditReport {
  AuditConfig config;
  std::vector<StepResult> steps;  // spne, bound, mutual-BR, sweep
  SweepOutcome sweep;
  std::string digest;  // 16 hex chars, FNV-1a over canonical content
};

/// Backward induction must give all-S with root payoff (2,1) and no ties;
/// within budget, brute-force pure-Nash enumeration must find only
/// root-stop outcomes (skipped with a note otherwise).
StepResult audit_spne_claim(int m, std::uint64_t budget = AuditConfig{}.budget);

/// bound(p) must fall strictly below bound(3/4) for every grid p > 3/4, and
/// bound(3/4) must relate to m/2 as claimed (strictly below for m >= 10;
/// the m = 8 equality is reported as a boundary note).
StepResult audit_bound_claim(int m, const Rational& grid);

/// Every grid behavioral profile in which both strategies are exact best
/// responses to each other must put reach mass 1 on the root-stop terminal.
/// Throws BudgetError when the grid profile count exceeds the budget.
StepResult audit_mutual_best_response(int m, const Rational& grid,
                                      std::uint64_t budget = AuditConfig{}.budget);

/// Enumerates committed AI role-strategy pairs on the grid, filters them
/// (root continue floor; optionally the m/2 benchmark per game), plays the
/// best-response contest for each, and records every non-positive margin.
/// Passes iff no records. Throws BudgetError when the surviving pair count
/// exceeds the budget.
SweepOutcome sweep_outperformance(const AuditConfig& config);

/// Full record for one sweep entry, reassembled from the per-side tables.
CounterexampleRecord materialize_record(const SweepOutcome& outcome, int m,
                                        std::size_t index);

/// Runs all four steps. Over-budget optional parts (pure-Nash enumeration,
/// mutual-BR grid) are recorded as skipped; an over-budget sweep is an
/// error. Byte-deterministic for identical configs.
AuditReport run_audit(const AuditConfig& config);

}  // namespace ctgames
