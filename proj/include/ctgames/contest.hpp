#pragma once

#include <cstdint>
#include <optional>

#include "ctgames/solvers.hpp"
#include "ctgames/strategy.hpp"

namespace ctgames {

enum class Party { human, ai };

struct StageAssignment {
  Party seat1;
  Party seat2;
};

/// The two stage games over one tree: G1 = {seat1: H, seat2: AI},
/// G2 = {seat1: AI, seat2: H}. Structure and payoffs are shared.
std::pair<StageAssignment, StageAssignment> stage_games(const GameTree& tree);

enum class ContestVerdict { h_outperforms, ai_outperforms, neither };

/// Role-swapped repeated contest. The AI commits both role strategies up
/// front; they may not depend on H's play. H either best-responds per stage
/// game (default) or plays an explicit pair.
struct ContestSpec {
  Strategy ai_as_seat1;  // committed for G2, where the AI moves first
  Strategy ai_as_seat2;  // committed for G1, where H moves first
  std::int64_t repetitions = 1;
  // {h as seat 1 of G1, h as seat 2 of G2}; nullopt = best-response mode.
  std::optional<std::pair<Strategy, Strategy>> explicit_human;
};

struct GamePayoffs {
  Rational human;
  Rational ai;
};

struct ContestReport {
  GamePayoffs g1;          // H moves first
  GamePayoffs g2;          // AI moves first
  GamePayoffs stage;       // g1 + g2
  GamePayoffs cumulative;  // repetitions * stage
  Strategy h_used_g1;
  Strategy h_used_g2;
  std::int64_t repetitions = 1;
  ContestVerdict verdict = ContestVerdict::neither;
};

/// Evaluates both stage games analytically (exact expectations, no
/// sampling); strategies are stationary across repetitions, so cumulative
/// payoffs are exactly repetitions * stage.
ContestReport play_contest(const GameTree& tree, const ContestSpec& spec);

/// Strict comparison of cumulative totals; ties give `neither`.
ContestVerdict outperformance_verdict(const ContestReport& report);

}  // namespace ctgames
