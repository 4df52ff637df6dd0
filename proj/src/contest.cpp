#include "ctgames/contest.hpp"

#include "ctgames/errors.hpp"

namespace ctgames {

std::pair<StageAssignment, StageAssignment> stage_games(const GameTree&) {
  return {StageAssignment{Party::human, Party::ai},
          StageAssignment{Party::ai, Party::human}};
}

ContestReport play_contest(const GameTree& tree, const ContestSpec& spec) {
  if (seat_of(spec.ai_as_seat1) != Seat::one) {
    throw DomainError("contest: AI-as-seat-1 strategy is not for seat 1");
  }
  if (seat_of(spec.ai_as_seat2) != Seat::two) {
    throw DomainError("contest: AI-as-seat-2 strategy is not for seat 2");
  }
  if (spec.repetitions < 1) {
    throw DomainError("contest: repetitions must be >= 1");
  }
  check_strategy(tree, spec.ai_as_seat1);
  check_strategy(tree, spec.ai_as_seat2);

  ContestReport report;
  report.repetitions = spec.repetitions;

  // G1: H moves first against the committed seat-2 strategy.
  if (spec.explicit_human) {
    report.h_used_g1 = spec.explicit_human->first;
    if (seat_of(report.h_used_g1) != Seat::one) {
      throw DomainError("contest: explicit H strategy for G1 is not for seat 1");
    }
  } else {
    report.h_used_g1 = best_response(tree, Seat::one, spec.ai_as_seat2).response;
  }
  auto g1 = expected_utility(tree, {report.h_used_g1, spec.ai_as_seat2});
  report.g1 = {g1.first, g1.second};

  // G2: roles swapped, AI moves first.
  if (spec.explicit_human) {
    report.h_used_g2 = spec.explicit_human->second;
    if (seat_of(report.h_used_g2) != Seat::two) {
      throw DomainError("contest: explicit H strategy for G2 is not for seat 2");
    }
  } else {
    report.h_used_g2 = best_response(tree, Seat::two, spec.ai_as_seat1).response;
  }
  auto g2 = expected_utility(tree, {spec.ai_as_seat1, report.h_used_g2});
  report.g2 = {g2.second, g2.first};

  report.stage = {report.g1.human + report.g2.human,
                  report.g1.ai + report.g2.ai};
  report.cumulative = {report.stage.human * spec.repetitions,
                       report.stage.ai * spec.repetitions};
  report.verdict = outperformance_verdict(report);
  return report;
}

ContestVerdict outperformance_verdict(const ContestReport& report) {
  if (report.cumulative.human > report.cumulative.ai) {
    return ContestVerdict::h_outperforms;
  }
  if (report.cumulative.ai > report.cumulative.human) {
    return ContestVerdict::ai_outperforms;
  }
  return ContestVerdict::neither;
}

}  // namespace ctgames
