#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ctgames/contest.hpp"
#include "ctgames/harness.hpp"
#include "ctgames/solvers.hpp"

namespace ctgames {

using Json = nlohmann::json;

/// Compact canonical encoding (sorted keys, rationals in lowest terms),
/// newline-terminated. Serializing equal values yields identical bytes.
std::string dump_canonical(const Json& value);

Json game_to_json(const GameTree& tree);
GameTree game_from_json(const Json& doc);

Json strategy_to_json(const Strategy& strategy);
Strategy strategy_from_json(const Json& doc);

Json solve_result_to_json(const SolveResult& result);
Json best_response_to_json(const BestResponseResult& result);
Json nash_verdict_to_json(const NashVerdict& verdict);
Json spne_verdict_to_json(const SpneVerdict& verdict);

Json contest_report_to_json(const ContestReport& report);

Json audit_config_to_json(const AuditConfig& config);
AuditConfig audit_config_from_json(const Json& doc);

Json step_result_to_json(const StepResult& step);
Json counterexample_to_json(const CounterexampleRecord& record);

/// Summary document: config echo, steps, record count and digest, but not
/// the (possibly very large) record list.
Json audit_summary_to_json(const AuditReport& report);

/// Full report, with records streamed one at a time so multi-million-record
/// sweeps never materialize as a single in-memory document.
void write_audit_report(std::ostream& out, const AuditReport& report);

/// Streamed report to a file, written atomically (temp file + rename).
void write_audit_report_file(const std::string& path, const AuditReport& report);

/// Atomic write: temp file in the same directory + rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace ctgames
