#include "ctgames/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "ctgames/errors.hpp"

namespace ctgames {

namespace {

Rational rational_from(const Json& value, const char* where) {
  if (!value.is_string()) {
    throw ParseError(std::string(where) +
                     ": rationals are canonical strings like \"9/2\"");
  }
  return parse_rational(value.get<std::string>());
}

Seat seat_from(const Json& value, const char* where) {
  if (!value.is_number_integer()) {
    throw ParseError(std::string(where) + ": seat must be 1 or 2");
  }
  int n = value.get<int>();
  if (n != 1 && n != 2) {
    throw ParseError(std::string(where) + ": seat must be 1 or 2");
  }
  return seat_from_int(n);
}

const Json& field(const Json& doc, const char* key, const char* where) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(std::string(where) + ": missing field \"" + key + "\"");
  }
  return *it;
}

const char* verdict_name(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::below: return "below";
    case BoundVerdict::equal: return "equal";
    case BoundVerdict::above: return "above";
  }
  return "?";
}

const char* contest_verdict_name(ContestVerdict v) {
  switch (v) {
    case ContestVerdict::h_outperforms: return "h_outperforms";
    case ContestVerdict::ai_outperforms: return "ai_outperforms";
    case ContestVerdict::neither: return "neither";
  }
  return "?";
}

const char* step_status_name(StepStatus status) {
  switch (status) {
    case StepStatus::passed: return "passed";
    case StepStatus::passed_with_note: return "passed_with_note";
    case StepStatus::failed: return "failed";
    case StepStatus::skipped_budget: return "skipped_budget";
  }
  return "?";
}

Json payoffs_to_json(const GamePayoffs& payoffs) {
  return Json{{"h", to_canonical(payoffs.human)},
              {"ai", to_canonical(payoffs.ai)}};
}

Json pure_to_json(const PureStrategy& s) {
  Json nodes = Json::object();
  for (const auto& [id, label] : s.choices) nodes[id] = label;
  return Json{{"seat", static_cast<int>(s.seat)},
              {"kind", "pure"},
              {"nodes", nodes}};
}

}  // namespace

std::string dump_canonical(const Json& value) {
  // nlohmann objects iterate in sorted key order; compact dump is canonical.
  return value.dump() + "\n";
}

Json game_to_json(const GameTree& tree) {
  RawTree raw = tree.to_raw();
  Json nodes = Json::object();
  for (const auto& [id, node] : raw.nodes) {
    if (auto* dec = std::get_if<RawDecision>(&node)) {
      Json actions = Json::array();
      for (const auto& action : dec->actions) {
        actions.push_back(Json{{"label", action.label}, {"child", action.child}});
      }
      nodes[id] = Json{{"kind", "decision"},
                       {"owner", dec->owner},
                       {"actions", actions}};
    } else {
      const auto& term = std::get<RawTerminal>(node);
      Json payoffs = Json::array();
      for (const auto& payoff : term.payoffs) {
        payoffs.push_back(to_canonical(payoff));
      }
      nodes[id] = Json{{"kind", "terminal"}, {"payoffs", payoffs}};
    }
  }
  return Json{{"players", 2}, {"root", raw.root}, {"nodes", nodes}};
}

GameTree game_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("game: document must be an object");
  if (field(doc, "players", "game") != Json(2)) {
    throw ParseError("game: \"players\" must be 2");
  }
  RawTree raw;
  const Json& root = field(doc, "root", "game");
  if (!root.is_string()) throw ParseError("game: \"root\" must be a node id");
  raw.root = root.get<std::string>();
  const Json& nodes = field(doc, "nodes", "game");
  if (!nodes.is_object()) throw ParseError("game: \"nodes\" must be an object");
  for (const auto& [id, node] : nodes.items()) {
    const Json& kind = field(node, "kind", "game node");
    if (kind == "decision") {
      RawDecision dec;
      const Json& owner = field(node, "owner", "game node");
      if (!owner.is_number_integer()) {
        throw ParseError("game node " + id + ": owner must be 1 or 2");
      }
      dec.owner = owner.get<int>();
      const Json& actions = field(node, "actions", "game node");
      if (!actions.is_array()) {
        throw ParseError("game node " + id + ": actions must be an array");
      }
      for (const auto& action : actions) {
        const Json& label = field(action, "label", "game action");
        const Json& child = field(action, "child", "game action");
        if (!label.is_string() || !child.is_string()) {
          throw ParseError("game node " + id + ": action label/child must be strings");
        }
        dec.actions.push_back({label.get<std::string>(), child.get<std::string>()});
      }
      raw.nodes.emplace(id, std::move(dec));
    } else if (kind == "terminal") {
      RawTerminal term;
      const Json& payoffs = field(node, "payoffs", "game node");
      if (!payoffs.is_array()) {
        throw ParseError("game node " + id + ": payoffs must be an array");
      }
      for (const auto& payoff : payoffs) {
        term.payoffs.push_back(rational_from(payoff, "game payoff"));
      }
      raw.nodes.emplace(id, std::move(term));
    } else {
      throw ParseError("game node " + id +
                       ": kind must be \"decision\" or \"terminal\"");
    }
  }
  return validate_tree(raw);
}

Json strategy_to_json(const Strategy& strategy) {
  if (auto* pure = std::get_if<PureStrategy>(&strategy)) {
    return pure_to_json(*pure);
  }
  if (auto* behavioral = std::get_if<BehavioralStrategy>(&strategy)) {
    Json nodes = Json::object();
    for (const auto& [id, dist] : behavioral->probs) {
      Json row = Json::object();
      for (const auto& [label, prob] : dist) row[label] = to_canonical(prob);
      nodes[id] = row;
    }
    return Json{{"seat", static_cast<int>(behavioral->seat)},
                {"kind", "behavioral"},
                {"nodes", nodes}};
  }
  const auto& mixed = std::get<MixedStrategy>(strategy);
  Json atoms = Json::array();
  for (const auto& [pure, weight] : mixed.atoms) {
    atoms.push_back(Json{{"strategy", pure_to_json(pure)},
                         {"weight", to_canonical(weight)}});
  }
  return Json{{"seat", static_cast<int>(mixed.seat)},
              {"kind", "mixed"},
              {"atoms", atoms}};
}

Strategy strategy_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("strategy: document must be an object");
  Seat seat = seat_from(field(doc, "seat", "strategy"), "strategy");
  const Json& kind = field(doc, "kind", "strategy");
  if (kind == "pure") {
    PureStrategy s;
    s.seat = seat;
    for (const auto& [id, label] : field(doc, "nodes", "strategy").items()) {
      if (!label.is_string()) {
        throw ParseError("pure strategy: node " + id + " must map to a label");
      }
      s.choices.emplace(id, label.get<std::string>());
    }
    return s;
  }
  if (kind == "behavioral") {
    BehavioralStrategy s;
    s.seat = seat;
    for (const auto& [id, row] : field(doc, "nodes", "strategy").items()) {
      if (!row.is_object()) {
        throw ParseError("behavioral strategy: node " + id +
                         " must map to a label distribution");
      }
      std::map<std::string, Rational> dist;
      for (const auto& [label, prob] : row.items()) {
        dist.emplace(label, rational_from(prob, "behavioral probability"));
      }
      s.probs.emplace(id, std::move(dist));
    }
    return s;
  }
  if (kind == "mixed") {
    MixedStrategy s;
    s.seat = seat;
    const Json& atoms = field(doc, "atoms", "strategy");
    if (!atoms.is_array()) throw ParseError("mixed strategy: atoms must be an array");
    for (const auto& atom : atoms) {
      Strategy pure = strategy_from_json(field(atom, "strategy", "mixed atom"));
      if (!std::holds_alternative<PureStrategy>(pure)) {
        throw ParseError("mixed strategy: atoms must hold pure strategies");
      }
      s.atoms.emplace_back(std::get<PureStrategy>(pure),
                           rational_from(field(atom, "weight", "mixed atom"),
                                         "mixed weight"));
    }
    return s;
  }
  throw ParseError("strategy: kind must be \"pure\", \"behavioral\" or \"mixed\"");
}

Json solve_result_to_json(const SolveResult& result) {
  return Json{{"kind", "spne"},
              {"profile", Json{{"seat1", pure_to_json(result.seat1)},
                               {"seat2", pure_to_json(result.seat2)}}},
              {"payoffs", Json::array({to_canonical(result.root_payoffs.first),
                                       to_canonical(result.root_payoffs.second)})},
              {"unique", result.unique}};
}

Json best_response_to_json(const BestResponseResult& result) {
  return Json{{"kind", "best_response"},
              {"seat", static_cast<int>(result.seat)},
              {"response", pure_to_json(result.response)},
              {"value", to_canonical(result.value)},
              {"tie_count", result.tie_count}};
}

Json nash_verdict_to_json(const NashVerdict& verdict) {
  Json doc{{"kind", "nash_check"},
           {"is_nash", verdict.is_nash},
           {"max_gain", to_canonical(verdict.max_gain)}};
  if (verdict.witness) {
    doc["witness"] = Json{{"seat", static_cast<int>(verdict.witness->seat)},
                          {"strategy", pure_to_json(verdict.witness->strategy)},
                          {"gain", to_canonical(verdict.witness->gain)}};
  }
  return doc;
}

Json spne_verdict_to_json(const SpneVerdict& verdict) {
  Json doc{{"kind", "spne_check"}, {"is_spne", verdict.is_spne}};
  if (verdict.witness_node) doc["witness_node"] = *verdict.witness_node;
  return doc;
}

Json contest_report_to_json(const ContestReport& report) {
  return Json{{"kind", "contest_report"},
              {"g1", payoffs_to_json(report.g1)},
              {"g2", payoffs_to_json(report.g2)},
              {"stage", payoffs_to_json(report.stage)},
              {"cumulative", payoffs_to_json(report.cumulative)},
              {"h_used_g1", strategy_to_json(report.h_used_g1)},
              {"h_used_g2", strategy_to_json(report.h_used_g2)},
              {"repetitions", report.repetitions},
              {"verdict", contest_verdict_name(report.verdict)}};
}

Json audit_config_to_json(const AuditConfig& config) {
  return Json{{"m", config.m},
              {"grid", to_canonical(config.grid)},
              {"c_min", to_canonical(config.c_min)},
              {"filter", config.filter == FilterMode::root_only
                             ? "root-only"
                             : "root+benchmark"},
              {"budget", config.budget}};
}

AuditConfig audit_config_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("audit config: document must be an object");
  AuditConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "m") {
      if (!value.is_number_integer()) throw ParseError("audit config: m must be an integer");
      config.m = value.get<int>();
    } else if (key == "grid") {
      config.grid = rational_from(value, "audit config grid");
    } else if (key == "c_min") {
      config.c_min = rational_from(value, "audit config c_min");
    } else if (key == "filter") {
      if (value == "root-only") {
        config.filter = FilterMode::root_only;
      } else if (value == "root+benchmark") {
        config.filter = FilterMode::root_benchmark;
      } else {
        throw ParseError(
            "audit config: filter must be \"root-only\" or \"root+benchmark\"");
      }
    } else if (key == "budget") {
      if (!value.is_number_unsigned() && !value.is_number_integer()) {
        throw ParseError("audit config: budget must be a non-negative integer");
      }
      if (value.is_number_integer() && value.get<long long>() < 0) {
        throw ParseError("audit config: budget must be a non-negative integer");
      }
      config.budget = value.get<std::uint64_t>();
    } else {
      throw ParseError("audit config: unknown field \"" + key + "\"");
    }
  }
  if (config.m < 2 || config.m % 2 != 0) {
    throw ParseError("audit config: m must be even and at least 2");
  }
  if (config.grid <= 0 || config.grid > 1) {
    throw ParseError("audit config: grid must lie in (0, 1]");
  }
  if (config.c_min < 0 || config.c_min > 1) {
    throw ParseError("audit config: c_min must lie in [0, 1]");
  }
  return config;
}

Json step_result_to_json(const StepResult& step) {
  Json values = Json::object();
  for (const auto& [key, value] : step.values) values[key] = value;
  Json notes = Json::array();
  for (const auto& note : step.notes) notes.push_back(note);
  return Json{{"name", step.name},
              {"status", step_status_name(step.status)},
              {"values", values},
              {"notes", notes}};
}

Json counterexample_to_json(const CounterexampleRecord& record) {
  return Json{{"ai_as_seat1", strategy_to_json(record.ai_as_seat1)},
              {"ai_as_seat2", strategy_to_json(record.ai_as_seat2)},
              {"h_response_g1", pure_to_json(record.h_response_g1)},
              {"h_response_g2", pure_to_json(record.h_response_g2)},
              {"g1", payoffs_to_json(record.g1)},
              {"g2", payoffs_to_json(record.g2)},
              {"margin", to_canonical(record.margin)},
              {"ai_benchmark", Json{{"g1", verdict_name(record.ai_benchmark_g1)},
                                    {"g2", verdict_name(record.ai_benchmark_g2)}}}};
}

Json audit_summary_to_json(const AuditReport& report) {
  Json steps = Json::array();
  for (const auto& step : report.steps) steps.push_back(step_result_to_json(step));
  return Json{{"kind", "audit_summary"},
              {"config", audit_config_to_json(report.config)},
              {"steps", steps},
              {"counterexample_count", report.sweep.records.size()},
              {"digest", report.digest}};
}

void write_audit_report(std::ostream& out, const AuditReport& report) {
  // Streamed by hand so multi-million-record sweeps never build one DOM.
  // Keys are emitted in sorted order to match dump_canonical's convention.
  out << "{\"config\":" << audit_config_to_json(report.config).dump()
      << ",\"counterexamples\":[";
  // Record fields depend only on the per-side tables; pre-render each side
  // once and splice per record.
  const auto& sweep = report.sweep;
  std::vector<std::string> side1_fragment(sweep.seat1.strategies.size());
  for (std::size_t i = 0; i < side1_fragment.size(); ++i) {
    side1_fragment[i] =
        "\"ai_as_seat1\":" +
        strategy_to_json(sweep.seat1.strategies[i]).dump();
  }
  std::vector<std::string> side2_fragment(sweep.seat2.strategies.size());
  for (std::size_t j = 0; j < side2_fragment.size(); ++j) {
    side2_fragment[j] =
        ",\"ai_as_seat2\":" +
        strategy_to_json(sweep.seat2.strategies[j]).dump();
  }
  std::vector<std::string> g2_fragment(sweep.seat1.strategies.size());
  std::vector<std::string> hr2_fragment(sweep.seat1.strategies.size());
  for (std::size_t i = 0; i < g2_fragment.size(); ++i) {
    g2_fragment[i] =
        ",\"g2\":" +
        payoffs_to_json({sweep.seat1.u_h[i], sweep.seat1.u_ai[i]}).dump();
    hr2_fragment[i] =
        ",\"h_response_g2\":" + pure_to_json(sweep.seat1.h_responses[i]).dump();
  }
  std::vector<std::string> g1_fragment(sweep.seat2.strategies.size());
  std::vector<std::string> hr1_fragment(sweep.seat2.strategies.size());
  for (std::size_t j = 0; j < g1_fragment.size(); ++j) {
    g1_fragment[j] =
        ",\"g1\":" +
        payoffs_to_json({sweep.seat2.u_h[j], sweep.seat2.u_ai[j]}).dump();
    hr1_fragment[j] =
        ",\"h_response_g1\":" + pure_to_json(sweep.seat2.h_responses[j]).dump();
  }
  auto verdict = [](BoundVerdict v) { return std::string(verdict_name(v)); };
  bool first = true;
  for (const auto& [i, j] : sweep.records) {
    if (!first) out << ",";
    first = false;
    Rational margin = (sweep.seat2.u_h[j] + sweep.seat1.u_h[i]) -
                      (sweep.seat2.u_ai[j] + sweep.seat1.u_ai[i]);
    out << "{" << side1_fragment[i] << side2_fragment[j]
        << ",\"ai_benchmark\":{\"g1\":\"" << verdict(sweep.seat2.benchmark[j])
        << "\",\"g2\":\"" << verdict(sweep.seat1.benchmark[i]) << "\"}"
        << g1_fragment[j] << g2_fragment[i] << hr1_fragment[j]
        << hr2_fragment[i] << ",\"margin\":\"" << to_canonical(margin)
        << "\"}";
  }
  out << "],\"digest\":\"" << report.digest << "\",\"kind\":\"audit_report\""
      << ",\"steps\":[";
  for (std::size_t s = 0; s < report.steps.size(); ++s) {
    if (s) out << ",";
    out << step_result_to_json(report.steps[s]).dump();
  }
  out << "]}\n";
}

void write_audit_report_file(const std::string& path,
                             const AuditReport& report) {
  std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + temp + " for writing");
    write_audit_report(out, report);
    out.flush();
    if (!out) throw IoError("failed writing " + temp);
  }
  if (std::rename(temp.c_str(), path.c_str()) != 0) {
    std::remove(temp.c_str());
    throw IoError("failed to move " + temp + " into place");
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + temp + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing " + temp);
  }
  if (std::rename(temp.c_str(), path.c_str()) != 0) {
    std::remove(temp.c_str());
    throw IoError("failed to move " + temp + " into place");
  }
}

}  // namespace ctgames
