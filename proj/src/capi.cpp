#include "ctgames.h"

#include <cstring>
#include <iostream>
#include <new>

#include "ctgames/errors.hpp"
#include "ctgames/json_io.hpp"

using namespace ctgames;

struct ctg_game {
  GameTree tree;
};

namespace {

thread_local std::string g_last_error;

char* copy_out(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

ctg_status fail(ctg_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Translate the C++ error hierarchy at the boundary.
template <typename Fn>
ctg_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CTG_OK;
  } catch (const ParseError& e) {
    return fail(CTG_ERROR_PARSE, e.what());
  } catch (const ValidationError& e) {
    return fail(CTG_ERROR_PARSE, e.what());
  } catch (const DomainError& e) {
    return fail(CTG_ERROR_DOMAIN, e.what());
  } catch (const BudgetError& e) {
    return fail(CTG_ERROR_BUDGET, e.what());
  } catch (const IoError& e) {
    return fail(CTG_ERROR_IO, e.what());
  } catch (const Json::exception& e) {
    return fail(CTG_ERROR_PARSE, std::string("invalid JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(CTG_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CTG_ERROR_INTERNAL, e.what());
  }
}

Json parse_doc(const char* text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

Strategy strategy_arg(const ctg_game* game, const char* json, const char* what) {
  Strategy s = strategy_from_json(parse_doc(json, what));
  check_strategy(game->tree, s);
  return s;
}

}  // namespace

extern "C" {

const char* ctg_status_name(ctg_status status) {
  switch (status) {
    case CTG_OK: return "ok";
    case CTG_ERROR_ARGUMENT: return "argument";
    case CTG_ERROR_PARSE: return "parse";
    case CTG_ERROR_DOMAIN: return "domain";
    case CTG_ERROR_BUDGET: return "budget";
    case CTG_ERROR_IO: return "io";
    case CTG_ERROR_INTERNAL: return "internal";
  }
  return "?";
}

const char* ctg_last_error(void) { return g_last_error.c_str(); }

void ctg_string_free(char* text) { delete[] text; }

void ctg_game_free(ctg_game* game) { delete game; }

ctg_status ctg_game_parse(const char* json_text, ctg_game** out_game) {
  if (!json_text || !out_game) return fail(CTG_ERROR_ARGUMENT, "null argument");
  return guarded([&] {
    *out_game = new ctg_game{game_from_json(parse_doc(json_text, "game"))};
  });
}

ctg_status ctg_centipede_create(int m, ctg_game** out_game) {
  if (!out_game) return fail(CTG_ERROR_ARGUMENT, "null argument");
  return guarded([&] { *out_game = new ctg_game{make_centipede(m)}; });
}

ctg_status ctg_game_to_json(const ctg_game* game, char** out_text) {
  if (!game || !out_text) return fail(CTG_ERROR_ARGUMENT, "null argument");
  return guarded([&] {
    *out_text = copy_out(dump_canonical(game_to_json(game->tree)));
  });
}

ctg_status ctg_solve_spne(const ctg_game* game, char** out_text) {
  if (!game || !out_text) return fail(CTG_ERROR_ARGUMENT, "null argument");
  return guarded([&] {
    *out_text =
        copy_out(dump_canonical(solve_result_to_json(backward_induction(game->tree))));
  });
}

ctg_status ctg_best_response(const ctg_game* game, int seat,
                             const char* opponent_json, char** out_text) {
  if (!game || !opponent_json || !out_text) {
    return fail(CTG_ERROR_ARGUMENT, "null argument");
  }
  return guarded([&] {
    Strategy opponent = strategy_arg(game, opponent_json, "opponent strategy");
    auto result = best_response(game->tree, seat_from_int(seat), opponent);
    *out_text = copy_out(dump_canonical(best_response_to_json(result)));
  });
}

ctg_status ctg_check_nash(const ctg_game* game, const char* seat1_json,
                          const char* seat2_json, char** out_text) {
  if (!game || !seat1_json || !seat2_json || !out_text) {
    return fail(CTG_ERROR_ARGUMENT, "null argument");
  }
  return guarded([&] {
    StrategyProfile profile{strategy_arg(game, seat1_json, "seat-1 strategy"),
                            strategy_arg(game, seat2_json, "seat-2 strategy")};
    *out_text = copy_out(
        dump_canonical(nash_verdict_to_json(is_nash(game->tree, profile))));
  });
}

ctg_status ctg_check_spne(const ctg_game* game, const char* seat1_json,
                          const char* seat2_json, char** out_text) {
  if (!game || !seat1_json || !seat2_json || !out_text) {
    return fail(CTG_ERROR_ARGUMENT, "null argument");
  }
  return guarded([&] {
    StrategyProfile profile{strategy_arg(game, seat1_json, "seat-1 strategy"),
                            strategy_arg(game, seat2_json, "seat-2 strategy")};
    *out_text = copy_out(
        dump_canonical(spne_verdict_to_json(is_spne(game->tree, profile))));
  });
}

ctg_status ctg_contest_play(const ctg_game* game, const char* ai_seat1_json,
                            const char* ai_seat2_json, long long repetitions,
                            char** out_text) {
  if (!game || !ai_seat1_json || !ai_seat2_json || !out_text) {
    return fail(CTG_ERROR_ARGUMENT, "null argument");
  }
  return guarded([&] {
    ContestSpec spec;
    spec.ai_as_seat1 = strategy_arg(game, ai_seat1_json, "AI seat-1 strategy");
    spec.ai_as_seat2 = strategy_arg(game, ai_seat2_json, "AI seat-2 strategy");
    spec.repetitions = repetitions;
    auto report = play_contest(game->tree, spec);
    *out_text = copy_out(dump_canonical(contest_report_to_json(report)));
  });
}

ctg_status ctg_audit_run(const char* config_json, const char* out_path,
                         char** out_text, long long* out_record_count) {
  if (!config_json || !out_text) return fail(CTG_ERROR_ARGUMENT, "null argument");
  return guarded([&] {
    AuditConfig config = audit_config_from_json(parse_doc(config_json, "audit config"));
    AuditReport report = run_audit(config);
    if (out_path) {
      write_audit_report_file(out_path, report);
    } else {
      write_audit_report(std::cout, report);
      std::cout.flush();
    }
    *out_text = copy_out(dump_canonical(audit_summary_to_json(report)));
    if (out_record_count) {
      *out_record_count = static_cast<long long>(report.sweep.records.size());
    }
  });
}

}  // extern "C"
