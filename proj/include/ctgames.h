/* C interface to the ctgames library: exact-arithmetic solvers, contest
 * evaluation, and the theorem-audit harness for two-player perfect-
 * information extensive-form games.
 *
 * All functions return a ctg_status; on failure ctg_last_error() holds a
 * human-readable message for the calling thread. Strings returned through
 * char** out-parameters are heap-allocated UTF-8 JSON documents and must be
 * released with ctg_string_free(). Game handles are opaque and must be
 * released with ctg_game_free().
 */
#ifndef CTGAMES_H
#define CTGAMES_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ctg_status {
  CTG_OK = 0,
  CTG_ERROR_ARGUMENT = 1, /* null pointer, bad seat, bad m, ... */
  CTG_ERROR_PARSE = 2,    /* malformed document or invalid game structure */
  CTG_ERROR_DOMAIN = 3,   /* valid value used against the wrong tree/seat */
  CTG_ERROR_BUDGET = 4,   /* combinatorial cap exceeded */
  CTG_ERROR_IO = 5,       /* output file could not be written */
  CTG_ERROR_INTERNAL = 6
} ctg_status;

typedef struct ctg_game ctg_game;

const char* ctg_status_name(ctg_status status);

/* Message for the most recent failure on this thread; empty string if none. */
const char* ctg_last_error(void);

void ctg_string_free(char* text);
void ctg_game_free(ctg_game* game);

/* Parse and validate a game document. */
ctg_status ctg_game_parse(const char* json_text, ctg_game** out_game);

/* Increasing-sum centipede with m (even, >= 2) decision nodes. */
ctg_status ctg_centipede_create(int m, ctg_game** out_game);

ctg_status ctg_game_to_json(const ctg_game* game, char** out_text);

/* Backward-induction SPNE: profile, exact root payoffs, uniqueness flag. */
ctg_status ctg_solve_spne(const ctg_game* game, char** out_text);

/* Exact pure best response of `seat` (1 or 2) against a committed opponent
 * strategy document. */
ctg_status ctg_best_response(const ctg_game* game, int seat,
                             const char* opponent_json, char** out_text);

/* Nash / subgame-perfection verdicts for the profile (seat-1 strategy,
 * seat-2 strategy), with deviation or witness-node evidence on failure. */
ctg_status ctg_check_nash(const ctg_game* game, const char* seat1_json,
                          const char* seat2_json, char** out_text);
ctg_status ctg_check_spne(const ctg_game* game, const char* seat1_json,
                          const char* seat2_json, char** out_text);

/* Role-swapped repeated contest: the AI commits both role strategies, H
 * best-responds per stage game, payoffs are exact expectations. */
ctg_status ctg_contest_play(const ctg_game* game, const char* ai_seat1_json,
                            const char* ai_seat2_json, long long repetitions,
                            char** out_text);

/* Full audit. Config document:
 *   {"m": 10, "grid": "1/4", "c_min": "1/4",
 *    "filter": "root-only" | "root+benchmark", "budget": 16777216}
 * (every field optional). The complete report, which can be large, is
 * written atomically to out_path, or to stdout when out_path is NULL.
 * out_text receives a small summary document. out_record_count (optional)
 * receives the number of counterexample records. */
ctg_status ctg_audit_run(const char* config_json, const char* out_path,
                         char** out_text, long long* out_record_count);

#ifdef __cplusplus
}
#endif

#endif /* CTGAMES_H */
