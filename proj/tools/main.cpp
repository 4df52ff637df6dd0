// Command-line surface over the ctgames C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctgames.h"

namespace {

using Json = nlohmann::json;

// Spec'd exit statuses: 0 ok, 1 usage, 2 invalid input, 3 audit found
// counterexamples, 4 budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitCounterexamples = 3;
constexpr int kExitBudget = 4;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(int exit_code, const std::string& message) {
  throw CliError{exit_code, message};
}

void check(ctg_status status) {
  if (status == CTG_OK) return;
  std::string message = std::string(ctg_status_name(status)) + ": " + ctg_last_error();
  switch (status) {
    case CTG_ERROR_PARSE:
    case CTG_ERROR_DOMAIN:
      fail(kExitInvalidInput, message);
    case CTG_ERROR_BUDGET:
      fail(kExitBudget, message);
    default:
      fail(kExitUsage, message);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kExitInvalidInput, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) fail(kExitUsage, "cannot write " + temp);
    out << content;
    out.flush();
    if (!out) fail(kExitUsage, "failed writing " + temp);
  }
  if (std::rename(temp.c_str(), path.c_str()) != 0) {
    std::remove(temp.c_str());
    fail(kExitUsage, "failed to move " + temp + " into place");
  }
}

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { ctg_string_free(text); }
  std::string str() const { return text ? std::string(text) : std::string(); }
};

struct OwnedGame {
  ctg_game* game = nullptr;
  ~OwnedGame() { ctg_game_free(game); }
};

void emit(const std::string& document, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << document;
  } else {
    write_atomic(out_path, document);
  }
}

// "t2" before "t10": shorter ids first, then lexicographic.
bool natural_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string game_csv(const Json& doc) {
  std::vector<std::string> ids;
  for (const auto& [id, node] : doc.at("nodes").items()) {
    if (node.at("kind") == "terminal") ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end(), natural_less);
  std::string csv = "terminal,u1,u2\n";
  for (const auto& id : ids) {
    const auto& payoffs = doc.at("nodes").at(id).at("payoffs");
    csv += csv_escape(id) + "," + payoffs.at(0).get<std::string>() + "," +
           payoffs.at(1).get<std::string>() + "\n";
  }
  return csv;
}

std::string contest_csv(const Json& doc) {
  std::string csv = "game,h,ai\n";
  for (const char* key : {"g1", "g2", "stage", "cumulative"}) {
    csv += std::string(key) + "," + doc.at(key).at("h").get<std::string>() +
           "," + doc.at(key).at("ai").get<std::string>() + "\n";
  }
  csv += "verdict," + doc.at("verdict").get<std::string>() + ",\n";
  return csv;
}

std::string audit_csv(const Json& summary) {
  std::string csv = "step,status\n";
  for (const auto& step : summary.at("steps")) {
    csv += step.at("name").get<std::string>() + "," +
           step.at("status").get<std::string>() + "\n";
  }
  csv += "counterexample_count," +
         std::to_string(summary.at("counterexample_count").get<long long>()) + "\n";
  csv += "digest," + summary.at("digest").get<std::string>() + "\n";
  return csv;
}

OwnedGame load_game(const std::string& game_path, int m) {
  OwnedGame game;
  if (!game_path.empty() && m > 0) {
    fail(kExitUsage, "give either --game or --m, not both");
  }
  if (!game_path.empty()) {
    check(ctg_game_parse(read_file(game_path).c_str(), &game.game));
  } else if (m > 0) {
    check(ctg_centipede_create(m, &game.game));
  } else {
    fail(kExitUsage, "one of --game or --m is required");
  }
  return game;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic toolkit for two-player perfect-information games:\n"
      "centipede generation, equilibrium solving, role-swapped contests,\n"
      "and the impossibility-argument audit harness."};
  app.require_subcommand(1);

  std::string game_path, opponent_path, player_path, ai_p1_path, ai_p2_path;
  std::string out_path, csv_path, grid = "1/4", filter = "root-only";
  int m = 0, player_seat = 0;
  long long repetitions = 1;
  std::uint64_t budget = 16777216;  // 2^24

  auto* centipede = app.add_subcommand("centipede", "Generate a centipede game");
  centipede->add_option("--m", m, "Number of decision nodes (even, >= 2)")->required();
  centipede->add_option("--out", out_path, "Output file (stdout if omitted)");
  centipede->add_option("--csv", csv_path, "Also write the payoff table as CSV");

  auto* solve = app.add_subcommand("solve", "Equilibrium and best-response solving");
  solve->require_subcommand(1);
  auto* solve_spne = solve->add_subcommand("spne", "Backward-induction SPNE");
  solve_spne->add_option("--game", game_path, "Game file");
  solve_spne->add_option("--m", m, "Centipede size instead of --game");
  solve_spne->add_option("--out", out_path, "Output file");
  auto* solve_br = solve->add_subcommand("br", "Best response to a committed strategy");
  solve_br->add_option("--game", game_path, "Game file");
  solve_br->add_option("--m", m, "Centipede size instead of --game");
  solve_br->add_option("--player", player_seat, "Responding seat (1 or 2)")->required();
  solve_br->add_option("--opponent", opponent_path, "Opponent strategy file")->required();
  solve_br->add_option("--out", out_path, "Output file");

  auto* check_cmd = app.add_subcommand("check", "Equilibrium verdicts for a profile");
  check_cmd->require_subcommand(1);
  auto add_check_options = [&](CLI::App* sub) {
    sub->add_option("--game", game_path, "Game file");
    sub->add_option("--m", m, "Centipede size instead of --game");
    sub->add_option("--player", player_path, "Seat-1 strategy file")->required();
    sub->add_option("--opponent", opponent_path, "Seat-2 strategy file")->required();
    sub->add_option("--out", out_path, "Output file");
  };
  auto* check_nash = check_cmd->add_subcommand("nash", "Nash equilibrium check");
  add_check_options(check_nash);
  auto* check_spne = check_cmd->add_subcommand("spne", "Subgame perfection check");
  add_check_options(check_spne);

  auto* contest = app.add_subcommand(
      "contest", "Role-swapped repeated contest, H best-responding");
  contest->add_option("--game", game_path, "Game file");
  contest->add_option("--m", m, "Centipede size instead of --game");
  contest->add_option("--ai-p1", ai_p1_path, "AI strategy when AI moves first")->required();
  contest->add_option("--ai-p2", ai_p2_path, "AI strategy when H moves first")->required();
  contest->add_option("--k", repetitions, "Stage repetitions (>= 1)");
  contest->add_option("--out", out_path, "Output file");
  contest->add_option("--csv", csv_path, "Also write the payoff table as CSV");

  auto* audit = app.add_subcommand("audit", "Audit the impossibility argument");
  audit->add_option("--m", m, "Centipede size (even, >= 2)")->capture_default_str();
  audit->add_option("--grid", grid, "Grid step for strategy probabilities")
      ->capture_default_str();
  audit->add_option("--filter", filter,
                    "Below-average filter: root-only or root+benchmark")
      ->capture_default_str();
  audit->add_option("--budget", budget, "Combinatorial budget cap")
      ->capture_default_str();
  audit->add_option("--out", out_path, "Report file (stdout if omitted)");
  audit->add_option("--csv", csv_path, "Also write the step summary as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*centipede) {
    OwnedGame game;
    check(ctg_centipede_create(m, &game.game));
    OwnedString doc;
    check(ctg_game_to_json(game.game, &doc.text));
    emit(doc.str(), out_path);
    if (!csv_path.empty()) write_atomic(csv_path, game_csv(Json::parse(doc.str())));
    return kExitOk;
  }

  if (*solve_spne) {
    OwnedGame game = load_game(game_path, m);
    OwnedString doc;
    check(ctg_solve_spne(game.game, &doc.text));
    emit(doc.str(), out_path);
    return kExitOk;
  }

  if (*solve_br) {
    OwnedGame game = load_game(game_path, m);
    OwnedString doc;
    check(ctg_best_response(game.game, player_seat,
                            read_file(opponent_path).c_str(), &doc.text));
    emit(doc.str(), out_path);
    return kExitOk;
  }

  if (*check_nash || *check_spne) {
    OwnedGame game = load_game(game_path, m);
    std::string seat1 = read_file(player_path);
    std::string seat2 = read_file(opponent_path);
    OwnedString doc;
    if (*check_nash) {
      check(ctg_check_nash(game.game, seat1.c_str(), seat2.c_str(), &doc.text));
    } else {
      check(ctg_check_spne(game.game, seat1.c_str(), seat2.c_str(), &doc.text));
    }
    emit(doc.str(), out_path);
    return kExitOk;
  }

  if (*contest) {
    OwnedGame game = load_game(game_path, m);
    OwnedString doc;
    check(ctg_contest_play(game.game, read_file(ai_p1_path).c_str(),
                           read_file(ai_p2_path).c_str(), repetitions,
                           &doc.text));
    emit(doc.str(), out_path);
    if (!csv_path.empty()) write_atomic(csv_path, contest_csv(Json::parse(doc.str())));
    return kExitOk;
  }

  if (*audit) {
    if (m == 0) m = 10;
    Json config{{"m", m}, {"grid", grid}, {"filter", filter}, {"budget", budget}};
    OwnedString summary;
    long long record_count = 0;
    check(ctg_audit_run(config.dump().c_str(),
                        out_path.empty() ? nullptr : out_path.c_str(),
                        &summary.text, &record_count));
    if (!out_path.empty()) std::cout << summary.str();
    if (!csv_path.empty()) write_atomic(csv_path, audit_csv(Json::parse(summary.str())));
    return record_count > 0 ? kExitCounterexamples : kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
