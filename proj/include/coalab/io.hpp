#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coalab/axioms.hpp"
#include "coalab/core.hpp"
#include "coalab/potential.hpp"
#include "coalab/prob.hpp"

namespace coalab {

struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// On-disk form of a (game, optional distribution) pair. Coalition keys are
// player names joined by "," in document player-list order; "" is the empty
// coalition. Missing keys default to 0.
struct GameDocument {
  std::vector<std::string> players;
  std::vector<double> worths;                         // materialized, 2^n entries
  std::optional<std::vector<double>> distribution;    // materialized when present

  int num_players() const { return static_cast<int>(players.size()); }

  bool operator==(const GameDocument&) const = default;
};

inline Coalition parse_coalition_key(const std::vector<std::string>& players,
                                     const std::string& key) {
  if (key.empty()) return 0;
  Coalition out = 0;
  int last = -1;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = key.find(',', pos);
    const std::string name =
        comma == std::string::npos ? key.substr(pos) : key.substr(pos, comma - pos);
    if (name.empty()) {
      throw DocumentError("malformed coalition key \"" + key + "\"");
    }
    int index = -1;
    for (std::size_t i = 0; i < players.size(); ++i) {
      if (players[i] == name) {
        index = static_cast<int>(i);
        break;
      }
    }
    if (index < 0) {
      throw DocumentError("unknown player \"" + name + "\" in coalition key \"" + key + "\"");
    }
    if (index <= last) {
      throw DocumentError("coalition key \"" + key +
                          "\" must list players once, in document order");
    }
    last = index;
    out |= singleton(index);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::string coalition_key(const std::vector<std::string>& players, Coalition s) {
  std::string out;
  bool first = true;
  for (PlayerId i : coalition_members(s)) {
    if (!first) out += ",";
    out += players[i];
    first = false;
  }
  return out;
}

namespace jsonout {

inline std::string escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

// Shortest decimal that round-trips; used in table mode and document files.
inline std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// 17 significant digits; machine mode is byte-stable.
inline std::string digits17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf);
}

inline std::string object(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, rendered] : fields) {
    if (!first) out += ",";
    out += escape(key) + ":" + rendered;
    first = false;
  }
  return out + "}";
}

inline std::string sorted_object(const std::map<std::string, std::string>& fields) {
  std::vector<std::pair<std::string, std::string>> ordered(fields.begin(), fields.end());
  return object(ordered);
}

inline std::string array(const std::vector<std::string>& rendered) {
  std::string out = "[";
  for (std::size_t i = 0; i < rendered.size(); ++i) {
    if (i > 0) out += ",";
    out += rendered[i];
  }
  return out + "]";
}

}  // namespace jsonout

inline GameDocument parse_document(const std::string& text, double eps = kEps) {
  namespace nl = nlohmann;

  // nlohmann's parser silently keeps one copy of a repeated key, so repeats
  // are caught with a callback that tracks keys per object.
  std::vector<std::map<std::string, int>> key_stack;
  std::string duplicate;
  nl::json::parser_callback_t watch_keys = [&](int, nl::json::parse_event_t event,
                                               nl::json& parsed) {
    if (event == nl::json::parse_event_t::object_start) {
      key_stack.emplace_back();
    } else if (event == nl::json::parse_event_t::object_end) {
      key_stack.pop_back();
    } else if (event == nl::json::parse_event_t::key) {
      const std::string key = parsed.get<std::string>();
      if (duplicate.empty() && ++key_stack.back()[key] > 1) duplicate = key;
    }
    return true;
  };

  nl::json doc;
  try {
    doc = nl::json::parse(text, watch_keys);
  } catch (const nl::json::exception& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!duplicate.empty()) {
    throw DocumentError("duplicate key \"" + duplicate + "\"");
  }
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  if (!doc.contains("players") || !doc["players"].is_array()) {
    throw DocumentError("document needs a \"players\" array");
  }
  if (!doc.contains("worths") || !doc["worths"].is_object()) {
    throw DocumentError("document needs a \"worths\" object");
  }

  GameDocument out;
  for (const auto& entry : doc["players"]) {
    if (!entry.is_string()) throw DocumentError("player names must be strings");
    const std::string name = entry.get<std::string>();
    if (name.empty() || name.find(',') != std::string::npos) {
      throw DocumentError("player name \"" + name + "\" is not allowed");
    }
    for (const std::string& seen : out.players) {
      if (seen == name) throw DocumentError("duplicate player \"" + name + "\"");
    }
    out.players.push_back(name);
  }
  const int n = out.num_players();
  if (n < 1 || n > kMaxPlayers) {
    throw DocumentError("player count must be in [1, " + std::to_string(kMaxPlayers) + "]");
  }

  out.worths.assign(std::size_t{1} << n, 0.0);
  for (const auto& [key, value] : doc["worths"].items()) {
    if (!value.is_number()) {
      throw DocumentError("worth of \"" + key + "\" must be a number");
    }
    const Coalition s = parse_coalition_key(out.players, key);
    const double w = value.get<double>();
    if (s == 0 && w != 0.0) {
      throw DocumentError("the empty coalition must have worth 0");
    }
    if (!std::isfinite(w)) {
      throw DocumentError("worth of \"" + key + "\" is not finite");
    }
    out.worths[s] = w;
  }

  if (doc.contains("distribution")) {
    if (!doc["distribution"].is_object()) {
      throw DocumentError("\"distribution\" must be an object");
    }
    std::vector<double> dist(std::size_t{1} << n, 0.0);
    for (const auto& [key, value] : doc["distribution"].items()) {
      if (!value.is_number()) {
        throw DocumentError("probability of \"" + key + "\" must be a number");
      }
      dist[parse_coalition_key(out.players, key)] = value.get<double>();
    }
    try {
      CFPD check(n, dist, eps);  // validates nonnegativity and the unit sum
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what());
    }
    out.distribution = std::move(dist);
  }
  return out;
}

// Canonical file form: nonzero entries only, coalitions in ascending set
// index, shortest round-trip decimals.
inline std::string serialize_document(const GameDocument& doc) {
  std::vector<std::string> names;
  names.reserve(doc.players.size());
  for (const std::string& p : doc.players) names.push_back(jsonout::escape(p));

  std::vector<std::pair<std::string, std::string>> top;
  top.emplace_back("players", jsonout::array(names));

  std::vector<std::pair<std::string, std::string>> worths;
  for (Coalition s = 1; s < doc.worths.size(); ++s) {
    if (doc.worths[s] != 0.0) {
      worths.emplace_back(coalition_key(doc.players, s), jsonout::shortest(doc.worths[s]));
    }
  }
  top.emplace_back("worths", jsonout::object(worths));

  if (doc.distribution) {
    std::vector<std::pair<std::string, std::string>> dist;
    for (Coalition s = 0; s < doc.distribution->size(); ++s) {
      if ((*doc.distribution)[s] != 0.0) {
        dist.emplace_back(coalition_key(doc.players, s),
                          jsonout::shortest((*doc.distribution)[s]));
      }
    }
    top.emplace_back("distribution", jsonout::object(dist));
  }
  return jsonout::object(top);
}

inline TUGame document_game(const GameDocument& doc) {
  return TUGame(doc.num_players(), doc.worths);
}

inline CFPD document_cfpd(const GameDocument& doc, double eps = kEps) {
  if (!doc.distribution) {
    throw DocumentError("this command requires a \"distribution\"");
  }
  return CFPD(doc.num_players(), *doc.distribution, eps);
}

inline ProbGame document_prob_game(const GameDocument& doc, double eps = kEps) {
  return ProbGame(document_game(doc), document_cfpd(doc, eps));
}

inline std::string input_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

struct RunConfig {
  double tolerance = kEps;
  int oracle_cap = kMaxOraclePlayers;
  std::uint64_t suite_seed = 42;
  int suite_size = 200;
  enum class Output { kTable, kMachine } output = Output::kTable;

  void validate() const {
    if (!(tolerance > 0.0)) throw DocumentError("tolerance must be positive");
    if (oracle_cap < 1 || oracle_cap > kMaxOraclePlayers) {
      throw DocumentError("oracle cap must be in [1, " +
                          std::to_string(kMaxOraclePlayers) + "]");
    }
    if (suite_size < 1) throw DocumentError("suite size must be positive");
  }
};

struct CommandRequest {
  std::string command;
  std::string coalition;           // --coalition
  std::string player;              // --player
  std::string form;                // --form
  std::string axioms = "all";      // --axioms
  std::string value_id = "expsh";  // --value
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

namespace detail {

inline std::string machine_payoffs(const std::vector<std::string>& players,
                                   const PayoffVector& pay) {
  std::map<std::string, std::string> fields;
  for (std::size_t i = 0; i < players.size(); ++i) {
    fields[players[i]] = jsonout::digits17(pay[i]);
  }
  return jsonout::sorted_object(fields);
}

inline std::string table_payoffs(const std::vector<std::string>& players,
                                 const PayoffVector& pay) {
  std::string out;
  for (std::size_t i = 0; i < players.size(); ++i) {
    out += "  " + players[i] + " = " + jsonout::shortest(pay[i]) + "\n";
  }
  return out;
}

inline std::string machine_coalition_table(const std::vector<std::string>& players,
                                           const std::vector<double>& table,
                                           bool include_empty) {
  std::map<std::string, std::string> fields;
  for (Coalition s = include_empty ? 0 : 1; s < table.size(); ++s) {
    fields[coalition_key(players, s)] = jsonout::digits17(table[s]);
  }
  return jsonout::sorted_object(fields);
}

inline std::string table_coalition_table(const std::vector<std::string>& players,
                                         const std::vector<double>& table,
                                         bool include_empty) {
  std::string out;
  for (Coalition s = include_empty ? 0 : 1; s < table.size(); ++s) {
    const std::string key = coalition_key(players, s);
    out += "  {" + key + "} = " + jsonout::shortest(table[s]) + "\n";
  }
  return out;
}

inline std::string machine_result(const std::string& command, const std::string& digest,
                                  const std::string& results) {
  return jsonout::object({{"command", jsonout::escape(command)},
                          {"input_digest", jsonout::escape(digest)},
                          {"results", results}}) +
         "\n";
}

inline std::vector<std::string> subset_names(const std::vector<std::string>& players,
                                             Coalition t) {
  std::vector<std::string> out;
  for (PlayerId i : coalition_members(t)) out.push_back(players[i]);
  return out;
}

inline std::string machine_witnesses(const std::vector<AxiomWitness>& witnesses) {
  std::vector<std::string> items;
  for (const AxiomWitness& w : witnesses) {
    items.push_back(jsonout::sorted_object({{"detail", jsonout::escape(w.detail)},
                                            {"gap", jsonout::digits17(w.gap)},
                                            {"instance", jsonout::escape(w.instance)}}));
  }
  return jsonout::array(items);
}

}  // namespace detail

inline std::vector<Axiom> parse_axiom_list(const std::string& list) {
  if (list.empty() || list == "all") return all_axioms();
  std::vector<Axiom> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = list.find(',', pos);
    const std::string id =
        comma == std::string::npos ? list.substr(pos) : list.substr(pos, comma - pos);
    try {
      out.push_back(axiom_from_string(id));
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what());
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline CommandResult run_command(const CommandRequest& req, const GameDocument& doc,
                                 const RunConfig& cfg) {
  cfg.validate();
  const bool machine = cfg.output == RunConfig::Output::kMachine;
  const std::string digest = input_digest(serialize_document(doc));
  const std::string& cmd = req.command;

  auto parse_subset = [&]() { return parse_coalition_key(doc.players, req.coalition); };
  auto wrap_engine_errors = [&](auto&& fn) {
    try {
      return fn();
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what());
    }
  };

  if (cmd == "shapley") {
    const TUGame game = document_game(doc);
    ShapleyForm form = ShapleyForm::kDividend;
    if (req.form == "marginal") form = ShapleyForm::kMarginal;
    else if (req.form == "permutation") form = ShapleyForm::kPermutation;
    else if (!req.form.empty() && req.form != "dividend") {
      throw DocumentError("unknown shapley form \"" + req.form + "\"");
    }
    const PayoffVector pay = wrap_engine_errors(
        [&] { return shapley(game, form, cfg.oracle_cap); });
    const std::string form_name = req.form.empty() ? "dividend" : req.form;
    if (machine) {
      return {0, detail::machine_result(
                     cmd, digest,
                     jsonout::sorted_object(
                         {{"form", jsonout::escape(form_name)},
                          {"payoffs", detail::machine_payoffs(doc.players, pay)}}))};
    }
    return {0, "shapley (" + form_name + " form)\n" + detail::table_payoffs(doc.players, pay)};
  }

  if (cmd == "dividends") {
    const DividendTable d = harsanyi_dividends(document_game(doc));
    if (machine) {
      return {0, detail::machine_result(
                     cmd, digest,
                     jsonout::sorted_object({{"dividends", detail::machine_coalition_table(
                                                               doc.players, d.value, false)}}))};
    }
    return {0, "harsanyi dividends\n" +
                   detail::table_coalition_table(doc.players, d.value, false)};
  }

  if (cmd == "potential") {
    const TUGame game = document_game(doc);
    const std::vector<double> table = potential_table(game);
    PayoffVector derivative(doc.players.size(), 0.0);
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      derivative[i] = table[game.grand_coalition()] -
                      table[game.grand_coalition() & ~singleton(i)];
    }
    const double p = table[game.grand_coalition()];
    if (machine) {
      return {0, detail::machine_result(
                     cmd, digest,
                     jsonout::sorted_object(
                         {{"derivatives", detail::machine_payoffs(doc.players, derivative)},
                          {"potential", jsonout::digits17(p)}}))};
    }
    return {0, "potential = " + jsonout::shortest(p) + "\nderivatives\n" +
                   detail::table_payoffs(doc.players, derivative)};
  }

  if (cmd == "reduce") {
    const TUGame game = document_game(doc);
    const Coalition t = parse_subset();
    ReducedForm form = ReducedForm::kPayoff;
    if (req.form == "dividend") form = ReducedForm::kDividend;
    else if (!req.form.empty() && req.form != "payoff") {
      throw DocumentError("unknown reduce form \"" + req.form + "\"");
    }
    const TUGame reduced = wrap_engine_errors(
        [&] { return reduced_game(game, t, shapley_operator(), form); });
    const std::vector<std::string> names = detail::subset_names(doc.players, t);
    const std::string form_name = req.form.empty() ? "payoff" : req.form;
    if (machine) {
      std::vector<std::string> rendered;
      for (const std::string& name : names) rendered.push_back(jsonout::escape(name));
      return {0, detail::machine_result(
                     cmd, digest,
                     jsonout::sorted_object(
                         {{"coalition", jsonout::escape(coalition_key(doc.players, t))},
                          {"form", jsonout::escape(form_name)},
                          {"players", jsonout::array(rendered)},
                          {"worths", detail::machine_coalition_table(names, reduced.table(),
                                                                     false)}}))};
    }
    return {0, "reduced game on {" + coalition_key(doc.players, t) + "} (" + form_name +
                   " form)\n" + detail::table_coalition_table(names, reduced.table(), false)};
  }

  if (cmd == "expected-worth") {
    const double e = expected_worth(document_prob_game(doc, cfg.tolerance));
    if (machine) {
      return {0, detail::machine_result(
                     cmd, digest,
                     jsonout::sorted_object({{"expected_worth", jsonout::digits17(e)}}))};
    }
    return {0, "expected worth = " + jsonout::shortest(e) + "\n"};
  }

  if (cmd == "expected-shapley") {
    const PayoffVector pay = expected_shapley(document_prob_game(doc, cfg.tolerance));
    if (machine) {
      return {0, detail::machine_result(
                     cmd, digest,
                     jsonout::sorted_object(
                         {{"payoffs", detail::machine_payoffs(doc.players, pay)}}))};
    }
    return {0, "expected shapley\n" + detail::table_payoffs(doc.players, pay)};
  }

  if (cmd == "prob-potential") {
    const ProbGame pg = document_prob_game(doc, cfg.tolerance);
    const ProbPotentialTable table = prob_potential(pg);
    PayoffVector derivative(doc.players.size(), 0.0);
    for (PlayerId i = 0; i < pg.num_players(); ++i) {
      derivative[i] =
          table.at(pg.grand_coalition()) - table.at(pg.grand_coalition() & ~singleton(i));
    }
    const double p = table.at(pg.grand_coalition());
    if (machine) {
      return {0, detail::machine_result(
                     cmd, digest,
                     jsonout::sorted_object(
                         {{"derivatives", detail::machine_payoffs(doc.players, derivative)},
                          {"potential", jsonout::digits17(p)}}))};
    }
    return {0, "probabilistic potential = " + jsonout::shortest(p) + "\nderivatives\n" +
                   detail::table_payoffs(doc.players, derivative)};
  }

  if (cmd == "prob-reduce") {
    const ProbGame pg = document_prob_game(doc, cfg.tolerance);
    const Coalition t = parse_subset();
    const ProbGame reduced =
        wrap_engine_errors([&] { return prob_reduced_game_shapley(pg, t); });
    const std::vector<std::string> names = detail::subset_names(doc.players, t);
    if (machine) {
      std::vector<std::string> rendered;
      for (const std::string& name : names) rendered.push_back(jsonout::escape(name));
      return {0, detail::machine_result(
                     cmd, digest,
                     jsonout::sorted_object(
                         {{"coalition", jsonout::escape(coalition_key(doc.players, t))},
                          {"distribution", detail::machine_coalition_table(
                                               names, reduced.dist.table(), true)},
                          {"players", jsonout::array(rendered)},
                          {"worths", detail::machine_coalition_table(
                                         names, reduced.game.table(), false)}}))};
    }
    return {0, "probabilistic reduced game on {" + coalition_key(doc.players, t) +
                   "}\nworths\n" +
                   detail::table_coalition_table(names, reduced.game.table(), false) +
                   "distribution\n" +
                   detail::table_coalition_table(names, reduced.dist.table(), true)};
  }

  if (cmd == "restrict" || cmd == "drop-player") {
    Coalition keep = 0;
    if (cmd == "restrict") {
      keep = parse_subset();
      if (keep == 0) throw DocumentError("restrict needs a nonempty --coalition");
    } else {
      if (req.player.empty()) throw DocumentError("drop-player needs --player");
      int index = -1;
      for (std::size_t i = 0; i < doc.players.size(); ++i) {
        if (doc.players[i] == req.player) index = static_cast<int>(i);
      }
      if (index < 0) throw DocumentError("unknown player \"" + req.player + "\"");
      keep = full_coalition(doc.num_players()) & ~singleton(index);
      if (keep == 0) throw DocumentError("cannot drop the only player");
    }

    const TUGame restricted =
        wrap_engine_errors([&] { return restrict_game(document_game(doc), keep); });
    GameDocument out;
    out.players = detail::subset_names(doc.players, keep);
    out.worths = restricted.table();
    if (doc.distribution) {
      out.distribution =
          project_cfpd(document_cfpd(doc, cfg.tolerance), keep).table();
    }
    if (machine) {
      std::vector<std::string> rendered;
      for (const std::string& name : out.players) rendered.push_back(jsonout::escape(name));
      std::map<std::string, std::string> results;
      results["players"] = jsonout::array(rendered);
      results["worths"] = detail::machine_coalition_table(out.players, out.worths, false);
      if (out.distribution) {
        results["distribution"] =
            detail::machine_coalition_table(out.players, *out.distribution, true);
      }
      return {0, detail::machine_result(cmd, digest, jsonout::sorted_object(results))};
    }
    return {0, serialize_document(out) + "\n"};
  }

  if (cmd == "check") {
    const ProbGame pg = document_prob_game(doc, cfg.tolerance);
    ProbValueOperator value;
    try {
      value = prob_value_by_id(req.value_id);
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what());
    }
    Rng rng(cfg.suite_seed);
    std::vector<SuiteInstance> suite;
    suite.push_back({"input", pg, random_game(rng, pg.num_players())});
    const std::vector<Axiom> axioms = parse_axiom_list(req.axioms);

    bool any_fail = false;
    std::map<std::string, std::string> machine_axioms;
    std::string table_text = "check value=" + req.value_id + "\n";
    for (Axiom axiom : axioms) {
      const AxiomReport report = check_axiom(value, axiom, suite, cfg.tolerance);
      any_fail = any_fail || !report.pass();
      machine_axioms[to_string(axiom)] = jsonout::sorted_object(
          {{"checked", std::to_string(report.checked)},
           {"pass", report.pass() ? "true" : "false"},
           {"skipped", std::to_string(report.skipped)},
           {"witnesses", detail::machine_witnesses(report.witnesses)}});
      table_text += "  " + to_string(axiom) + ": " + (report.pass() ? "pass" : "FAIL");
      if (report.checked == 0) table_text += " (not applicable)";
      for (const AxiomWitness& w : report.witnesses) {
        table_text += "\n    " + w.detail + " gap=" + jsonout::shortest(w.gap);
      }
      table_text += "\n";
    }
    const int exit_code = any_fail ? 1 : 0;
    if (machine) {
      return {exit_code,
              detail::machine_result(
                  cmd, digest,
                  jsonout::sorted_object({{"axioms", jsonout::sorted_object(machine_axioms)},
                                          {"value", jsonout::escape(req.value_id)}}))};
    }
    return {exit_code, table_text};
  }

  if (cmd == "independence") {
    const std::vector<SuiteInstance> suite = default_suite(cfg.suite_seed, cfg.suite_size);
    const IndependenceMatrix matrix = independence_matrix(suite, cfg.tolerance);
    const bool ok = matrix.expected_pattern();
    if (machine) {
      std::map<std::string, std::string> rows;
      for (const IndependenceRow& row : matrix.rows) {
        std::map<std::string, std::string> cells;
        for (const AxiomReport& report : row.cells) {
          cells[to_string(report.axiom)] =
              jsonout::escape(report.pass() ? "pass" : "fail");
        }
        rows[row.value_id] = jsonout::sorted_object(cells);
      }
      return {ok ? 0 : 1,
              detail::machine_result(
                  cmd, digest,
                  jsonout::sorted_object(
                      {{"expected_pattern", ok ? "true" : "false"},
                       {"matrix", jsonout::sorted_object(rows)}}))};
    }
    std::string text = "independence matrix (seed=" + std::to_string(cfg.suite_seed) +
                       ", suite=" + std::to_string(cfg.suite_size) + ")\n";
    text += "  value               ";
    for (Axiom axiom : all_axioms()) {
      std::string name = to_string(axiom);
      name.resize(6, ' ');
      text += " " + name;
    }
    text += "\n";
    for (const IndependenceRow& row : matrix.rows) {
      std::string id = row.value_id;
      id.resize(20, ' ');
      text += "  " + id;
      for (const AxiomReport& report : row.cells) {
        text += report.pass() ? " pass  " : " FAIL  ";
      }
      text += "\n";
    }
    text += ok ? "expected pattern: ok\n" : "expected pattern: BROKEN\n";
    return {ok ? 0 : 1, text};
  }

  throw DocumentError("unknown command \"" + cmd + "\"");
}

}  // namespace coalab
