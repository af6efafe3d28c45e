#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coalab/io.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw coalab::DocumentError("cannot open input file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coalition-lab: exact computations on probabilistic TU games"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string input;
  std::string output_mode = "table";
  coalab::RunConfig cfg;
  coalab::CommandRequest req;

  if (const char* env = std::getenv("COALITION_LAB_SEED")) {
    try {
      cfg.suite_seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: COALITION_LAB_SEED is not a number\n";
      return 2;
    }
  }

  app.add_option("--input", input, "game document (JSON file)")->required();
  app.add_option("--tolerance", cfg.tolerance, "comparison tolerance (default 1e-9)");
  app.add_option("--oracle-cap", cfg.oracle_cap,
                 "player cap for the permutation oracle (default 8)");
  app.add_option("--seed", cfg.suite_seed,
                 "suite seed (default 42; COALITION_LAB_SEED overrides the default)");
  app.add_option("--suite-size", cfg.suite_size, "generated suite size (default 200)");
  app.add_option("--output", output_mode, "output mode: table or machine");

  CLI::App* shapley = app.add_subcommand("shapley", "Shapley value of the game");
  shapley->add_option("--form", req.form, "dividend, marginal or permutation");

  app.add_subcommand("dividends", "Harsanyi dividends of every coalition");
  app.add_subcommand("potential", "classical potential and its derivatives");

  CLI::App* reduce = app.add_subcommand("reduce", "Hart/Mas-Colell reduced game");
  reduce->add_option("--coalition", req.coalition, "coalition key, e.g. \"1,2\"")->required();
  reduce->add_option("--form", req.form, "payoff or dividend");

  app.add_subcommand("expected-worth", "expected worth of the probabilistic game");
  app.add_subcommand("expected-shapley", "Expected Shapley value");
  app.add_subcommand("prob-potential", "probabilistic potential and its derivatives");

  CLI::App* prob_reduce =
      app.add_subcommand("prob-reduce", "probabilistic reduced game (Shapley form)");
  prob_reduce->add_option("--coalition", req.coalition, "coalition key")->required();

  CLI::App* restrict_cmd = app.add_subcommand("restrict", "restrict the document to a coalition");
  restrict_cmd->add_option("--coalition", req.coalition, "coalition key")->required();

  CLI::App* drop = app.add_subcommand("drop-player", "drop one player from the document");
  drop->add_option("--player", req.player, "player name")->required();

  CLI::App* check = app.add_subcommand("check", "check axioms on the input instance");
  check->add_option("--axioms", req.axioms, "comma list of ee,enp,com,add,ebc,pcon,stppg or all");
  check->add_option("--value", req.value_id, "value id (default expsh)");

  app.add_subcommand("independence",
                     "axiom independence matrix over the generated default suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (output_mode == "machine") {
    cfg.output = coalab::RunConfig::Output::kMachine;
  } else if (output_mode != "table") {
    std::cerr << "error: unknown output mode \"" << output_mode << "\"\n";
    return 2;
  }

  req.command = app.get_subcommands().front()->get_name();

  try {
    const coalab::GameDocument doc =
        coalab::parse_document(read_file(input), cfg.tolerance);
    const coalab::CommandResult result = coalab::run_command(req, doc, cfg);
    std::cout << result.output;
    return result.exit_code;
  } catch (const coalab::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
