#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lulab/errors.hpp"
#include "runner.hpp"

namespace {

// Every config-file key is mirrored as a flag of the same dotted name;
// command-line values override the file.
void attach_oracle(CLI::App* cmd, lulab::OracleConfig& cfg) {
  cmd->add_option("--oracle.kind", cfg.kind, "coin | benford | scripted | constant")
      ->capture_default_str();
  cmd->add_option("--oracle.p", cfg.p, "coin accept probability")->capture_default_str();
  cmd->add_option("--oracle.seed", cfg.seed, "coin seed (single-run default)")
      ->capture_default_str();
  cmd->add_option("--oracle.latency", cfg.latency, "step cost: const:<c> or linear:<a>")
      ->capture_default_str();
  cmd->add_option("--oracle.script", cfg.script, "verdict file for the scripted oracle");
  cmd->add_option("--oracle.verdict", cfg.verdict, "constant oracle verdict: accept | reject")
      ->capture_default_str();
  cmd->add_option("--oracle.benford-cap", cfg.benford_cap, "largest exponent served")
      ->capture_default_str();
}

void attach_time_bound(CLI::App* cmd, lulab::TimeBoundConfig& cfg) {
  cmd->add_option("--time-bound.form", cfg.form, "linear | quadratic | power")
      ->capture_default_str();
  cmd->add_option("--time-bound.a", cfg.a, "scale, a >= 1")->capture_default_str();
  cmd->add_option("--time-bound.b", cfg.b, "exponent for form=power, b >= 1")
      ->capture_default_str();
}

void attach_output(CLI::App* cmd, lulab::OutputConfig& cfg) {
  cmd->add_option("--output", cfg.path, "data file prefix (no files when empty)");
  cmd->add_option("--format", cfg.format, "csv | json | both")->capture_default_str();
  cmd->add_flag("--verbose-json", cfg.verbose_json, "include pair tables in JSON output");
}

void attach_seeds(CLI::App* cmd, std::vector<uint64_t>& seeds) {
  cmd->add_option("--seeds", seeds, "seed list for coin oracles")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded-machine probability estimation workbench"};
  app.require_subcommand(1);

  lulab::ExperimentConfig cfg;
  lulab::BenfordArgs benford_args;
  lulab::SimulateArgs simulate_args;
  std::string estimate_config, patterns_config;

  CLI::App* est = app.add_subcommand("estimate", "run the estimator over a schedule of inputs");
  est->set_config("--config", "", "key=value config file with [sections]");
  attach_oracle(est, cfg.oracle);
  est->add_option("--pool.kind", cfg.pool.kind, "curated | enumerated")->capture_default_str();
  est->add_option("--pool.members", cfg.pool.members, "curated entries, name:k")->delimiter(',');
  est->add_option("--pool.file", cfg.pool.file, "pool file path");
  est->add_option("--pool.bit-budget", cfg.pool.bit_budget, "enumeration bit budget")
      ->capture_default_str();
  est->add_option("--pool.member-cap", cfg.pool.member_cap, "enumeration member cap")
      ->capture_default_str();
  attach_time_bound(est, cfg.time_bound);
  est->add_option("--schedule", cfg.schedule, "strictly increasing n values")->delimiter(',');
  attach_seeds(est, cfg.seeds);
  est->add_option("--mode", cfg.mode, "optimized | faithful | both")->capture_default_str();
  attach_output(est, cfg.output);

  CLI::App* pat = app.add_subcommand("patterns", "selector-frequency deficiency estimation");
  pat->set_config("--config", "", "key=value config file with [sections]");
  attach_oracle(pat, cfg.oracle);
  pat->add_option("--patterns.p", cfg.patterns.p, "target probability")->capture_default_str();
  pat->add_option("--patterns.m-max", cfg.patterns.m_max, "selected indices per selector")
      ->capture_default_str();
  pat->add_option("--patterns.scan-cap", cfg.patterns.scan_cap,
                  "largest index scanned (0 = 8 * m-max)")
      ->capture_default_str();
  pat->add_option("--patterns.selectors", cfg.patterns.selectors, "selector entries, name:k")
      ->delimiter(',');
  pat->add_option("--patterns.selectors-file", cfg.patterns.selectors_file,
                  "selector pool file path");
  pat->add_option("--patterns.check-c", cfg.patterns.check_c,
                  "envelope constant to list violations against (< 0 = off)")
      ->capture_default_str();
  pat->add_option("--patterns.index-set", cfg.patterns.index_set,
                  "all, or a builtin machine recognizing the index set")
      ->capture_default_str();
  attach_time_bound(pat, cfg.time_bound);
  attach_seeds(pat, cfg.seeds);
  attach_output(pat, cfg.output);

  CLI::App* ben = app.add_subcommand("benford", "leading-digit frequency of powers of three");
  ben->add_option("--n-max", benford_args.n_max, "largest exponent, inclusive")->required();
  ben->add_option("--cap", benford_args.cap, "exponent cap")->capture_default_str();
  ben->add_option("--output", benford_args.output, "CSV prefix for per-exponent rows");

  CLI::App* sim = app.add_subcommand("simulate", "run one machine on one input");
  sim->add_option("--machine", simulate_args.machine,
                  "builtin name, <bitlen>:<hex> code, or table file")
      ->required();
  sim->add_option("--input", simulate_args.input, "input written in binary on the tape")
      ->required();
  sim->add_option("--budget", simulate_args.budget, "step budget")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (est->parsed()) return lulab::run_estimate(cfg, est->get_config_ptr()->as<std::string>());
    if (pat->parsed()) return lulab::run_patterns(cfg, pat->get_config_ptr()->as<std::string>());
    if (ben->parsed()) return lulab::run_benford(benford_args);
    if (sim->parsed()) return lulab::run_simulate(simulate_args);
  } catch (const lulab::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const lulab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const lulab::DecodeError& e) {
    std::cerr << "decode error: " << e.what() << "\n";
    return 2;
  } catch (const lulab::ContractError& e) {
    std::cerr << "contract error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
