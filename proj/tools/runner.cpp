#include "runner.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "lulab/builtins.hpp"
#include "lulab/errors.hpp"
#include "lulab/serialize.hpp"

namespace lulab {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::system_clock;

void ensure_parent(const std::string& path) {
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty()) fs::create_directories(parent);
}

void write_file(const std::string& path, const std::string& content) {
  ensure_parent(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file: " + path);
  out << content;
}

// Wall-clock facts stay out of the data files so reruns diff clean.
void write_sidecar(const std::string& prefix, const std::string& command,
                   const std::string& config_path, Clock::time_point started, double seconds) {
  nlohmann::json meta;
  meta["command"] = command;
  meta["config"] = config_path;
  const std::time_t t = Clock::to_time_t(started);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  meta["started_at"] = stamp;
  meta["duration_seconds"] = seconds;
  write_file(prefix + ".meta.json", meta.dump(2) + "\n");
}

struct OutputBundle {
  std::string csv;
  std::string json;
};

void emit(const ExperimentConfig& cfg, const OutputBundle& bundle, const std::string& command,
          const std::string& config_path, Clock::time_point started, double seconds) {
  if (cfg.output.path.empty()) return;
  const bool want_csv = cfg.output.format == "csv" || cfg.output.format == "both";
  const bool want_json = cfg.output.format == "json" || cfg.output.format == "both";
  if (want_csv) write_file(cfg.output.path + ".csv", bundle.csv);
  if (want_json) write_file(cfg.output.path + ".json", bundle.json);
  write_sidecar(cfg.output.path, command, config_path, started, seconds);
}

}  // namespace

int run_estimate(const ExperimentConfig& cfg, const std::string& config_path) {
  const auto started = Clock::now();
  validate_for_estimate(cfg);
  const MachinePool pool = make_pool(cfg.pool);
  const TimeBound t = make_time_bound(cfg.time_bound, cfg.schedule.back());
  OracleSpec oracle_spec = make_oracle_spec(cfg.oracle);

  std::vector<TraceRow> rows;
  for (uint64_t seed : effective_seeds(cfg)) {
    oracle_spec.seed = seed;
    const Oracle oracle(oracle_spec);
    for (uint64_t n : cfg.schedule) {
      TraceRow row;
      row.seed = seed;
      if (cfg.mode == "optimized") {
        row.result = estimate(n, pool, oracle, t);
      } else if (cfg.mode == "faithful") {
        row.result = estimate_faithful(n, pool, oracle, t);
      } else {
        EstimateResult fast = estimate(n, pool, oracle, t);
        const EstimateResult slow = estimate_faithful(n, pool, oracle, t);
        row.equivalent = fast.p_hat == slow.p_hat;
        row.result = std::move(fast);
      }
      std::cout << "seed=" << row.seed << " n=" << n << " p_hat=" << row.result.p_hat.num << "/"
                << row.result.p_hat.den << " b=" << format_double(row.result.b_value)
                << (row.result.vacuous ? " (vacuous)" : "")
                << (row.equivalent ? (*row.equivalent ? " equivalent=equal" : " equivalent=diff")
                                   : "")
                << "\n";
      rows.push_back(std::move(row));
    }
  }

  OutputBundle bundle;
  {
    std::ostringstream csv;
    write_estimate_csv(csv, rows);
    bundle.csv = csv.str();
  }
  bundle.json = estimate_trace_json(rows, cfg.output.verbose_json);
  const double seconds = std::chrono::duration<double>(Clock::now() - started).count();
  emit(cfg, bundle, "estimate", config_path, started, seconds);
  return 0;
}

int run_patterns(const ExperimentConfig& cfg, const std::string& config_path) {
  const auto started = Clock::now();
  validate_for_patterns(cfg);
  const MachinePool selectors = make_selector_pool(cfg.patterns);
  PatternLimits limits{cfg.patterns.m_max, cfg.patterns.scan_cap};
  const TimeBound t =
      make_time_bound(cfg.time_bound, std::min<uint64_t>(limits.effective_scan_cap(), 4096));
  const IndexSet index_set = make_index_set(cfg.patterns.index_set);
  OracleSpec truth_spec = make_oracle_spec(cfg.oracle);

  std::vector<DeficiencyReport> reports;
  std::vector<uint64_t> seeds = effective_seeds(cfg);
  for (uint64_t seed : seeds) {
    truth_spec.seed = seed;
    const Oracle truth(truth_spec);
    reports.push_back(
        estimate_c(truth, selectors, cfg.patterns.p, t, limits, index_set));
  }

  std::vector<PatternsRunRow> rows;
  double max_c_hat = 0.0;
  bool any_divergent = false;
  for (size_t i = 0; i < reports.size(); ++i) {
    rows.push_back(PatternsRunRow{seeds[i], &reports[i]});
    max_c_hat = std::max(max_c_hat, reports[i].c_hat);
    any_divergent = any_divergent || reports[i].any_divergent();
    std::cout << "seed=" << seeds[i] << " c_hat=" << format_double(reports[i].c_hat)
              << " divergent=" << (reports[i].any_divergent() ? "yes" : "no") << "\n";
  }
  std::cout << "max_c_hat=" << format_double(max_c_hat)
            << " any_divergent=" << (any_divergent ? "yes" : "no") << "\n";

  const std::optional<double> check_c =
      cfg.patterns.check_c >= 0.0 ? std::optional<double>(cfg.patterns.check_c) : std::nullopt;
  OutputBundle bundle;
  {
    std::ostringstream csv;
    write_patterns_csv(csv, rows, check_c.value_or(max_c_hat));
    bundle.csv = csv.str();
  }
  bundle.json = patterns_report_json(rows, check_c);
  const double seconds = std::chrono::duration<double>(Clock::now() - started).count();
  emit(cfg, bundle, "patterns", config_path, started, seconds);
  return 0;
}

int run_benford(const BenfordArgs& args) {
  const auto started = Clock::now();
  std::ostringstream csv;
  write_benford_csv_header(csv);
  const FrequencyReport report =
      frequency_report(args.n_max, args.cap, [&](uint64_t n, int digit, const FrequencyReport& r) {
        write_benford_csv_row(csv, n, digit, r);
      });
  std::cout << "n_max=" << args.n_max << " ones=" << report.ones << " total=" << report.total
            << " frequency=" << format_double(report.frequency())
            << " target=" << format_double(kLog10Of2)
            << " deviation=" << format_double(report.deviation()) << "\n";
  if (!args.output.empty()) {
    write_file(args.output + ".csv", csv.str());
    const double seconds = std::chrono::duration<double>(Clock::now() - started).count();
    write_sidecar(args.output, "benford", "", started, seconds);
  }
  return 0;
}

int run_simulate(const SimulateArgs& args) {
  TransitionTable table = accept_all_table();
  if (auto builtin = builtin_table(args.machine)) {
    table = std::move(*builtin);
  } else if (args.machine.find(':') != std::string::npos) {
    const BitString bits = BitString::from_hex(args.machine);
    DecodedMachine dec = decode_machine(bits);
    if (dec.consumed != bits.size())
      throw DecodeError("code has " + std::to_string(bits.size() - dec.consumed) +
                        " trailing bits");
    table = std::move(dec.machine.table);
  } else {
    std::ifstream in(args.machine);
    if (!in) throw ConfigError("no such builtin or machine file: " + args.machine);
    table = parse_table_text(in);
  }
  const SimOutcome outcome = simulate(table, args.input, args.budget);
  std::cout << to_string(outcome.kind) << " steps_used=" << outcome.steps_used << "\n";
  return 0;
}

}  // namespace lulab
