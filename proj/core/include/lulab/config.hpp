#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lulab/estimator.hpp"
#include "lulab/oracle.hpp"
#include "lulab/patterns.hpp"
#include "lulab/pool.hpp"

namespace lulab {

// Mirrors the CLI surface: every field maps to a config-file key and a flag
// of the same dotted name. Strings are validated and materialized here so
// the CLI stays a thin shell.

struct OracleConfig {
  std::string kind = "constant";  // coin | benford | scripted | constant
  double p = 0.5;
  uint64_t seed = 0;
  std::string latency = "const:1";
  std::string script;             // path, scripted only
  std::string verdict = "accept"; // constant only: accept | reject
  uint64_t benford_cap = 100'000;
};

struct PoolConfig {
  std::string kind = "curated";  // curated | enumerated
  std::vector<std::string> members;  // "name:k" entries
  std::string file;                  // pool file path (curated alternative)
  double bit_budget = 17.0;          // enumerated only
  uint64_t member_cap = 1'000'000;
};

struct TimeBoundConfig {
  std::string form = "quadratic";  // linear | quadratic | power
  double a = 1.0;
  double b = 2.0;  // power only
};

struct PatternsConfig {
  double p = 0.5;
  uint64_t m_max = 10'000;
  uint64_t scan_cap = 0;
  std::vector<std::string> selectors;  // "name:k" entries
  std::string selectors_file;
  double check_c = -1.0;  // < 0 = no violation check
  std::string index_set = "all";  // all | <builtin name>
};

struct OutputConfig {
  std::string path;               // file prefix; empty = no data files
  std::string format = "csv";     // csv | json | both
  bool verbose_json = false;      // include pair tables in JSON
};

struct ExperimentConfig {
  OracleConfig oracle;
  PoolConfig pool;
  TimeBoundConfig time_bound;
  PatternsConfig patterns;
  OutputConfig output;
  std::vector<uint64_t> schedule;
  std::vector<uint64_t> seeds;
  std::string mode = "optimized";  // optimized | faithful | both
};

// All throw ConfigError with a message naming the offending key or path.
OracleSpec make_oracle_spec(const OracleConfig& cfg);
MachinePool make_pool(const PoolConfig& cfg);
TimeBound make_time_bound(const TimeBoundConfig& cfg, uint64_t check_up_to);
MachinePool make_selector_pool(const PatternsConfig& cfg);
IndexSet make_index_set(const std::string& name);

// Seeds the runner iterates: the seeds list for coin oracles (must be
// non-empty), otherwise the single configured oracle seed.
std::vector<uint64_t> effective_seeds(const ExperimentConfig& cfg);

void validate_for_estimate(const ExperimentConfig& cfg);
void validate_for_patterns(const ExperimentConfig& cfg);

}  // namespace lulab
