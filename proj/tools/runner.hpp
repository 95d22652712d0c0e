#pragma once

#include <cstdint>
#include <string>

#include "lulab/config.hpp"

namespace lulab {

struct BenfordArgs {
  uint64_t n_max = 0;
  uint64_t cap = 100'000;
  std::string output;  // optional CSV prefix
};

struct SimulateArgs {
  std::string machine;  // builtin name, "<bitlen>:<hex>" code, or a table file path
  uint64_t input = 0;
  uint64_t budget = 0;
};

// Exit statuses: 0 success, 2 configuration/validation, 3 budget/cap.
int run_estimate(const ExperimentConfig& cfg, const std::string& config_path);
int run_patterns(const ExperimentConfig& cfg, const std::string& config_path);
int run_benford(const BenfordArgs& args);
int run_simulate(const SimulateArgs& args);

}  // namespace lulab
