#pragma once

#include <stdexcept>
#include <string>

namespace lulab {

// Configuration / validation problems. The CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Budget and cap violations (enumeration member cap, exponent cap, ...).
// The CLI maps these to exit code 3.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A transition table that cannot be encoded (too many states, bad target).
struct EncodeError : std::runtime_error {
  explicit EncodeError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed machine-code prefix. The message names the failing field.
struct DecodeError : std::runtime_error {
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

// A caller-promised precondition failed at runtime, e.g. a truth sequence
// with no definite verdict on a selected index.
struct ContractError : std::runtime_error {
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lulab
