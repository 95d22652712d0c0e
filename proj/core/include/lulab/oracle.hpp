#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "lulab/numeric.hpp"

namespace lulab {

enum class VerdictKind : uint8_t { Accept, Reject, NoHaltWithinBudget };

struct Verdict {
  VerdictKind kind;
  uint64_t steps_used;  // <= supplied budget
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

const char* to_string(VerdictKind kind);

// Latency sentinel for "never halts": exceeds every budget, including
// kUnboundedBudget.
inline constexpr uint64_t kNeverHalts = std::numeric_limits<uint64_t>::max();
inline constexpr uint64_t kUnboundedBudget = std::numeric_limits<uint64_t>::max();

// Step cost charged per query, as a function of the index.
struct LatencySpec {
  enum class Kind { Constant, Linear } kind = Kind::Constant;
  uint64_t value = 1;  // the constant, or the slope

  uint64_t at(uint64_t index) const;
  // "5", "const:5" or "linear:2". Throws ConfigError.
  static LatencySpec parse(const std::string& text);
  std::string to_text() const;
};

enum class OracleVariant : uint8_t { Coin, Benford, Scripted, Constant };

enum class ScriptEntry : uint8_t { Accept, Reject, NeverHalts };

struct OracleSpec {
  OracleVariant variant = OracleVariant::Constant;
  double p = 0.5;       // coin only
  uint64_t seed = 0;    // coin only
  LatencySpec latency;  // all variants
  std::vector<ScriptEntry> script;  // scripted; entry i covers index i + 1
  VerdictKind constant_verdict = VerdictKind::Accept;  // constant only
  uint64_t benford_exponent_cap = 100'000;

  void validate() const;  // throws ConfigError
};

// Stateless pseudorandom provability call: Accept with probability p,
// independently per index. mix64 of (seed, index), mapped to [0, 1).
VerdictKind coin_verdict(uint64_t seed, double p, uint64_t index);

// Accept iff the leading decimal digit of 3^n is 1, computed on the exact
// integer. Throws BudgetError above the exponent cap.
VerdictKind benford_verdict(uint64_t n, uint64_t exponent_cap = 100'000);

// Incrementally maintained decimal expansion of 3^n.
class PowerOfThree {
 public:
  PowerOfThree() : digits_{1} {}
  void advance() { multiply_by_3(); ++exponent_; }
  uint64_t exponent() const { return exponent_; }
  int leading_digit() const { return digits_.back(); }
  uint64_t decimal_digits() const { return digits_.size(); }

 private:
  void multiply_by_3();
  std::vector<uint8_t> digits_;  // little-endian base 10
  uint64_t exponent_ = 0;
};

struct FrequencyReport {
  uint64_t ones = 0;   // exponents in 0..n with leading digit 1
  uint64_t total = 0;  // n + 1
  double frequency() const { return total ? static_cast<double>(ones) / static_cast<double>(total) : 0.0; }
  double deviation() const { return std::abs(frequency() - kLog10Of2); }
};

// Scans n = 0..n_max; per_n (optional) sees each n, its leading digit, and
// the running report including that n.
using FrequencyVisitor = std::function<void(uint64_t n, int leading_digit, const FrequencyReport&)>;
FrequencyReport frequency_report(uint64_t n_max, uint64_t exponent_cap = 100'000,
                                 const FrequencyVisitor& per_n = {});

class Oracle {
 public:
  explicit Oracle(OracleSpec spec);
  ~Oracle();
  Oracle(Oracle&&) noexcept;
  Oracle& operator=(Oracle&&) noexcept;

  const OracleSpec& spec() const { return spec_; }

  // NoHaltWithinBudget exactly when the effective latency exceeds the budget
  // (a scripted '-' entry never halts); otherwise the variant's verdict with
  // steps_used = latency(index). Deterministic in (spec, index, budget).
  Verdict query(uint64_t index, uint64_t budget) const;

 private:
  OracleSpec spec_;
  struct BenfordCache;
  std::unique_ptr<BenfordCache> benford_;  // grown lazily, mutex-guarded
};

// One verdict per line: 'A', 'R' or '-' (never halts). '#' starts a comment.
std::vector<ScriptEntry> parse_script_text(std::istream& in);
// Throws ConfigError naming the path when the file cannot be read.
std::vector<ScriptEntry> load_script_file(const std::string& path);

}  // namespace lulab
