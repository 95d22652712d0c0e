#include "lulab/oracle.hpp"

#include <charconv>
#include <fstream>
#include <mutex>
#include <sstream>

#include "lulab/errors.hpp"
#include "lulab/rng.hpp"

namespace lulab {

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Accept: return "Accept";
    case VerdictKind::Reject: return "Reject";
    case VerdictKind::NoHaltWithinBudget: return "NoHaltWithinBudget";
  }
  return "?";
}

uint64_t LatencySpec::at(uint64_t index) const {
  if (kind == Kind::Constant) return value;
  // Saturating multiply keeps huge indices on the never-halts side.
  if (index != 0 && value > kNeverHalts / index) return kNeverHalts;
  return value * index;
}

LatencySpec LatencySpec::parse(const std::string& text) {
  std::string_view body = text;
  Kind kind = Kind::Constant;
  if (body.starts_with("const:")) {
    body.remove_prefix(6);
  } else if (body.starts_with("linear:")) {
    kind = Kind::Linear;
    body.remove_prefix(7);
  }
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc{} || ptr != body.data() + body.size())
    throw ConfigError("bad latency spec '" + text + "' (want \"const:<c>\" or \"linear:<a>\")");
  if (v == 0) throw ConfigError("latency must be at least 1 per query: '" + text + "'");
  return LatencySpec{kind, v};
}

std::string LatencySpec::to_text() const {
  return (kind == Kind::Constant ? "const:" : "linear:") + std::to_string(value);
}

void OracleSpec::validate() const {
  if (p < 0.0 || p > 1.0)
    throw ConfigError("oracle probability must lie in [0,1], got " + std::to_string(p));
  if (latency.value == 0) throw ConfigError("oracle latency must be at least 1");
  if (variant == OracleVariant::Scripted && script.empty())
    throw ConfigError("scripted oracle has an empty script");
}

VerdictKind coin_verdict(uint64_t seed, double p, uint64_t index) {
  return unit_real(stream_at(seed, index)) < p ? VerdictKind::Accept : VerdictKind::Reject;
}

void PowerOfThree::multiply_by_3() {
  unsigned carry = 0;
  for (uint8_t& d : digits_) {
    const unsigned v = 3u * d + carry;
    d = static_cast<uint8_t>(v % 10);
    carry = v / 10;
  }
  while (carry) {
    digits_.push_back(static_cast<uint8_t>(carry % 10));
    carry /= 10;
  }
}

VerdictKind benford_verdict(uint64_t n, uint64_t exponent_cap) {
  if (n > exponent_cap)
    throw BudgetError("exponent " + std::to_string(n) + " is above the configured cap of " +
                      std::to_string(exponent_cap));
  PowerOfThree pow;
  while (pow.exponent() < n) pow.advance();
  return pow.leading_digit() == 1 ? VerdictKind::Accept : VerdictKind::Reject;
}

FrequencyReport frequency_report(uint64_t n_max, uint64_t exponent_cap,
                                 const FrequencyVisitor& per_n) {
  if (n_max < 1) throw ConfigError("frequency report needs n_max >= 1");
  if (n_max > exponent_cap)
    throw BudgetError("exponent " + std::to_string(n_max) + " is above the configured cap of " +
                      std::to_string(exponent_cap));
  FrequencyReport report;
  PowerOfThree pow;
  for (uint64_t n = 0; n <= n_max; ++n) {
    if (n > 0) pow.advance();
    const int digit = pow.leading_digit();
    report.total += 1;
    if (digit == 1) report.ones += 1;
    if (per_n) per_n(n, digit, report);
  }
  return report;
}

struct Oracle::BenfordCache {
  std::mutex mu;
  PowerOfThree pow;
  std::vector<uint8_t> lead_is_one{1};  // index 0: 3^0 = 1

  bool is_one(uint64_t n) {
    std::lock_guard<std::mutex> lock(mu);
    while (pow.exponent() < n) {
      pow.advance();
      lead_is_one.push_back(pow.leading_digit() == 1 ? 1 : 0);
    }
    return lead_is_one[n] != 0;
  }
};

Oracle::Oracle(OracleSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  if (spec_.variant == OracleVariant::Benford) benford_ = std::make_unique<BenfordCache>();
}

Oracle::~Oracle() = default;
Oracle::Oracle(Oracle&&) noexcept = default;
Oracle& Oracle::operator=(Oracle&&) noexcept = default;

Verdict Oracle::query(uint64_t index, uint64_t budget) const {
  uint64_t latency = spec_.latency.at(index);
  if (spec_.variant == OracleVariant::Scripted) {
    if (index < 1 || index > spec_.script.size())
      throw ConfigError("scripted oracle queried outside its declared range: index " +
                        std::to_string(index) + " of 1.." + std::to_string(spec_.script.size()));
    if (spec_.script[index - 1] == ScriptEntry::NeverHalts) latency = kNeverHalts;
  }
  if (latency == kNeverHalts || latency > budget)
    return Verdict{VerdictKind::NoHaltWithinBudget, budget};

  switch (spec_.variant) {
    case OracleVariant::Constant:
      return Verdict{spec_.constant_verdict, latency};
    case OracleVariant::Coin:
      return Verdict{coin_verdict(spec_.seed, spec_.p, index), latency};
    case OracleVariant::Scripted:
      return Verdict{spec_.script[index - 1] == ScriptEntry::Accept ? VerdictKind::Accept
                                                                    : VerdictKind::Reject,
                     latency};
    case OracleVariant::Benford: {
      if (index > spec_.benford_exponent_cap)
        throw BudgetError("exponent " + std::to_string(index) +
                          " is above the configured cap of " +
                          std::to_string(spec_.benford_exponent_cap));
      const bool one = benford_->is_one(index);
      return Verdict{one ? VerdictKind::Accept : VerdictKind::Reject, latency};
    }
  }
  throw ConfigError("oracle variant is corrupt");
}

std::vector<ScriptEntry> parse_script_text(std::istream& in) {
  std::vector<ScriptEntry> script;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string tok;
    if (!(row >> tok)) continue;
    if (tok == "A") script.push_back(ScriptEntry::Accept);
    else if (tok == "R") script.push_back(ScriptEntry::Reject);
    else if (tok == "-") script.push_back(ScriptEntry::NeverHalts);
    else
      throw ConfigError("script line " + std::to_string(line_no) + ": expected A, R or -, got '" +
                        tok + "'");
  }
  return script;
}

std::vector<ScriptEntry> load_script_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open script file: " + path);
  return parse_script_text(in);
}

}  // namespace lulab
