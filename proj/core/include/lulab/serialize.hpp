#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lulab/estimator.hpp"
#include "lulab/patterns.hpp"

namespace lulab {

// Shortest round-trip decimal form; CSV and JSON share it so data files are
// byte-reproducible for identical configurations.
std::string format_double(double value);

struct TraceRow {
  uint64_t seed = 0;
  EstimateResult result;
  std::optional<bool> equivalent;  // mode=both only
};

// Columns: seed,n,p_hat_num,p_hat_den,b_value,witness_y,witness_x,steps_total
// plus a trailing "equivalent" column when any row carries a verdict.
void write_estimate_csv(std::ostream& out, const std::vector<TraceRow>& rows);
// Array of row objects; pair tables included only on demand.
std::string estimate_trace_json(const std::vector<TraceRow>& rows, bool include_pair_table);

struct PatternsRunRow {
  uint64_t seed = 0;
  const DeficiencyReport* report = nullptr;
};

// Columns: seed,selector,m,r,envelope. The envelope column is evaluated at
// envelope_c. Rows are geometrically decimated (about 1% stride) with the
// first and final m always present.
void write_patterns_csv(std::ostream& out, const std::vector<PatternsRunRow>& rows,
                        double envelope_c);
std::string patterns_report_json(const std::vector<PatternsRunRow>& rows,
                                 std::optional<double> check_c);
std::string irreducibility_json(const IrreducibilitySummary& summary);

// Columns: n,leading_digit,frequency,deviation (running values including n).
void write_benford_csv_header(std::ostream& out);
void write_benford_csv_row(std::ostream& out, uint64_t n, int digit,
                           const FrequencyReport& running);

}  // namespace lulab
