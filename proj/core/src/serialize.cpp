#include "lulab/serialize.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "json.hpp"

namespace lulab {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

namespace {

using nlohmann::json;
// Non-finite values (possible in growth factors) have no JSON number form.
json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json pair_table_json(const std::vector<PairRecord>& table) {
  json arr = json::array();
  for (const PairRecord& rec : table) {
    json row;
    row["x"] = rec.x_id;
    row["y"] = rec.y_id;
    row["kx"] = rec.stats.kx;
    row["ky"] = rec.stats.ky;
    row["q"] = rec.stats.q;
    row["accepts"] = rec.stats.accepts;
    row["f"] = jnum(rec.stats.f);
    row["sprime_prefix"] = rec.stats.sprime_prefix;
    arr.push_back(std::move(row));
  }
  return arr;
}

json trace_row_json(const TraceRow& row, bool include_pair_table) {
  const EstimateResult& r = row.result;
  json j;
  j["seed"] = row.seed;
  j["n"] = r.n;
  j["p_hat_num"] = r.p_hat.num;
  j["p_hat_den"] = r.p_hat.den;
  j["p_hat"] = jnum(r.p_hat.value());
  j["b_value"] = jnum(r.b_value);
  j["vacuous"] = r.vacuous;
  j["witness_y"] = r.witness_y;
  j["witness_x"] = r.witness_x;
  j["steps_total"] = r.steps_total;
  if (row.equivalent) j["equivalent"] = *row.equivalent;
  if (include_pair_table) j["pair_table"] = pair_table_json(r.pair_table);
  return j;
}

}  // namespace

void write_estimate_csv(std::ostream& out, const std::vector<TraceRow>& rows) {
  bool with_equiv = false;
  for (const TraceRow& row : rows) with_equiv = with_equiv || row.equivalent.has_value();
  out << "seed,n,p_hat_num,p_hat_den,b_value,witness_y,witness_x,steps_total";
  if (with_equiv) out << ",equivalent";
  out << '\n';
  for (const TraceRow& row : rows) {
    const EstimateResult& r = row.result;
    out << row.seed << ',' << r.n << ',' << r.p_hat.num << ',' << r.p_hat.den << ','
        << format_double(r.b_value) << ',' << r.witness_y << ',' << r.witness_x << ','
        << r.steps_total;
    if (with_equiv) out << ',' << (row.equivalent ? (*row.equivalent ? "equal" : "diff") : "");
    out << '\n';
  }
}

std::string estimate_trace_json(const std::vector<TraceRow>& rows, bool include_pair_table) {
  json arr = json::array();
  for (const TraceRow& row : rows) arr.push_back(trace_row_json(row, include_pair_table));
  return arr.dump(2) + "\n";
}

void write_patterns_csv(std::ostream& out, const std::vector<PatternsRunRow>& rows,
                        double envelope_c) {
  out << "seed,selector,m,r,envelope\n";
  for (const PatternsRunRow& row : rows) {
    for (const SelectorRun& run : row.report->runs) {
      if (run.m_reached() < 3) continue;
      uint64_t m = 3;
      while (m <= run.m_reached()) {
        out << row.seed << ',' << run.id << ',' << m << ',' << format_double(run.r(m)) << ','
            << format_double(lil_envelope(m, run.k, envelope_c)) << '\n';
        if (m == run.m_reached()) break;
        // ~1% geometric stride, final m always emitted.
        m = std::min(run.m_reached(), std::max(m + 1, m + m / 100));
      }
    }
  }
}

namespace {

json selector_json(const SelectorReport& s) {
  json j;
  j["id"] = s.id;
  j["k"] = s.k;
  j["skipped"] = s.skipped;
  j["m_reached"] = s.m_reached;
  j["phi"] = jnum(s.phi);
  j["c_hat"] = jnum(s.c_hat);
  j["checkpoint_m"] = s.checkpoint_m;
  j["c_hat_at_checkpoint"] = jnum(s.c_hat_at_checkpoint);
  j["growth_factor"] = jnum(s.growth_factor);
  j["divergent"] = s.divergent;
  return j;
}

json report_json(const DeficiencyReport& r, std::optional<double> check_c) {
  json j;
  j["p"] = jnum(r.p);
  j["c_hat"] = jnum(r.c_hat);
  j["empty_pool"] = r.empty_pool;
  j["any_divergent"] = r.any_divergent();
  json sel = json::array();
  for (const SelectorReport& s : r.selectors) sel.push_back(selector_json(s));
  j["selectors"] = std::move(sel);
  if (check_c) {
    j["check_c"] = jnum(*check_c);
    json violations = json::array();
    for (const Violation& v : r.violations_against(*check_c)) {
      json row;
      row["selector"] = v.selector_id;
      row["m"] = v.m;
      row["r"] = jnum(v.r);
      row["envelope"] = jnum(v.envelope);
      violations.push_back(std::move(row));
    }
    j["violations"] = std::move(violations);
  }
  return j;
}

}  // namespace

std::string patterns_report_json(const std::vector<PatternsRunRow>& rows,
                                 std::optional<double> check_c) {
  json j;
  json seeds = json::array();
  double max_c_hat = 0.0;
  bool any_divergent = false;
  for (const PatternsRunRow& row : rows) {
    json entry = report_json(*row.report, check_c);
    entry["seed"] = row.seed;
    max_c_hat = std::max(max_c_hat, row.report->c_hat);
    any_divergent = any_divergent || row.report->any_divergent();
    seeds.push_back(std::move(entry));
  }
  j["seeds"] = std::move(seeds);
  j["max_c_hat"] = jnum(max_c_hat);
  j["any_divergent"] = any_divergent;
  return j.dump(2) + "\n";
}

std::string irreducibility_json(const IrreducibilitySummary& summary) {
  json j;
  j["p"] = jnum(summary.p);
  j["m_max"] = summary.m_max;
  j["max_c_hat"] = jnum(summary.max_c_hat);
  j["any_divergent"] = summary.any_divergent;
  json seeds = json::array();
  for (const SeedOutcome& s : summary.per_seed) {
    json entry = report_json(s.report, std::nullopt);
    entry["seed"] = s.seed;
    seeds.push_back(std::move(entry));
  }
  j["seeds"] = std::move(seeds);
  return j.dump(2) + "\n";
}

void write_benford_csv_header(std::ostream& out) { out << "n,leading_digit,frequency,deviation\n"; }

void write_benford_csv_row(std::ostream& out, uint64_t n, int digit,
                           const FrequencyReport& running) {
  out << n << ',' << digit << ',' << format_double(running.frequency()) << ','
      << format_double(running.deviation()) << '\n';
}

}  // namespace lulab
