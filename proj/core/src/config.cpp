#include "lulab/config.hpp"

#include <algorithm>

#include "lulab/builtins.hpp"
#include "lulab/errors.hpp"

namespace lulab {

OracleSpec make_oracle_spec(const OracleConfig& cfg) {
  OracleSpec spec;
  if (cfg.kind == "coin") spec.variant = OracleVariant::Coin;
  else if (cfg.kind == "benford") spec.variant = OracleVariant::Benford;
  else if (cfg.kind == "scripted") spec.variant = OracleVariant::Scripted;
  else if (cfg.kind == "constant") spec.variant = OracleVariant::Constant;
  else throw ConfigError("oracle.kind must be coin, benford, scripted or constant; got '" +
                         cfg.kind + "'");

  spec.p = cfg.p;
  spec.seed = cfg.seed;
  spec.latency = LatencySpec::parse(cfg.latency);
  spec.benford_exponent_cap = cfg.benford_cap;
  if (spec.variant == OracleVariant::Scripted) {
    if (cfg.script.empty()) throw ConfigError("scripted oracle needs oracle.script = <path>");
    spec.script = load_script_file(cfg.script);
  }
  if (cfg.verdict == "accept") spec.constant_verdict = VerdictKind::Accept;
  else if (cfg.verdict == "reject") spec.constant_verdict = VerdictKind::Reject;
  else throw ConfigError("oracle.verdict must be accept or reject; got '" + cfg.verdict + "'");
  spec.validate();
  return spec;
}

namespace {

MachinePool curated_from(const std::vector<std::string>& entries, const std::string& file,
                         const char* what) {
  if (!file.empty() && !entries.empty())
    throw ConfigError(std::string(what) + ": give either an inline member list or a file, not both");
  if (!file.empty()) return load_pool_file(file);
  std::vector<PoolMember> members;
  for (const std::string& entry : entries) {
    auto parsed = parse_member_list(entry);
    members.insert(members.end(), std::make_move_iterator(parsed.begin()),
                   std::make_move_iterator(parsed.end()));
  }
  if (members.empty()) throw ConfigError(std::string(what) + ": no members configured");
  return MachinePool::curated(std::move(members));
}

}  // namespace

MachinePool make_pool(const PoolConfig& cfg) {
  if (cfg.kind == "curated") return curated_from(cfg.members, cfg.file, "pool");
  if (cfg.kind == "enumerated") {
    EnumerationLimits limits;
    limits.member_cap = cfg.member_cap;
    return MachinePool::enumerate(cfg.bit_budget, limits);
  }
  throw ConfigError("pool.kind must be curated or enumerated; got '" + cfg.kind + "'");
}

TimeBound make_time_bound(const TimeBoundConfig& cfg, uint64_t check_up_to) {
  TimeBoundForm form;
  if (cfg.form == "linear") form = TimeBoundForm::Linear;
  else if (cfg.form == "quadratic") form = TimeBoundForm::Quadratic;
  else if (cfg.form == "power") form = TimeBoundForm::Power;
  else throw ConfigError("time_bound.form must be linear, quadratic or power; got '" + cfg.form +
                         "'");
  return TimeBound::make(form, cfg.a, cfg.b, std::max<uint64_t>(check_up_to, 1));
}

MachinePool make_selector_pool(const PatternsConfig& cfg) {
  return curated_from(cfg.selectors, cfg.selectors_file, "patterns.selectors");
}

IndexSet make_index_set(const std::string& name) {
  if (name.empty() || name == "all") return IndexSet::all();
  auto table = builtin_table(name);
  if (!table) throw ConfigError("patterns.index_set: unknown builtin machine '" + name + "'");
  return IndexSet::from_machine(std::move(*table), name);
}

std::vector<uint64_t> effective_seeds(const ExperimentConfig& cfg) {
  if (cfg.oracle.kind == "coin") {
    if (cfg.seeds.empty())
      throw ConfigError("a coin oracle needs at least one entry in seeds");
    return cfg.seeds;
  }
  return {cfg.oracle.seed};
}

namespace {

void validate_common(const ExperimentConfig& cfg) {
  make_oracle_spec(cfg.oracle);
  if (cfg.output.format != "csv" && cfg.output.format != "json" && cfg.output.format != "both")
    throw ConfigError("output format must be csv, json or both; got '" + cfg.output.format + "'");
  effective_seeds(cfg);
  std::vector<uint64_t> sorted = cfg.seeds;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ConfigError("seeds must be distinct");
}

}  // namespace

void validate_for_estimate(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (cfg.mode != "optimized" && cfg.mode != "faithful" && cfg.mode != "both")
    throw ConfigError("mode must be optimized, faithful or both; got '" + cfg.mode + "'");
  if (cfg.schedule.empty()) throw ConfigError("schedule is empty");
  for (uint64_t n : cfg.schedule)
    if (n < 2) throw ConfigError("schedule entries must be >= 2");
  for (size_t i = 1; i < cfg.schedule.size(); ++i)
    if (cfg.schedule[i] <= cfg.schedule[i - 1])
      throw ConfigError("schedule must be strictly increasing");
  make_pool(cfg.pool);
  make_time_bound(cfg.time_bound, cfg.schedule.back());
}

void validate_for_patterns(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (cfg.patterns.p < 0.0 || cfg.patterns.p > 1.0)
    throw ConfigError("patterns.p must lie in [0,1]");
  if (cfg.patterns.m_max < 3) throw ConfigError("patterns.m_max must be at least 3");
  make_selector_pool(cfg.patterns);
  make_index_set(cfg.patterns.index_set);
  PatternLimits limits{cfg.patterns.m_max, cfg.patterns.scan_cap};
  make_time_bound(cfg.time_bound, std::min<uint64_t>(limits.effective_scan_cap(), 4096));
}

}  // namespace lulab
