#include "lulab/patterns.hpp"

#include <cmath>
#include <limits>

#include "lulab/errors.hpp"
#include "lulab/numeric.hpp"

namespace lulab {

double lil_envelope(uint64_t m, uint32_t k, double c) {
  if (m < 3) throw ConfigError("envelope is defined for m >= 3, got m = " + std::to_string(m));
  if (c < 0.0) throw ConfigError("envelope constant must be non-negative");
  return c * static_cast<double>(k) * std::sqrt(loglog2_conv(static_cast<double>(m))) /
         std::sqrt(static_cast<double>(m));
}

bool IndexSet::contains(uint64_t n, const TimeBound& t) const {
  if (!machine) return true;
  return simulate(*machine, n, t(n)).kind == SimKind::Accept;
}

IndexSet IndexSet::from_machine(TransitionTable table, std::string description) {
  IndexSet s;
  s.machine = std::move(table);
  s.description = std::move(description);
  return s;
}

SelectorRun selector_frequencies(const Oracle& truth, const PoolMember& w, const TimeBound& t,
                                 const PatternLimits& limits, const IndexSet& index_set) {
  SelectorRun run;
  run.id = w.id;
  run.k = w.declared_k;
  const uint64_t scan_cap = limits.effective_scan_cap();
  uint64_t accepts = 0;
  for (uint64_t i = 1; i <= scan_cap && run.selected.size() < limits.m_max; ++i) {
    if (!index_set.contains(i, t)) continue;
    if (simulate(w.code.table, i, t(i)).kind != SimKind::Accept) continue;
    const Verdict v = truth.query(i, kUnboundedBudget);
    if (v.kind == VerdictKind::NoHaltWithinBudget)
      throw ContractError("truth sequence has no definite verdict on selected index " +
                          std::to_string(i));
    if (v.kind == VerdictKind::Accept) accepts += 1;
    run.selected.push_back(i);
    run.accepts_prefix.push_back(accepts);
  }
  return run;
}

double deviation_statistic_max(const SelectorRun& run, double p, uint64_t m_limit) {
  const uint64_t last = std::min<uint64_t>(m_limit, run.m_reached());
  double sup = 0.0;
  for (uint64_t m = 3; m <= last; ++m) {
    const double stat = std::abs(run.r(m) - p) * std::sqrt(static_cast<double>(m)) /
                        std::sqrt(loglog2_conv(static_cast<double>(m)));
    if (stat > sup) sup = stat;
  }
  return sup;
}

DeficiencyReport estimate_c(const Oracle& truth, const MachinePool& selectors, double p,
                            const TimeBound& t, const PatternLimits& limits,
                            const IndexSet& index_set) {
  if (p < 0.0 || p > 1.0) throw ConfigError("pattern probability must lie in [0,1]");
  DeficiencyReport report;
  report.p = p;
  report.empty_pool = selectors.members().empty();

  for (const PoolMember& w : selectors.members()) {
    SelectorRun run = selector_frequencies(truth, w, t, limits, index_set);
    SelectorReport sr;
    sr.id = run.id;
    sr.k = run.k;
    sr.m_reached = run.m_reached();
    if (sr.m_reached < 3) {
      sr.skipped = true;
    } else {
      sr.phi = deviation_statistic_max(run, p, sr.m_reached);
      sr.c_hat = sr.phi / static_cast<double>(sr.k);
      sr.checkpoint_m = std::max<uint64_t>(3, sr.m_reached / 100);
      sr.c_hat_at_checkpoint =
          deviation_statistic_max(run, p, sr.checkpoint_m) / static_cast<double>(sr.k);
      if (sr.c_hat_at_checkpoint > 0.0) {
        sr.growth_factor = sr.c_hat / sr.c_hat_at_checkpoint;
      } else {
        sr.growth_factor = sr.c_hat > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
      }
      sr.divergent =
          sr.m_reached >= kDivergenceMinRun && sr.growth_factor >= kDivergenceGrowthFactor;
      if (sr.c_hat > report.c_hat) report.c_hat = sr.c_hat;
    }
    report.selectors.push_back(sr);
    report.runs.push_back(std::move(run));
  }
  return report;
}

std::vector<Violation> DeficiencyReport::violations_against(double c) const {
  std::vector<Violation> out;
  for (size_t s = 0; s < runs.size(); ++s) {
    const SelectorRun& run = runs[s];
    if (run.m_reached() < 3) continue;
    for (uint64_t m = 3; m <= run.m_reached(); ++m) {
      const double stat = std::abs(run.r(m) - p) * std::sqrt(static_cast<double>(m)) /
                          std::sqrt(loglog2_conv(static_cast<double>(m)));
      if (stat / static_cast<double>(run.k) > c)
        out.push_back(Violation{run.id, m, run.r(m), lil_envelope(m, run.k, c)});
    }
  }
  return out;
}

bool DeficiencyReport::any_divergent() const {
  for (const SelectorReport& s : selectors)
    if (s.divergent) return true;
  return false;
}

IrreducibilitySummary monte_carlo_irreducibility(double p, const std::vector<uint64_t>& seeds,
                                                 uint64_t m_max, const MachinePool& selectors,
                                                 const TimeBound& t) {
  if (m_max < 100) throw ConfigError("irreducibility runs need m_max >= 100");
  if (seeds.size() < 3) throw ConfigError("irreducibility runs need at least 3 seeds");

  IrreducibilitySummary summary;
  summary.p = p;
  summary.m_max = m_max;
  for (uint64_t seed : seeds) {
    OracleSpec spec;
    spec.variant = OracleVariant::Coin;
    spec.p = p;
    spec.seed = seed;
    const Oracle truth(spec);
    PatternLimits limits;
    limits.m_max = m_max;
    DeficiencyReport report = estimate_c(truth, selectors, p, t, limits);
    summary.max_c_hat = std::max(summary.max_c_hat, report.c_hat);
    summary.any_divergent = summary.any_divergent || report.any_divergent();
    summary.per_seed.push_back(SeedOutcome{seed, std::move(report)});
  }
  return summary;
}

}  // namespace lulab
