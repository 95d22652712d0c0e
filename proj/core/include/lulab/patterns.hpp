#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lulab/estimator.hpp"
#include "lulab/machine.hpp"
#include "lulab/oracle.hpp"
#include "lulab/pool.hpp"

namespace lulab {

// c * k * sqrt(loglog m) / sqrt(m), base-2 logs with the small-argument
// convention. Defined for m >= 3 only; smaller m throws ConfigError.
double lil_envelope(uint64_t m, uint32_t k, double c);

// The index set S the selectors subsample. Membership through a machine
// respects the simulate() budget contract (accept within T(n)).
struct IndexSet {
  std::string description = "all naturals";
  std::optional<TransitionTable> machine;

  bool contains(uint64_t n, const TimeBound& t) const;
  static IndexSet all() { return {}; }
  static IndexSet from_machine(TransitionTable table, std::string description);
};

// One selector's pass over S: the indices it accepted within budget, in
// order, with running accept counts of the truth verdicts.
struct SelectorRun {
  std::string id;
  uint32_t k = 0;
  std::vector<uint64_t> selected;        // ascending
  std::vector<uint64_t> accepts_prefix;  // accepts among the first i+1 selected

  uint64_t m_reached() const { return selected.size(); }
  // r(m): accept fraction among the first m selected indices, 1 <= m <= m_reached.
  double r(uint64_t m) const {
    return static_cast<double>(accepts_prefix[m - 1]) / static_cast<double>(m);
  }
};

struct PatternLimits {
  uint64_t m_max = 10'000;
  uint64_t scan_cap = 0;  // 0 = 8 * m_max
  uint64_t effective_scan_cap() const { return scan_cap ? scan_cap : 8 * m_max; }
};

// Scans naturals ascending, collecting up to m_max selected indices. Truth
// verdicts are taken at unbounded budget; a truth query with no definite
// verdict on a selected index is a ContractError.
SelectorRun selector_frequencies(const Oracle& truth, const PoolMember& w,
                                 const TimeBound& t, const PatternLimits& limits,
                                 const IndexSet& index_set = IndexSet::all());

// sup over 3 <= m <= min(m_limit, run length) of |r(m) - p| sqrt(m) / sqrt(loglog m).
double deviation_statistic_max(const SelectorRun& run, double p, uint64_t m_limit);

// Divergence heuristic: the deviation statistic of a pattern that really has
// probability p stabilizes, while a patterned subsequence grows like
// sqrt(m / loglog m). Flagged when the run is long enough to judge and the
// statistic grew by this factor from the m/100 checkpoint to the end.
inline constexpr double kDivergenceGrowthFactor = 3.0;
inline constexpr uint64_t kDivergenceMinRun = 300;

struct SelectorReport {
  std::string id;
  uint32_t k = 0;
  bool skipped = false;   // fewer than 3 selected indices
  uint64_t m_reached = 0;
  double phi = 0.0;       // sup deviation statistic, no k scaling
  double c_hat = 0.0;     // phi / k
  uint64_t checkpoint_m = 0;
  double c_hat_at_checkpoint = 0.0;
  double growth_factor = 1.0;
  bool divergent = false;
};

struct Violation {
  std::string selector_id;
  uint64_t m;
  double r;
  double envelope;
};

struct DeficiencyReport {
  double p = 0.0;
  double c_hat = 0.0;     // max over selectors of per-selector c_hat
  bool empty_pool = false;
  std::vector<SelectorReport> selectors;
  std::vector<SelectorRun> runs;  // aligned with selectors

  // (selector, m) pairs whose deviation statistic strictly exceeds c; empty
  // exactly when c_hat <= c.
  std::vector<Violation> violations_against(double c) const;
  bool any_divergent() const;
};

DeficiencyReport estimate_c(const Oracle& truth, const MachinePool& selectors, double p,
                            const TimeBound& t, const PatternLimits& limits,
                            const IndexSet& index_set = IndexSet::all());

struct SeedOutcome {
  uint64_t seed;
  DeficiencyReport report;
};

struct IrreducibilitySummary {
  double p = 0.0;
  uint64_t m_max = 0;
  std::vector<SeedOutcome> per_seed;
  double max_c_hat = 0.0;
  bool any_divergent = false;
};

// Runs estimate_c on coin truth per seed. Requires m_max >= 100 and at least
// 3 seeds.
IrreducibilitySummary monte_carlo_irreducibility(double p, const std::vector<uint64_t>& seeds,
                                                 uint64_t m_max, const MachinePool& selectors,
                                                 const TimeBound& t);

}  // namespace lulab
