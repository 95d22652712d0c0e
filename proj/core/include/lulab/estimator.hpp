#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lulab/oracle.hpp"
#include "lulab/pool.hpp"

namespace lulab {

enum class TimeBoundForm : uint8_t { Linear, Quadratic, Power };

// Monotone step-budget family. T(n) = a*n, a*n^2, or a*n^b; a >= 1, b >= 1.
class TimeBound {
 public:
  // Checks T nondecreasing and n <= T(n) for n = 1..check_up_to; throws
  // ConfigError on violations.
  static TimeBound make(TimeBoundForm form, double a, double b = 1.0,
                        uint64_t check_up_to = 4096);

  uint64_t operator()(uint64_t n) const;
  // T(n) * n^4 * log2(T(n)), the accounting bound for the literal algorithm.
  long double accounting_bound(uint64_t n) const;

  TimeBoundForm form() const { return form_; }
  double a() const { return a_; }
  double b() const { return b_; }

 private:
  TimeBound(TimeBoundForm form, double a, double b) : form_(form), a_(a), b_(b) {}
  TimeBoundForm form_;
  double a_;
  double b_;
};

// Frequency statistics of one machine pair: the scan of i = 1..n collects
// S'(X,Y) = indices both machines accept within T(i); oracle verdicts with
// budget T(n) are tallied over the S' prefix until the first query that fails
// to halt, which ends the scan.
struct PairStats {
  double f = 0.0;        // accepts / q; 0 when q == 0
  uint64_t q = 0;        // accepts + rejects
  uint64_t accepts = 0;
  uint32_t kx = 0;
  uint32_t ky = 0;
  std::vector<uint64_t> sprime_prefix;  // the q indices that were tallied
};

// max(kx, |f - p| * sqrt(q) / (ky * sqrt(loglog q))), base-2 logs with the
// small-argument convention; the second term is 0 when q == 0.
double b_score(const PairStats& stats, double p);

// (clamped score, raw deviation term). The selection loops compare these
// lexicographically: the first component is the score above, so any
// lexicographic winner is also a plain argmin of b_score; the second breaks
// the clamp plateaus so that a pool with one opinion pins P to its frequency.
struct ScoreParts {
  double clamped;
  double dev;
  friend bool operator==(const ScoreParts&, const ScoreParts&) = default;
  friend bool operator<(const ScoreParts& a, const ScoreParts& b) {
    return a.clamped < b.clamped || (a.clamped == b.clamped && a.dev < b.dev);
  }
};
ScoreParts b_score_parts(const PairStats& stats, double p);

struct Rational {
  int64_t num = 0;
  int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct PairRecord {
  std::string x_id;
  std::string y_id;
  PairStats stats;
};

struct EstimateResult {
  uint64_t n = 0;
  Rational p_hat;         // exact j/n
  double b_value = 0.0;   // achieved max-min score; >= 1 unless vacuous
  bool vacuous = false;   // no pool member qualified at this n
  std::string witness_y;
  std::string witness_x;
  std::vector<PairRecord> pair_table;
  uint64_t steps_total = 0;  // simulated machine steps + oracle step costs
};

PairStats compute_pair_stats(const PoolMember& x, const PoolMember& y, uint64_t n,
                             const Oracle& oracle, const TimeBound& t,
                             uint64_t* step_counter = nullptr);

// Optimized selection: pair statistics are independent of the probability
// grid, so they are computed once per pair and reused across all n+1 grid
// values. Requires n >= 2.
EstimateResult estimate(uint64_t n, const MachinePool& pool, const Oracle& oracle,
                        const TimeBound& t);

// Literal triple loop (grid value outer, selector pair inner), recomputing
// pair statistics inside the grid loop; steps_total reflects that structure.
// Returns the same selection as estimate() on every input.
EstimateResult estimate_faithful(uint64_t n, const MachinePool& pool,
                                 const Oracle& oracle, const TimeBound& t);

struct TracePoint {
  uint64_t n;
  EstimateResult result;
};

// One estimate per scheduled n. The schedule must be strictly increasing;
// an empty schedule yields an empty trace.
std::vector<TracePoint> convergence_run(const std::vector<uint64_t>& schedule,
                                        const MachinePool& pool, const Oracle& oracle,
                                        const TimeBound& t);

}  // namespace lulab
