#include "lulab/estimator.hpp"

#include <cmath>
#include <limits>

#include "lulab/errors.hpp"
#include "lulab/numeric.hpp"

namespace lulab {

TimeBound TimeBound::make(TimeBoundForm form, double a, double b, uint64_t check_up_to) {
  if (!(a >= 1.0)) throw ConfigError("time bound needs a >= 1");
  if (form == TimeBoundForm::Power && !(b >= 1.0)) throw ConfigError("time bound needs b >= 1");
  TimeBound t(form, a, form == TimeBoundForm::Power ? b : (form == TimeBoundForm::Linear ? 1.0 : 2.0));
  uint64_t prev = 0;
  for (uint64_t n = 1; n <= check_up_to; ++n) {
    const uint64_t tn = t(n);
    if (tn < n)
      throw ConfigError("time bound violates n <= T(n) at n = " + std::to_string(n));
    if (tn < prev)
      throw ConfigError("time bound is decreasing at n = " + std::to_string(n));
    prev = tn;
  }
  return t;
}

uint64_t TimeBound::operator()(uint64_t n) const {
  const long double raw = a_ * std::pow(static_cast<long double>(n), static_cast<long double>(b_));
  constexpr long double kMax = 9.0e18L;
  if (raw > kMax) return static_cast<uint64_t>(kMax);
  return static_cast<uint64_t>(raw);
}

long double TimeBound::accounting_bound(uint64_t n) const {
  const long double t = static_cast<long double>((*this)(n));
  const long double n4 = std::pow(static_cast<long double>(n), 4.0L);
  return t * n4 * std::log2(t);
}

double b_score(const PairStats& stats, double p) { return b_score_parts(stats, p).clamped; }

ScoreParts b_score_parts(const PairStats& stats, double p) {
  double dev = 0.0;
  if (stats.q > 0) {
    dev = std::abs(stats.f - p) * std::sqrt(static_cast<double>(stats.q)) /
          (static_cast<double>(stats.ky) * std::sqrt(loglog2_conv(static_cast<double>(stats.q))));
  }
  return ScoreParts{std::max(static_cast<double>(stats.kx), dev), dev};
}

PairStats compute_pair_stats(const PoolMember& x, const PoolMember& y, uint64_t n,
                             const Oracle& oracle, const TimeBound& t, uint64_t* step_counter) {
  if (n < 1) throw ConfigError("pair statistics need n >= 1");
  uint64_t steps = 0;
  PairStats stats;
  stats.kx = x.declared_k;
  stats.ky = y.declared_k;
  const uint64_t oracle_budget = t(n);
  for (uint64_t i = 1; i <= n; ++i) {
    const uint64_t budget_i = t(i);
    const SimOutcome ox = simulate(x.code.table, i, budget_i);
    steps += ox.steps_used;
    const SimOutcome oy = simulate(y.code.table, i, budget_i);
    steps += oy.steps_used;
    if (ox.kind != SimKind::Accept || oy.kind != SimKind::Accept) continue;
    const Verdict v = oracle.query(i, oracle_budget);
    steps += v.steps_used;
    // A query with no verdict in budget ends the usable prefix.
    if (v.kind == VerdictKind::NoHaltWithinBudget) break;
    stats.sprime_prefix.push_back(i);
    stats.q += 1;
    if (v.kind == VerdictKind::Accept) stats.accepts += 1;
  }
  stats.f = stats.q ? static_cast<double>(stats.accepts) / static_cast<double>(stats.q) : 0.0;
  if (step_counter) *step_counter += steps;
  return stats;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<const PoolMember*> bit_bounded(const MachinePool& pool, uint64_t n) {
  std::vector<const PoolMember*> out;
  for (const PoolMember& m : pool.members())
    if (bits_below_log2(m.declared_k, n)) out.push_back(&m);
  return out;
}

EstimateResult vacuous_result(uint64_t n, uint64_t steps) {
  EstimateResult res;
  res.n = n;
  res.p_hat = Rational{0, static_cast<int64_t>(n)};
  res.vacuous = true;
  res.steps_total = steps;
  return res;
}

}  // namespace

EstimateResult estimate(uint64_t n, const MachinePool& pool, const Oracle& oracle,
                        const TimeBound& t) {
  if (n < 2) throw ConfigError("estimate needs n >= 2");
  uint64_t steps = 0;

  // Qualifying machines: declared bit length below log2(n), accept input n
  // within T(n).
  std::vector<const PoolMember*> tm;
  for (const PoolMember* m : bit_bounded(pool, n)) {
    const SimOutcome o = simulate(m->code.table, n, t(n));
    steps += o.steps_used;
    if (o.kind == SimKind::Accept) tm.push_back(m);
  }
  if (tm.empty()) return vacuous_result(n, steps);

  const size_t count = tm.size();
  std::vector<PairStats> stats;
  stats.reserve(count * count);
  EstimateResult res;
  res.n = n;
  for (size_t yi = 0; yi < count; ++yi) {
    for (size_t xi = 0; xi < count; ++xi) {
      stats.push_back(compute_pair_stats(*tm[xi], *tm[yi], n, oracle, t, &steps));
      res.pair_table.push_back(PairRecord{tm[xi]->id, tm[yi]->id, stats.back()});
    }
  }

  ScoreParts best{kInf, kInf};
  uint64_t best_j = 0;
  size_t best_y = 0, best_x = 0;
  for (uint64_t j = 0; j <= n; ++j) {
    const double grid_p = static_cast<double>(j) / static_cast<double>(n);
    ScoreParts worst{-kInf, -kInf};
    size_t worst_y = 0, worst_yx = 0;
    for (size_t yi = 0; yi < count; ++yi) {
      ScoreParts min_x{kInf, kInf};
      size_t min_xi = 0;
      for (size_t xi = 0; xi < count; ++xi) {
        const ScoreParts s = b_score_parts(stats[yi * count + xi], grid_p);
        if (s < min_x) {
          min_x = s;
          min_xi = xi;
        }
      }
      if (worst < min_x) {
        worst = min_x;
        worst_y = yi;
        worst_yx = min_xi;
      }
    }
    if (worst < best) {
      best = worst;
      best_j = j;
      best_y = worst_y;
      best_x = worst_yx;
    }
  }

  res.p_hat = Rational{static_cast<int64_t>(best_j), static_cast<int64_t>(n)};
  res.b_value = best.clamped;
  res.witness_y = tm[best_y]->id;
  res.witness_x = tm[best_x]->id;
  res.steps_total = steps;
  return res;
}

EstimateResult estimate_faithful(uint64_t n, const MachinePool& pool, const Oracle& oracle,
                                 const TimeBound& t) {
  if (n < 2) throw ConfigError("estimate needs n >= 2");
  uint64_t steps = 0;
  const std::vector<const PoolMember*> candidates = bit_bounded(pool, n);
  const uint64_t outer_budget = t(n);

  EstimateResult res;
  res.n = n;
  ScoreParts selected{kInf, kInf};
  uint64_t selected_j = 0;
  std::string selected_y, selected_x;
  bool any_pair = false;

  for (uint64_t j = 0; j <= n; ++j) {
    const double grid_p = static_cast<double>(j) / static_cast<double>(n);
    ScoreParts max_y{-kInf, -kInf};
    std::string max_y_id, max_y_x_id;
    bool y_qualified = false;

    for (const PoolMember* y : candidates) {
      ScoreParts min_x{kInf, kInf};
      std::string min_x_id;
      bool x_qualified = false;

      for (const PoolMember* x : candidates) {
        // Both machines must accept the queried index itself.
        const SimOutcome xn = simulate(x->code.table, n, outer_budget);
        steps += xn.steps_used;
        const SimOutcome yn = simulate(y->code.table, n, outer_budget);
        steps += yn.steps_used;
        if (xn.kind != SimKind::Accept || yn.kind != SimKind::Accept) continue;

        // Recompute the pair tallies from scratch; this literal form is the
        // step-accounting reference.
        PairStats st;
        st.kx = x->declared_k;
        st.ky = y->declared_k;
        const bool capture = j == 0;
        for (uint64_t i = 1; i <= n; ++i) {
          const uint64_t budget_i = t(i);
          const SimOutcome ox = simulate(x->code.table, i, budget_i);
          steps += ox.steps_used;
          const SimOutcome oy = simulate(y->code.table, i, budget_i);
          steps += oy.steps_used;
          if (ox.kind != SimKind::Accept || oy.kind != SimKind::Accept) continue;
          const Verdict v = oracle.query(i, outer_budget);
          steps += v.steps_used;
          if (v.kind == VerdictKind::NoHaltWithinBudget) break;
          if (capture) st.sprime_prefix.push_back(i);
          st.q += 1;
          if (v.kind == VerdictKind::Accept) st.accepts += 1;
        }
        st.f = st.q ? static_cast<double>(st.accepts) / static_cast<double>(st.q) : 0.0;
        if (capture) res.pair_table.push_back(PairRecord{x->id, y->id, st});

        const ScoreParts s = b_score_parts(st, grid_p);
        if (s < min_x) {
          min_x = s;
          min_x_id = x->id;
          x_qualified = true;
        }
      }

      if (!x_qualified) continue;  // this y is outside the qualifying set
      if (!y_qualified || max_y < min_x) {
        max_y = min_x;
        max_y_id = y->id;
        max_y_x_id = min_x_id;
        y_qualified = true;
      }
    }

    if (!y_qualified) continue;
    any_pair = true;
    if (max_y < selected) {
      selected = max_y;
      selected_j = j;
      selected_y = max_y_id;
      selected_x = max_y_x_id;
    }
  }

  if (!any_pair) return vacuous_result(n, steps);
  res.p_hat = Rational{static_cast<int64_t>(selected_j), static_cast<int64_t>(n)};
  res.b_value = selected.clamped;
  res.witness_y = selected_y;
  res.witness_x = selected_x;
  res.steps_total = steps;
  return res;
}

std::vector<TracePoint> convergence_run(const std::vector<uint64_t>& schedule,
                                        const MachinePool& pool, const Oracle& oracle,
                                        const TimeBound& t) {
  for (size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      throw ConfigError("schedule must be strictly increasing");
  std::vector<TracePoint> trace;
  trace.reserve(schedule.size());
  for (uint64_t n : schedule) trace.push_back(TracePoint{n, estimate(n, pool, oracle, t)});
  return trace;
}

}  // namespace lulab
