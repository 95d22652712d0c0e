#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lulab/errors.hpp"
#include "lulab/estimator.hpp"
#include "lulab/rng.hpp"

using namespace lulab;

namespace {

Oracle constant_oracle(VerdictKind verdict) {
  OracleSpec spec;
  spec.variant = OracleVariant::Constant;
  spec.constant_verdict = verdict;
  return Oracle(spec);
}

Oracle coin_oracle(uint64_t seed, double p) {
  OracleSpec spec;
  spec.variant = OracleVariant::Coin;
  spec.seed = seed;
  spec.p = p;
  return Oracle(spec);
}

Oracle scripted_oracle(std::vector<ScriptEntry> script) {
  OracleSpec spec;
  spec.variant = OracleVariant::Scripted;
  spec.script = std::move(script);
  return Oracle(spec);
}

MachinePool solo_pool() { return MachinePool::curated({builtin_member("accept-all", 3)}); }

MachinePool std_pool() {
  return MachinePool::curated({
      builtin_member("accept-all", 3),
      builtin_member("accept-evens", 5),
      builtin_member("accept-multiples-of-3", 7),
  });
}

const TimeBound kQuadratic = TimeBound::make(TimeBoundForm::Quadratic, 1.0);

// Independent check: evaluate the plain argmin-max-min of the clamped score
// over the emitted pair table and return every minimizing grid index.
std::vector<uint64_t> brute_force_argmin(const EstimateResult& res) {
  std::vector<std::string> ys;
  for (const PairRecord& rec : res.pair_table)
    if (std::find(ys.begin(), ys.end(), rec.y_id) == ys.end()) ys.push_back(rec.y_id);
  double best = std::numeric_limits<double>::infinity();
  std::vector<uint64_t> argmin;
  for (uint64_t j = 0; j <= res.n; ++j) {
    const double p = static_cast<double>(j) / static_cast<double>(res.n);
    double outer = -std::numeric_limits<double>::infinity();
    for (const std::string& y : ys) {
      double inner = std::numeric_limits<double>::infinity();
      for (const PairRecord& rec : res.pair_table)
        if (rec.y_id == y) inner = std::min(inner, b_score(rec.stats, p));
      outer = std::max(outer, inner);
    }
    if (outer < best) {
      best = outer;
      argmin.clear();
    }
    if (outer == best) argmin.push_back(j);
  }
  return argmin;
}

}  // namespace

TEST_CASE("time bounds enforce their contracts") {
  TimeBound linear = TimeBound::make(TimeBoundForm::Linear, 2.0);
  CHECK(linear(10) == 20);
  TimeBound quad = TimeBound::make(TimeBoundForm::Quadratic, 1.0);
  CHECK(quad(9) == 81);
  TimeBound power = TimeBound::make(TimeBoundForm::Power, 1.0, 3.0);
  CHECK(power(4) == 64);
  CHECK_THROWS_AS(TimeBound::make(TimeBoundForm::Linear, 0.5), ConfigError);
  CHECK_THROWS_AS(TimeBound::make(TimeBoundForm::Power, 1.0, 0.5), ConfigError);
  CHECK(quad.accounting_bound(8) == doctest::Approx(64.0L * 4096.0L * 6.0L));
}

TEST_CASE("score formula by hand") {
  PairStats same;
  same.f = 0.5;
  same.q = 50;
  same.accepts = 25;
  same.kx = 3;
  same.ky = 2;
  CHECK(b_score(same, 0.5) == 3.0);  // deviation term vanishes

  PairStats wide;
  wide.f = 0.8;
  wide.q = 100;
  wide.accepts = 80;
  wide.kx = 4;
  wide.ky = 3;
  CHECK(b_score(wide, 0.5) == 4.0);  // 0.3 * 10 / (3 * 1.6528...) stays under the clamp

  PairStats small;
  small.f = 0.0;
  small.q = 16;
  small.accepts = 0;
  small.kx = 1;
  small.ky = 1;
  // 1 * 4 / sqrt(log2 log2 16) = 4 / sqrt(2)
  CHECK(b_score(small, 1.0) == doctest::Approx(2.828427).epsilon(1e-6));

  PairStats empty;
  empty.kx = 7;
  empty.ky = 2;
  CHECK(b_score(empty, 0.3) == 7.0);
}

TEST_CASE("score is clamped below by kx and dips at the observed frequency") {
  SplitMix64 rng(0x5151);
  for (int i = 0; i < 3000; ++i) {
    PairStats s;
    s.q = rng.next_below(500);
    s.accepts = s.q ? rng.next_below(s.q + 1) : 0;
    s.f = s.q ? static_cast<double>(s.accepts) / static_cast<double>(s.q) : 0.0;
    s.kx = 1 + static_cast<uint32_t>(rng.next_below(8));
    s.ky = 1 + static_cast<uint32_t>(rng.next_below(8));
    const double p = rng.next_unit();
    CHECK(b_score(s, p) >= static_cast<double>(s.kx));

    // V-shape around f: nonincreasing before, nondecreasing after.
    double prev = b_score(s, 0.0);
    for (int g = 1; g <= 20; ++g) {
      const double gp = g / 20.0;
      const double cur = b_score(s, gp);
      if (gp <= s.f) CHECK(cur <= prev + 1e-12);
      if (gp > s.f && (g - 1) / 20.0 >= s.f) CHECK(cur >= prev - 1e-12);
      prev = cur;
    }
    CHECK(b_score(s, s.f) <= b_score(s, 0.0) + 1e-12);
    CHECK(b_score(s, s.f) <= b_score(s, 1.0) + 1e-12);
  }
}

TEST_CASE("pair statistics on a constant oracle") {
  const PoolMember z = builtin_member("accept-all", 3);
  const Oracle oracle = constant_oracle(VerdictKind::Accept);
  PairStats s = compute_pair_stats(z, z, 10, oracle, kQuadratic);
  CHECK(s.q == 10);
  CHECK(s.accepts == 10);
  CHECK(s.f == 1.0);
  CHECK(s.sprime_prefix.size() == 10);
  CHECK(s.sprime_prefix.front() == 1);
}

TEST_CASE("a never-halting query ends the usable prefix") {
  const PoolMember z = builtin_member("accept-all", 3);
  std::vector<ScriptEntry> script(10, ScriptEntry::Accept);
  script[2] = ScriptEntry::Reject;       // index 3
  script[3] = ScriptEntry::NeverHalts;   // index 4 stops the scan
  const Oracle oracle = scripted_oracle(script);
  PairStats s = compute_pair_stats(z, z, 10, oracle, kQuadratic);
  CHECK(s.q == 3);
  CHECK(s.accepts == 2);
  CHECK(s.f == doctest::Approx(2.0 / 3.0));
  CHECK(s.sprime_prefix == std::vector<uint64_t>{1, 2, 3});
}

TEST_CASE("pair statistics follow the coin rate on the selected subsequence") {
  const PoolMember evens = builtin_member("accept-evens", 5);
  const PoolMember all = builtin_member("accept-all", 3);
  const Oracle oracle = coin_oracle(1, 0.7);
  PairStats s = compute_pair_stats(evens, all, 2000, oracle, kQuadratic);
  CHECK(s.q == 1000);
  CHECK(std::abs(s.f - 0.7) <= 0.08);
}

TEST_CASE("constant oracles pin the estimate to the boundary") {
  const Oracle accept = constant_oracle(VerdictKind::Accept);
  const Oracle reject = constant_oracle(VerdictKind::Reject);
  EstimateResult up = estimate(10, solo_pool(), accept, kQuadratic);
  CHECK(up.p_hat == Rational{10, 10});
  CHECK(up.b_value == 3.0);
  CHECK(!up.vacuous);
  CHECK(up.witness_y == "accept-all");

  EstimateResult down = estimate(10, solo_pool(), reject, kQuadratic);
  CHECK(down.p_hat == Rational{0, 10});
  CHECK(down.b_value == 3.0);
}

TEST_CASE("estimate rejects tiny n and flags empty qualifying sets") {
  CHECK_THROWS_AS(estimate(1, solo_pool(), constant_oracle(VerdictKind::Accept), kQuadratic),
                  ConfigError);
  // log2(8) = 3 is not strictly above the declared length 3.
  EstimateResult vac = estimate(8, solo_pool(), constant_oracle(VerdictKind::Accept), kQuadratic);
  CHECK(vac.vacuous);
  CHECK(vac.p_hat == Rational{0, 8});
  CHECK(vac.pair_table.empty());
}

TEST_CASE("estimate stays within the grid exactly") {
  const Oracle oracle = coin_oracle(3, 0.4);
  for (uint64_t n : {9ull, 33ull, 100ull}) {
    EstimateResult res = estimate(n, std_pool(), oracle, kQuadratic);
    CHECK(res.p_hat.den == static_cast<int64_t>(n));
    CHECK(res.p_hat.num >= 0);
    CHECK(res.p_hat.num <= res.p_hat.den);
  }
}

TEST_CASE("faithful and optimized selections agree, and both sit in the brute-force argmin") {
  const Oracle oracles[] = {constant_oracle(VerdictKind::Accept), coin_oracle(1, 0.5)};
  for (const Oracle& oracle : oracles) {
    for (uint64_t n : {9ull, 12ull, 16ull, 20ull}) {
      EstimateResult fast = estimate(n, std_pool(), oracle, kQuadratic);
      EstimateResult slow = estimate_faithful(n, std_pool(), oracle, kQuadratic);
      CHECK(fast.p_hat == slow.p_hat);
      CHECK(fast.b_value == slow.b_value);
      CHECK(fast.witness_y == slow.witness_y);
      CHECK(fast.witness_x == slow.witness_x);
      if (!fast.vacuous) {
        auto argmin = brute_force_argmin(fast);
        CHECK(std::find(argmin.begin(), argmin.end(),
                        static_cast<uint64_t>(fast.p_hat.num)) != argmin.end());
      }
    }
  }
}

TEST_CASE("faithful step accounting grows with n") {
  const Oracle oracle = coin_oracle(1, 0.5);
  MachinePool pool = MachinePool::curated(
      {builtin_member("accept-all", 2), builtin_member("accept-evens", 2)});
  uint64_t prev = 0;
  for (uint64_t n : {8ull, 16ull, 32ull}) {
    EstimateResult res = estimate_faithful(n, pool, oracle, kQuadratic);
    CHECK(res.steps_total > prev);
    prev = res.steps_total;
  }
}

TEST_CASE("convergence to a coin oracle over the schedule") {
  const std::vector<uint64_t> schedule = {250, 500, 1000, 2000};
  const Oracle oracle = coin_oracle(1, 0.7);
  auto trace = convergence_run(schedule, std_pool(), oracle, kQuadratic);
  REQUIRE(trace.size() == 4);
  const double final_err = std::abs(trace.back().result.p_hat.value() - 0.7);
  CHECK(final_err <= 0.05);
  for (const TracePoint& point : trace) {
    CHECK(point.result.p_hat.den == static_cast<int64_t>(point.n));
  }
}

TEST_CASE("convergence run validates its schedule") {
  CHECK(convergence_run({}, solo_pool(), constant_oracle(VerdictKind::Accept), kQuadratic)
            .empty());
  CHECK_THROWS_AS(
      convergence_run({10, 10}, solo_pool(), constant_oracle(VerdictKind::Accept), kQuadratic),
      ConfigError);
}

TEST_CASE("all-never-halting oracle leaves every pair empty but is not vacuous") {
  std::vector<ScriptEntry> script(12, ScriptEntry::NeverHalts);
  const Oracle oracle = scripted_oracle(script);
  EstimateResult res = estimate(12, std_pool(), oracle, kQuadratic);
  CHECK(!res.vacuous);
  CHECK(res.p_hat == Rational{0, 12});  // every grid value ties; first wins
  for (const PairRecord& rec : res.pair_table) CHECK(rec.stats.q == 0);
  CHECK(res.b_value == 3.0);
}
