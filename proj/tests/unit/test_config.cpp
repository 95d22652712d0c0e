#include "doctest.h"

#include "lulab/config.hpp"
#include "lulab/errors.hpp"

using namespace lulab;

namespace {

ExperimentConfig estimate_base() {
  ExperimentConfig cfg;
  cfg.oracle.kind = "constant";
  cfg.pool.members = {"accept-all:3"};
  cfg.schedule = {10, 20};
  return cfg;
}

}  // namespace

TEST_CASE("a well-formed estimate config validates") {
  CHECK_NOTHROW(validate_for_estimate(estimate_base()));
}

TEST_CASE("schedule rules") {
  ExperimentConfig cfg = estimate_base();
  cfg.schedule = {10, 10};
  CHECK_THROWS_WITH_AS(validate_for_estimate(cfg), doctest::Contains("strictly increasing"),
                       ConfigError);
  cfg.schedule = {20, 10};
  CHECK_THROWS_AS(validate_for_estimate(cfg), ConfigError);
  cfg.schedule = {};
  CHECK_THROWS_AS(validate_for_estimate(cfg), ConfigError);
  cfg.schedule = {1, 10};
  CHECK_THROWS_AS(validate_for_estimate(cfg), ConfigError);
}

TEST_CASE("coin oracles demand seeds") {
  ExperimentConfig cfg = estimate_base();
  cfg.oracle.kind = "coin";
  CHECK_THROWS_WITH_AS(validate_for_estimate(cfg), doctest::Contains("seed"), ConfigError);
  cfg.seeds = {1, 2, 3};
  CHECK_NOTHROW(validate_for_estimate(cfg));
  CHECK(effective_seeds(cfg) == std::vector<uint64_t>{1, 2, 3});
  cfg.seeds = {1, 1};
  CHECK_THROWS_AS(validate_for_estimate(cfg), ConfigError);

  ExperimentConfig constant = estimate_base();
  constant.oracle.seed = 9;
  CHECK(effective_seeds(constant) == std::vector<uint64_t>{9});
}

TEST_CASE("oracle construction from config strings") {
  OracleConfig cfg;
  cfg.kind = "coin";
  cfg.p = 0.25;
  CHECK(make_oracle_spec(cfg).variant == OracleVariant::Coin);
  cfg.p = 1.5;
  CHECK_THROWS_AS(make_oracle_spec(cfg), ConfigError);
  cfg.p = 0.5;
  cfg.kind = "mystery";
  CHECK_THROWS_AS(make_oracle_spec(cfg), ConfigError);
  cfg.kind = "constant";
  cfg.verdict = "reject";
  CHECK(make_oracle_spec(cfg).constant_verdict == VerdictKind::Reject);
  cfg.verdict = "maybe";
  CHECK_THROWS_AS(make_oracle_spec(cfg), ConfigError);
  cfg.verdict = "accept";
  cfg.latency = "linear:0";
  CHECK_THROWS_AS(make_oracle_spec(cfg), ConfigError);

  OracleConfig scripted;
  scripted.kind = "scripted";
  scripted.script = "/no/such/file.txt";
  CHECK_THROWS_WITH_AS(make_oracle_spec(scripted), doctest::Contains("/no/such/file.txt"),
                       ConfigError);
  scripted.script = "";
  CHECK_THROWS_AS(make_oracle_spec(scripted), ConfigError);
}

TEST_CASE("pool and time bound construction") {
  PoolConfig pool;
  pool.kind = "curated";
  pool.members = {"accept-all:3", "accept-evens:5"};
  CHECK(make_pool(pool).members().size() == 2);
  pool.members.clear();
  CHECK_THROWS_AS(make_pool(pool), ConfigError);
  pool.kind = "enumerated";
  pool.bit_budget = 17.0;
  CHECK(make_pool(pool).members().size() == 5832);
  pool.kind = "bogus";
  CHECK_THROWS_AS(make_pool(pool), ConfigError);

  TimeBoundConfig tb;
  tb.form = "linear";
  tb.a = 1.0;
  CHECK(make_time_bound(tb, 100)(7) == 7);
  tb.form = "cubic";
  CHECK_THROWS_AS(make_time_bound(tb, 100), ConfigError);
}

TEST_CASE("patterns config validation") {
  ExperimentConfig cfg;
  cfg.oracle.kind = "coin";
  cfg.oracle.p = 0.5;
  cfg.seeds = {1, 2, 3};
  cfg.patterns.selectors = {"accept-all:3"};
  CHECK_NOTHROW(validate_for_patterns(cfg));

  cfg.patterns.p = 1.5;
  CHECK_THROWS_AS(validate_for_patterns(cfg), ConfigError);
  cfg.patterns.p = 0.5;
  cfg.patterns.m_max = 2;
  CHECK_THROWS_AS(validate_for_patterns(cfg), ConfigError);
  cfg.patterns.m_max = 100;
  cfg.patterns.index_set = "unknown-machine";
  CHECK_THROWS_WITH_AS(validate_for_patterns(cfg), doctest::Contains("unknown-machine"),
                       ConfigError);
  cfg.patterns.index_set = "accept-evens";
  CHECK_NOTHROW(validate_for_patterns(cfg));
}
