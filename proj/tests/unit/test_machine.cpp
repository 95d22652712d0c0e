#include "doctest.h"

#include "lulab/builtins.hpp"
#include "lulab/errors.hpp"
#include "lulab/machine.hpp"
#include "lulab/rng.hpp"

using namespace lulab;

namespace {

TransitionTable random_table(SplitMix64& rng, uint32_t max_states = 3) {
  const uint32_t s = 1 + static_cast<uint32_t>(rng.next_below(max_states));
  TransitionTable t(s);
  for (uint32_t state = 0; state < s; ++state) {
    for (Symbol sym : {Symbol::Zero, Symbol::One, Symbol::Blank}) {
      t.at(state, sym) = Action{static_cast<uint32_t>(rng.next_below(s + 2)),
                                static_cast<Symbol>(rng.next_below(3)),
                                static_cast<Move>(rng.next_below(2))};
    }
  }
  return t;
}

}  // namespace

TEST_CASE("one-state halting machine encodes to the minimal 16-bit code") {
  // Grammar: gamma(1) is one bit, each of the 3 entries is 2+2+1 bits.
  MachineCode code = encode_machine(accept_all_table());
  CHECK(code.k() == 16);
  CHECK(code.bits.to_hex() == "16:A529");
}

TEST_CASE("encode/decode round trips random tables exactly") {
  SplitMix64 rng(0x1234);
  for (int i = 0; i < 2000; ++i) {
    TransitionTable t = random_table(rng);
    MachineCode code = encode_machine(t);
    DecodedMachine dec = decode_machine(code.bits);
    CHECK(dec.consumed == code.k());
    CHECK(dec.machine.table == t);
    CHECK(dec.machine.bits == code.bits);
  }
}

TEST_CASE("decoding ignores trailing bits and reports consumption") {
  MachineCode code = encode_machine(accept_evens_table());
  BitString padded = code.bits;
  padded.append_value(0b101, 3);
  DecodedMachine dec = decode_machine(padded);
  CHECK(dec.consumed == code.k());
  CHECK(dec.machine.table == accept_evens_table());
}

TEST_CASE("decode errors identify the failing field") {
  CHECK_THROWS_WITH_AS(decode_machine(BitString{}), doctest::Contains("empty input"),
                       DecodeError);

  // A valid code minus its last bit no longer parses.
  MachineCode code = encode_machine(accept_all_table());
  BitString truncated;
  for (size_t i = 0; i + 1 < code.bits.size(); ++i) truncated.push_back(code.bits[i]);
  CHECK_THROWS_AS(decode_machine(truncated), DecodeError);

  // One state: targets above 2 are invalid, writes of 3 are invalid.
  BitString bad_target = BitString::of({1, /*target*/ 1, 1, /*write*/ 0, 0, /*move*/ 1});
  for (int i = 0; i < 10; ++i) bad_target.push_back(false);
  CHECK_THROWS_WITH_AS(decode_machine(bad_target), doctest::Contains("invalid target"),
                       DecodeError);

  BitString bad_write = BitString::of({1, /*target*/ 0, 1, /*write*/ 1, 1, /*move*/ 1});
  for (int i = 0; i < 10; ++i) bad_write.push_back(false);
  CHECK_THROWS_WITH_AS(decode_machine(bad_write), doctest::Contains("invalid write"),
                       DecodeError);

  BitString huge_state_count;
  for (int i = 0; i < 12; ++i) huge_state_count.push_back(false);
  huge_state_count.push_back(true);
  for (int i = 0; i < 12; ++i) huge_state_count.push_back(true);
  CHECK_THROWS_WITH_AS(decode_machine(huge_state_count), doctest::Contains("exceeds maximum"),
                       DecodeError);
}

TEST_CASE("encode rejects oversized or malformed tables") {
  CHECK_THROWS_AS(encode_machine(accept_multiples_table(5), 4), EncodeError);
  TransitionTable bad(1);
  bad.at(0, Symbol::Zero).target = 7;
  CHECK_THROWS_AS(encode_machine(bad), EncodeError);
}

TEST_CASE("distinct codes are never prefixes of each other") {
  SplitMix64 rng(0x77);
  std::vector<BitString> codes;
  codes.push_back(encode_machine(accept_all_table()).bits);
  codes.push_back(encode_machine(accept_evens_table()).bits);
  codes.push_back(encode_machine(accept_multiples_table(3)).bits);
  for (int i = 0; i < 50; ++i) codes.push_back(encode_machine(random_table(rng, 5)).bits);
  for (const BitString& a : codes) {
    for (const BitString& b : codes) {
      if (a == b) continue;
      CHECK(!a.is_prefix_of(b));
    }
  }
}

TEST_CASE("input tape is MSB-first binary") {
  CHECK(input_tape(0) == std::vector<Symbol>{Symbol::Zero});
  CHECK(input_tape(6) == std::vector<Symbol>{Symbol::One, Symbol::One, Symbol::Zero});
  CHECK(input_tape(1) == std::vector<Symbol>{Symbol::One});
}

TEST_CASE("simulate basics") {
  const TransitionTable accept = accept_all_table();
  SimOutcome o = simulate(accept, 7, 10);
  CHECK(o.kind == SimKind::Accept);
  CHECK(o.steps_used <= 10);

  const TransitionTable loop = loop_forever_table();
  o = simulate(loop, 3, 100);
  CHECK(o.kind == SimKind::OutOfBudget);
  CHECK(o.steps_used == 100);

  o = simulate(accept, 7, 0);
  CHECK(o.kind == SimKind::OutOfBudget);
  CHECK(o.steps_used == 0);
}

TEST_CASE("parity machine traced by hand") {
  const TransitionTable evens = accept_evens_table();
  SimOutcome even = simulate(evens, 6, 36);
  CHECK(even.kind == SimKind::Accept);
  CHECK(even.steps_used == 4);  // three bits, then the blank
  SimOutcome odd = simulate(evens, 7, 49);
  CHECK(odd.kind == SimKind::Reject);
  CHECK(odd.steps_used == 4);
}

TEST_CASE("simulation is deterministic and budget-monotone") {
  SplitMix64 rng(0xBEEF);
  for (int i = 0; i < 4000; ++i) {
    TransitionTable t = random_table(rng);
    const uint64_t input = rng.next_below(1 << 20);
    const uint64_t budget = rng.next_below(256);
    const SimOutcome a = simulate(t, input, budget);
    const SimOutcome b = simulate(t, input, budget);
    CHECK(a == b);
    if (a.kind != SimKind::OutOfBudget) {
      const SimOutcome more = simulate(t, input, budget + 1 + rng.next_below(64));
      CHECK(more.kind == a.kind);
      CHECK(more.steps_used == a.steps_used);
    }
  }
}
