#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lulab/machine.hpp"

namespace lulab {

// Hand-built tables for the named machines curated pools refer to. These are
// genuine transition tables; only their pool-declared bit lengths are
// synthetic.

TransitionTable accept_all_table();   // halt-accept on the first step
TransitionTable reject_all_table();   // halt-reject on the first step
TransitionTable loop_forever_table(); // walks right forever
TransitionTable accept_evens_table(); // accepts iff the input is even
// Residue DFA over MSB-first bits; accepts iff input % m == 0. m >= 1.
TransitionTable accept_multiples_table(uint32_t m);
// Binary trie over the members' bit representations; accepts exactly them.
TransitionTable member_of_table(std::vector<uint64_t> members);

// Resolves "accept-all", "reject-all", "loop-forever", "accept-evens",
// "accept-multiples-of-<m>" and "member-of-<a+b+c>". Unknown names yield
// nullopt.
std::optional<TransitionTable> builtin_table(const std::string& name);

// Plain-text table format: a "states <S>" line, then one transition per line,
//   <state> <symbol> <write> <move> <target>
// with symbols 0|1|B, moves L|R and targets <state>|accept|reject. '#' starts
// a comment. Every (state, symbol) row must appear exactly once.
TransitionTable parse_table_text(std::istream& in);
std::string table_to_text(const TransitionTable& table);

}  // namespace lulab
