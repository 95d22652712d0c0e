#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lulab/bits.hpp"

namespace lulab {

// Single-tape machine over the alphabet {0, 1, blank} with explicit
// halt-accept and halt-reject targets.
//
// Code grammar (self-delimiting, hence prefix-free):
//   state count S      Elias-gamma: (bit_width(S)-1) zeros, then S in
//                      bit_width(S) bits, MSB first
//   3*S entries        row-major by state, symbols in order 0, 1, blank;
//                      each entry is fixed width:
//                        target   bit_width(S+1) bits; values 0..S-1 address
//                                 states, S = halt-accept, S+1 = halt-reject
//                        write    2 bits (0, 1, blank; value 3 is invalid)
//                        move     1 bit (0 = left, 1 = right)
// Halt entries still carry write/move fields; the codec preserves them and
// the simulator ignores them.

enum class Symbol : uint8_t { Zero = 0, One = 1, Blank = 2 };
enum class Move : uint8_t { Left = 0, Right = 1 };

struct Action {
  uint32_t target = 0;
  Symbol write = Symbol::Zero;
  Move move = Move::Right;
  friend bool operator==(const Action&, const Action&) = default;
};

class TransitionTable {
 public:
  explicit TransitionTable(uint32_t num_states)
      : num_states_(num_states), rows_(3 * static_cast<size_t>(num_states)) {}

  uint32_t num_states() const { return num_states_; }
  uint32_t accept_target() const { return num_states_; }
  uint32_t reject_target() const { return num_states_ + 1; }

  Action& at(uint32_t state, Symbol sym) { return rows_[index(state, sym)]; }
  const Action& at(uint32_t state, Symbol sym) const { return rows_[index(state, sym)]; }

  friend bool operator==(const TransitionTable&, const TransitionTable&) = default;

 private:
  size_t index(uint32_t state, Symbol sym) const {
    return 3 * static_cast<size_t>(state) + static_cast<size_t>(sym);
  }
  uint32_t num_states_;
  std::vector<Action> rows_;
};

struct MachineCode {
  BitString bits;
  TransitionTable table;
  uint32_t k() const { return static_cast<uint32_t>(bits.size()); }
};

inline constexpr uint32_t kDefaultMaxStates = 64;

// Throws EncodeError for empty tables, too many states, or out-of-range
// targets. decode_machine(encode_machine(t).bits) reproduces t exactly.
MachineCode encode_machine(const TransitionTable& table,
                           uint32_t max_states = kDefaultMaxStates);

struct DecodedMachine {
  MachineCode machine;
  size_t consumed;  // == machine.k(); trailing bits are untouched
};

// Throws DecodeError naming the failing field.
DecodedMachine decode_machine(const BitString& bits,
                              uint32_t max_states = kDefaultMaxStates);
std::optional<DecodedMachine> try_decode_machine(const BitString& bits,
                                                 uint32_t max_states = kDefaultMaxStates);

enum class SimKind : uint8_t { Accept, Reject, OutOfBudget };

struct SimOutcome {
  SimKind kind;
  uint64_t steps_used;  // <= budget; == budget when kind is OutOfBudget
  friend bool operator==(const SimOutcome&, const SimOutcome&) = default;
};

// Input n written in binary, most significant bit first; n = 0 is the single
// digit 0. The head starts on the leftmost bit.
std::vector<Symbol> input_tape(uint64_t n);

// Pure function of its arguments. Reaching a halt target consumes the step
// in which it is reached; Accept/Reject are reported only when that happens
// within `budget` steps.
SimOutcome simulate(const TransitionTable& table, uint64_t input, uint64_t budget);

const char* to_string(SimKind kind);

}  // namespace lulab
