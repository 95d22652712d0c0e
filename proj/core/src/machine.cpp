#include "lulab/machine.hpp"

#include <bit>
#include <string>

#include "lulab/errors.hpp"

namespace lulab {

namespace {

unsigned target_width(uint32_t num_states) {
  // Targets range over 0..S+1.
  return static_cast<unsigned>(std::bit_width(num_states + 1));
}

void append_gamma(BitString& bits, uint32_t value) {
  const unsigned n = static_cast<unsigned>(std::bit_width(value));
  for (unsigned i = 1; i < n; ++i) bits.push_back(false);
  bits.append_value(value, n);
}

const Symbol kSymbolOrder[3] = {Symbol::Zero, Symbol::One, Symbol::Blank};

}  // namespace

MachineCode encode_machine(const TransitionTable& table, uint32_t max_states) {
  const uint32_t s = table.num_states();
  if (s == 0) throw EncodeError("table needs at least one state");
  if (s > max_states)
    throw EncodeError("table has " + std::to_string(s) + " states, maximum is " +
                      std::to_string(max_states));
  BitString bits;
  append_gamma(bits, s);
  const unsigned tw = target_width(s);
  for (uint32_t state = 0; state < s; ++state) {
    for (Symbol sym : kSymbolOrder) {
      const Action& a = table.at(state, sym);
      if (a.target > table.reject_target())
        throw EncodeError("entry (" + std::to_string(state) + ", " +
                          std::to_string(static_cast<int>(sym)) + ") targets state " +
                          std::to_string(a.target) + ", beyond halt-reject");
      bits.append_value(a.target, tw);
      bits.append_value(static_cast<uint64_t>(a.write), 2);
      bits.append_value(static_cast<uint64_t>(a.move), 1);
    }
  }
  return MachineCode{std::move(bits), table};
}

DecodedMachine decode_machine(const BitString& bits, uint32_t max_states) {
  BitReader reader(bits);
  // Gamma header: leading zeros count the extra bits of the state count.
  unsigned zeros = 0;
  for (;;) {
    auto b = reader.read_bit();
    if (!b) {
      throw DecodeError(bits.empty() ? "empty input, no state-count header"
                                     : "truncated state-count header");
    }
    if (*b) break;
    if (++zeros > 31) throw DecodeError("state-count header claims an absurd length");
  }
  uint64_t s = 1;
  for (unsigned i = 0; i < zeros; ++i) {
    auto b = reader.read_bit();
    if (!b) throw DecodeError("truncated state-count header");
    s = (s << 1) | (*b ? 1u : 0u);
  }
  if (s > max_states)
    throw DecodeError("state count " + std::to_string(s) + " exceeds maximum " +
                      std::to_string(max_states));
  TransitionTable table(static_cast<uint32_t>(s));
  const unsigned tw = target_width(table.num_states());
  for (uint32_t state = 0; state < table.num_states(); ++state) {
    for (Symbol sym : kSymbolOrder) {
      const std::string field = "entry (" + std::to_string(state) + ", symbol " +
                                std::to_string(static_cast<int>(sym)) + ")";
      auto target = reader.read_value(tw);
      if (!target) throw DecodeError("truncated target in " + field);
      if (*target > table.reject_target())
        throw DecodeError("invalid target " + std::to_string(*target) + " in " + field);
      auto write = reader.read_value(2);
      if (!write) throw DecodeError("truncated write symbol in " + field);
      if (*write > 2) throw DecodeError("invalid write symbol in " + field);
      auto move = reader.read_value(1);
      if (!move) throw DecodeError("truncated move bit in " + field);
      table.at(state, sym) = Action{static_cast<uint32_t>(*target),
                                    static_cast<Symbol>(*write),
                                    static_cast<Move>(*move)};
    }
  }
  const size_t consumed = reader.consumed();
  BitString code;
  for (size_t i = 0; i < consumed; ++i) code.push_back(bits[i]);
  return DecodedMachine{MachineCode{std::move(code), std::move(table)}, consumed};
}

std::optional<DecodedMachine> try_decode_machine(const BitString& bits, uint32_t max_states) {
  try {
    return decode_machine(bits, max_states);
  } catch (const DecodeError&) {
    return std::nullopt;
  }
}

std::vector<Symbol> input_tape(uint64_t n) {
  if (n == 0) return {Symbol::Zero};
  std::vector<Symbol> tape;
  for (unsigned i = static_cast<unsigned>(std::bit_width(n)); i-- > 0;)
    tape.push_back((n >> i) & 1u ? Symbol::One : Symbol::Zero);
  return tape;
}

SimOutcome simulate(const TransitionTable& table, uint64_t input, uint64_t budget) {
  std::vector<Symbol> right = input_tape(input);  // cells 0, 1, 2, ...
  std::vector<Symbol> left;                       // cells -1, -2, ... at index -cell-1
  int64_t head = 0;
  uint32_t state = 0;
  const uint32_t accept = table.accept_target();
  const uint32_t reject = table.reject_target();

  auto cell_at = [&](int64_t pos) -> Symbol {
    if (pos >= 0)
      return pos < static_cast<int64_t>(right.size()) ? right[pos] : Symbol::Blank;
    const size_t i = static_cast<size_t>(-pos - 1);
    return i < left.size() ? left[i] : Symbol::Blank;
  };
  auto write_at = [&](int64_t pos, Symbol sym) {
    if (pos >= 0) {
      if (pos >= static_cast<int64_t>(right.size()))
        right.resize(static_cast<size_t>(pos) + 1, Symbol::Blank);
      right[pos] = sym;
    } else {
      const size_t i = static_cast<size_t>(-pos - 1);
      if (i >= left.size()) left.resize(i + 1, Symbol::Blank);
      left[i] = sym;
    }
  };

  for (uint64_t step = 1; step <= budget; ++step) {
    const Action& a = table.at(state, cell_at(head));
    if (a.target == accept) return {SimKind::Accept, step};
    if (a.target == reject) return {SimKind::Reject, step};
    write_at(head, a.write);
    head += a.move == Move::Right ? 1 : -1;
    state = a.target;
  }
  return {SimKind::OutOfBudget, budget};
}

const char* to_string(SimKind kind) {
  switch (kind) {
    case SimKind::Accept: return "Accept";
    case SimKind::Reject: return "Reject";
    case SimKind::OutOfBudget: return "OutOfBudget";
  }
  return "?";
}

}  // namespace lulab
