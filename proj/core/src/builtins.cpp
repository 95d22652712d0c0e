#include "lulab/builtins.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>

#include "lulab/errors.hpp"

namespace lulab {

namespace {

void halt_everywhere(TransitionTable& t, uint32_t target) {
  for (Symbol sym : {Symbol::Zero, Symbol::One, Symbol::Blank})
    t.at(0, sym) = Action{target, Symbol::Zero, Move::Right};
}

std::optional<uint64_t> parse_uint(std::string_view text) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

}  // namespace

TransitionTable accept_all_table() {
  TransitionTable t(1);
  halt_everywhere(t, t.accept_target());
  return t;
}

TransitionTable reject_all_table() {
  TransitionTable t(1);
  halt_everywhere(t, t.reject_target());
  return t;
}

TransitionTable loop_forever_table() {
  TransitionTable t(1);
  for (Symbol sym : {Symbol::Zero, Symbol::One, Symbol::Blank})
    t.at(0, sym) = Action{0, sym, Move::Right};
  return t;
}

TransitionTable accept_multiples_table(uint32_t m) {
  if (m == 0) throw EncodeError("accept-multiples-of-0 is not a machine");
  // State r holds (prefix value) mod m while scanning MSB-first.
  TransitionTable t(m);
  for (uint32_t r = 0; r < m; ++r) {
    t.at(r, Symbol::Zero) = Action{(2 * r) % m, Symbol::Zero, Move::Right};
    t.at(r, Symbol::One) = Action{(2 * r + 1) % m, Symbol::One, Move::Right};
    t.at(r, Symbol::Blank) =
        Action{r == 0 ? t.accept_target() : t.reject_target(), Symbol::Zero, Move::Right};
  }
  return t;
}

TransitionTable accept_evens_table() { return accept_multiples_table(2); }

TransitionTable member_of_table(std::vector<uint64_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  struct Node {
    int child[2] = {-1, -1};
    bool terminal = false;
  };
  std::vector<Node> trie(1);
  for (uint64_t n : members) {
    size_t node = 0;
    for (Symbol sym : input_tape(n)) {
      const int bit = sym == Symbol::One ? 1 : 0;
      if (trie[node].child[bit] < 0) {
        trie[node].child[bit] = static_cast<int>(trie.size());
        trie.emplace_back();
      }
      node = static_cast<size_t>(trie[node].child[bit]);
    }
    trie[node].terminal = true;
  }

  TransitionTable t(static_cast<uint32_t>(trie.size()));
  for (uint32_t s = 0; s < trie.size(); ++s) {
    for (int bit = 0; bit < 2; ++bit) {
      const Symbol sym = bit ? Symbol::One : Symbol::Zero;
      const int child = trie[s].child[bit];
      t.at(s, sym) = child >= 0 ? Action{static_cast<uint32_t>(child), sym, Move::Right}
                                : Action{t.reject_target(), sym, Move::Right};
    }
    t.at(s, Symbol::Blank) =
        Action{trie[s].terminal ? t.accept_target() : t.reject_target(), Symbol::Zero, Move::Right};
  }
  return t;
}

std::optional<TransitionTable> builtin_table(const std::string& name) {
  if (name == "accept-all") return accept_all_table();
  if (name == "reject-all") return reject_all_table();
  if (name == "loop-forever") return loop_forever_table();
  if (name == "accept-evens") return accept_evens_table();
  static const std::string kMultiples = "accept-multiples-of-";
  if (name.starts_with(kMultiples)) {
    auto m = parse_uint(std::string_view(name).substr(kMultiples.size()));
    if (!m || *m == 0 || *m > kDefaultMaxStates) return std::nullopt;
    return accept_multiples_table(static_cast<uint32_t>(*m));
  }
  static const std::string kMemberOf = "member-of-";
  if (name.starts_with(kMemberOf)) {
    std::vector<uint64_t> members;
    std::string_view rest = std::string_view(name).substr(kMemberOf.size());
    while (!rest.empty()) {
      const size_t plus = rest.find('+');
      auto v = parse_uint(rest.substr(0, plus));
      if (!v) return std::nullopt;
      members.push_back(*v);
      if (plus == std::string_view::npos) break;
      rest.remove_prefix(plus + 1);
    }
    if (members.empty()) return std::nullopt;
    return member_of_table(std::move(members));
  }
  return std::nullopt;
}

namespace {

Symbol parse_symbol(const std::string& tok, int line) {
  if (tok == "0") return Symbol::Zero;
  if (tok == "1") return Symbol::One;
  if (tok == "B" || tok == "b") return Symbol::Blank;
  throw ConfigError("machine file line " + std::to_string(line) + ": bad symbol '" + tok + "'");
}

}  // namespace

TransitionTable parse_table_text(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<TransitionTable> table;
  std::vector<bool> seen;

  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string first;
    if (!(row >> first)) continue;

    if (!table) {
      uint64_t s = 0;
      std::string count;
      if (first != "states" || !(row >> count) || !parse_uint(count))
        throw ConfigError("machine file line " + std::to_string(line_no) +
                          ": expected 'states <count>' first");
      s = *parse_uint(count);
      if (s == 0 || s > kDefaultMaxStates)
        throw ConfigError("machine file line " + std::to_string(line_no) +
                          ": state count out of range");
      table.emplace(static_cast<uint32_t>(s));
      seen.assign(3 * s, false);
      continue;
    }

    std::string sym_tok, write_tok, move_tok, target_tok;
    if (!(row >> sym_tok >> write_tok >> move_tok >> target_tok))
      throw ConfigError("machine file line " + std::to_string(line_no) +
                        ": expected '<state> <symbol> <write> <move> <target>'");
    auto state = parse_uint(first);
    if (!state || *state >= table->num_states())
      throw ConfigError("machine file line " + std::to_string(line_no) + ": bad state '" +
                        first + "'");
    const Symbol sym = parse_symbol(sym_tok, line_no);
    const Symbol write = parse_symbol(write_tok, line_no);
    Move move;
    if (move_tok == "L" || move_tok == "l") move = Move::Left;
    else if (move_tok == "R" || move_tok == "r") move = Move::Right;
    else throw ConfigError("machine file line " + std::to_string(line_no) + ": bad move '" +
                           move_tok + "'");
    uint32_t target;
    if (target_tok == "accept") target = table->accept_target();
    else if (target_tok == "reject") target = table->reject_target();
    else {
      auto v = parse_uint(target_tok);
      if (!v || *v >= table->num_states())
        throw ConfigError("machine file line " + std::to_string(line_no) + ": bad target '" +
                          target_tok + "'");
      target = static_cast<uint32_t>(*v);
    }
    const size_t idx = 3 * *state + static_cast<size_t>(sym);
    if (seen[idx])
      throw ConfigError("machine file line " + std::to_string(line_no) +
                        ": duplicate row for state " + first + " symbol " + sym_tok);
    seen[idx] = true;
    table->at(static_cast<uint32_t>(*state), sym) = Action{target, write, move};
  }

  if (!table) throw ConfigError("machine file is empty");
  for (size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw ConfigError("machine file is missing the row for state " + std::to_string(i / 3) +
                        " symbol " + std::to_string(i % 3));
  return *table;
}

std::string table_to_text(const TransitionTable& table) {
  auto sym_text = [](Symbol s) {
    switch (s) {
      case Symbol::Zero: return "0";
      case Symbol::One: return "1";
      default: return "B";
    }
  };
  std::string out = "states " + std::to_string(table.num_states()) + "\n";
  for (uint32_t state = 0; state < table.num_states(); ++state) {
    for (Symbol sym : {Symbol::Zero, Symbol::One, Symbol::Blank}) {
      const Action& a = table.at(state, sym);
      out += std::to_string(state);
      out += ' ';
      out += sym_text(sym);
      out += ' ';
      out += sym_text(a.write);
      out += a.move == Move::Left ? " L " : " R ";
      if (a.target == table.accept_target()) out += "accept";
      else if (a.target == table.reject_target()) out += "reject";
      else out += std::to_string(a.target);
      out += '\n';
    }
  }
  return out;
}

}  // namespace lulab
