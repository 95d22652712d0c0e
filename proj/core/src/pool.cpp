#include "lulab/pool.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "lulab/builtins.hpp"
#include "lulab/errors.hpp"

namespace lulab {

namespace {

size_t code_length(uint32_t s) {
  const unsigned gamma = 2 * static_cast<unsigned>(std::bit_width(s)) - 1;
  const unsigned entry = static_cast<unsigned>(std::bit_width(s + 1)) + 3;
  return gamma + 3 * static_cast<size_t>(s) * entry;
}

// Valid entry values for a state count: every target 0..S+1, writes 0..2,
// both moves.
uint64_t valid_entries(uint32_t s) { return 6ull * (s + 2); }

uint64_t pool_size_capped(uint32_t s, uint64_t cap) {
  unsigned __int128 total = 1;
  for (uint32_t i = 0; i < 3 * s; ++i) {
    total *= valid_entries(s);
    if (total > cap) return cap + 1;
  }
  return static_cast<uint64_t>(total);
}

// Index runs over target-major, then write, then move, matching the bit
// order of the encoding so generation is lexicographic within a state count.
Action entry_action(uint64_t index) {
  const auto move = static_cast<Move>(index % 2);
  index /= 2;
  const auto write = static_cast<Symbol>(index % 3);
  index /= 3;
  return Action{static_cast<uint32_t>(index), write, move};
}

}  // namespace

MachinePool MachinePool::enumerate(double bit_budget, const EnumerationLimits& limits) {
  if (!(bit_budget > 0)) throw ConfigError("enumeration bit budget must be positive");

  // Count first so an oversized request fails before any generation.
  uint64_t total = 0;
  std::vector<uint32_t> state_counts;
  for (uint32_t s = 1; s <= limits.max_states; ++s) {
    if (static_cast<double>(code_length(s)) >= bit_budget) break;
    total += pool_size_capped(s, limits.member_cap);
    if (total > limits.member_cap)
      throw BudgetError("enumeration under " + std::to_string(bit_budget) +
                        " bits exceeds the member cap of " +
                        std::to_string(limits.member_cap));
    state_counts.push_back(s);
  }

  std::vector<PoolMember> members;
  members.reserve(total);
  for (uint32_t s : state_counts) {
    TransitionTable table(s);
    const uint64_t per_entry = valid_entries(s);
    const size_t entries = 3 * static_cast<size_t>(s);
    std::vector<uint64_t> odometer(entries, 0);
    for (;;) {
      for (size_t e = 0; e < entries; ++e)
        table.at(static_cast<uint32_t>(e / 3), static_cast<Symbol>(e % 3)) =
            entry_action(odometer[e]);
      MachineCode code = encode_machine(table, limits.max_states);
      const uint32_t k = code.k();
      members.push_back(PoolMember{code.bits.to_hex(), std::move(code), k});
      // Advance the odometer, last entry fastest.
      bool wrapped = false;
      size_t e = entries;
      for (;;) {
        if (e == 0) {
          wrapped = true;
          break;
        }
        --e;
        if (++odometer[e] < per_entry) break;
        odometer[e] = 0;
      }
      if (wrapped) break;
    }
  }
  std::sort(members.begin(), members.end(),
            [](const PoolMember& a, const PoolMember& b) { return a.code.bits < b.code.bits; });
  return MachinePool(PoolMode::Enumerated, std::move(members));
}

MachinePool MachinePool::curated(std::vector<PoolMember> members) {
  std::set<std::string> ids;
  for (const PoolMember& m : members) {
    if (m.declared_k == 0)
      throw ConfigError("pool member '" + m.id + "' has declared bit length 0");
    if (!ids.insert(m.id).second)
      throw ConfigError("pool has duplicate member id '" + m.id + "'");
  }
  return MachinePool(PoolMode::Curated, std::move(members));
}

std::vector<const PoolMember*> MachinePool::filtered(double bit_budget) const {
  std::vector<const PoolMember*> out;
  for (const PoolMember& m : members_)
    if (static_cast<double>(m.declared_k) < bit_budget) out.push_back(&m);
  return out;
}

PoolMember builtin_member(const std::string& name, uint32_t declared_k) {
  auto table = builtin_table(name);
  if (!table) throw ConfigError("unknown builtin machine '" + name + "'");
  MachineCode code = encode_machine(*table);
  const uint32_t k = declared_k ? declared_k : code.k();
  return PoolMember{name, std::move(code), k};
}

std::vector<PoolMember> parse_member_list(const std::string& list) {
  std::vector<PoolMember> members;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // Trim spaces.
    const auto begin = item.find_first_not_of(" \t");
    const auto end = item.find_last_not_of(" \t");
    if (begin == std::string::npos) continue;
    item = item.substr(begin, end - begin + 1);

    uint32_t k = 0;
    std::string name = item;
    const size_t colon = item.rfind(':');
    if (colon != std::string::npos) {
      uint64_t v = 0;
      const char* first = item.data() + colon + 1;
      const char* last = item.data() + item.size();
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || ptr != last || v == 0)
        throw ConfigError("bad declared bit length in pool entry '" + item + "'");
      k = static_cast<uint32_t>(v);
      name = item.substr(0, colon);
    }
    members.push_back(builtin_member(name, k));
  }
  return members;
}

MachinePool load_pool_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open pool file: " + path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();

  std::vector<PoolMember> members;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string kind, ref, kopt;
    if (!(row >> kind)) continue;
    if (!(row >> ref))
      throw ConfigError("pool file line " + std::to_string(line_no) + ": missing reference");
    uint32_t k = 0;
    if (row >> kopt) {
      if (!kopt.starts_with("k="))
        throw ConfigError("pool file line " + std::to_string(line_no) + ": expected k=<int>");
      uint64_t v = 0;
      const char* first = kopt.data() + 2;
      auto [ptr, ec] = std::from_chars(first, kopt.data() + kopt.size(), v);
      if (ec != std::errc{} || ptr != kopt.data() + kopt.size() || v == 0)
        throw ConfigError("pool file line " + std::to_string(line_no) + ": bad k value");
      k = static_cast<uint32_t>(v);
    }

    if (kind == "builtin") {
      members.push_back(builtin_member(ref, k));
    } else if (kind == "code") {
      BitString bits = BitString::from_hex(ref);
      DecodedMachine dec = decode_machine(bits);
      if (dec.consumed != bits.size())
        throw ConfigError("pool file line " + std::to_string(line_no) +
                          ": code has trailing bits");
      const uint32_t true_k = dec.machine.k();
      members.push_back(PoolMember{ref, std::move(dec.machine), k ? k : true_k});
    } else if (kind == "file") {
      const std::filesystem::path machine_path = base / ref;
      std::ifstream machine_in(machine_path);
      if (!machine_in)
        throw ConfigError("pool file line " + std::to_string(line_no) +
                          ": cannot open machine file: " + machine_path.string());
      MachineCode code = encode_machine(parse_table_text(machine_in));
      const uint32_t true_k = code.k();
      members.push_back(
          PoolMember{std::filesystem::path(ref).stem().string(), std::move(code), k ? k : true_k});
    } else {
      throw ConfigError("pool file line " + std::to_string(line_no) + ": unknown entry kind '" +
                        kind + "'");
    }
  }
  return MachinePool::curated(std::move(members));
}

}  // namespace lulab
