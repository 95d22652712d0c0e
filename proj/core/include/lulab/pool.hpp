#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lulab/machine.hpp"

namespace lulab {

struct PoolMember {
  std::string id;
  MachineCode code;
  // Bit length used wherever a score formula consumes K(.). Equal to the true
  // encoding length in enumerated pools; assigned per member in curated ones.
  uint32_t declared_k = 0;
};

enum class PoolMode { Enumerated, Curated };

struct EnumerationLimits {
  uint64_t member_cap = 1'000'000;
  uint32_t max_states = kDefaultMaxStates;
};

class MachinePool {
 public:
  // All syntactically valid codes with k < bit_budget, ordered lexicographic
  // by bits. Throws BudgetError when the pool would exceed the member cap
  // (never truncates silently).
  static MachinePool enumerate(double bit_budget, const EnumerationLimits& limits = {});
  // Members keep the given order. Throws ConfigError on duplicate ids or a
  // declared_k of zero.
  static MachinePool curated(std::vector<PoolMember> members);

  PoolMode mode() const { return mode_; }
  const std::vector<PoolMember>& members() const { return members_; }

  // Members with declared_k strictly below the bit budget, in pool order.
  std::vector<const PoolMember*> filtered(double bit_budget) const;

 private:
  MachinePool(PoolMode mode, std::vector<PoolMember> members)
      : mode_(mode), members_(std::move(members)) {}
  PoolMode mode_ = PoolMode::Curated;
  std::vector<PoolMember> members_;
};

// Builds a curated member from a builtin name. declared_k = 0 keeps the true
// encoding length.
PoolMember builtin_member(const std::string& name, uint32_t declared_k = 0);

// Inline pool syntax: comma-separated "name:k" entries, e.g.
// "accept-all:3,accept-evens:5". The ":k" suffix is optional.
std::vector<PoolMember> parse_member_list(const std::string& list);

// Pool file: one member per line.
//   builtin <name> [k=<int>]
//   code <bitlen>:<hex> [k=<int>]
//   file <path> [k=<int>]            (path relative to the pool file)
MachinePool load_pool_file(const std::string& path);

}  // namespace lulab
