#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace lulab {

// Growable MSB-first bit sequence. Machine codes are BitStrings; the textual
// dump format is "<bitlen>:<HEX>" with the bits left-aligned in nibbles and
// zero-padded at the end.
class BitString {
 public:
  BitString() = default;
  static BitString of(std::initializer_list<int> bits);
  // Parses the to_hex() format. Throws DecodeError on malformed input,
  // including nonzero padding bits.
  static BitString from_hex(const std::string& dump);

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  // Appends `width` bits of `value`, most significant first.
  void append_value(uint64_t value, unsigned width);
  void append(const BitString& other);

  bool operator[](size_t i) const { return bits_[i] != 0; }
  size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  bool is_prefix_of(const BitString& other) const;
  std::string to_string() const;  // "0101..."
  std::string to_hex() const;

  friend bool operator==(const BitString& a, const BitString& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const BitString& a, const BitString& b) { return a.bits_ < b.bits_; }

 private:
  std::vector<uint8_t> bits_;
};

// Sequential MSB-first reader. Reads return nullopt once the input runs out.
class BitReader {
 public:
  explicit BitReader(const BitString& bits) : bits_(&bits) {}

  std::optional<bool> read_bit();
  std::optional<uint64_t> read_value(unsigned width);
  size_t consumed() const { return pos_; }
  size_t remaining() const { return bits_->size() - pos_; }

 private:
  const BitString* bits_;
  size_t pos_ = 0;
};

}  // namespace lulab
