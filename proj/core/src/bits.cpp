#include "lulab/bits.hpp"

#include <algorithm>
#include <cctype>

#include "lulab/errors.hpp"

namespace lulab {

BitString BitString::of(std::initializer_list<int> bits) {
  BitString out;
  for (int b : bits) out.push_back(b != 0);
  return out;
}

void BitString::append_value(uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) push_back((value >> i) & 1u);
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

bool BitString::is_prefix_of(const BitString& other) const {
  if (size() > other.size()) return false;
  return std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(size());
  for (uint8_t b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::string BitString::to_hex() const {
  std::string out = std::to_string(size());
  out.push_back(':');
  static const char* digits = "0123456789ABCDEF";
  for (size_t i = 0; i < size(); i += 4) {
    unsigned nibble = 0;
    for (size_t j = 0; j < 4; ++j) {
      nibble <<= 1;
      if (i + j < size() && bits_[i + j]) nibble |= 1;
    }
    out.push_back(digits[nibble]);
  }
  return out;
}

BitString BitString::from_hex(const std::string& dump) {
  auto colon = dump.find(':');
  if (colon == std::string::npos) throw DecodeError("bit dump missing ':' separator: " + dump);
  size_t len = 0;
  const std::string count = dump.substr(0, colon);
  if (count.empty()) throw DecodeError("bit dump missing bit length: " + dump);
  for (char c : count) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DecodeError("bit dump has non-numeric bit length: " + dump);
    len = len * 10 + static_cast<size_t>(c - '0');
  }
  const std::string hex = dump.substr(colon + 1);
  if (hex.size() != (len + 3) / 4)
    throw DecodeError("bit dump hex length does not match bit length: " + dump);
  BitString out;
  for (size_t i = 0; i < hex.size(); ++i) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(hex[i])));
    unsigned v;
    if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
    else if (c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A' + 10);
    else throw DecodeError("bit dump has non-hex digit: " + dump);
    for (unsigned j = 4; j-- > 0;) {
      bool bit = (v >> j) & 1u;
      if (out.size() < len) {
        out.push_back(bit);
      } else if (bit) {
        throw DecodeError("bit dump has nonzero padding bits: " + dump);
      }
    }
  }
  if (out.size() != len) throw DecodeError("bit dump shorter than declared: " + dump);
  return out;
}

std::optional<bool> BitReader::read_bit() {
  if (pos_ >= bits_->size()) return std::nullopt;
  return (*bits_)[pos_++];
}

std::optional<uint64_t> BitReader::read_value(unsigned width) {
  if (pos_ + width > bits_->size()) return std::nullopt;
  uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | ((*bits_)[pos_++] ? 1u : 0u);
  return v;
}

}  // namespace lulab
