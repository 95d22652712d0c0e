#include "doctest.h"

#include "lulab/bits.hpp"
#include "lulab/errors.hpp"

using namespace lulab;

TEST_CASE("bit strings append and index MSB first") {
  BitString b;
  b.append_value(0b1011, 4);
  CHECK(b.size() == 4);
  CHECK(b[0]);
  CHECK(!b[1]);
  CHECK(b[2]);
  CHECK(b[3]);
  CHECK(b.to_string() == "1011");
}

TEST_CASE("hex dump round trips and pads with zeros") {
  BitString b = BitString::of({1, 0, 1, 0, 0, 1});
  CHECK(b.to_hex() == "6:A4");
  CHECK(BitString::from_hex("6:A4") == b);
  CHECK(BitString::from_hex(b.to_hex()) == b);

  BitString nibble = BitString::of({1, 1, 1, 1});
  CHECK(nibble.to_hex() == "4:F");
}

TEST_CASE("hex dump parse rejects malformed input") {
  CHECK_THROWS_AS(BitString::from_hex("A4"), DecodeError);
  CHECK_THROWS_AS(BitString::from_hex("x:A4"), DecodeError);
  CHECK_THROWS_AS(BitString::from_hex("6:A"), DecodeError);
  CHECK_THROWS_AS(BitString::from_hex("6:AZ"), DecodeError);
  // Padding bits beyond the declared length must be zero.
  CHECK_THROWS_AS(BitString::from_hex("6:A7"), DecodeError);
}

TEST_CASE("prefix relation and lexicographic order") {
  BitString a = BitString::of({1, 0});
  BitString b = BitString::of({1, 0, 1});
  CHECK(a.is_prefix_of(b));
  CHECK(!b.is_prefix_of(a));
  CHECK(a.is_prefix_of(a));
  CHECK(a < b);
  CHECK(BitString::of({0, 1}) < a);
}

TEST_CASE("bit reader consumes sequentially and reports exhaustion") {
  BitString b = BitString::of({1, 1, 0, 1});
  BitReader r(b);
  CHECK(*r.read_bit());
  CHECK(*r.read_value(3) == 0b101);
  CHECK(r.consumed() == 4);
  CHECK(!r.read_bit().has_value());
  CHECK(!r.read_value(1).has_value());
}
