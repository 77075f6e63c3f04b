#include <gtest/gtest.h>

#include <string>

#include "padic/xof.hpp"

using namespace padic;

namespace {

Bytes ascii(const std::string& s) { return Bytes(s.begin(), s.end()); }

}  // namespace

TEST(Sha3, KnownAnswers) {
  EXPECT_EQ(to_hex(sha3_256(Bytes{})),
            "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a");
  EXPECT_EQ(to_hex(sha3_256(ascii("abc"))),
            "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532");
}

TEST(Shake256, KnownAnswerAndPrefixProperty) {
  XofStream empty(Bytes{});
  EXPECT_EQ(to_hex(empty.take(32)),
            "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f");

  // Reading in small pieces gives the same stream as one large read.
  XofStream a(ascii("stream"));
  XofStream b(ascii("stream"));
  Bytes pieces;
  for (int i = 0; i < 700; ++i) pieces.push_back(a.next_byte());
  EXPECT_EQ(pieces, b.take(700));
}

TEST(Shake256, LittleEndianWords) {
  XofStream a(ascii("words"));
  XofStream b(ascii("words"));
  const Bytes raw = a.take(4);
  const std::uint32_t expected = raw[0] | (raw[1] << 8) | (raw[2] << 16) |
                                 (static_cast<std::uint32_t>(raw[3]) << 24);
  EXPECT_EQ(b.next_u32(), expected);
}

TEST(DeterministicRng, ReproducibleAndLabelSeparated) {
  const Bytes seed{1, 2, 3};
  DeterministicRng a(seed, "one");
  DeterministicRng b(seed, "one");
  DeterministicRng c(seed, "two");
  EXPECT_EQ(a.bytes(16), b.bytes(16));
  EXPECT_NE(DeterministicRng(seed, "one").bytes(16), c.bytes(16));
}

TEST(DeterministicRng, BelowIsInRangeAndRoughlyUniform) {
  DeterministicRng rng(Bytes{9}, "below");
  std::vector<int> counts(6);
  for (int i = 0; i < 6000; ++i) {
    const auto x = rng.below(6);
    ASSERT_LT(x, 6u);
    ++counts[x];
  }
  for (int c : counts) {
    EXPECT_GT(c, 850);
    EXPECT_LT(c, 1150);
  }
  const Integer bound("123456789012345678901234567890");
  for (int i = 0; i < 50; ++i) {
    const Integer x = rng.below(bound);
    EXPECT_GE(x, 0);
    EXPECT_LT(x, bound);
  }
  EXPECT_EQ(rng.below(1), 0u);
}

TEST(Hex, RoundTripAndErrors) {
  const Bytes data{0x00, 0x7f, 0xff, 0x10};
  EXPECT_EQ(to_hex(data), "007fff10");
  EXPECT_EQ(from_hex("007FFF10"), data);
  EXPECT_THROW(from_hex("abc"), ArithmeticError);
  EXPECT_THROW(from_hex("zz"), ArithmeticError);
}
