#ifndef PADIC_XOF_HPP_
#define PADIC_XOF_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padic/rational.hpp"

namespace padic {

using Bytes = std::vector<std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

/// Identifier recorded in public keys for the digest/XOF pair used by hash_to_W.
inline constexpr std::string_view kXofId = "sha3-256/shake256";

Digest sha3_256(std::span<const std::uint8_t> data);

/// SHAKE256 output stream over a fixed input. Bytes are produced lazily; the
/// stream is a prefix of SHAKE256(input) of unbounded length.
class XofStream {
 public:
  explicit XofStream(Bytes input);

  std::uint8_t next_byte();
  /// Little-endian 32-bit word.
  std::uint32_t next_u32();
  Bytes take(std::size_t count);

 private:
  void refill(std::size_t at_least);

  Bytes input_;
  Bytes buffer_;
  std::size_t position_ = 0;
};

/// Reproducible randomness derived from a seed and a purpose label via SHAKE256.
class DeterministicRng {
 public:
  DeterministicRng(std::span<const std::uint8_t> seed, std::string_view label);

  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  Integer below(const Integer& bound);
  Bytes bytes(std::size_t count) { return stream_.take(count); }

 private:
  XofStream stream_;
};

std::string to_hex(std::span<const std::uint8_t> bytes);
/// Throws ArithmeticError on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

}  // namespace padic

#endif  // PADIC_XOF_HPP_
