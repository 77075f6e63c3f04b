#include "padic/xof.hpp"

#include <openssl/evp.h>

#include <memory>

namespace padic {

namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};
using MdCtx = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;

MdCtx new_ctx(const EVP_MD* md, std::span<const std::uint8_t> data) {
  MdCtx ctx(EVP_MD_CTX_new());
  if (!ctx || EVP_DigestInit_ex(ctx.get(), md, nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1) {
    throw std::runtime_error("OpenSSL digest initialization failed");
  }
  return ctx;
}

}  // namespace

Digest sha3_256(std::span<const std::uint8_t> data) {
  MdCtx ctx = new_ctx(EVP_sha3_256(), data);
  Digest out{};
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 || len != out.size()) {
    throw std::runtime_error("SHA3-256 failed");
  }
  return out;
}

XofStream::XofStream(Bytes input) : input_(std::move(input)) {}

void XofStream::refill(std::size_t at_least) {
  // SHAKE output for a longer length extends the shorter one, so re-squeezing
  // from the start keeps every byte already handed out.
  std::size_t length = buffer_.empty() ? 256 : buffer_.size() * 2;
  while (length < at_least) length *= 2;
  MdCtx ctx = new_ctx(EVP_shake256(), input_);
  Bytes out(length);
  if (EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1) {
    throw std::runtime_error("SHAKE256 failed");
  }
  buffer_ = std::move(out);
}

std::uint8_t XofStream::next_byte() {
  if (position_ >= buffer_.size()) refill(position_ + 1);
  return buffer_[position_++];
}

std::uint32_t XofStream::next_u32() {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(next_byte()) << (8 * i);
  return v;
}

Bytes XofStream::take(std::size_t count) {
  Bytes out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next_byte());
  return out;
}

DeterministicRng::DeterministicRng(std::span<const std::uint8_t> seed, std::string_view label)
    : stream_([&] {
        Bytes input(label.begin(), label.end());
        input.push_back(0);
        input.insert(input.end(), seed.begin(), seed.end());
        return input;
      }()) {}

std::uint64_t DeterministicRng::below(std::uint64_t bound) {
  if (bound == 0) throw ArithmeticError("empty sampling range");
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(stream_.next_byte()) << (8 * i);
    if (v <= limit) return v % bound;
  }
}

Integer DeterministicRng::below(const Integer& bound) {
  if (bound <= 0) throw ArithmeticError("empty sampling range");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t nbytes = (bits + 7) / 8;
  for (;;) {
    Bytes raw = stream_.take(nbytes);
    Integer v;
    mpz_import(v.get_mpz_t(), raw.size(), -1, 1, 0, 0, raw.data());
    // Mask to the bit length so the rejection rate stays below one half.
    Integer mask = (Integer(1) << bits) - 1;
    v &= mask;
    if (v < bound) return v;
  }
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2) throw ArithmeticError("hex string has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ArithmeticError(std::string("invalid hex character '") + c + "'");
  };
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return out;
}

}  // namespace padic
