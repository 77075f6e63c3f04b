#ifndef PADIC_SERIALIZE_HPP_
#define PADIC_SERIALIZE_HPP_

#include <string>
#include <string_view>

#include "padic/basis_builder.hpp"
#include "padic/signature.hpp"

namespace padic {

/// Malformed key, signature or transcript text. The message names the byte
/// offset (syntax errors) or the JSON path (structural errors).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string serialize_public_key(const PublicKey& pk);
PublicKey parse_public_key(std::string_view text);

std::string serialize_private_key(const KeyPair& keys);
/// Rebuilds the basis from theta and pi and checks it against S, A and the betas.
KeyPair parse_private_key(std::string_view text);

std::string serialize_signature(const Signature& sig);
Signature parse_signature(std::string_view text, const PublicKey& pk);

/// Construction record: inputs, H, F, theta, pi, the basis grid and the certificate.
std::string serialize_transcript(const ConstructionResult& result, std::uint64_t q);

struct Transcript {
  FieldRef field;
  VectorFamily basis;
  /// "certified" field as recorded; the caller re-checks.
  bool recorded_valid = false;
};
Transcript parse_transcript(std::string_view text);

}  // namespace padic

#endif  // PADIC_SERIALIZE_HPP_
