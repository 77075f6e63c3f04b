#ifndef PADIC_SIGNATURE_HPP_
#define PADIC_SIGNATURE_HPP_

#include <memory>
#include <string>
#include <vector>

#include "padic/basis_builder.hpp"
#include "padic/lattice.hpp"
#include "padic/xof.hpp"

namespace padic {

inline constexpr int kFormatVersion = 1;
inline constexpr int kDefaultDigits = 32;
inline constexpr int kHashCandidateBudget = 256;
inline constexpr std::size_t kNonceBytes = 32;

class HashError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PublicKey {
  FieldRef field;
  std::uint64_t q = 0;
  int e = 0;
  /// Base-p digits per hashed coefficient.
  int digits = kDefaultDigits;
  std::string xof_id{kXofId};
  std::vector<FieldElement> betas;
  std::shared_ptr<const PadicLattice> lattice;

  /// Checks that every beta is a unit and builds the lattice.
  static PublicKey create(FieldRef field, std::uint64_t q, int e, int digits,
                          std::vector<FieldElement> betas);
  Prime p() const { return field->p(); }
  std::size_t m() const { return betas.size(); }
};

struct PrivateKey {
  FieldElement theta;
  FieldElement pi;
  OrthogonalBasis basis;
  LatticeIndexSet s;
  RationalMatrix a;
};

struct KeyPair {
  PublicKey pk;
  PrivateKey sk;
};

struct Signature {
  Bytes r;
  FieldElement v;
};

/// Keys from an existing construction with explicit S and A.
KeyPair assemble_keys(const ConstructionResult& built, std::uint64_t q, LatticeIndexSet s,
                      RationalMatrix a, int digits = kDefaultDigits);

/// Builds the field and draws S and A from the seed. Requires 2f <= m < n:
/// with m = n every unit lies in the lattice and the hash has no targets.
KeyPair keygen(const ConstructionParams& params, std::size_t m, std::span<const std::uint8_t> seed,
               int digits = kDefaultDigits, const BuildOptions& options = {});

/// Deterministic element of {x : |x| = 1, x not in L} derived from message and r.
FieldElement hash_to_w(std::span<const std::uint8_t> message, std::span<const std::uint8_t> r,
                       const PublicKey& pk);

Signature sign(const PrivateKey& sk, const PublicKey& pk, std::span<const std::uint8_t> message,
               DeterministicRng& rng);

struct VerifyReport {
  bool hash_ok = false;
  bool in_lattice = false;
  bool close = false;
  std::string diagnostic;

  bool valid() const { return hash_ok && in_lattice && close; }
};

VerifyReport verify_detailed(const PublicKey& pk, std::span<const std::uint8_t> message,
                             const Signature& sig);
bool verify(const PublicKey& pk, std::span<const std::uint8_t> message, const Signature& sig);

}  // namespace padic

#endif  // PADIC_SIGNATURE_HPP_
