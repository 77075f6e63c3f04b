#include "padic/signature.hpp"

namespace padic {

namespace {

Rational p_power(Prime p, const Integer& exponent) {
  const Rational base(p.integer());
  const Rational magnitude = pow(base, Integer(abs(exponent)).get_ui());
  return exponent >= 0 ? magnitude : Rational(1) / magnitude;
}

// Uniform digit in [0, p) from little-endian 32-bit words by rejection.
std::uint64_t next_digit(XofStream& stream, std::uint64_t p) {
  const std::uint64_t span = (std::uint64_t{1} << 32) / p * p;
  for (;;) {
    const std::uint64_t w = stream.next_u32();
    if (w < span) return w % p;
  }
}

}  // namespace

PublicKey PublicKey::create(FieldRef field, std::uint64_t q, int e, int digits,
                            std::vector<FieldElement> betas) {
  if (digits < 1) throw LatticeError("digit count must be positive");
  for (std::size_t k = 0; k < betas.size(); ++k) {
    if (elem_valuation(betas[k]) != Valuation(0)) {
      throw LatticeError("beta_" + std::to_string(k + 1) + " is not a unit");
    }
  }
  PublicKey pk;
  pk.field = std::move(field);
  pk.q = q;
  pk.e = e;
  pk.digits = digits;
  pk.lattice = std::make_shared<const PadicLattice>(betas);
  pk.betas = std::move(betas);
  return pk;
}

KeyPair assemble_keys(const ConstructionResult& built, std::uint64_t q, LatticeIndexSet s,
                      RationalMatrix a, int digits) {
  validate_index_set(s, built.basis);
  if (s.size() >= built.basis.size()) {
    throw LatticeError("rank m must be below n, otherwise the hash has no targets");
  }
  std::vector<FieldElement> betas = mix_basis(built.basis, s, a);
  PublicKey pk = PublicKey::create(built.field, q, built.basis.e(), digits, std::move(betas));
  PrivateKey sk{built.theta, built.pi, built.basis, std::move(s), std::move(a)};
  return KeyPair{std::move(pk), std::move(sk)};
}

KeyPair keygen(const ConstructionParams& params, std::size_t m, std::span<const std::uint8_t> seed,
               int digits, const BuildOptions& options) {
  const std::size_t f = static_cast<std::size_t>(params.f());
  const std::size_t n = static_cast<std::size_t>(params.n());
  if (m < 2 * f || m >= n) {
    throw LatticeError("rank m = " + std::to_string(m) + " must satisfy 2f = " +
                       std::to_string(2 * f) + " <= m < n = " + std::to_string(n));
  }
  const ConstructionResult built = build(params, options);
  DeterministicRng rng(seed, "padic/keygen");
  LatticeIndexSet s = choose_index_set(built.basis, m, rng);
  RationalMatrix a = sample_mixing_matrix(built.basis, s, rng);
  return assemble_keys(built, params.q, std::move(s), std::move(a), digits);
}

FieldElement hash_to_w(std::span<const std::uint8_t> message, std::span<const std::uint8_t> r,
                       const PublicKey& pk) {
  if (r.size() != kNonceBytes) throw HashError("r must be 32 bytes");
  Bytes seed_input{0x01};
  seed_input.insert(seed_input.end(), message.begin(), message.end());
  seed_input.insert(seed_input.end(), r.begin(), r.end());
  const Digest seed = sha3_256(seed_input);

  const std::uint64_t p = pk.p().value();
  const int n = pk.field->degree();
  // Digits multiply powers of eta = p^(-v(zeta)) zeta, a unit whenever v(zeta)
  // is an integer, so candidate residues spread over the residue field.
  Rational eta_scale(1);
  const Valuation zeta_valuation = elem_valuation(FieldElement::generator(pk.field));
  if (zeta_valuation.value().is_integer()) {
    eta_scale = p_power(pk.p(), -zeta_valuation.value().num());
  }
  for (std::uint32_t counter = 0; counter < kHashCandidateBudget; ++counter) {
    Bytes input{0x02};
    input.insert(input.end(), seed.begin(), seed.end());
    for (int i = 0; i < 4; ++i) input.push_back(static_cast<std::uint8_t>(counter >> (8 * i)));
    XofStream stream(std::move(input));
    std::vector<Rational> coeffs(n);
    Rational scale(1);
    for (int k = 0; k < n; ++k, scale *= eta_scale) {
      Integer value = 0;
      Integer place = 1;
      for (int d = 0; d < pk.digits; ++d) {
        value += place * static_cast<unsigned long>(next_digit(stream, p));
        place *= static_cast<unsigned long>(p);
      }
      coeffs[k] = Rational(value) * scale;
    }
    FieldElement t(pk.field, std::move(coeffs));
    const Valuation v = elem_valuation(t);
    if (v.is_infinite() || !v.value().is_integer()) continue;
    if (!v.value().is_zero()) t *= p_power(pk.p(), -v.value().num());
    if (pk.lattice->contains(t)) continue;
    return t;
  }
  throw HashError("no hash candidate accepted within the budget");
}

Signature sign(const PrivateKey& sk, const PublicKey& pk, std::span<const std::uint8_t> message,
               DeterministicRng& rng) {
  Bytes r = rng.bytes(kNonceBytes);
  const FieldElement t = hash_to_w(message, r, pk);
  CvpResult closest = cvp_orthogonal(t, sk.basis, sk.s);
  if (closest.distance <= Valuation(0)) {
    throw LatticeError("closest lattice vector is not within distance below 1");
  }
  return Signature{std::move(r), std::move(closest.v)};
}

VerifyReport verify_detailed(const PublicKey& pk, std::span<const std::uint8_t> message,
                             const Signature& sig) {
  VerifyReport report;
  if (!sig.v.field()->same_field(*pk.field)) {
    report.diagnostic = "v is not an element of the key's field";
    return report;
  }
  std::optional<FieldElement> t;
  try {
    t = hash_to_w(message, sig.r, pk);
    report.hash_ok = true;
  } catch (const HashError& err) {
    report.diagnostic = std::string("hash: ") + err.what();
  }
  report.in_lattice = pk.lattice->contains(sig.v);
  if (t) report.close = elem_valuation(*t - sig.v) > Valuation(0);
  if (report.diagnostic.empty()) {
    if (!report.in_lattice) {
      report.diagnostic = "v is not in the lattice";
    } else if (!report.close) {
      report.diagnostic = "|t - v| is not below 1";
    }
  }
  return report;
}

bool verify(const PublicKey& pk, std::span<const std::uint8_t> message, const Signature& sig) {
  return verify_detailed(pk, message, sig).valid();
}

}  // namespace padic
