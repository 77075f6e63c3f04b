#include "padic/serialize.hpp"

#include <json.hpp>

namespace padic {

namespace {

using nlohmann::json;

constexpr std::string_view kPrivateWarning =
    "PRIVATE KEY: theta, pi, S and A allow forging signatures. Do not share this file.";

std::string rational_text(const Rational& x) { return x.str(); }

json rational_list(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(rational_text(x));
  return out;
}

json element_json(const FieldElement& x) { return rational_list(x.coords()); }

json poly_json(const RationalPoly& f) { return rational_list(f.coefficients()); }

json matrix_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(rational_list(m.row(r)));
  return out;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    throw FormatError("malformed JSON at byte " + std::to_string(err.byte) + ": " + err.what());
  }
}

// Field access with the JSON path carried into every error message.
class Reader {
 public:
  Reader(const json& node, std::string path) : node_(node), path_(std::move(path)) {}

  Reader at(const std::string& key) const {
    if (!node_.is_object()) fail("expected an object");
    auto it = node_.find(key);
    if (it == node_.end()) throw FormatError(path_ + "/" + key + ": missing field");
    return Reader(*it, path_ + "/" + key);
  }
  bool has(const std::string& key) const { return node_.is_object() && node_.contains(key); }

  std::vector<Reader> items() const {
    if (!node_.is_array()) fail("expected an array");
    std::vector<Reader> out;
    for (std::size_t k = 0; k < node_.size(); ++k) {
      out.emplace_back(node_[k], path_ + "/" + std::to_string(k));
    }
    return out;
  }

  std::uint64_t unsigned_value() const {
    if (!node_.is_number_unsigned()) fail("expected a non-negative integer");
    return node_.get<std::uint64_t>();
  }
  int int_value() const {
    if (!node_.is_number_integer()) fail("expected an integer");
    return node_.get<int>();
  }
  bool bool_value() const {
    if (!node_.is_boolean()) fail("expected a boolean");
    return node_.get<bool>();
  }
  std::string string_value() const {
    if (!node_.is_string()) fail("expected a string");
    return node_.get<std::string>();
  }
  Rational rational() const {
    const std::string s = string_value();
    try {
      return Rational::parse(s);
    } catch (const ArithmeticError& err) {
      fail(std::string("bad rational: ") + err.what());
    }
  }
  std::vector<Rational> rationals() const {
    std::vector<Rational> out;
    for (const auto& item : items()) out.push_back(item.rational());
    return out;
  }
  RationalPoly poly() const { return RationalPoly(rationals()); }
  FieldElement element(const FieldRef& field) const {
    std::vector<Rational> c = rationals();
    if (static_cast<int>(c.size()) != field->degree()) {
      fail("expected " + std::to_string(field->degree()) + " coefficients, found " +
           std::to_string(c.size()));
    }
    return FieldElement(field, std::move(c));
  }
  RationalMatrix matrix() const {
    std::vector<std::vector<Rational>> rows;
    for (const auto& item : items()) rows.push_back(item.rationals());
    for (const auto& row : rows) {
      if (row.size() != rows.size()) fail("expected a square matrix");
    }
    return RationalMatrix::from_rows(rows);
  }
  Prime prime() const {
    const std::uint64_t v = unsigned_value();
    if (!is_prime(v)) fail(std::to_string(v) + " is not prime");
    return Prime(v);
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw FormatError((path_.empty() ? "/" : path_) + ": " + message);
  }

 private:
  const json& node_;
  std::string path_;
};

json public_json(const PublicKey& pk) {
  json out;
  out["version"] = kFormatVersion;
  out["p"] = pk.p().value();
  out["q"] = pk.q;
  out["e"] = pk.e;
  out["m"] = pk.m();
  out["N"] = pk.digits;
  out["xof_id"] = pk.xof_id;
  out["F"] = poly_json(pk.field->defining());
  json betas = json::array();
  for (const auto& b : pk.betas) betas.push_back(element_json(b));
  out["betas"] = std::move(betas);
  return out;
}

PublicKey public_from(const Reader& root) {
  if (root.at("version").int_value() != kFormatVersion) root.at("version").fail("unsupported version");
  const Prime p = root.at("p").prime();
  const std::uint64_t q = root.at("q").unsigned_value();
  const int e = root.at("e").int_value();
  const std::uint64_t m = root.at("m").unsigned_value();
  const int digits = root.at("N").int_value();
  if (digits < 1) root.at("N").fail("digit count must be positive");
  const std::string xof = root.at("xof_id").string_value();
  if (xof != kXofId) root.at("xof_id").fail("unsupported XOF '" + xof + "'");
  const RationalPoly f = root.at("F").poly();
  FieldRef field;
  try {
    field = FieldDescriptor::create(p, f, e);
  } catch (const ArithmeticError& err) {
    root.at("F").fail(err.what());
  }
  std::vector<FieldElement> betas;
  for (const auto& item : root.at("betas").items()) betas.push_back(item.element(field));
  if (betas.size() != m) root.at("betas").fail("expected m = " + std::to_string(m) + " entries");
  try {
    return PublicKey::create(field, q, e, digits, std::move(betas));
  } catch (const std::runtime_error& err) {
    root.at("betas").fail(err.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize_public_key(const PublicKey& pk) { return dump(public_json(pk)); }

PublicKey parse_public_key(std::string_view text) {
  const json doc = parse_document(text);
  return public_from(Reader(doc, ""));
}

std::string serialize_private_key(const KeyPair& keys) {
  json out = public_json(keys.pk);
  out["warning"] = kPrivateWarning;
  out["theta"] = element_json(keys.sk.theta);
  out["pi"] = element_json(keys.sk.pi);
  json s = json::array();
  for (auto k : keys.sk.s.indices) {
    s.push_back({keys.sk.basis.position(k), keys.sk.basis.grade(k)});
  }
  out["S"] = std::move(s);
  out["A"] = matrix_json(keys.sk.a);
  return dump(out);
}

KeyPair parse_private_key(std::string_view text) {
  const json doc = parse_document(text);
  const Reader root(doc, "");
  PublicKey pk = public_from(root);
  const int e = pk.e;
  const int f = pk.field->degree() / e;
  FieldElement theta = root.at("theta").element(pk.field);
  FieldElement pi = root.at("pi").element(pk.field);
  std::optional<OrthogonalBasis> basis;
  try {
    basis = OrthogonalBasis::from_generators(theta, pi, f, e);
  } catch (const ArithmeticError& err) {
    root.at("theta").fail(std::string("theta and pi do not give a basis: ") + err.what());
  }
  LatticeIndexSet s;
  for (const auto& item : root.at("S").items()) {
    const auto pair = item.items();
    if (pair.size() != 2) item.fail("expected [i, j]");
    const int i = pair[0].int_value();
    const int j = pair[1].int_value();
    if (i < 0 || i >= f || j < 0 || j >= e) item.fail("index out of range");
    s.indices.push_back(basis->flat(i, j));
  }
  RationalMatrix a = root.at("A").matrix();
  std::vector<FieldElement> betas;
  try {
    validate_index_set(s, *basis);
    betas = mix_basis(*basis, s, a);
  } catch (const LatticeError& err) {
    root.at("A").fail(err.what());
  }
  if (betas.size() != pk.betas.size() ||
      !std::equal(betas.begin(), betas.end(), pk.betas.begin())) {
    root.at("betas").fail("betas do not match A applied to the selected basis elements");
  }
  PrivateKey sk{std::move(theta), std::move(pi), std::move(*basis), std::move(s), std::move(a)};
  return KeyPair{std::move(pk), std::move(sk)};
}

std::string serialize_signature(const Signature& sig) {
  json out;
  out["version"] = kFormatVersion;
  out["r"] = to_hex(sig.r);
  out["v"] = element_json(sig.v);
  return dump(out);
}

Signature parse_signature(std::string_view text, const PublicKey& pk) {
  const json doc = parse_document(text);
  const Reader root(doc, "");
  if (root.at("version").int_value() != kFormatVersion) root.at("version").fail("unsupported version");
  Bytes r;
  try {
    r = from_hex(root.at("r").string_value());
  } catch (const ArithmeticError& err) {
    root.at("r").fail(err.what());
  }
  if (r.size() != kNonceBytes) root.at("r").fail("r must be 32 bytes");
  return Signature{std::move(r), root.at("v").element(pk.field)};
}

std::string serialize_transcript(const ConstructionResult& result, std::uint64_t q) {
  const OrthogonalBasis& basis = result.basis;
  json out;
  out["version"] = kFormatVersion;
  out["p"] = result.p.value();
  if (q) out["q"] = q;
  out["e"] = basis.e();
  out["f"] = basis.f();
  out["n"] = basis.size();
  out["a"] = rational_list(result.a);
  out["T"] = poly_json(result.theta_poly);
  out["G"] = poly_json(result.eisenstein);
  out["H"] = poly_json(result.h);
  out["F"] = poly_json(result.field->defining());
  out["theta"] = element_json(result.theta);
  out["pi"] = element_json(result.pi);
  json grid = json::array();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    json entry;
    entry["i"] = basis.position(k);
    entry["j"] = basis.grade(k);
    entry["valuation"] = rational_text(basis.valuation_of(k).value());
    entry["coords"] = element_json(basis.element(k));
    grid.push_back(std::move(entry));
  }
  out["basis"] = std::move(grid);
  const BasisCertificate& c = result.certificate;
  json cert;
  cert["method"] = c.method;
  cert["valid"] = c.valid();
  cert["residue_irreducible"] = c.residue_irreducible;
  cert["eisenstein"] = c.eisenstein;
  cert["theta_root"] = c.theta_root;
  cert["pi_root"] = c.pi_root;
  cert["zeta_identity"] = c.zeta_identity;
  cert["theta_valuation"] = c.theta_valuation.str();
  cert["pi_valuation"] = c.pi_valuation.str();
  if (c.enumeration) {
    json grades = json::array();
    for (const auto& g : c.enumeration->grades) {
      grades.push_back({{"grade", g.grade},
                        {"size", g.size},
                        {"combinations", g.report.combinations_checked},
                        {"orthogonal", g.report.orthogonal}});
    }
    cert["enumeration"] = std::move(grades);
  }
  out["certificate"] = std::move(cert);
  return dump(out);
}

Transcript parse_transcript(std::string_view text) {
  const json doc = parse_document(text);
  const Reader root(doc, "");
  const Prime p = root.at("p").prime();
  const int e = root.at("e").int_value();
  const RationalPoly f = root.at("F").poly();
  Transcript out;
  try {
    out.field = FieldDescriptor::create(p, f, e);
  } catch (const ArithmeticError& err) {
    root.at("F").fail(err.what());
  }
  for (const auto& item : root.at("basis").items()) {
    out.basis.elements.push_back(item.at("coords").element(out.field));
    out.basis.grades.push_back(item.at("j").int_value());
  }
  if (root.has("certificate")) out.recorded_valid = root.at("certificate").at("valid").bool_value();
  return out;
}

}  // namespace padic
