#include "padic/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "padic/basis_builder.hpp"
#include "padic/serialize.hpp"
#include "padic/signature.hpp"

namespace padic::cli {

namespace {

struct CommandError : std::runtime_error {
  CommandError(int code, const std::string& message) : std::runtime_error(message), code(code) {}
  int code;
};

std::vector<std::uint64_t> parse_numbers(const std::string& text, const std::string& what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || part.front() == '-') {
      throw CommandError(kParamsViolation, what + ": '" + part + "' is not a non-negative integer");
    }
    out.push_back(value);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError(kMalformedInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw CommandError(kMalformedInput, "cannot write " + path.string());
}

struct SeedOptions {
  std::string hex;
  bool deterministic = false;
};

Bytes resolve_seed(const SeedOptions& opts, std::ostream& err) {
  if (!opts.hex.empty()) {
    try {
      return from_hex(opts.hex);
    } catch (const ArithmeticError& e) {
      throw CommandError(kUsage, std::string("--seed: ") + e.what());
    }
  }
  if (opts.deterministic) throw CommandError(kUsage, "--seed is required with --deterministic");
  std::random_device device;
  Bytes seed(32);
  for (auto& b : seed) b = static_cast<std::uint8_t>(device());
  err << "seed: " << to_hex(seed) << "\n";
  return seed;
}

struct MessageOptions {
  std::string file;
  std::optional<std::string> text;
};

Bytes resolve_message(const MessageOptions& opts) {
  if (opts.text && !opts.file.empty()) throw CommandError(kUsage, "give either --message or --text");
  if (opts.text) return Bytes(opts.text->begin(), opts.text->end());
  if (opts.file.empty()) throw CommandError(kUsage, "a message is required (--message or --text)");
  const std::string content = read_file(opts.file);
  return Bytes(content.begin(), content.end());
}

struct FieldOptions {
  std::string params;
  std::string a;
  std::string g;
  bool allow_custom_a = false;
  bool full_eisenstein = false;
  std::uint64_t bound = 4;
};

RationalPoly parse_poly_flag(const std::string& text, const std::string& flag) {
  try {
    return RationalPoly::parse(text);
  } catch (const ArithmeticError& e) {
    throw CommandError(kParamsViolation, flag + ": " + e.what());
  }
}

// p, q, e plus any trailing entries (m for keygen).
std::vector<std::uint64_t> split_params(const std::string& text, std::size_t min_count,
                                        std::size_t max_count) {
  if (text.empty()) throw CommandError(kUsage, "--params is required");
  auto values = parse_numbers(text, "--params");
  if (values.size() < min_count || values.size() > max_count) {
    throw CommandError(kParamsViolation, "--params expects " + std::to_string(min_count) +
                                             (min_count == max_count ? "" : " to " + std::to_string(max_count)) +
                                             " comma-separated integers");
  }
  return values;
}

void report_violations(const ParamsReport& report, std::ostream& out) {
  for (const auto& v : report.violations) out << "violation: " << v << "\n";
}

ConstructionParams resolve_params(const FieldOptions& opts, std::uint64_t p, std::uint64_t q, int e,
                                  const SeedOptions& seed_opts, std::ostream& out, std::ostream& err,
                                  std::optional<Bytes>& seed) {
  const ParamsReport base = validate_params(p, q, e);
  if (!base.ok()) {
    report_violations(base, out);
    throw CommandError(kParamsViolation, "invalid parameters");
  }
  ConstructionParams params;
  if (opts.a.empty() || opts.g.empty() || !seed_opts.hex.empty() || seed_opts.deterministic) {
    seed = resolve_seed(seed_opts, err);
  }
  if (seed) {
    DeterministicRng rng(*seed, "padic/params");
    params = sample_params(p, q, e, rng, SamplingOptions{opts.bound, opts.full_eisenstein});
  } else {
    params.p = Prime(p);
    params.q = q;
    params.e = e;
  }
  if (!opts.a.empty()) {
    params.a.clear();
    std::stringstream ss(opts.a);
    std::string part;
    try {
      while (std::getline(ss, part, ',')) params.a.push_back(Rational::parse(part));
    } catch (const ArithmeticError& e) {
      throw CommandError(kParamsViolation, std::string("--a: ") + e.what());
    }
  }
  if (!opts.g.empty()) params.eisenstein = parse_poly_flag(opts.g, "--G");
  params.allow_custom_a = opts.allow_custom_a;
  const ParamsReport full = check_construction_params(params);
  if (!full.ok()) {
    report_violations(full, out);
    throw CommandError(kParamsViolation, "invalid construction parameters");
  }
  return params;
}

void print_grid(const ConstructionResult& r, std::ostream& out) {
  const OrthogonalBasis& b = r.basis;
  out << "valuations of theta^i pi^j (row j, column i):\n";
  for (int j = 0; j < b.e(); ++j) {
    out << "  j=" << j << ":";
    for (int i = 0; i < b.f(); ++i) out << " " << b.valuation_of(b.flat(i, j)).str();
    out << "\n";
  }
}

ConstructionResult run_build(const ConstructionParams& params) {
  try {
    return build(params);
  } catch (const ConstructionError& e) {
    throw CommandError(kConstructionFailure, e.what());
  } catch (const ArithmeticError& e) {
    throw CommandError(kConstructionFailure, e.what());
  }
}

int cmd_params(const std::vector<std::uint64_t>& values, std::ostream& out) {
  const ParamsReport report = validate_params(values[0], values[1], static_cast<int>(values[2]));
  if (report.ok()) {
    out << "ok: p=" << values[0] << " q=" << values[1] << " e=" << values[2]
        << " f=" << values[1] - 1 << " n=" << (values[1] - 1) * values[2] << "\n";
    return kOk;
  }
  report_violations(report, out);
  return kParamsViolation;
}

int cmd_build(const FieldOptions& opts, const SeedOptions& seed_opts, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  const auto v = split_params(opts.params, 3, 3);
  std::optional<Bytes> seed;
  const ConstructionParams params =
      resolve_params(opts, v[0], v[1], static_cast<int>(v[2]), seed_opts, out, err, seed);
  const ConstructionResult r = run_build(params);
  out << "H = " << r.h.pretty() << "\n";
  out << "F = " << r.field->defining().pretty() << "\n";
  out << "n = " << r.basis.size() << " e = " << r.basis.e() << " f = " << r.basis.f() << "\n";
  print_grid(r, out);
  out << "certificate: " << (r.certificate.valid() ? "valid" : "INVALID") << " ("
      << r.certificate.method << ")\n";
  if (!out_path.empty()) {
    write_file(out_path, serialize_transcript(r, params.q));
    out << "transcript written to " << out_path << "\n";
  }
  return kOk;
}

int cmd_keygen(const FieldOptions& opts, const SeedOptions& seed_opts, const std::string& out_dir,
               int digits, std::ostream& out, std::ostream& err) {
  const auto v = split_params(opts.params, 4, 4);
  if (out_dir.empty()) throw CommandError(kUsage, "--out DIR is required");
  std::optional<Bytes> seed;
  const ConstructionParams params =
      resolve_params(opts, v[0], v[1], static_cast<int>(v[2]), seed_opts, out, err, seed);
  if (!seed) seed = resolve_seed(seed_opts, err);
  const std::size_t m = v[3];
  if (m < 2 * static_cast<std::size_t>(params.f()) || m >= static_cast<std::size_t>(params.n())) {
    out << "violation: m = " << m << " must satisfy 2f = " << 2 * params.f()
        << " <= m < n = " << params.n() << "\n";
    return kParamsViolation;
  }
  KeyPair keys = [&] {
    try {
      return keygen(params, m, *seed, digits);
    } catch (const ConstructionError& e) {
      throw CommandError(kConstructionFailure, e.what());
    } catch (const LatticeError& e) {
      throw CommandError(kConstructionFailure, e.what());
    }
  }();
  std::filesystem::create_directories(out_dir);
  const auto dir = std::filesystem::path(out_dir);
  write_file(dir / "pk.json", serialize_public_key(keys.pk));
  write_file(dir / "sk.json", serialize_private_key(keys));
  out << "F = " << keys.pk.field->defining().pretty() << "\n";
  out << "m = " << keys.pk.m() << ", S =";
  for (auto k : keys.sk.s.indices) {
    out << " (" << keys.sk.basis.position(k) << "," << keys.sk.basis.grade(k) << ")";
  }
  out << "\nwrote " << (dir / "pk.json").string() << " and " << (dir / "sk.json").string() << "\n";
  return kOk;
}

int cmd_sign(const std::string& sk_path, const MessageOptions& msg, const SeedOptions& seed_opts,
             const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (sk_path.empty()) throw CommandError(kUsage, "--sk is required");
  const KeyPair keys = parse_private_key(read_file(sk_path));
  const Bytes message = resolve_message(msg);
  const Bytes seed = resolve_seed(seed_opts, err);
  DeterministicRng rng(seed, "padic/sign");
  const Signature sig = sign(keys.sk, keys.pk, message, rng);
  const std::string text = serialize_signature(sig);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    out << "signature written to " << out_path << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& pk_path, const MessageOptions& msg, const std::string& sig_path,
               std::ostream& out) {
  if (pk_path.empty() || sig_path.empty()) throw CommandError(kUsage, "--pk and --sig are required");
  const PublicKey pk = parse_public_key(read_file(pk_path));
  const Signature sig = parse_signature(read_file(sig_path), pk);
  const Bytes message = resolve_message(msg);
  const VerifyReport report = verify_detailed(pk, message, sig);
  out << "t = H(M||r): " << (report.hash_ok ? "ok" : "fail") << "\n";
  out << "v in L: " << (report.in_lattice ? "ok" : "fail") << "\n";
  out << "|t - v| < 1: " << (report.close ? "ok" : "fail") << "\n";
  if (report.valid()) {
    out << "valid\n";
    return kOk;
  }
  out << "invalid: " << report.diagnostic << "\n";
  return kInvalid;
}

void print_enumeration(const GradedReport& report, std::ostream& out) {
  for (const auto& g : report.grades) {
    out << "  grade " << g.grade << ": " << g.size << " elements, valuation "
        << g.report.norm_exponent.str() << ", " << g.report.combinations_checked
        << " combinations, " << (g.report.orthogonal ? "orthogonal" : "NOT orthogonal");
    if (g.report.counterexample) {
      out << ", counterexample (";
      for (std::size_t k = 0; k < g.report.counterexample->size(); ++k) {
        out << (k ? "," : "") << (*g.report.counterexample)[k];
      }
      out << ")";
    }
    out << "\n";
  }
}

int cmd_analyze(const std::string& f_text, std::uint64_t p_value, const std::string& basis_path,
                std::uint64_t limit, std::ostream& out) {
  if (!basis_path.empty()) {
    const Transcript t = parse_transcript(read_file(basis_path));
    out << "F = " << t.field->defining().pretty() << "\n";
    out << "recorded certificate: " << (t.recorded_valid ? "valid" : "invalid") << "\n";
    try {
      const GradedReport report = check_orthogonal_graded(t.basis, limit);
      print_enumeration(report, out);
      out << (report.orthogonal ? "certified orthogonal" : "not orthogonal") << "\n";
      return report.orthogonal ? kOk : kInvalid;
    } catch (const OrthogonalityPreconditionError& e) {
      out << "digit enumeration not run: " << e.what() << "\n";
      return t.recorded_valid ? kOk : kInvalid;
    }
  }
  if (f_text.empty() || p_value == 0) throw CommandError(kUsage, "give --basis FILE or --F and --p");
  if (!is_prime(p_value)) throw CommandError(kParamsViolation, "--p must be prime");
  const Prime p(p_value);
  RationalPoly f;
  try {
    f = RationalPoly::parse(f_text);
  } catch (const ArithmeticError& e) {
    throw CommandError(kMalformedInput, std::string("--F: ") + e.what());
  }
  if (!f.is_monic() || f.degree() < 1) throw CommandError(kMalformedInput, "--F must be monic");
  out << "F = " << f.pretty() << " over Q_" << p_value << "\n";
  PrimeFieldPoly reduced(p);
  try {
    reduced = reduce_mod_p(f, p);
  } catch (const ArithmeticError&) {
    out << "F is not p-integral; the reduction criterion does not apply\n";
    return kInvalid;
  }
  const auto factors = factor_mod_p(reduced);
  out << "F mod p = ";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    out << (k ? " * " : "") << "(" << factors[k].factor.pretty() << ")";
    if (factors[k].multiplicity > 1) out << "^" << factors[k].multiplicity;
  }
  out << "\n";
  const bool orthogonal = power_basis_orthogonality(f, p);
  // The digit oracle applies when the power basis has equal norms (zeta a unit).
  try {
    const FieldRef field = FieldDescriptor::create(p, f);
    VectorFamily family;
    for (int k = 0; k < f.degree(); ++k) {
      family.elements.push_back(pow(FieldElement::generator(field), static_cast<unsigned>(k)));
    }
    const GradedReport report = check_orthogonal_graded(family, limit);
    out << "digit enumeration over 1, zeta, ..., zeta^" << f.degree() - 1 << ":\n";
    print_enumeration(report, out);
  } catch (const OrthogonalityPreconditionError& e) {
    out << "digit enumeration not run: " << e.what() << "\n";
  }
  out << (orthogonal ? "power basis orthogonal" : "power basis not orthogonal") << "\n";
  return orthogonal ? kOk : kInvalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal bases of p-adic fields and the lattice signature scheme built on them",
               "padic"};
  app.require_subcommand(1);
  SeedOptions seed_opts;
  app.add_flag("--deterministic", seed_opts.deterministic, "Refuse to generate seeds from OS entropy");

  auto* params_cmd = app.add_subcommand("params", "Check (p, q, e)");
  std::vector<std::uint64_t> positional;
  std::string params_flag;
  params_cmd->add_option("values", positional, "p q e")->expected(0, 3);
  params_cmd->add_option("--params", params_flag, "p,q,e");

  FieldOptions field_opts;
  auto add_field_flags = [&](CLI::App* cmd) {
    cmd->add_option("--params", field_opts.params, "p,q,e (keygen: p,q,e,m)");
    cmd->add_option("--a", field_opts.a, "Combination coefficients a_0,...,a_{f-1}");
    cmd->add_option("--G", field_opts.g, "Eisenstein polynomial, constant term first");
    cmd->add_flag("--allow-custom-a", field_opts.allow_custom_a, "Accept any a that yields a basis");
    cmd->add_flag("--full-eisenstein", field_opts.full_eisenstein, "Sample all lower coefficients of G");
    cmd->add_option("--bound", field_opts.bound, "Sampling bound B")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed_opts.hex, "Seed as hex");
  };

  std::string out_path;
  auto* build_cmd = app.add_subcommand("build", "Construct a field and its orthogonal basis");
  add_field_flags(build_cmd);
  build_cmd->add_option("--out", out_path, "Transcript file");

  int digits = kDefaultDigits;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate pk.json and sk.json");
  add_field_flags(keygen_cmd);
  keygen_cmd->add_option("--out", out_path, "Output directory");
  keygen_cmd->add_option("--digits", digits, "Base-p digits per hashed coefficient")
      ->check(CLI::Range(1, 4096));

  std::string sk_path;
  std::string pk_path;
  std::string sig_path;
  MessageOptions msg;
  auto add_message_flags = [&](CLI::App* cmd) {
    cmd->add_option("--message", msg.file, "Message file");
    cmd->add_option("--text", msg.text, "Message given inline");
  };
  auto* sign_cmd = app.add_subcommand("sign", "Sign a message");
  sign_cmd->add_option("--sk", sk_path, "Private key file");
  add_message_flags(sign_cmd);
  sign_cmd->add_option("--seed", seed_opts.hex, "Seed for r as hex");
  sign_cmd->add_option("--out", out_path, "Signature file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Verify a signature");
  verify_cmd->add_option("--pk", pk_path, "Public key file");
  verify_cmd->add_option("--sig", sig_path, "Signature file");
  add_message_flags(verify_cmd);

  std::string f_text;
  std::uint64_t p_value = 0;
  std::string basis_path;
  std::uint64_t limit = kDefaultEnumerationLimit;
  auto* analyze_cmd = app.add_subcommand("analyze", "Orthogonality report for F or a basis file");
  analyze_cmd->add_option("--F", f_text, "Monic polynomial, constant term first");
  analyze_cmd->add_option("--p", p_value, "Prime");
  analyze_cmd->add_option("--basis", basis_path, "Transcript written by build --out");
  analyze_cmd->add_option("--limit", limit, "Digit enumeration limit per grade");

  std::vector<const char*> argv{"padic"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (params_cmd->parsed()) {
      std::vector<std::uint64_t> values = positional;
      if (!params_flag.empty()) values = parse_numbers(params_flag, "--params");
      if (values.size() != 3) throw CommandError(kUsage, "params needs p, q and e");
      return cmd_params(values, out);
    }
    if (build_cmd->parsed()) return cmd_build(field_opts, seed_opts, out_path, out, err);
    if (keygen_cmd->parsed()) return cmd_keygen(field_opts, seed_opts, out_path, digits, out, err);
    if (sign_cmd->parsed()) return cmd_sign(sk_path, msg, seed_opts, out_path, out, err);
    if (verify_cmd->parsed()) return cmd_verify(pk_path, msg, sig_path, out);
    if (analyze_cmd->parsed()) return cmd_analyze(f_text, p_value, basis_path, limit, out);
  } catch (const CommandError& e) {
    err << "error: " << e.what() << "\n";
    return e.code;
  } catch (const FormatError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConstructionFailure;
  }
  return kUsage;
}

}  // namespace padic::cli
