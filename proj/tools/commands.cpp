#include "commands.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "documents.hpp"
#include "l2a/builders.hpp"
#include "l2a/classify.hpp"
#include "l2a/error.hpp"

namespace l2a::cli {

namespace {

namespace fs = std::filesystem;

struct Globals {
  std::string out;
  std::uint64_t seed = 0;
  bool quiet = false;
};

struct Context {
  const Globals& globals;
  std::ostream& out;
  std::ostream& err;

  void emit(const std::string& document, const std::string& path) const {
    if (path.empty()) {
      out << document;
    } else {
      write_file(path, document);
    }
  }
  void report(const std::string& text) const {
    if (!globals.quiet) out << text;
  }
};

const std::map<std::string, std::string>& invariant_keys() {
  static const std::map<std::string, std::string> keys{
      {"dim g", "dim_g"},
      {"dim U", "dim_U"},
      {"dim V", "dim_V"},
      {"derived series", "derived_series"},
      {"lower central series", "lower_central_series"},
      {"Killing rank", "killing_rank"},
      {"Jtilde coboundary flag", "jtilde_coboundary"},
  };
  return keys;
}

/// Exit code for an algebra that must verify before a command may use it,
/// or nullopt if it verifies.
std::optional<int> check_valid(const TwoTermAlgebra& algebra, const std::string& label, const Context& ctx) {
  const VerificationReport report = verify(algebra);
  if (report.structural_error) {
    ctx.err << "error: " << label << ": " << *report.structural_error << '\n';
    return kInputError;
  }
  if (!report.passed()) {
    ctx.err << label << " is not a 2-term L-infinity algebra:\n" << report.describe();
    return kFailure;
  }
  return std::nullopt;
}

/// Fails closed: a morphism is written only after it verifies.
std::optional<int> check_morphism(const Morphism& m, const std::string& label, const Context& ctx) {
  const VerificationReport report = verify_morphism(m);
  if (report.passed()) return std::nullopt;
  ctx.err << label << " fails the morphism identities:\n" << report.describe();
  return report.structural_error ? kInputError : kFailure;
}

EndpointRef inline_ref(const std::optional<std::string>& name) { return EndpointRef{std::nullopt, name, std::nullopt}; }

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_verify(const Context& ctx, const std::string& path) {
  const AlgebraDocument doc = load_algebra(path);
  const VerificationReport report = verify(doc.algebra);
  if (report.structural_error) {
    ctx.err << "error: " << path << ": " << *report.structural_error << '\n';
    return kInputError;
  }
  ctx.report(report.describe());
  return report.passed() ? kSuccess : kFailure;
}

int cmd_normalize(const Context& ctx, const std::string& path, const std::string& morphism_out) {
  const AlgebraDocument doc = load_algebra(path);
  if (auto code = check_valid(doc.algebra, path, ctx)) return *code;
  const NormalForm nf = normal_form(doc.algebra);
  if (auto code = check_valid(nf.algebra, "normal form", ctx)) return *code;
  const bool coboundary = is_coboundary(nf.quadruple.jtilde, nf.quadruple.rep).has_value();
  ctx.report("g=" + std::to_string(nf.quadruple.g.dim) + ", U=" + std::to_string(nf.quadruple.dim_u) +
             ", V=" + std::to_string(nf.quadruple.rep.dimV) + ", coboundary=" + (coboundary ? "true" : "false") +
             "\n");
  std::optional<std::string> nf_name;
  if (doc.name) nf_name = "normal form of " + *doc.name;
  if (!ctx.globals.out.empty()) write_file(ctx.globals.out, serialize(AlgebraDocument{nf.algebra, nf_name, {}}));
  if (!morphism_out.empty()) {
    MorphismDocument m{nf.morphism, inline_ref(doc.name), inline_ref(nf_name), std::nullopt};
    m.source.provenance = doc.provenance;
    write_file(morphism_out, serialize(m));
  }
  return kSuccess;
}

int cmd_invariants(const Context& ctx, const std::string& path) {
  const AlgebraDocument doc = load_algebra(path);
  if (auto code = check_valid(doc.algebra, path, ctx)) return *code;
  std::string text;
  for (const auto& [name, value] : invariants(doc.algebra).fields()) {
    const auto it = invariant_keys().find(name);
    text += (it == invariant_keys().end() ? name : it->second) + "=" + value + "\n";
  }
  ctx.out << text;
  return kSuccess;
}

int cmd_cohomology(const Context& ctx, const std::string& lie, const std::string& rep_name, std::size_t n,
                   bool basis) {
  LieAlgebra g;
  if (fs::is_regular_file(lie)) {
    const AlgebraDocument doc = load_algebra(lie);
    if (auto code = check_valid(doc.algebra, lie, ctx)) return *code;
    g = extract_triple(doc.algebra, decompose(doc.algebra)).g;
  } else {
    g = catalog::lie_algebra(lie);
  }
  const Representation rep = catalog::representation(g, rep_name);
  ctx.out << "dim H^" << n << " = " << cohomology_dim(n, rep) << '\n';
  if (basis) {
    const auto cocycles = cohomology_basis(n, rep);
    for (std::size_t i = 0; i < cocycles.size(); ++i) {
      ctx.out << "basis " << i << ":";
      for (const auto& v : cocycles[i].values) ctx.out << ' ' << to_string(v);
      ctx.out << '\n';
    }
  }
  return kSuccess;
}

int cmd_compare(const Context& ctx, const std::string& path_a, const std::string& path_b,
                const std::string& maps_path) {
  const AlgebraDocument a = load_algebra(path_a);
  const AlgebraDocument b = load_algebra(path_b);
  if (auto code = check_valid(a.algebra, path_a, ctx)) return *code;
  if (auto code = check_valid(b.algebra, path_b, ctx)) return *code;
  if (maps_path.empty()) {
    const Distinction d = distinguish(a.algebra, b.algebra);
    if (d.distinguished()) {
      ctx.out << "DISTINGUISHED: " << *d.field << '\n';
      return kFailure;
    }
    ctx.out << "INCONCLUSIVE (invariants equal)\n";
    return kSuccess;
  }
  const MapsDocument maps = load_maps(maps_path);
  const auto result = certify_isomorphism(a.algebra, b.algebra, maps.chi, maps.fU, maps.tV);
  if (const auto* failure = std::get_if<CertifyFailure>(&result)) {
    ctx.out << "NOT ISOMORPHIC UNDER THESE MAPS: " << certify_failure_name(*failure) << '\n';
    return kFailure;
  }
  ctx.out << "ISOMORPHIC\n";
  if (!ctx.globals.out.empty()) {
    const MorphismDocument m{std::get<Morphism>(result), inline_ref(a.name), inline_ref(b.name), std::nullopt};
    write_file(ctx.globals.out, serialize(m));
  }
  return kSuccess;
}

struct ExampleParams {
  std::string v = "1+2i+3j+5k";
  std::string lie = "so3";
  std::string k = "1";
  std::size_t n0 = 0;
  std::size_t n1 = 0;
};

int cmd_example(const Context& ctx, const std::string& name, const ExampleParams& p) {
  if (name == "automorphism") {
    const Morphism m = example27_automorphism(Quaternion::parse(p.v));
    if (auto code = check_morphism(m, "automorphism", ctx)) return *code;
    const auto label = "quaternion v=" + p.v;
    ctx.emit(serialize(MorphismDocument{m, inline_ref(label), inline_ref(label), "cyclic automorphism"}),
             ctx.globals.out);
    return kSuccess;
  }
  AlgebraDocument doc;
  if (name == "quaternion") {
    doc = {quaternion_example(Quaternion::parse(p.v)), "quaternion v=" + p.v, std::nullopt};
  } else if (name == "skeletal-string") {
    doc = {skeletal_string(catalog::lie_algebra(p.lie), parse_rational(p.k)), "skeletal string " + p.lie + " k=" + p.k,
           std::nullopt};
  } else if (name == "zero") {
    doc = {TwoTermAlgebra::zero(p.n0, p.n1), "zero", std::nullopt};
  } else {
    throw Error(ErrorCode::Parse, "unknown example: " + name);
  }
  if (auto code = check_valid(doc.algebra, name, ctx)) return *code;
  ctx.emit(serialize(doc), ctx.globals.out);
  return kSuccess;
}

int cmd_random(const Context& ctx, const std::string& profile) {
  const TwoTermAlgebra algebra = random_algebra(ctx.globals.seed, RandomProfile::named(profile));
  if (auto code = check_valid(algebra, "random algebra", ctx)) return *code;
  ctx.emit(serialize(AlgebraDocument{algebra, "random seed=" + std::to_string(ctx.globals.seed) + " profile=" + profile,
                                     std::nullopt}),
           ctx.globals.out);
  return kSuccess;
}

int cmd_compose(const Context& ctx, const std::string& first_path, const std::string& second_path) {
  const MorphismDocument first = load_morphism(first_path);
  const MorphismDocument second = load_morphism(second_path);
  const Morphism result = compose(first.morphism, second.morphism);
  if (auto code = check_morphism(result, "composite", ctx)) return *code;
  ctx.emit(serialize(MorphismDocument{result, inline_ref(first.source.name), inline_ref(second.target.name),
                                      std::nullopt}),
           ctx.globals.out);
  return kSuccess;
}

int cmd_inverse(const Context& ctx, const std::string& path) {
  const MorphismDocument doc = load_morphism(path);
  const auto result = inverse(doc.morphism);
  if (!result) {
    ctx.err << "error: morphism is not invertible\n";
    return kFailure;
  }
  if (auto code = check_morphism(*result, "inverse", ctx)) return *code;
  ctx.emit(serialize(MorphismDocument{*result, inline_ref(doc.target.name), inline_ref(doc.source.name),
                                      std::nullopt}),
           ctx.globals.out);
  return kSuccess;
}

int cmd_transport(const Context& ctx, const std::string& algebra_path, const std::string& morphism_path) {
  const AlgebraDocument doc = load_algebra(algebra_path);
  if (auto code = check_valid(doc.algebra, algebra_path, ctx)) return *code;
  const MorphismDocument maps = load_morphism(morphism_path);
  const auto& m = maps.morphism;
  const AlgebraWithMorphism result = transport(doc.algebra, m.phi0, m.phi1, m.Phi);
  if (auto code = check_valid(result.algebra, "transported algebra", ctx)) return *code;
  ctx.emit(serialize(AlgebraDocument{result.algebra, doc.name, doc.provenance}), ctx.globals.out);
  return kSuccess;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::Structural:
      return kInputError;
    default:
      return kFailure;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with 2-term L-infinity algebras", "l2a"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("-o,--out", globals.out, "Write the resulting document to this file");
  app.add_option("--seed", globals.seed, "Seed for the random command");
  app.add_flag("-q,--quiet", globals.quiet, "Suppress reports; rely on the exit code");

  std::function<int(const Context&)> action;
  std::string path_a, path_b, path_c, name, morphism_out, profile = "default";
  std::size_t degree = 0;
  bool basis = false;
  ExampleParams params;

  auto* verify_cmd = app.add_subcommand("verify", "Check the defining identities of an algebra document");
  verify_cmd->add_option("algebra", path_a)->required();
  verify_cmd->callback([&] { action = [&](const Context& c) { return cmd_verify(c, path_a); }; });

  auto* normalize_cmd = app.add_subcommand("normalize", "Compute the normal form and the normalizing isomorphism");
  normalize_cmd->add_option("algebra", path_a)->required();
  normalize_cmd->add_option("--morphism-out", morphism_out, "Write the normalizing isomorphism here");
  normalize_cmd->callback([&] { action = [&](const Context& c) { return cmd_normalize(c, path_a, morphism_out); }; });

  auto* invariants_cmd = app.add_subcommand("invariants", "Print the invariant vector as key=value lines");
  invariants_cmd->add_option("algebra", path_a)->required();
  invariants_cmd->callback([&] { action = [&](const Context& c) { return cmd_invariants(c, path_a); }; });

  auto* cohomology_cmd = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology of a catalog pair");
  cohomology_cmd->add_option("lie", path_a, "Catalog name (so3, sl2, abelian2, ...) or algebra document")->required();
  cohomology_cmd->add_option("rep", path_b, "zero, trivial<n>, adjoint, or sums like adjoint+trivial1")->required();
  cohomology_cmd->add_option("degree", degree)->required();
  cohomology_cmd->add_flag("--basis", basis, "Also print cocycles representing a basis");
  cohomology_cmd->callback(
      [&] { action = [&](const Context& c) { return cmd_cohomology(c, path_a, path_b, degree, basis); }; });

  auto* compare_cmd = app.add_subcommand("compare", "Refute isomorphism by invariants or certify it from maps");
  compare_cmd->add_option("first", path_a)->required();
  compare_cmd->add_option("second", path_b)->required();
  compare_cmd->add_option("--maps", path_c, "Maps document with chi, fU, tV");
  compare_cmd->callback([&] { action = [&](const Context& c) { return cmd_compare(c, path_a, path_b, path_c); }; });

  auto* example_cmd = app.add_subcommand("example", "Write a built-in example document");
  example_cmd->add_option("name", name, "quaternion, skeletal-string, zero, or automorphism")->required();
  example_cmd->add_option("--v", params.v, "Quaternion parameter a+bi+cj+dk");
  example_cmd->add_option("--lie", params.lie, "Lie algebra for skeletal-string");
  example_cmd->add_option("--k", params.k, "Level k for skeletal-string");
  example_cmd->add_option("--n0", params.n0, "Degree-0 dimension for zero");
  example_cmd->add_option("--n1", params.n1, "Degree-1 dimension for zero");
  example_cmd->callback([&] { action = [&](const Context& c) { return cmd_example(c, name, params); }; });

  auto* random_cmd = app.add_subcommand("random", "Write a seeded random algebra");
  random_cmd->add_option("--profile", profile, "default or zero");
  random_cmd->callback([&] { action = [&](const Context& c) { return cmd_random(c, profile); }; });

  auto* compose_cmd = app.add_subcommand("compose", "Compose two morphisms (first, then second)");
  compose_cmd->add_option("first", path_a)->required();
  compose_cmd->add_option("second", path_b)->required();
  compose_cmd->callback([&] { action = [&](const Context& c) { return cmd_compose(c, path_a, path_b); }; });

  auto* inverse_cmd = app.add_subcommand("inverse", "Invert a morphism");
  inverse_cmd->add_option("morphism", path_a)->required();
  inverse_cmd->callback([&] { action = [&](const Context& c) { return cmd_inverse(c, path_a); }; });

  auto* transport_cmd = app.add_subcommand("transport", "Transport an algebra along the maps of a morphism document");
  transport_cmd->add_option("algebra", path_a)->required();
  transport_cmd->add_option("morphism", path_b)->required();
  transport_cmd->callback([&] { action = [&](const Context& c) { return cmd_transport(c, path_a, path_b); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const Context ctx{globals, out, err};
  try {
    return action(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace l2a::cli
