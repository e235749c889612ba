#include "ordual/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordual/cli/emit.hpp"
#include "ordual/cli/generate.hpp"
#include "ordual/cli/verify.hpp"
#include "ordual/duplication.hpp"
#include "ordual/error.hpp"
#include "ordual/mayet.hpp"

namespace ordual::cli {

namespace {

constexpr int kExitInput = 2;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string format = "json";
  std::size_t cap = 0;  // 0 keeps the per-enumeration defaults
  std::string file;
  std::string claim;
  bool strict = false;
  std::size_t exhaustive = 0;
  std::size_t random = 0;
  std::uint64_t seed = 0;
  std::size_t count = 1;

  std::size_t valuation_cap() const { return cap ? cap : kDefaultValuationCap; }
  std::size_t family_cap() const { return cap ? cap : kDefaultFamilyCap; }
};

OrthoPoset orthoposet_from(const PosetDocument& doc) {
  const auto p = to_poset(doc);
  auto bounds = to_bounded(doc, p);
  if (!bounds) bounds = as_bounded(p);
  if (!bounds) throw Error(Errc::NotBounded, "poset has no least or no greatest element");
  auto comp = complement_table(doc, p);
  if (!comp) throw Error(Errc::InvalidArgument, "document has no complement table");
  return OrthoPoset::make(std::move(*bounds), std::move(*comp));
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto doc = parse_poset(read_input(o.file));
  const auto p = to_poset(doc);
  to_bounded(doc, p);
  out << emit(doc, parse_format(o.format));
  return 0;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const auto format = parse_format(o.format);
  const auto e = orthoposet_from(parse_poset(read_input(o.file)));
  out << emit(build_dual(e, o.valuation_cap()), format, o.family_cap());
  return 0;
}

int cmd_duplicate(const Options& o, std::ostream& out) {
  const auto format = parse_format(o.format);
  const auto p = to_poset(parse_poset(read_input(o.file)));
  out << emit(duplicate(p), build_y_space(p, o.valuation_cap()), format);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto format = parse_format(o.format);
  if (format != Format::Json) throw Error(Errc::UnsupportedFormat, "verification reports are JSON only");
  const auto claim = parse_claim(o.claim);
  const auto doc = parse_poset(read_input(o.file));
  VerifyOptions vo;
  vo.mode = o.strict ? ContinuityMode::Strict : ContinuityMode::Weak;
  vo.valuation_cap = o.valuation_cap();
  vo.family_cap = o.family_cap();
  const auto report = run_verify(doc, claim, vo);
  out << emit(report, Format::Json);
  return report.exit_code();
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto format = parse_format(o.format);
  if ((o.exhaustive == 0) == (o.random == 0))
    throw Error(Errc::InvalidArgument, "give exactly one of --exhaustive or --random");
  const auto emit_one = [&](const Poset& p) {
    if (format == Format::Json)
      out << to_json_line(to_document(p)) << "\n";
    else
      out << hasse_dot(p);
  };
  if (o.exhaustive != 0) {
    for_each_poset(o.exhaustive, emit_one);
  } else {
    for (const auto& p : random_posets(o.random, o.seed, o.count)) emit_one(p);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Represent finite posets by bi-closure spaces and verify the duality claims", "ordual"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: json or dot")->capture_default_str();
    sub->add_option("--cap", o.cap, "Bound on enumerated valuations and closed sets");
  };

  auto* validate = app.add_subcommand("validate", "Check a poset document and print it back");
  validate->add_option("file", o.file, "Input document ('-' for stdin)")->required();
  common(validate);

  auto* dual = app.add_subcommand("dual", "Dual space of an orthoposet document");
  dual->add_option("file", o.file, "Input document ('-' for stdin)")->required();
  common(dual);

  auto* dup = app.add_subcommand("duplicate", "Duplication E and the space Y of a poset");
  dup->add_option("file", o.file, "Input document ('-' for stdin)")->required();
  common(dup);

  auto* verify = app.add_subcommand("verify", "Verify one claim on a document");
  verify->add_option("file", o.file, "Input document ('-' for stdin)")->required();
  verify->add_option("--claim", o.claim, "mayet|homeo|main-lemma|pi-bicontinuous|fix|co-iso|eoc-detect")
      ->required();
  verify->add_flag("--strict-continuity", o.strict, "Require clopen preimages");
  common(verify);

  auto* gen = app.add_subcommand("gen", "Generate poset documents");
  gen->add_option("--exhaustive", o.exhaustive, "Every labelled poset on n elements");
  gen->add_option("--random", o.random, "Random posets on n elements");
  gen->add_option("--seed", o.seed, "Seed for --random");
  gen->add_option("--count", o.count, "Number of random posets");
  common(gen);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (dual->parsed()) return cmd_dual(o, out);
    if (dup->parsed()) return cmd_duplicate(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace ordual::cli
