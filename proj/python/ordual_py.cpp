#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordual/cli/document.hpp"
#include "ordual/cli/emit.hpp"
#include "ordual/cli/generate.hpp"
#include "ordual/cli/verify.hpp"
#include "ordual/closure.hpp"
#include "ordual/duplication.hpp"
#include "ordual/error.hpp"
#include "ordual/mayet.hpp"

namespace py = pybind11;
using namespace ordual;

namespace {

std::vector<std::string> bit_strings(const Family& fam) {
  std::vector<std::string> out;
  for (const auto& s : fam) out.push_back(s.to_string());
  return out;
}

Family parse_family(std::size_t n, const std::vector<std::string>& sets) {
  Family out;
  for (const auto& s : sets) {
    auto v = BitVector::from_string(s);
    if (v.size() != n) throw Error(Errc::SizeMismatch, "subset \"" + s + "\" does not have " + std::to_string(n) + " points");
    out.push_back(std::move(v));
  }
  return out;
}

OrthoPoset ortho_of(const cli::PosetDocument& doc) {
  const auto p = cli::to_poset(doc);
  auto b = cli::to_bounded(doc, p);
  auto c = cli::complement_table(doc, p);
  if (!b) throw Error(Errc::NotBounded, "document has no bounds");
  if (!c) throw Error(Errc::NotOrthoPoset, "document has no complement table");
  return OrthoPoset::make(std::move(*b), std::move(*c));
}

}  // namespace

PYBIND11_MODULE(_ordual, m) {
  m.doc() = "Order-theoretic dualities on finite posets";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def(
      "validate",
      [](const std::string& text) {
        const auto doc = cli::parse_poset(text);
        cli::to_bounded(doc, cli::to_poset(doc));
        return cli::to_json_text(doc);
      },
      py::arg("document"),
      "Parse and validate a poset document, returning its canonical JSON.");

  m.def(
      "monotone_valuations",
      [](const std::string& text) {
        std::vector<std::string> out;
        for (const auto& x : enumerate_monotone(cli::to_poset(cli::parse_poset(text)))) out.push_back(x.bits.to_string());
        return out;
      },
      py::arg("document"), "Monotone {0,1}-valuations as bit strings in label order.");

  m.def(
      "orthovaluations",
      [](const std::string& text) {
        std::vector<std::string> out;
        for (const auto& x : enumerate_orthomonotone(ortho_of(cli::parse_poset(text)))) out.push_back(x.bits.to_string());
        return out;
      },
      py::arg("document"), "Orthomonotone valuations of a complemented poset document.");

  m.def(
      "dual",
      [](const std::string& text) { return cli::emit(build_dual(ortho_of(cli::parse_poset(text))), cli::Format::Json); },
      py::arg("document"), "Dual closure space of a complemented poset, as JSON text.");

  m.def(
      "duplicate",
      [](const std::string& text) {
        const auto p = cli::to_poset(cli::parse_poset(text));
        return cli::emit(duplicate(p), build_y_space(p), cli::Format::Json);
      },
      py::arg("document"), "Duplication of a poset with its valuation space, as JSON text.");

  m.def(
      "c1o2_family",
      [](const std::string& text) { return bit_strings(verify_main_lemma(cli::to_poset(cli::parse_poset(text))).proper_family); },
      py::arg("document"), "Proper sets closed for closure 1 and open for closure 2.");

  m.def(
      "verify",
      [](const std::string& text, const std::string& claim, bool strict, std::size_t valuation_cap,
         std::size_t family_cap) {
        cli::VerifyOptions options;
        options.mode = strict ? ContinuityMode::Strict : ContinuityMode::Weak;
        options.valuation_cap = valuation_cap;
        options.family_cap = family_cap;
        return cli::run_verify(cli::parse_poset(text), cli::parse_claim(claim), options).to_json().dump();
      },
      py::arg("document"), py::arg("claim"), py::arg("strict") = false, py::arg("valuation_cap") = kDefaultValuationCap,
      py::arg("family_cap") = kDefaultFamilyCap, "Run a verification claim, returning the JSON report.");

  m.def(
      "closure_of",
      [](std::size_t n, const std::vector<std::string>& base, const std::string& subset) {
        return closure_of(ClosureSpace(n, parse_family(n, base)), parse_family(n, {subset}).front()).to_string();
      },
      py::arg("points"), py::arg("base"), py::arg("subset"));

  m.def(
      "closed_family",
      [](std::size_t n, const std::vector<std::string>& base, std::size_t cap) {
        return bit_strings(closed_family(ClosureSpace(n, parse_family(n, base)), cap));
      },
      py::arg("points"), py::arg("base"), py::arg("cap") = kDefaultFamilyCap);

  m.def(
      "generate_exhaustive",
      [](std::size_t n) {
        std::vector<std::string> out;
        for (const auto& d : cli::generate(cli::GenMode::Exhaustive, n)) out.push_back(cli::to_json_line(d));
        return out;
      },
      py::arg("n"), "Every labelled poset on n points, one JSON document each.");

  m.def(
      "generate_random",
      [](std::size_t n, std::uint64_t seed, std::size_t count) {
        std::vector<std::string> out;
        for (const auto& d : cli::generate(cli::GenMode::Random, n, seed, count)) out.push_back(cli::to_json_line(d));
        return out;
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("count") = 1);
}
