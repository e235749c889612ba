#include "ordual/cli/emit.hpp"

#include <json.hpp>

#include "ordual/error.hpp"

namespace ordual::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dot_id(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

[[noreturn]] void unsupported(std::string_view what) {
  throw Error(Errc::UnsupportedFormat, "dot output is not available for " + std::string(what));
}

ordered_json family_json(const Family& fam) {
  auto out = ordered_json::array();
  for (const auto& a : fam) out.push_back(a.to_string());
  return out;
}

ordered_json space_json(const ClosureSpace& s) {
  ordered_json out;
  out["points"] = s.point_labels();
  out["base"] = family_json(s.base());
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  throw Error(Errc::UnsupportedFormat, "unknown format '" + std::string(name) + "'");
}

std::string hasse_dot(const Poset& p, std::string_view graph_name) {
  std::string out = "digraph " + std::string(graph_name) + " {\n";
  for (const auto& label : p.labels()) out += "  " + dot_id(label) + ";\n";
  for (auto [a, b] : p.cover_pairs()) out += "  " + dot_id(p.label(a)) + " -> " + dot_id(p.label(b)) + ";\n";
  return out + "}\n";
}

std::string emit(const PosetDocument& doc, Format format) {
  if (format == Format::Json) return to_json_text(doc);
  return hasse_dot(to_poset(doc));
}

std::string emit(const ClosureSpace& space, Format format) {
  if (format == Format::Dot) unsupported("closure spaces");
  return space_json(space).dump(2) + "\n";
}

std::string emit(const Family& fam, Format format) {
  if (format == Format::Json) return family_json(fam).dump(2) + "\n";
  return hasse_dot(family_as_poset(fam), "family");
}

std::string emit(const VerificationReport& report, Format format) {
  if (format == Format::Dot) unsupported("verification reports");
  return report.to_json().dump(2) + "\n";
}

std::string emit(const MayetDual& dual, Format format, std::size_t family_cap) {
  const auto clopen = clopen_family(dual.space, family_cap);
  if (format == Format::Dot) return hasse_dot(family_as_poset(clopen), "clopen");
  ordered_json out;
  out["space"] = space_json(dual.space);
  out["sigma"] = ordered_json::object();
  const auto& p = dual.source.poset();
  for (std::size_t i = 0; i < p.size(); ++i) out["sigma"][p.label(i)] = dual.sigma_table[i].to_string();
  out["clopen"] = family_json(clopen);
  return out.dump(2) + "\n";
}

std::string emit(const Duplication& dup, const YSpace& y, Format format) {
  const auto& e = dup.e();
  if (format == Format::Dot) return hasse_dot(e.poset(), "duplication");
  ordered_json out;
  const auto doc = to_document(e.poset(), std::pair{e.bottom(), e.top()}, &e.comp_table());
  out["e"] = ordered_json::parse(to_json_line(doc));
  ordered_json ys;
  ys["points"] = y.bi.first().point_labels();
  ys["sigma1"] = ordered_json::object();
  ys["sigma2"] = ordered_json::object();
  const auto& p = dup.source();
  for (std::size_t i = 0; i < p.size(); ++i) {
    ys["sigma1"][p.label(i)] = y.sigma1_table[i].to_string();
    ys["sigma2"][p.label(i)] = y.sigma2_table[i].to_string();
  }
  ys["joined_base"] = family_json(y.joined.base());
  out["y"] = std::move(ys);
  return out.dump(2) + "\n";
}

}  // namespace ordual::cli
