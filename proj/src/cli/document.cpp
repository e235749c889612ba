#include "ordual/cli/document.hpp"

#include <set>

#include <json.hpp>

#include "ordual/error.hpp"

namespace ordual::cli {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void syntax(const std::string& what) { throw Error(Errc::SyntaxError, what); }

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string expect_string(const json& v, const std::string& where) {
  if (!v.is_string()) syntax(where + " must be a string");
  return v.get<std::string>();
}

ordered_json to_ordered(const PosetDocument& doc) {
  ordered_json out;
  out["elements"] = doc.elements;
  out["le"] = ordered_json::array();
  for (const auto& [a, b] : doc.le) out["le"].push_back({a, b});
  if (doc.bottom) out["bottom"] = *doc.bottom;
  if (doc.top) out["top"] = *doc.top;
  if (doc.complement) {
    out["complement"] = ordered_json::object();
    for (const auto& [k, v] : *doc.complement) out["complement"][k] = v;
  }
  return out;
}

}  // namespace

PosetDocument parse_poset(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    syntax(position_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON");
  }
  if (!root.is_object()) syntax("document must be a JSON object");
  for (const auto& [key, value] : root.items()) {
    static const std::set<std::string> known{"elements", "le", "bottom", "top", "complement"};
    if (!known.contains(key)) syntax("unknown field '" + key + "'");
  }
  if (!root.contains("elements")) syntax("missing field 'elements'");
  if (!root.contains("le")) syntax("missing field 'le'");

  PosetDocument doc;
  const auto& elements = root["elements"];
  if (!elements.is_array()) syntax("'elements' must be a list");
  std::set<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto label = expect_string(elements[i], "elements[" + std::to_string(i) + "]");
    if (!labels.insert(label).second) throw Error(Errc::DuplicateLabel, "'" + label + "' listed twice");
    doc.elements.push_back(std::move(label));
  }
  const auto known = [&](const std::string& label, const std::string& where) {
    if (!labels.contains(label)) throw Error(Errc::DanglingLabel, where + " refers to unknown label '" + label + "'");
  };

  const auto& le = root["le"];
  if (!le.is_array()) syntax("'le' must be a list");
  for (std::size_t i = 0; i < le.size(); ++i) {
    const auto where = "le[" + std::to_string(i) + "]";
    if (!le[i].is_array() || le[i].size() != 2) syntax(where + " must be a pair of labels");
    auto a = expect_string(le[i][0], where);
    auto b = expect_string(le[i][1], where);
    known(a, where);
    known(b, where);
    doc.le.emplace_back(std::move(a), std::move(b));
  }
  for (const char* field : {"bottom", "top"}) {
    if (!root.contains(field)) continue;
    auto label = expect_string(root[field], field);
    known(label, field);
    (std::string_view(field) == "bottom" ? doc.bottom : doc.top) = std::move(label);
  }
  if (root.contains("complement")) {
    const auto& comp = root["complement"];
    if (!comp.is_object()) syntax("'complement' must be an object");
    std::map<std::string, std::string> table;
    for (const auto& [key, value] : comp.items()) {
      auto image = expect_string(value, "complement['" + key + "']");
      known(key, "complement key");
      known(image, "complement['" + key + "']");
      table.emplace(key, std::move(image));
    }
    for (const auto& label : doc.elements)
      if (!table.contains(label)) throw Error(Errc::InvalidComplement, "no complement given for '" + label + "'");
    for (const auto& [key, image] : table)
      if (table.at(image) != key)
        throw Error(Errc::InvalidComplement, "complement of '" + image + "' is not '" + key + "'");
    doc.complement = std::move(table);
  }
  return doc;
}

std::string to_json_text(const PosetDocument& doc) { return to_ordered(doc).dump(2) + "\n"; }

std::string to_json_line(const PosetDocument& doc) { return to_ordered(doc).dump(); }

Poset to_poset(const PosetDocument& doc) { return validate_poset(doc.elements, doc.le); }

std::optional<BoundedPoset> to_bounded(const PosetDocument& doc, const Poset& p) {
  if (!doc.bottom && !doc.top) return std::nullopt;
  if (!doc.bottom || !doc.top) throw Error(Errc::NotBounded, "document names only one of bottom/top");
  return make_bounded(p, *p.index_of(*doc.bottom), *p.index_of(*doc.top));
}

std::optional<std::vector<std::size_t>> complement_table(const PosetDocument& doc, const Poset& p) {
  if (!doc.complement) return std::nullopt;
  std::vector<std::size_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto it = doc.complement->find(p.label(i));
    if (it == doc.complement->end()) throw Error(Errc::InvalidComplement, "no complement for '" + p.label(i) + "'");
    out[i] = *p.index_of(it->second);
  }
  return out;
}

PosetDocument to_document(const Poset& p, std::optional<std::pair<std::size_t, std::size_t>> bounds,
                          const std::vector<std::size_t>* comp) {
  PosetDocument doc;
  doc.elements = p.labels();
  for (auto [a, b] : p.cover_pairs()) doc.le.emplace_back(p.label(a), p.label(b));
  if (bounds) {
    doc.bottom = p.label(bounds->first);
    doc.top = p.label(bounds->second);
  }
  if (comp) {
    std::map<std::string, std::string> table;
    for (std::size_t i = 0; i < p.size(); ++i) table.emplace(p.label(i), p.label((*comp)[i]));
    doc.complement = std::move(table);
  }
  return doc;
}

}  // namespace ordual::cli
