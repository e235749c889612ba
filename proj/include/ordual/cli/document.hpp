#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordual/poset.hpp"

namespace ordual::cli {

/// Serialized poset as read from and written to disk.
///
/// Schema (JSON object, unknown fields rejected):
///   elements    list of distinct strings, required
///   le          list of [lower, upper] label pairs (generators), required
///   bottom, top optional strings
///   complement  optional object mapping every label to its complement
struct PosetDocument {
  std::vector<std::string> elements;
  std::vector<LabelPair> le;
  std::optional<std::string> bottom;
  std::optional<std::string> top;
  std::optional<std::map<std::string, std::string>> complement;

  friend bool operator==(const PosetDocument&, const PosetDocument&) = default;
};

/// Structural parse. Errors: SyntaxError (with line and column),
/// DuplicateLabel, DanglingLabel, InvalidComplement.
PosetDocument parse_poset(std::string_view text);

/// Pretty-printed JSON, fields in schema order, complement keys sorted.
std::string to_json_text(const PosetDocument& doc);
/// Single-line JSON.
std::string to_json_line(const PosetDocument& doc);

/// Semantic validation through validate_poset.
Poset to_poset(const PosetDocument& doc);

/// Bounds named by the document, checked against the order (NotBounded).
/// nullopt when the document names neither.
std::optional<BoundedPoset> to_bounded(const PosetDocument& doc, const Poset& p);

/// Complement table indexed like `p`, if the document carries one.
std::optional<std::vector<std::size_t>> complement_table(const PosetDocument& doc, const Poset& p);

/// Document listing cover pairs only, with optional bounds and complement.
PosetDocument to_document(const Poset& p, std::optional<std::pair<std::size_t, std::size_t>> bounds = std::nullopt,
                          const std::vector<std::size_t>* comp = nullptr);

}  // namespace ordual::cli
