#pragma once

#include <string>
#include <string_view>

#include "ordual/cli/document.hpp"
#include "ordual/cli/verify.hpp"
#include "ordual/closure.hpp"
#include "ordual/duplication.hpp"
#include "ordual/mayet.hpp"

namespace ordual::cli {

enum class Format { Json, Dot };

/// Errors: UnsupportedFormat.
Format parse_format(std::string_view name);

/// Hasse diagram (cover edges only) of a poset.
std::string hasse_dot(const Poset& p, std::string_view graph_name = "poset");

std::string emit(const PosetDocument& doc, Format format);
/// Dot is unsupported for closure spaces.
std::string emit(const ClosureSpace& space, Format format);
/// Dot draws the family ordered by inclusion.
std::string emit(const Family& fam, Format format);
/// Dot is unsupported for reports.
std::string emit(const VerificationReport& report, Format format);

/// Points, sigma table, base and clopen family of a dual space. Dot draws CO(X).
std::string emit(const MayetDual& dual, Format format, std::size_t family_cap = kDefaultFamilyCap);

/// The orthoposet E as a document plus the Y space. Dot draws E.
std::string emit(const Duplication& dup, const YSpace& y, Format format);

}  // namespace ordual::cli
