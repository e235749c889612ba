#pragma once

#include <cstddef>
#include <vector>

#include "ordual/closure.hpp"
#include "ordual/poset.hpp"
#include "ordual/report.hpp"

namespace ordual {

/// Dual space of an orthoposet E: the orthomonotone valuations X of E, with
/// sigma(e) = {x : x(e) = 1} and the closure generated by sigma(E).
struct MayetDual {
  OrthoPoset source;
  /// Canonically ordered, so sigma subsets are reproducible.
  std::vector<TwoValuation> points;
  ClosureSpace space;
  /// Indexed by element of `source`.
  std::vector<PointSubset> sigma_table;
};

MayetDual build_dual(const OrthoPoset& e, std::size_t cap = kDefaultValuationCap);

/// Throws UnknownElement for an index outside the source carrier.
const PointSubset& sigma(const MayetDual& d, std::size_t element);

struct MayetReport {
  CheckList checks;
  std::size_t point_count = 0;
  std::size_t closed_count = 0;
  /// CO(X), computed by enumerating the closed family.
  Family clopen;
};

/// Checks that sigma is injective, an order embedding, turns complements into
/// set complements, and that its image is exactly CO(X).
MayetReport verify_mayet(const OrthoPoset& e, std::size_t valuation_cap = kDefaultValuationCap,
                         std::size_t family_cap = kDefaultFamilyCap);

}  // namespace ordual
