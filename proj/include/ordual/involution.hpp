#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordual/closure.hpp"
#include "ordual/duplication.hpp"
#include "ordual/poset.hpp"
#include "ordual/report.hpp"

namespace ordual {

/// A poset with an order-reversing involution p -> p^c, the candidate
/// complementation. Bounds are detected, not required; only the
/// complementation tests need them.
class InvolutedPoset {
 public:
  /// Throws NotAntitoneInvolution unless c is an order-reversing involution.
  static InvolutedPoset make(Poset p, std::vector<std::size_t> c);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  std::size_t c(std::size_t i) const noexcept { return c_[i]; }
  const std::vector<std::size_t>& table() const noexcept { return c_; }

  bool is_bounded() const noexcept { return bounds_.has_value(); }
  /// Throws NotBounded when the poset lacks a least or greatest element.
  BoundedPoset bounded() const;

 private:
  InvolutedPoset(Poset p, std::vector<std::size_t> c, std::optional<std::pair<std::size_t, std::size_t>> bounds)
      : poset_(std::move(p)), c_(std::move(c)), bounds_(bounds) {}

  Poset poset_;
  std::vector<std::size_t> c_;
  std::optional<std::pair<std::size_t, std::size_t>> bounds_;
};

/// pi(x)(p) = 1 - x(c(p)). Errors: NotMonotone.
TwoValuation apply_pi(const InvolutedPoset& ip, const TwoValuation& x);

/// pi tabulated on the monotone valuations of P.
struct PiMap {
  InvolutedPoset source;
  std::vector<TwoValuation> x_points;
  PointMap table;
};

PiMap build_pi(const InvolutedPoset& ip, std::size_t cap = kDefaultValuationCap);

struct PiReport {
  CheckList checks;
  PiMap pi;
};

/// pi^{-1}(sigma1(p)) = sigma2(c(p)) for every p, and pi is continuous
/// (X, C1) -> (X, C2) and (X, C2) -> (X, C1).
PiReport verify_pi_bicontinuous(const InvolutedPoset& ip, ContinuityMode mode = ContinuityMode::Weak,
                                std::size_t valuation_cap = kDefaultValuationCap,
                                std::size_t family_cap = kDefaultFamilyCap);

struct FixedPointReport {
  CheckList checks;
  std::vector<TwoValuation> fixed;
};

/// Fix(pi), checked against the independently enumerated c-orthovaluations.
FixedPointReport ortho_fixed_points(const InvolutedPoset& ip, std::size_t cap = kDefaultValuationCap);

struct CoIsoReport {
  CheckList checks;
  /// Fix(pi) with the closure traced from C1 v C2.
  std::vector<TwoValuation> y_points;
  Family clopen;
};

/// Requires (P, c) to be an orthoposet (NotAnEOC otherwise).
CoIsoReport verify_co_iso(const InvolutedPoset& ip, std::size_t valuation_cap = kDefaultValuationCap,
                          std::size_t family_cap = kDefaultFamilyCap);

struct ComplementationEvidence {
  /// (pi, pi) is a homeomorphism (X, C1, C2) <-> (X, C2, C1).
  bool criterion = false;
  /// The axiom-checking oracle on the same input.
  AxiomReport oracle;
  /// Base member of the target whose pi-preimage is not closed, if any.
  std::string failing_base;
  /// pi^{-1}(sigma1(p)) and pi^{-1}(sigma2(p)) per element.
  std::vector<std::pair<PointSubset, PointSubset>> preimages;

  bool agrees() const noexcept { return criterion == oracle.all_passed(); }
};

/// Decides whether c is a complementation through the homeomorphism
/// criterion, running the axiom oracle alongside. Requires bounds (NotBounded).
ComplementationEvidence detect_complementation(const InvolutedPoset& ip, ContinuityMode mode = ContinuityMode::Weak,
                                               std::size_t valuation_cap = kDefaultValuationCap,
                                               std::size_t family_cap = kDefaultFamilyCap);

}  // namespace ordual
