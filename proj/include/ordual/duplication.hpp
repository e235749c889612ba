#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ordual/closure.hpp"
#include "ordual/mayet.hpp"
#include "ordual/poset.hpp"
#include "ordual/report.hpp"

namespace ordual {

/// Horizontal sum E = P + P^op + {bot, top}, complemented by swapping each
/// element of P with its copy in P^op.
///
/// Carrier layout: index 0 is Bot, 1..n are Left(p), n+1..2n are Right(p)
/// (the copy of p in P^op) and 2n+1 is Top. Labels are "bot", "top",
/// "L(<p>)" and "R(<p>)", so they never collide with labels of P.
class Duplication {
 public:
  enum class Tag { Bot, Left, Right, Top };
  struct Element {
    Tag tag;
    /// Index in P for Left/Right; unused otherwise.
    std::size_t source = 0;
  };

  explicit Duplication(Poset p);

  const Poset& source() const noexcept { return source_; }
  const OrthoPoset& e() const noexcept { return e_; }
  std::size_t source_size() const noexcept { return source_.size(); }

  std::size_t bot() const noexcept { return 0; }
  std::size_t top() const noexcept { return 2 * source_.size() + 1; }
  std::size_t left(std::size_t p) const noexcept { return 1 + p; }
  std::size_t right(std::size_t p) const noexcept { return 1 + source_.size() + p; }
  /// rho: P -> P^op, as an index into E.
  std::size_t rho(std::size_t p) const noexcept { return right(p); }

  Element element(std::size_t i) const noexcept;

 private:
  Poset source_;
  OrthoPoset e_;
};

Duplication duplicate(const Poset& p);

/// Y = monotone valuations of P with sigma1(p) = {y : y(p) = 1},
/// sigma2(p) = {y : y(p) = 0}, closures C1 = clos(sigma1(P)),
/// C2 = clos(sigma2(P)) and their join C.
struct YSpace {
  Poset source;
  std::vector<TwoValuation> points;
  std::vector<PointSubset> sigma1_table;
  std::vector<PointSubset> sigma2_table;
  BiclosureSpace bi;
  ClosureSpace joined;

  /// Index of a valuation in `points`, if present.
  std::optional<std::size_t> find(const TwoValuation& y) const;
};

YSpace build_y_space(const Poset& p, std::size_t cap = kDefaultValuationCap);

/// x restricted to the Left copy of P. Errors: NotOrthovaluation.
TwoValuation restrict_phi(const Duplication& d, const TwoValuation& x);

/// Extension with Bot -> 0, Top -> 1, Left(p) -> y(p), Right(p) -> 1 - y(p).
/// Errors: NotMonotone.
TwoValuation extend_psi(const Duplication& d, const TwoValuation& y);

struct PreimageRow {
  std::string element;      // label in E
  PointSubset sigma;        // sigma(element) in X
  PointSubset psi_preimage; // psi^{-1}(sigma(element)) in Y
};

struct HomeoReport {
  CheckList checks;
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  PointMap phi;  // X index -> Y index
  PointMap psi;  // Y index -> X index
  /// psi-preimages of every base element of (X, C).
  std::vector<PreimageRow> preimages;
};

/// phi and psi are mutually inverse and weakly continuous (or strictly, on
/// request) between the dual of the duplication and (Y, C1 v C2).
HomeoReport verify_homeo(const Poset& p, ContinuityMode mode = ContinuityMode::Weak,
                         std::size_t valuation_cap = kDefaultValuationCap, std::size_t family_cap = kDefaultFamilyCap);

struct MainLemmaReport {
  CheckList checks;
  std::size_t y_size = 0;
  /// C1O2(Y) without the empty and full sets.
  Family proper_family;
};

/// sigma1 is an order isomorphism from P onto the proper C1-closed C2-open sets.
MainLemmaReport verify_main_lemma(const Poset& p, std::size_t valuation_cap = kDefaultValuationCap,
                                  std::size_t family_cap = kDefaultFamilyCap);

}  // namespace ordual
