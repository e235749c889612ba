#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordual/bitvector.hpp"

namespace ordual {

/// Default bound on the number of valuations any enumeration may produce.
inline constexpr std::size_t kDefaultValuationCap = std::size_t{1} << 20;

using LabelPair = std::pair<std::string, std::string>;

/// Finite partially ordered set over labelled elements.
///
/// Elements are addressed by index in label order. Instances are only
/// produced by validating factories, so the relation is always reflexive,
/// antisymmetric and transitive.
class Poset {
 public:
  /// Builds a poset from a full relation matrix, `le[i].test(j)` meaning i <= j.
  /// Throws unless the relation is a partial order on distinct labels.
  static Poset from_relation(std::vector<std::string> labels, std::vector<BitVector> le);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool le(std::size_t i, std::size_t j) const noexcept { return up_[i].test(j); }
  bool lt(std::size_t i, std::size_t j) const noexcept { return i != j && le(i, j); }
  bool comparable(std::size_t i, std::size_t j) const noexcept { return le(i, j) || le(j, i); }

  /// {j : i <= j}
  const BitVector& up(std::size_t i) const noexcept { return up_[i]; }
  /// {j : j <= i}
  const BitVector& down(std::size_t i) const noexcept { return down_[i]; }

  /// Ascending linear extension: every element appears after all elements below it.
  const std::vector<std::size_t>& linear_extension() const noexcept { return linear_; }

  bool is_up_set(const BitVector& s) const noexcept;
  bool is_down_set(const BitVector& s) const noexcept;

  /// Pairs (i, j) with i covered by j.
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.labels_ == b.labels_ && a.up_ == b.up_; }

 private:
  Poset() = default;

  std::vector<std::string> labels_;
  std::vector<BitVector> up_;
  std::vector<BitVector> down_;
  std::vector<std::size_t> linear_;
};

/// Takes the reflexive-transitive closure of `le_pairs` and validates it.
/// Errors: EmptyCarrier, UnknownLabel, DuplicateLabel, AntisymmetryViolation
/// (the message names a witnessing cycle).
Poset validate_poset(std::vector<std::string> elements, std::span<const LabelPair> le_pairs);

/// Opposite poset together with the bijection rho (element i of P maps to
/// element rho[i] of P^op). Labels are kept, so rho is the identity on indices.
struct Opposite {
  Poset poset;
  std::vector<std::size_t> rho;
};
Opposite opposite(const Poset& p);

struct BoundedPoset {
  Poset poset;
  std::size_t bottom;
  std::size_t top;
};

/// Locates the least and greatest elements; nullopt if either is missing.
std::optional<BoundedPoset> as_bounded(Poset p);

/// Bounded poset with the named bounds, throwing NotBounded if they are not bounds.
BoundedPoset make_bounded(Poset p, std::size_t bottom, std::size_t top);

enum class BoundKind { Join, Meet };

/// Least upper bound (Join) or greatest lower bound (Meet), when it exists.
std::optional<std::size_t> bound(const Poset& p, std::size_t a, std::size_t b, BoundKind kind);

/// Result of checking one complementation axiom.
struct AxiomCheck {
  bool passed = true;
  /// Elements witnessing the failure; empty on success.
  std::vector<std::size_t> witness;
  std::string detail;
};

/// Per-axiom outcome of testing whether a permutation is an orthocomplementation.
struct AxiomReport {
  AxiomCheck involution;  // c(c(p)) = p
  AxiomCheck complement;  // p v c(p) = top and p ^ c(p) = bottom, both existing
  AxiomCheck antitone;    // p <= q implies c(q) <= c(p)

  bool all_passed() const noexcept { return involution.passed && complement.passed && antitone.passed; }
};

/// Brute-force check of the three complementation axioms. `c` must be a
/// permutation of the carrier (InvalidArgument otherwise).
AxiomReport check_ortho_axioms(const BoundedPoset& p, std::span<const std::size_t> c);

/// Bounded poset with an orthocomplementation.
class OrthoPoset {
 public:
  /// Throws NotOrthoPoset (message carries the first failing axiom) unless
  /// check_ortho_axioms passes.
  static OrthoPoset make(BoundedPoset base, std::vector<std::size_t> comp);

  const BoundedPoset& bounded() const noexcept { return base_; }
  const Poset& poset() const noexcept { return base_.poset; }
  std::size_t size() const noexcept { return base_.poset.size(); }
  std::size_t bottom() const noexcept { return base_.bottom; }
  std::size_t top() const noexcept { return base_.top; }
  std::size_t comp(std::size_t i) const noexcept { return comp_[i]; }
  const std::vector<std::size_t>& comp_table() const noexcept { return comp_; }

 private:
  OrthoPoset(BoundedPoset base, std::vector<std::size_t> comp) : base_(std::move(base)), comp_(std::move(comp)) {}

  BoundedPoset base_;
  std::vector<std::size_t> comp_;
};

/// The two-element orthoposet 0 < 1 with 0 and 1 swapped.
OrthoPoset two_element_eoc();

/// Map from a poset's carrier into {0, 1}, indexed in the poset's label order.
struct TwoValuation {
  BitVector bits;

  std::size_t size() const noexcept { return bits.size(); }
  bool operator()(std::size_t i) const noexcept { return bits.test(i); }

  friend bool operator==(const TwoValuation&, const TwoValuation&) = default;
  friend auto operator<=>(const TwoValuation& a, const TwoValuation& b) noexcept { return a.bits <=> b.bits; }
};

bool is_monotone(const Poset& p, const TwoValuation& x);
bool is_orthomonotone(const OrthoPoset& e, const TwoValuation& x);

/// All monotone valuations (characteristic vectors of up-sets), in canonical
/// order. Throws SizeCap once more than `cap` would be produced.
std::vector<TwoValuation> enumerate_monotone(const Poset& p, std::size_t cap = kDefaultValuationCap);

/// Monotone valuations with x(comp(p)) = 1 - x(p), in canonical order.
std::vector<TwoValuation> enumerate_orthomonotone(const OrthoPoset& e, std::size_t cap = kDefaultValuationCap);

/// Monotone valuations satisfying x(c(p)) = 1 - x(p) for an arbitrary
/// permutation c of the carrier. Shared by the orthomonotone enumeration and
/// by fixed-point checks on candidate complementations.
std::vector<TwoValuation> enumerate_complement_preserving(const Poset& p, std::span<const std::size_t> c,
                                                          std::size_t cap = kDefaultValuationCap);

}  // namespace ordual
