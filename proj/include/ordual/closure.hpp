#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ordual/bitvector.hpp"
#include "ordual/poset.hpp"

namespace ordual {

/// Default bound on the size of an enumerated closed family.
inline constexpr std::size_t kDefaultFamilyCap = std::size_t{1} << 16;

/// Finite closure space generated by a base: the closed sets are the
/// intersections of base members, the full set being the empty intersection.
/// The empty set is closed only when some intersection realises it.
class ClosureSpace {
 public:
  /// Points are labelled "0", "1", ... when `point_labels` is empty.
  ClosureSpace(std::size_t point_count, Family base, std::vector<std::string> point_labels = {});

  std::size_t size() const noexcept { return point_count_; }
  const Family& base() const noexcept { return base_; }
  const std::vector<std::string>& point_labels() const noexcept { return labels_; }

  PointSubset empty_set() const { return PointSubset(point_count_); }
  PointSubset full_set() const { return PointSubset(point_count_, true); }

 private:
  std::size_t point_count_;
  Family base_;
  std::vector<std::string> labels_;
};

/// One point set carrying two closures.
class BiclosureSpace {
 public:
  BiclosureSpace(std::size_t point_count, Family base1, Family base2, std::vector<std::string> point_labels = {});

  std::size_t size() const noexcept { return first_.size(); }
  /// Closure 1 or 2.
  const ClosureSpace& closure(int which) const;
  const ClosureSpace& first() const noexcept { return first_; }
  const ClosureSpace& second() const noexcept { return second_; }

  /// Same points with the two closures exchanged.
  BiclosureSpace swapped() const;

 private:
  ClosureSpace first_;
  ClosureSpace second_;
};

/// Smallest closed set containing `a`. Errors: SizeMismatch.
PointSubset closure_of(const ClosureSpace& s, const PointSubset& a);

bool is_closed(const ClosureSpace& s, const PointSubset& a);

/// Every closed set, sorted canonically. Throws SizeCap beyond `cap` sets.
Family closed_family(const ClosureSpace& s, std::size_t cap = kDefaultFamilyCap);

struct SubsetClass {
  bool closed = false;
  bool open = false;
  bool clopen() const noexcept { return closed && open; }
};

SubsetClass classify_subset(const ClosureSpace& s, const PointSubset& a);

/// Sets closed for closure i whose complement is closed for closure j.
Family mixed_families(const BiclosureSpace& b, int i, int j, std::size_t cap = kDefaultFamilyCap);

/// Clopen sets of a single closure space.
Family clopen_family(const ClosureSpace& s, std::size_t cap = kDefaultFamilyCap);

/// Closure generated by the union of two bases (deduplicated, canonical order).
ClosureSpace join_closures(const ClosureSpace& a, const ClosureSpace& b);
ClosureSpace join_closures(std::size_t point_count, const Family& base1, const Family& base2);

/// Weak: preimages of closed sets are closed (checked on the base).
/// Strict: preimages of closed sets are clopen.
enum class ContinuityMode { Weak, Strict };

/// A total map between point sets, `map[i]` being the image of point i.
using PointMap = std::vector<std::size_t>;

PointSubset preimage(std::span<const std::size_t> f, const PointSubset& target);

bool is_continuous(std::span<const std::size_t> f, const ClosureSpace& src, const ClosureSpace& dst,
                   ContinuityMode mode = ContinuityMode::Weak, std::size_t cap = kDefaultFamilyCap);

/// f: a -> b and g: b -> a are mutually inverse bijections, both continuous.
bool is_homeomorphic_pair(std::span<const std::size_t> f, std::span<const std::size_t> g, const ClosureSpace& a,
                          const ClosureSpace& b, ContinuityMode mode = ContinuityMode::Weak,
                          std::size_t cap = kDefaultFamilyCap);

/// Bi-closure version: homeomorphic for closure 1 against closure 1 and for
/// closure 2 against closure 2.
bool is_homeomorphic_pair(std::span<const std::size_t> f, std::span<const std::size_t> g, const BiclosureSpace& a,
                          const BiclosureSpace& b, ContinuityMode mode = ContinuityMode::Weak,
                          std::size_t cap = kDefaultFamilyCap);

/// Orders a family of distinct sets by inclusion. Members are labelled by
/// their bit strings.
Poset family_as_poset(const Family& fam);

/// Sorts and removes duplicates.
void normalize(Family& fam);

}  // namespace ordual
