#include "ordual/closure.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ordual/error.hpp"

namespace ordual {

namespace {

void require_size(std::size_t expected, const PointSubset& a) {
  if (a.size() != expected)
    throw Error(Errc::SizeMismatch,
                "subset of size " + std::to_string(a.size()) + " on a space of " + std::to_string(expected) + " points");
}

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw Error(Errc::SizeMismatch, "point label count differs from point count");
  return labels;
}

}  // namespace

void normalize(Family& fam) {
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

ClosureSpace::ClosureSpace(std::size_t point_count, Family base, std::vector<std::string> point_labels)
    : point_count_(point_count), base_(std::move(base)), labels_(default_labels(point_count, std::move(point_labels))) {
  for (const auto& k : base_) require_size(point_count_, k);
  normalize(base_);
}

BiclosureSpace::BiclosureSpace(std::size_t point_count, Family base1, Family base2,
                               std::vector<std::string> point_labels)
    : first_(point_count, std::move(base1), point_labels), second_(point_count, std::move(base2), point_labels) {}

const ClosureSpace& BiclosureSpace::closure(int which) const {
  if (which == 1) return first_;
  if (which == 2) return second_;
  throw Error(Errc::InvalidArgument, "closure index must be 1 or 2");
}

BiclosureSpace BiclosureSpace::swapped() const {
  return BiclosureSpace(size(), second_.base(), first_.base(), first_.point_labels());
}

PointSubset closure_of(const ClosureSpace& s, const PointSubset& a) {
  require_size(s.size(), a);
  auto out = s.full_set();
  for (const auto& k : s.base())
    if (a.is_subset_of(k)) out &= k;
  return out;
}

bool is_closed(const ClosureSpace& s, const PointSubset& a) { return closure_of(s, a) == a; }

Family closed_family(const ClosureSpace& s, std::size_t cap) {
  std::unordered_set<PointSubset, BitVectorHash> seen;
  std::deque<PointSubset> work;
  auto admit = [&](PointSubset v) {
    if (seen.contains(v)) return;
    if (seen.size() == cap) throw Error(Errc::SizeCap, "more than " + std::to_string(cap) + " closed sets");
    seen.insert(v);
    work.push_back(std::move(v));
  };
  admit(s.full_set());
  for (const auto& k : s.base()) admit(k);
  // Every intersection of base members is reached by intersecting with one
  // base member at a time.
  while (!work.empty()) {
    auto cur = std::move(work.front());
    work.pop_front();
    for (const auto& k : s.base()) admit(cur & k);
  }
  Family out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

SubsetClass classify_subset(const ClosureSpace& s, const PointSubset& a) {
  require_size(s.size(), a);
  return {is_closed(s, a), is_closed(s, ~a)};
}

Family mixed_families(const BiclosureSpace& b, int i, int j, std::size_t cap) {
  const auto& ci = b.closure(i);
  const auto& cj = b.closure(j);
  Family out;
  for (auto& a : closed_family(ci, cap))
    if (is_closed(cj, ~a)) out.push_back(std::move(a));
  return out;
}

Family clopen_family(const ClosureSpace& s, std::size_t cap) {
  Family out;
  for (auto& a : closed_family(s, cap))
    if (is_closed(s, ~a)) out.push_back(std::move(a));
  return out;
}

ClosureSpace join_closures(std::size_t point_count, const Family& base1, const Family& base2) {
  Family base = base1;
  base.insert(base.end(), base2.begin(), base2.end());
  return ClosureSpace(point_count, std::move(base));
}

ClosureSpace join_closures(const ClosureSpace& a, const ClosureSpace& b) {
  if (a.size() != b.size()) throw Error(Errc::SizeMismatch, "joined closures live on different point sets");
  Family base = a.base();
  base.insert(base.end(), b.base().begin(), b.base().end());
  return ClosureSpace(a.size(), std::move(base), a.point_labels());
}

PointSubset preimage(std::span<const std::size_t> f, const PointSubset& target) {
  PointSubset out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (target.test(f[i])) out.set(i);
  return out;
}

bool is_continuous(std::span<const std::size_t> f, const ClosureSpace& src, const ClosureSpace& dst,
                   ContinuityMode mode, std::size_t cap) {
  if (f.size() != src.size()) throw Error(Errc::SizeMismatch, "map is not total on the source points");
  for (auto v : f)
    if (v >= dst.size()) throw Error(Errc::SizeMismatch, "map sends a point outside the target");
  if (mode == ContinuityMode::Weak) {
    for (const auto& k : dst.base())
      if (!is_closed(src, preimage(f, k))) return false;
    return true;
  }
  for (const auto& a : closed_family(dst, cap))
    if (!classify_subset(src, preimage(f, a)).clopen()) return false;
  return true;
}

namespace {

bool mutually_inverse(std::span<const std::size_t> f, std::span<const std::size_t> g, std::size_t a_size,
                      std::size_t b_size) {
  if (a_size != b_size || f.size() != a_size || g.size() != b_size) return false;
  for (std::size_t i = 0; i < a_size; ++i) {
    if (f[i] >= b_size || g[f[i]] != i) return false;
  }
  for (std::size_t j = 0; j < b_size; ++j) {
    if (g[j] >= a_size || f[g[j]] != j) return false;
  }
  return true;
}

}  // namespace

bool is_homeomorphic_pair(std::span<const std::size_t> f, std::span<const std::size_t> g, const ClosureSpace& a,
                          const ClosureSpace& b, ContinuityMode mode, std::size_t cap) {
  if (!mutually_inverse(f, g, a.size(), b.size())) return false;
  return is_continuous(f, a, b, mode, cap) && is_continuous(g, b, a, mode, cap);
}

bool is_homeomorphic_pair(std::span<const std::size_t> f, std::span<const std::size_t> g, const BiclosureSpace& a,
                          const BiclosureSpace& b, ContinuityMode mode, std::size_t cap) {
  return is_homeomorphic_pair(f, g, a.first(), b.first(), mode, cap) &&
         is_homeomorphic_pair(f, g, a.second(), b.second(), mode, cap);
}

Poset family_as_poset(const Family& fam) {
  const auto n = fam.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& a : fam) labels.push_back(a.to_string());
  std::vector<BitVector> le(n, BitVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (fam[i].is_subset_of(fam[j])) le[i].set(j);
  return Poset::from_relation(std::move(labels), std::move(le));
}

}  // namespace ordual
