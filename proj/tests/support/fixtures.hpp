#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "brute.hpp"
#include "ordual/poset.hpp"

namespace fixtures {

using ordual::LabelPair;
using ordual::Poset;

inline Poset poset(std::vector<std::string> labels, std::vector<LabelPair> pairs = {}) {
  return ordual::validate_poset(std::move(labels), pairs);
}

inline Poset chain(std::vector<std::string> labels) {
  std::vector<LabelPair> pairs;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) pairs.emplace_back(labels[i], labels[i + 1]);
  return poset(std::move(labels), std::move(pairs));
}

/// 0 < 1 with 0 and 1 swapped.
inline ordual::OrthoPoset b2() { return ordual::two_element_eoc(); }

/// {0, a, a', 1} with a and a' incomparable; labels in that order.
inline Poset boolean4_poset() { return poset({"0", "a", "a'", "1"}, {{"0", "a"}, {"0", "a'"}, {"a", "1"}, {"a'", "1"}}); }

inline ordual::OrthoPoset boolean4() {
  return ordual::OrthoPoset::make(ordual::make_bounded(boolean4_poset(), 0, 3), {3, 2, 1, 0});
}

/// 0 < m < 1 with c swapping 0 and 1 and fixing m.
inline Poset three_chain() { return chain({"0", "m", "1"}); }
inline std::vector<std::size_t> three_chain_c() { return {2, 1, 0}; }

inline ordual::PointSubset subset(std::size_t n, std::initializer_list<std::size_t> members) {
  ordual::PointSubset s(n);
  for (auto i : members) s.set(i);
  return s;
}

inline ordual::TwoValuation val(std::string_view bits) { return {ordual::BitVector::from_string(bits)}; }

inline brute::Relation relation_of(const Poset& p) {
  brute::Relation r{p.size(), std::vector<brute::Mask>(p.size(), 0)};
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.le(i, j)) r.le[i] |= brute::Mask{1} << j;
  return r;
}

/// Library bit vector (index 0 first) to oracle mask (bit i = index i).
inline brute::Mask mask_of(const ordual::BitVector& v) {
  brute::Mask m = 0;
  for (auto i : v.indices()) m |= brute::Mask{1} << i;
  return m;
}

inline ordual::BitVector bits_of(brute::Mask m, std::size_t n) {
  ordual::BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1U) v.set(i);
  return v;
}

}  // namespace fixtures
