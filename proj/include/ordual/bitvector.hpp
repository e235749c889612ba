#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ordual {

/// Fixed-length bit vector.
///
/// Bit 0 is stored in the most significant position of the first word, so
/// comparing words as unsigned integers orders vectors lexicographically by
/// index (bit 0 first). This ordering is the canonical order of points and
/// valuations throughout the library.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, value ? ~word_type{0} : 0) {
    trim();
  }

  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] & mask(i)) != 0; }
  bool operator[](std::size_t i) const noexcept { return test(i); }

  void set(std::size_t i, bool value = true) noexcept {
    if (value)
      words_[i / kWordBits] |= mask(i);
    else
      words_[i / kWordBits] &= ~mask(i);
  }
  void reset(std::size_t i) noexcept { set(i, false); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool none() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }
  bool all() const noexcept { return count() == size_; }

  bool is_subset_of(const BitVector& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }

  /// Complement relative to the vector's own length.
  BitVector operator~() const {
    BitVector out = *this;
    for (auto& w : out.words_) w = ~w;
    out.trim();
    return out;
  }

  BitVector& operator&=(const BitVector& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  BitVector& operator|=(const BitVector& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  BitVector& operator^=(const BitVector& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  friend BitVector operator&(BitVector a, const BitVector& b) noexcept { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) noexcept { return a |= b; }
  friend BitVector operator^(BitVector a, const BitVector& b) noexcept { return a ^= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    for (std::size_t k = 0; k < a.words_.size(); ++k)
      if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// Indices of set bits in increasing order.
  std::vector<std::size_t> indices() const;

  /// '0'/'1' characters, index 0 first.
  std::string to_string() const;

  std::size_t hash() const noexcept {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static word_type mask(std::size_t i) noexcept { return word_type{1} << (kWordBits - 1 - i % kWordBits); }

  void trim() noexcept {
    if (const auto tail = size_ % kWordBits; tail != 0 && !words_.empty())
      words_.back() &= ~word_type{0} << (kWordBits - tail);
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

/// A subset of a space's points, as a characteristic vector.
using PointSubset = BitVector;

/// A set family; kept sorted and duplicate-free by the functions producing it.
using Family = std::vector<PointSubset>;

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept { return v.hash(); }
};

}  // namespace ordual
