#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ordual/cli/document.hpp"
#include "ordual/poset.hpp"

namespace ordual::cli {

inline constexpr std::size_t kMaxExhaustiveSize = 6;
inline constexpr std::size_t kMaxRandomSize = 12;

/// Labels "a", "b", ... for generated posets.
std::vector<std::string> generated_labels(std::size_t n);

/// Visits every labelled poset on n elements exactly once, in a fixed order.
/// Throws SizeCap for n above kMaxExhaustiveSize and EmptyCarrier for n = 0.
void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit);

std::vector<Poset> exhaustive_posets(std::size_t n);

/// Random strict upper-triangular relation under a random relabelling,
/// transitively closed. The edge density is itself drawn per poset.
Poset random_poset(std::size_t n, std::mt19937_64& rng);

std::vector<Poset> random_posets(std::size_t n, std::uint64_t seed, std::size_t count);

enum class GenMode { Exhaustive, Random };

std::vector<PosetDocument> generate(GenMode mode, std::size_t n, std::uint64_t seed = 0, std::size_t count = 1);

}  // namespace ordual::cli
