#include "ordual/cli/generate.hpp"

#include <algorithm>
#include <numeric>

#include "ordual/error.hpp"

namespace ordual::cli {

namespace {

using Mask = std::uint32_t;

bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Extends a poset on elements 0..k-1 (up[i] = {j : i <= j}) by element k,
// choosing its strict down-set D and strict up-set U among earlier elements.
void extend(std::size_t n, std::size_t k, std::vector<Mask>& up, const std::vector<std::string>& labels,
            const std::function<void(const Poset&)>& visit) {
  if (k == n) {
    std::vector<BitVector> le(n, BitVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (up[i] >> j & 1U) le[i].set(j);
    visit(Poset::from_relation(labels, std::move(le)));
    return;
  }
  std::vector<Mask> down(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (up[i] >> j & 1U) down[j] |= Mask{1} << i;

  const Mask universe = (Mask{1} << k) - 1;
  for (Mask d = 0; d <= universe; ++d) {
    bool down_closed = true;
    Mask above_all = universe;  // elements strictly above every member of D
    for (std::size_t i = 0; i < k && down_closed; ++i) {
      if (!(d >> i & 1U)) continue;
      down_closed = is_subset(down[i], d);
      above_all &= up[i] & ~(Mask{1} << i);
    }
    if (!down_closed) continue;
    for (Mask u = 0; u <= universe; ++u) {
      if (!is_subset(u, above_all) || (u & d) != 0) continue;
      bool up_closed = true;
      for (std::size_t i = 0; i < k && up_closed; ++i)
        if (u >> i & 1U) up_closed = is_subset(up[i] & universe, u);
      if (!up_closed) continue;

      auto saved = up;
      for (std::size_t i = 0; i < k; ++i)
        if (d >> i & 1U) up[i] |= Mask{1} << k;
      up[k] = u | Mask{1} << k;
      extend(n, k + 1, up, labels, visit);
      up = std::move(saved);
    }
  }
}

}  // namespace

std::vector<std::string> generated_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string label;
    auto v = i;
    do {
      label.insert(label.begin(), static_cast<char>('a' + v % 26));
      v /= 26;
    } while (v-- > 0);
    labels.push_back(std::move(label));
  }
  return labels;
}

void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit) {
  if (n == 0) throw Error(Errc::EmptyCarrier, "exhaustive generation needs n >= 1");
  if (n > kMaxExhaustiveSize)
    throw Error(Errc::SizeCap, "exhaustive generation is limited to n <= " + std::to_string(kMaxExhaustiveSize));
  std::vector<Mask> up(n, 0);
  extend(n, 0, up, generated_labels(n), visit);
}

std::vector<Poset> exhaustive_posets(std::size_t n) {
  std::vector<Poset> out;
  for_each_poset(n, [&](const Poset& p) { out.push_back(p); });
  return out;
}

Poset random_poset(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw Error(Errc::EmptyCarrier, "random generation needs n >= 1");
  if (n > kMaxRandomSize)
    throw Error(Errc::SizeCap, "random generation is limited to n <= " + std::to_string(kMaxRandomSize));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::bernoulli_distribution edge(density);

  const auto labels = generated_labels(n);
  std::vector<LabelPair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(labels[perm[i]], labels[perm[j]]);
  return validate_poset(labels, pairs);
}

std::vector<Poset> random_posets(std::size_t n, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Poset> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_poset(n, rng));
  return out;
}

std::vector<PosetDocument> generate(GenMode mode, std::size_t n, std::uint64_t seed, std::size_t count) {
  std::vector<PosetDocument> out;
  if (mode == GenMode::Exhaustive) {
    for_each_poset(n, [&](const Poset& p) { out.push_back(to_document(p)); });
  } else {
    for (const auto& p : random_posets(n, seed, count)) out.push_back(to_document(p));
  }
  return out;
}

}  // namespace ordual::cli
