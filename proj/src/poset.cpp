#include "ordual/poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "ordual/error.hpp"

namespace ordual {

namespace {

std::string describe_pair(const Poset& p, std::size_t a, std::size_t b) {
  return "(" + p.label(a) + ", " + p.label(b) + ")";
}

// Path from `from` to `to` over the generating edges, as a label list.
std::vector<std::size_t> find_path(const std::vector<std::vector<std::size_t>>& adj, std::size_t from,
                                   std::size_t to) {
  std::vector<std::size_t> parent(adj.size(), adj.size());
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (auto w : adj[v]) {
      if (parent[w] == adj.size()) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::size_t> path;
  for (auto v = to;; v = parent[v]) {
    path.push_back(v);
    if (v == from) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Poset Poset::from_relation(std::vector<std::string> labels, std::vector<BitVector> le) {
  const auto n = labels.size();
  if (n == 0) throw Error(Errc::EmptyCarrier, "a poset needs at least one element");
  if (le.size() != n) throw Error(Errc::SizeMismatch, "relation has wrong number of rows");
  {
    std::unordered_map<std::string_view, std::size_t> seen;
    for (const auto& l : labels)
      if (!seen.emplace(l, 0).second) throw Error(Errc::DuplicateLabel, "label '" + l + "' appears twice");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (le[i].size() != n) throw Error(Errc::SizeMismatch, "relation row has wrong length");
    if (!le[i].test(i)) throw Error(Errc::InvalidArgument, "relation is not reflexive at '" + labels[i] + "'");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (le[i].test(j) && le[j].test(i))
        throw Error(Errc::AntisymmetryViolation, "'" + labels[i] + "' and '" + labels[j] + "' are mutually related");
  // transitivity: up(j) is contained in up(i) whenever i <= j
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : le[i].indices())
      if (!le[j].is_subset_of(le[i]))
        throw Error(Errc::InvalidArgument, "relation is not transitive at '" + labels[i] + "' <= '" + labels[j] + "'");

  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(le);
  p.down_.assign(n, BitVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : p.up_[i].indices()) p.down_[j].set(i);
  p.linear_.resize(n);
  std::iota(p.linear_.begin(), p.linear_.end(), std::size_t{0});
  std::stable_sort(p.linear_.begin(), p.linear_.end(),
                   [&](std::size_t a, std::size_t b) { return p.down_[a].count() < p.down_[b].count(); });
  return p;
}

std::optional<std::size_t> Poset::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool Poset::is_up_set(const BitVector& s) const noexcept {
  for (auto i : s.indices())
    if (!up_[i].is_subset_of(s)) return false;
  return true;
}

bool Poset::is_down_set(const BitVector& s) const noexcept {
  for (auto i : s.indices())
    if (!down_[i].is_subset_of(s)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : up_[i].indices()) {
      if (j == i) continue;
      // i < j is a cover when no k lies strictly between them
      auto between = up_[i] & down_[j];
      if (between.count() == 2) out.emplace_back(i, j);
    }
  }
  return out;
}

Poset validate_poset(std::vector<std::string> elements, std::span<const LabelPair> le_pairs) {
  const auto n = elements.size();
  if (n == 0) throw Error(Errc::EmptyCarrier, "a poset needs at least one element");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(elements[i], i).second)
      throw Error(Errc::DuplicateLabel, "label '" + elements[i] + "' appears twice");

  std::vector<BitVector> le(n, BitVector(n));
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) le[i].set(i);
  for (const auto& [a, b] : le_pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(Errc::UnknownLabel, "'" + a + "' is not an element");
    if (ib == index.end()) throw Error(Errc::UnknownLabel, "'" + b + "' is not an element");
    le[ia->second].set(ib->second);
    adj[ia->second].push_back(ib->second);
  }
  // Warshall over rows: if i <= k then everything above k is above i.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i].test(k)) le[i] |= le[k];

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (le[i].test(j) && le[j].test(i)) {
        auto forward = find_path(adj, i, j);
        auto back = find_path(adj, j, i);
        std::string cycle;
        for (auto v : forward) cycle += elements[v] + " <= ";
        for (std::size_t k = 1; k < back.size(); ++k) cycle += elements[back[k]] + (k + 1 < back.size() ? " <= " : "");
        throw Error(Errc::AntisymmetryViolation, "cycle " + cycle);
      }
    }
  }
  return Poset::from_relation(std::move(elements), std::move(le));
}

Opposite opposite(const Poset& p) {
  const auto n = p.size();
  std::vector<BitVector> le(n);
  for (std::size_t i = 0; i < n; ++i) le[i] = p.down(i);
  std::vector<std::size_t> rho(n);
  std::iota(rho.begin(), rho.end(), std::size_t{0});
  return {Poset::from_relation(p.labels(), std::move(le)), std::move(rho)};
}

std::optional<BoundedPoset> as_bounded(Poset p) {
  std::optional<std::size_t> bottom;
  std::optional<std::size_t> top;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.up(i).all()) bottom = i;
    if (p.down(i).all()) top = i;
  }
  if (!bottom || !top) return std::nullopt;
  return BoundedPoset{std::move(p), *bottom, *top};
}

BoundedPoset make_bounded(Poset p, std::size_t bottom, std::size_t top) {
  if (bottom >= p.size() || top >= p.size()) throw Error(Errc::UnknownElement, "bound index out of range");
  if (!p.up(bottom).all()) throw Error(Errc::NotBounded, "'" + p.label(bottom) + "' is not the least element");
  if (!p.down(top).all()) throw Error(Errc::NotBounded, "'" + p.label(top) + "' is not the greatest element");
  return {std::move(p), bottom, top};
}

std::optional<std::size_t> bound(const Poset& p, std::size_t a, std::size_t b, BoundKind kind) {
  const bool join = kind == BoundKind::Join;
  const auto common = join ? (p.up(a) & p.up(b)) : (p.down(a) & p.down(b));
  for (auto u : common.indices()) {
    // u is the least (resp. greatest) of the common bounds
    const auto& reach = join ? p.up(u) : p.down(u);
    if (common.is_subset_of(reach)) return u;
  }
  return std::nullopt;
}

AxiomReport check_ortho_axioms(const BoundedPoset& bp, std::span<const std::size_t> c) {
  const auto& p = bp.poset;
  const auto n = p.size();
  if (c.size() != n) throw Error(Errc::SizeMismatch, "complement table has wrong length");
  {
    std::vector<bool> hit(n, false);
    for (auto v : c) {
      if (v >= n || hit[v]) throw Error(Errc::InvalidArgument, "complement table is not a permutation");
      hit[v] = true;
    }
  }

  AxiomReport report;
  for (std::size_t i = 0; i < n && report.involution.passed; ++i) {
    if (c[c[i]] != i) {
      report.involution = {false, {i}, "c(c(" + p.label(i) + ")) = " + p.label(c[c[i]])};
    }
  }
  for (std::size_t i = 0; i < n && report.complement.passed; ++i) {
    const auto join = bound(p, i, c[i], BoundKind::Join);
    const auto meet = bound(p, i, c[i], BoundKind::Meet);
    if (!join || *join != bp.top) {
      report.complement = {false, {i},
                           p.label(i) + " v " + p.label(c[i]) + (join ? " = " + p.label(*join) : " does not exist")};
    } else if (!meet || *meet != bp.bottom) {
      report.complement = {false, {i},
                           p.label(i) + " ^ " + p.label(c[i]) + (meet ? " = " + p.label(*meet) : " does not exist")};
    }
  }
  for (std::size_t i = 0; i < n && report.antitone.passed; ++i) {
    for (auto j : p.up(i).indices()) {
      if (!p.le(c[j], c[i])) {
        report.antitone = {false, {i, j}, describe_pair(p, i, j) + " ordered but complements are not reversed"};
        break;
      }
    }
  }
  return report;
}

OrthoPoset OrthoPoset::make(BoundedPoset base, std::vector<std::size_t> comp) {
  const auto report = check_ortho_axioms(base, comp);
  for (const auto* check : {&report.involution, &report.complement, &report.antitone})
    if (!check->passed) throw Error(Errc::NotOrthoPoset, check->detail);
  return OrthoPoset(std::move(base), std::move(comp));
}

OrthoPoset two_element_eoc() {
  const std::vector<LabelPair> pairs{{"0", "1"}};
  return OrthoPoset::make(make_bounded(validate_poset({"0", "1"}, pairs), 0, 1), {1, 0});
}

bool is_monotone(const Poset& p, const TwoValuation& x) {
  return x.size() == p.size() && p.is_up_set(x.bits);
}

bool is_orthomonotone(const OrthoPoset& e, const TwoValuation& x) {
  if (!is_monotone(e.poset(), x)) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (x(e.comp(i)) == x(i)) return false;
  return true;
}

namespace {

// Backtracking over an ascending linear extension. Each element's lower
// neighbours are decided before it, so monotonicity only forces 1s upward.
class ValuationSearch {
 public:
  ValuationSearch(const Poset& p, std::span<const std::size_t> comp, std::size_t cap)
      : p_(p), comp_(comp), cap_(cap), order_(p.linear_extension()), position_(p.size()), bits_(p.size()) {
    for (std::size_t k = 0; k < order_.size(); ++k) position_[order_[k]] = k;
  }

  std::vector<TwoValuation> run() {
    descend(0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void descend(std::size_t k) {
    if (k == order_.size()) {
      if (out_.size() == cap_)
        throw Error(Errc::SizeCap, "more than " + std::to_string(cap_) + " valuations");
      out_.push_back({bits_});
      return;
    }
    const auto e = order_[k];
    auto below = p_.down(e);
    below.reset(e);
    const bool forced_one = (below & bits_).any();
    bool allow[2] = {!forced_one, true};
    if (!comp_.empty()) {
      const auto partner = comp_[e];
      if (partner == e) return;  // x(e) = 1 - x(e) has no solution
      if (position_[partner] < k) {
        const bool required = !bits_.test(partner);
        allow[required ? 0 : 1] = false;
      }
    }
    for (int v = 0; v < 2; ++v) {
      if (!allow[v]) continue;
      bits_.set(e, v == 1);
      descend(k + 1);
    }
    bits_.reset(e);
  }

  const Poset& p_;
  std::span<const std::size_t> comp_;
  std::size_t cap_;
  const std::vector<std::size_t>& order_;
  std::vector<std::size_t> position_;
  BitVector bits_;
  std::vector<TwoValuation> out_;
};

}  // namespace

std::vector<TwoValuation> enumerate_monotone(const Poset& p, std::size_t cap) {
  return ValuationSearch(p, {}, cap).run();
}

std::vector<TwoValuation> enumerate_complement_preserving(const Poset& p, std::span<const std::size_t> c,
                                                          std::size_t cap) {
  if (c.size() != p.size()) throw Error(Errc::SizeMismatch, "complement table has wrong length");
  return ValuationSearch(p, c, cap).run();
}

std::vector<TwoValuation> enumerate_orthomonotone(const OrthoPoset& e, std::size_t cap) {
  return enumerate_complement_preserving(e.poset(), e.comp_table(), cap);
}

}  // namespace ordual
