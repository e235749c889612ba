#include "ordual/duplication.hpp"

#include <algorithm>

#include "ordual/error.hpp"

namespace ordual {

namespace {

OrthoPoset build_horizontal_sum(const Poset& p) {
  const auto n = p.size();
  const auto m = 2 * n + 2;
  const auto left = [](std::size_t i) { return 1 + i; };
  const auto right = [n](std::size_t i) { return 1 + n + i; };
  const auto top = m - 1;

  std::vector<std::string> labels(m);
  labels[0] = "bot";
  labels[top] = "top";
  for (std::size_t i = 0; i < n; ++i) {
    labels[left(i)] = "L(" + p.label(i) + ")";
    labels[right(i)] = "R(" + p.label(i) + ")";
  }

  std::vector<BitVector> le(m, BitVector(m));
  le[0] = BitVector(m, true);
  le[top].set(top);
  for (std::size_t i = 0; i < n; ++i) {
    le[left(i)].set(top);
    le[right(i)].set(top);
    for (std::size_t j = 0; j < n; ++j) {
      if (p.le(i, j)) le[left(i)].set(left(j));
      if (p.le(j, i)) le[right(i)].set(right(j));
    }
  }

  std::vector<std::size_t> comp(m);
  comp[0] = top;
  comp[top] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    comp[left(i)] = right(i);
    comp[right(i)] = left(i);
  }
  return OrthoPoset::make(make_bounded(Poset::from_relation(std::move(labels), std::move(le)), 0, top),
                          std::move(comp));
}

std::string subset_string(const PointSubset& s) { return "{" + s.to_string() + "}"; }

}  // namespace

Duplication::Duplication(Poset p) : source_(std::move(p)), e_(build_horizontal_sum(source_)) {}

Duplication::Element Duplication::element(std::size_t i) const noexcept {
  const auto n = source_.size();
  if (i == 0) return {Tag::Bot};
  if (i == top()) return {Tag::Top};
  if (i <= n) return {Tag::Left, i - 1};
  return {Tag::Right, i - 1 - n};
}

Duplication duplicate(const Poset& p) { return Duplication(p); }

std::optional<std::size_t> YSpace::find(const TwoValuation& y) const {
  auto it = std::lower_bound(points.begin(), points.end(), y);
  if (it == points.end() || *it != y) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

YSpace build_y_space(const Poset& p, std::size_t cap) {
  auto points = enumerate_monotone(p, cap);
  const auto n = p.size();
  std::vector<PointSubset> s1(n, PointSubset(points.size()));
  for (std::size_t k = 0; k < points.size(); ++k)
    for (auto i : points[k].bits.indices()) s1[i].set(k);
  std::vector<PointSubset> s2;
  s2.reserve(n);
  for (const auto& s : s1) s2.push_back(~s);

  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const auto& y : points) labels.push_back(y.bits.to_string());

  BiclosureSpace bi(points.size(), Family(s1.begin(), s1.end()), Family(s2.begin(), s2.end()), labels);
  auto joined = join_closures(bi.first(), bi.second());
  return {p, std::move(points), std::move(s1), std::move(s2), std::move(bi), std::move(joined)};
}

TwoValuation restrict_phi(const Duplication& d, const TwoValuation& x) {
  if (!is_orthomonotone(d.e(), x)) throw Error(Errc::NotOrthovaluation, x.bits.to_string());
  TwoValuation y{BitVector(d.source_size())};
  for (std::size_t p = 0; p < d.source_size(); ++p) y.bits.set(p, x(d.left(p)));
  return y;
}

TwoValuation extend_psi(const Duplication& d, const TwoValuation& y) {
  if (!is_monotone(d.source(), y)) throw Error(Errc::NotMonotone, y.bits.to_string());
  TwoValuation x{BitVector(d.e().size())};
  x.bits.set(d.top());
  for (std::size_t p = 0; p < d.source_size(); ++p) {
    x.bits.set(d.left(p), y(p));
    x.bits.set(d.right(p), !y(p));
  }
  return x;
}

HomeoReport verify_homeo(const Poset& p, ContinuityMode mode, std::size_t valuation_cap, std::size_t family_cap) {
  const auto d = duplicate(p);
  const auto dual = build_dual(d.e(), valuation_cap);
  const auto y = build_y_space(p, valuation_cap);

  HomeoReport report;
  report.x_size = dual.points.size();
  report.y_size = y.points.size();

  // phi: X -> Y by restriction, psi: Y -> X by extension. An image missing
  // from the target point list is recorded as an out-of-range index.
  report.phi.reserve(dual.points.size());
  for (const auto& x : dual.points)
    report.phi.push_back(y.find(restrict_phi(d, x)).value_or(y.points.size()));
  report.psi.reserve(y.points.size());
  for (const auto& v : y.points) {
    const auto ext = extend_psi(d, v);
    auto it = std::lower_bound(dual.points.begin(), dual.points.end(), ext);
    report.psi.push_back(it != dual.points.end() && *it == ext ? static_cast<std::size_t>(it - dual.points.begin())
                                                                : dual.points.size());
  }

  const bool in_range =
      std::all_of(report.phi.begin(), report.phi.end(), [&](auto v) { return v < y.points.size(); }) &&
      std::all_of(report.psi.begin(), report.psi.end(), [&](auto v) { return v < dual.points.size(); });
  bool inverse = in_range && report.x_size == report.y_size;
  std::string inverse_witness = in_range ? "" : "an image falls outside the target point set";
  for (std::size_t i = 0; inverse && i < report.phi.size(); ++i)
    if (report.psi[report.phi[i]] != i) {
      inverse = false;
      inverse_witness = "psi(phi(" + dual.points[i].bits.to_string() + ")) differs";
    }
  for (std::size_t j = 0; inverse && j < report.psi.size(); ++j)
    if (report.phi[report.psi[j]] != j) {
      inverse = false;
      inverse_witness = "phi(psi(" + y.points[j].bits.to_string() + ")) differs";
    }
  if (inverse_witness.empty() && report.x_size != report.y_size)
    inverse_witness = "|X| = " + std::to_string(report.x_size) + ", |Y| = " + std::to_string(report.y_size);
  report.checks.add("phi and psi are mutually inverse bijections", inverse, inverse_witness);

  if (inverse) {
    const bool phi_cont = is_continuous(report.phi, dual.space, y.joined, mode, family_cap);
    report.checks.add("phi continuous (X,C) -> (Y,C1 v C2)", phi_cont, "a base preimage under phi is not closed");
    const bool psi_cont = is_continuous(report.psi, y.joined, dual.space, mode, family_cap);
    report.checks.add("psi continuous (Y,C1 v C2) -> (X,C)", psi_cont, "a base preimage under psi is not closed");

    const auto& e = d.e();
    std::string row_witness;
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto pre = preimage(report.psi, dual.sigma_table[i]);
      const auto el = d.element(i);
      if (row_witness.empty()) {
        if (el.tag == Duplication::Tag::Left && pre != y.sigma1_table[el.source])
          row_witness = "psi^-1(sigma(" + e.poset().label(i) + ")) != sigma1";
        if (el.tag == Duplication::Tag::Right && pre != y.sigma2_table[el.source])
          row_witness = "psi^-1(sigma(" + e.poset().label(i) + ")) != sigma2";
      }
      report.preimages.push_back({e.poset().label(i), dual.sigma_table[i], std::move(pre)});
    }
    report.checks.add("psi^-1(sigma(L p)) = sigma1(p) and psi^-1(sigma(R p)) = sigma2(p)", row_witness.empty(),
                      row_witness);
  }
  return report;
}

MainLemmaReport verify_main_lemma(const Poset& p, std::size_t valuation_cap, std::size_t family_cap) {
  const auto y = build_y_space(p, valuation_cap);
  MainLemmaReport report;
  report.y_size = y.points.size();
  const auto empty = PointSubset(y.points.size());
  const auto full = PointSubset(y.points.size(), true);
  for (auto& a : mixed_families(y.bi, 1, 2, family_cap))
    if (a != empty && a != full) report.proper_family.push_back(std::move(a));

  const auto& fam = report.proper_family;
  const auto n = p.size();
  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      if (!std::binary_search(fam.begin(), fam.end(), y.sigma1_table[i]))
        witness = "sigma1(" + p.label(i) + ") = " + subset_string(y.sigma1_table[i]) + " is not in the family";
    report.checks.add("sigma1 maps P into C1O2(Y) minus {empty, Y}", witness.empty(), witness);
  }
  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = i + 1; j < n && witness.empty(); ++j)
        if (y.sigma1_table[i] == y.sigma1_table[j])
          witness = "sigma1(" + p.label(i) + ") = sigma1(" + p.label(j) + ")";
    if (witness.empty() && fam.size() != n)
      witness = "family has " + std::to_string(fam.size()) + " members for " + std::to_string(n) + " elements";
    report.checks.add("sigma1 is a bijection onto the family", witness.empty(), witness);
  }
  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = 0; j < n && witness.empty(); ++j)
        if (p.le(i, j) != y.sigma1_table[i].is_subset_of(y.sigma1_table[j]))
          witness = p.label(i) + " vs " + p.label(j) + ": order and inclusion disagree";
    report.checks.add("sigma1 is an order isomorphism", witness.empty(), witness);
  }
  return report;
}

}  // namespace ordual
