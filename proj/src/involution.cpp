#include "ordual/involution.hpp"

#include <algorithm>

#include "ordual/error.hpp"

namespace ordual {

namespace {

std::optional<std::size_t> locate(const std::vector<TwoValuation>& points, const TwoValuation& x) {
  auto it = std::lower_bound(points.begin(), points.end(), x);
  if (it == points.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

PointSubset restrict_to(const PointSubset& s, const std::vector<std::size_t>& kept) {
  PointSubset out(kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k)
    if (s.test(kept[k])) out.set(k);
  return out;
}

}  // namespace

InvolutedPoset InvolutedPoset::make(Poset p, std::vector<std::size_t> c) {
  const auto n = p.size();
  if (c.size() != n) throw Error(Errc::SizeMismatch, "involution table has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] >= n) throw Error(Errc::NotAntitoneInvolution, "image out of range");
    if (c[c[i]] != i) throw Error(Errc::NotAntitoneInvolution, "c(c(" + p.label(i) + ")) != " + p.label(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : p.up(i).indices())
      if (!p.le(c[j], c[i]))
        throw Error(Errc::NotAntitoneInvolution, p.label(i) + " <= " + p.label(j) + " is not reversed by c");
  std::optional<std::pair<std::size_t, std::size_t>> bounds;
  if (auto b = as_bounded(p)) bounds.emplace(b->bottom, b->top);
  return InvolutedPoset(std::move(p), std::move(c), bounds);
}

BoundedPoset InvolutedPoset::bounded() const {
  if (!bounds_) throw Error(Errc::NotBounded, "poset has no least or no greatest element");
  return {poset_, bounds_->first, bounds_->second};
}

TwoValuation apply_pi(const InvolutedPoset& ip, const TwoValuation& x) {
  if (!is_monotone(ip.poset(), x)) throw Error(Errc::NotMonotone, x.bits.to_string());
  TwoValuation out{BitVector(ip.size())};
  for (std::size_t p = 0; p < ip.size(); ++p) out.bits.set(p, !x(ip.c(p)));
  return out;
}

PiMap build_pi(const InvolutedPoset& ip, std::size_t cap) {
  auto points = enumerate_monotone(ip.poset(), cap);
  PointMap table;
  table.reserve(points.size());
  for (const auto& x : points) {
    auto image = apply_pi(ip, x);
    auto k = locate(points, image);
    if (!k) throw Error(Errc::NotAntitoneInvolution, "pi(" + x.bits.to_string() + ") is not monotone");
    table.push_back(*k);
  }
  for (std::size_t k = 0; k < table.size(); ++k)
    if (table[table[k]] != k) throw Error(Errc::NotAntitoneInvolution, "pi is not an involution");
  return {ip, std::move(points), std::move(table)};
}

PiReport verify_pi_bicontinuous(const InvolutedPoset& ip, ContinuityMode mode, std::size_t valuation_cap,
                                std::size_t family_cap) {
  PiReport report{{}, build_pi(ip, valuation_cap)};
  const auto y = build_y_space(ip.poset(), valuation_cap);
  const auto& pi = report.pi.table;

  std::string witness;
  for (std::size_t p = 0; p < ip.size() && witness.empty(); ++p)
    if (preimage(pi, y.sigma1_table[p]) != y.sigma2_table[ip.c(p)])
      witness = "pi^-1(sigma1(" + ip.poset().label(p) + ")) != sigma2(" + ip.poset().label(ip.c(p)) + ")";
  report.checks.add("pi^-1(sigma1(p)) = sigma2(c(p))", witness.empty(), witness);

  report.checks.add("pi continuous (X,C1) -> (X,C2)", is_continuous(pi, y.bi.first(), y.bi.second(), mode, family_cap),
                    "a sigma2 preimage is not C1-closed");
  report.checks.add("pi continuous (X,C2) -> (X,C1)", is_continuous(pi, y.bi.second(), y.bi.first(), mode, family_cap),
                    "a sigma1 preimage is not C2-closed");
  return report;
}

FixedPointReport ortho_fixed_points(const InvolutedPoset& ip, std::size_t cap) {
  const auto pi = build_pi(ip, cap);
  FixedPointReport report;
  for (std::size_t k = 0; k < pi.table.size(); ++k)
    if (pi.table[k] == k) report.fixed.push_back(pi.x_points[k]);

  const auto expected = enumerate_complement_preserving(ip.poset(), ip.table(), cap);
  std::string witness;
  if (expected != report.fixed)
    witness = "|Fix(pi)| = " + std::to_string(report.fixed.size()) + ", c-orthovaluations: " +
              std::to_string(expected.size());
  report.checks.add("Fix(pi) equals the c-orthovaluations", witness.empty(), witness);
  return report;
}

CoIsoReport verify_co_iso(const InvolutedPoset& ip, std::size_t valuation_cap, std::size_t family_cap) {
  if (!ip.is_bounded()) throw Error(Errc::NotAnEOC, "poset is not bounded");
  if (const auto axioms = check_ortho_axioms(ip.bounded(), ip.table()); !axioms.all_passed())
    throw Error(Errc::NotAnEOC, "c is not a complementation");

  const auto& p = ip.poset();
  const auto n = ip.size();
  const auto pi = build_pi(ip, valuation_cap);
  const auto y = build_y_space(p, valuation_cap);

  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < pi.table.size(); ++k)
    if (pi.table[k] == k) kept.push_back(k);

  CoIsoReport report;
  for (auto k : kept) report.y_points.push_back(pi.x_points[k]);

  std::vector<PointSubset> tau1(n), tau2(n);
  Family traced;
  for (std::size_t i = 0; i < n; ++i) {
    tau1[i] = restrict_to(y.sigma1_table[i], kept);
    tau2[i] = restrict_to(y.sigma2_table[i], kept);
    traced.push_back(tau1[i]);
    traced.push_back(tau2[i]);
  }
  std::vector<std::string> labels;
  for (const auto& x : report.y_points) labels.push_back(x.bits.to_string());
  const ClosureSpace space(kept.size(), std::move(traced), std::move(labels));

  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      if (tau2[i] != tau1[ip.c(i)])
        witness = "sigma2(" + p.label(i) + ") and sigma1(" + p.label(ip.c(i)) + ") differ on Y";
    report.checks.add("sigma2(p) on Y equals sigma1(c(p)) on Y", witness.empty(), witness);
  }

  report.clopen = clopen_family(space, family_cap);
  const auto& co = report.clopen;
  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = i + 1; j < n && witness.empty(); ++j)
        if (tau1[i] == tau1[j]) witness = p.label(i) + " and " + p.label(j) + " have the same image";
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      if (!std::binary_search(co.begin(), co.end(), tau1[i])) witness = "image of " + p.label(i) + " is not clopen";
    if (witness.empty() && co.size() != n)
      witness = "|CO(Y)| = " + std::to_string(co.size()) + " but |P| = " + std::to_string(n);
    report.checks.add("p -> sigma1(p) on Y is a bijection onto CO(Y)", witness.empty(), witness);
  }
  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      for (std::size_t j = 0; j < n && witness.empty(); ++j)
        if (p.le(i, j) != tau1[i].is_subset_of(tau1[j]))
          witness = p.label(i) + " vs " + p.label(j) + ": order and inclusion disagree";
    report.checks.add("order isomorphism onto CO(Y)", witness.empty(), witness);
  }
  {
    std::string witness;
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
      if (tau1[ip.c(i)] != ~tau1[i]) witness = "image of c(" + p.label(i) + ") is not the set complement";
    report.checks.add("complement maps to set complement", witness.empty(), witness);
  }
  {
    // CO(Y) with set complement must itself be an orthoposet.
    std::string witness;
    auto as_poset = family_as_poset(co);
    std::vector<std::size_t> comp(co.size());
    bool closed_under_complement = true;
    for (std::size_t k = 0; k < co.size(); ++k) {
      auto it = std::lower_bound(co.begin(), co.end(), ~co[k]);
      if (it == co.end() || *it != ~co[k]) {
        closed_under_complement = false;
        witness = "complement of " + co[k].to_string() + " is not clopen";
        break;
      }
      comp[k] = static_cast<std::size_t>(it - co.begin());
    }
    if (closed_under_complement) {
      auto bounded = as_bounded(std::move(as_poset));
      if (!bounded)
        witness = "CO(Y) is not bounded";
      else if (!check_ortho_axioms(*bounded, comp).all_passed())
        witness = "CO(Y) with set complement fails the complementation axioms";
    }
    report.checks.add("CO(Y) with set complement is an orthoposet", witness.empty(), witness);
  }
  return report;
}

ComplementationEvidence detect_complementation(const InvolutedPoset& ip, ContinuityMode mode,
                                               std::size_t valuation_cap, std::size_t family_cap) {
  ComplementationEvidence ev;
  ev.oracle = check_ortho_axioms(ip.bounded(), ip.table());

  const auto pi = build_pi(ip, valuation_cap);
  const auto y = build_y_space(ip.poset(), valuation_cap);
  const auto& table = pi.table;

  ev.criterion = is_homeomorphic_pair(table, table, y.bi, y.bi.swapped(), mode, family_cap);

  for (std::size_t p = 0; p < ip.size(); ++p)
    ev.preimages.emplace_back(preimage(table, y.sigma1_table[p]), preimage(table, y.sigma2_table[p]));

  if (!ev.criterion) {
    // Name the first target set whose preimage is not what the mode demands.
    const auto report_failure = [&](const ClosureSpace& src, const ClosureSpace& dst, const char* tag) {
      const auto fam = mode == ContinuityMode::Weak ? dst.base() : closed_family(dst, family_cap);
      for (const auto& k : fam) {
        const auto pre = preimage(table, k);
        const auto cls = classify_subset(src, pre);
        if (mode == ContinuityMode::Weak ? !cls.closed : !cls.clopen()) {
          ev.failing_base = std::string(tag) + " set " + k.to_string() + " has preimage " + pre.to_string();
          return true;
        }
      }
      return false;
    };
    if (!report_failure(y.bi.first(), y.bi.second(), "C2")) report_failure(y.bi.second(), y.bi.first(), "C1");
  }
  return ev;
}

}  // namespace ordual
