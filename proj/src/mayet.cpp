#include "ordual/mayet.hpp"

#include <algorithm>

#include "ordual/error.hpp"

namespace ordual {

namespace {

std::vector<std::string> valuation_labels(const std::vector<TwoValuation>& points) {
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const auto& x : points) labels.push_back(x.bits.to_string());
  return labels;
}

}  // namespace

MayetDual build_dual(const OrthoPoset& e, std::size_t cap) {
  auto points = enumerate_orthomonotone(e, cap);
  std::vector<PointSubset> sigma(e.size(), PointSubset(points.size()));
  for (std::size_t k = 0; k < points.size(); ++k)
    for (auto p : points[k].bits.indices()) sigma[p].set(k);
  ClosureSpace space(points.size(), Family(sigma.begin(), sigma.end()), valuation_labels(points));
  return {e, std::move(points), std::move(space), std::move(sigma)};
}

const PointSubset& sigma(const MayetDual& d, std::size_t element) {
  if (element >= d.sigma_table.size())
    throw Error(Errc::UnknownElement, "element " + std::to_string(element) + " is not in the source");
  return d.sigma_table[element];
}

MayetReport verify_mayet(const OrthoPoset& e, std::size_t valuation_cap, std::size_t family_cap) {
  const auto d = build_dual(e, valuation_cap);
  const auto& p = e.poset();
  const auto n = e.size();
  MayetReport report;
  report.point_count = d.points.size();
  report.closed_count = closed_family(d.space, family_cap).size();
  report.clopen = clopen_family(d.space, family_cap);

  {
    std::string witness;
    for (std::size_t a = 0; a < n && witness.empty(); ++a)
      for (std::size_t b = a + 1; b < n && witness.empty(); ++b)
        if (d.sigma_table[a] == d.sigma_table[b])
          witness = "sigma(" + p.label(a) + ") = sigma(" + p.label(b) + ") = " + d.sigma_table[a].to_string();
    report.checks.add("sigma injective", witness.empty(), witness);
  }
  {
    std::string witness;
    for (std::size_t a = 0; a < n && witness.empty(); ++a)
      for (std::size_t b = 0; b < n && witness.empty(); ++b)
        if (p.le(a, b) != d.sigma_table[a].is_subset_of(d.sigma_table[b]))
          witness = p.label(a) + (p.le(a, b) ? " <= " : " !<= ") + p.label(b) + " but sigma inclusion " +
                    (p.le(a, b) ? "fails" : "holds");
    report.checks.add("sigma order embedding", witness.empty(), witness);
  }
  {
    std::string witness;
    for (std::size_t a = 0; a < n && witness.empty(); ++a)
      if (d.sigma_table[e.comp(a)] != ~d.sigma_table[a])
        witness = "sigma(" + p.label(e.comp(a)) + ") is not the complement of sigma(" + p.label(a) + ")";
    report.checks.add("sigma preserves complements", witness.empty(), witness);
  }
  {
    Family image(d.sigma_table.begin(), d.sigma_table.end());
    normalize(image);
    std::string witness;
    for (const auto& a : report.clopen)
      if (!std::binary_search(image.begin(), image.end(), a)) {
        witness = "clopen set " + a.to_string() + " is not a sigma image";
        break;
      }
    if (witness.empty())
      for (const auto& a : image)
        if (!std::binary_search(report.clopen.begin(), report.clopen.end(), a)) {
          witness = "sigma image " + a.to_string() + " is not clopen";
          break;
        }
    report.checks.add("CO(X) equals sigma(E)", witness.empty(), witness);
  }
  return report;
}

}  // namespace ordual
