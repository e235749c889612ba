#include "ordual/cli/verify.hpp"

#include <chrono>

#include "ordual/duplication.hpp"
#include "ordual/error.hpp"
#include "ordual/involution.hpp"
#include "ordual/mayet.hpp"

namespace ordual::cli {

namespace {

using json = nlohmann::json;

json checks_json(const CheckList& list) {
  json out = json::array();
  for (const auto& c : list.checks()) {
    json item{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) item["witness"] = c.witness;
    out.push_back(std::move(item));
  }
  return out;
}

json family_json(const Family& fam) {
  json out = json::array();
  for (const auto& a : fam) out.push_back(a.to_string());
  return out;
}

json axioms_json(const AxiomReport& r, const Poset& p) {
  json out = json::object();
  const auto one = [&](const AxiomCheck& c) {
    json item{{"passed", c.passed}};
    if (!c.passed) {
      json labels = json::array();
      for (auto i : c.witness) labels.push_back(p.label(i));
      item["witness"] = labels;
      item["detail"] = c.detail;
    }
    return item;
  };
  out["involution"] = one(r.involution);
  out["complement"] = one(r.complement);
  out["antitone"] = one(r.antitone);
  return out;
}

void finish(VerificationReport& report, const CheckList& list) {
  report.checks = checks_json(list);
  report.status = list.passed() ? Status::Pass : Status::Fail;
  if (const auto* f = list.first_failure()) report.witness = json{{"check", f->name}, {"detail", f->witness}};
}

std::vector<std::size_t> require_complement(const PosetDocument& doc, const Poset& p) {
  auto comp = complement_table(doc, p);
  if (!comp) throw Error(Errc::InvalidArgument, "claim requires a complement table");
  return std::move(*comp);
}

BoundedPoset require_bounds(const PosetDocument& doc, const Poset& p) {
  auto b = to_bounded(doc, p);
  if (!b) throw Error(Errc::NotBounded, "claim requires bottom and top");
  return std::move(*b);
}

void dispatch(VerificationReport& report, const PosetDocument& doc, const VerifyOptions& opt) {
  const auto p = to_poset(doc);
  // Named bounds are validated even when the claim does not use them.
  to_bounded(doc, p);
  report.statistics["p_size"] = p.size();

  switch (report.claim) {
    case Claim::Mayet: {
      auto e = OrthoPoset::make(require_bounds(doc, p), require_complement(doc, p));
      auto r = verify_mayet(e, opt.valuation_cap, opt.family_cap);
      report.statistics["x_size"] = r.point_count;
      report.statistics["closed_family_size"] = r.closed_count;
      report.statistics["clopen_family_size"] = r.clopen.size();
      report.statistics["clopen_family"] = family_json(r.clopen);
      finish(report, r.checks);
      break;
    }
    case Claim::Homeo: {
      auto r = verify_homeo(p, opt.mode, opt.valuation_cap, opt.family_cap);
      report.statistics["e_size"] = 2 * p.size() + 2;
      report.statistics["x_size"] = r.x_size;
      report.statistics["y_size"] = r.y_size;
      json rows = json::array();
      for (const auto& row : r.preimages)
        rows.push_back({{"element", row.element},
                        {"sigma", row.sigma.to_string()},
                        {"psi_preimage", row.psi_preimage.to_string()}});
      report.statistics["psi_preimages"] = std::move(rows);
      finish(report, r.checks);
      break;
    }
    case Claim::MainLemma: {
      auto r = verify_main_lemma(p, opt.valuation_cap, opt.family_cap);
      report.statistics["y_size"] = r.y_size;
      report.statistics["c1o2_proper_size"] = r.proper_family.size();
      report.statistics["c1o2_proper"] = family_json(r.proper_family);
      finish(report, r.checks);
      break;
    }
    case Claim::PiBicontinuous: {
      auto ip = InvolutedPoset::make(p, require_complement(doc, p));
      auto r = verify_pi_bicontinuous(ip, opt.mode, opt.valuation_cap, opt.family_cap);
      report.statistics["x_size"] = r.pi.x_points.size();
      finish(report, r.checks);
      break;
    }
    case Claim::Fix: {
      auto ip = InvolutedPoset::make(p, require_complement(doc, p));
      auto r = ortho_fixed_points(ip, opt.valuation_cap);
      report.statistics["fix_size"] = r.fixed.size();
      json fixed = json::array();
      for (const auto& x : r.fixed) fixed.push_back(x.bits.to_string());
      report.statistics["fixed_points"] = std::move(fixed);
      finish(report, r.checks);
      break;
    }
    case Claim::CoIso: {
      require_bounds(doc, p);
      auto ip = InvolutedPoset::make(p, require_complement(doc, p));
      auto r = verify_co_iso(ip, opt.valuation_cap, opt.family_cap);
      report.statistics["y_size"] = r.y_points.size();
      report.statistics["clopen_family_size"] = r.clopen.size();
      finish(report, r.checks);
      break;
    }
    case Claim::EocDetect: {
      require_bounds(doc, p);
      auto ip = InvolutedPoset::make(p, require_complement(doc, p));
      auto ev = detect_complementation(ip, opt.mode, opt.valuation_cap, opt.family_cap);
      report.statistics["criterion"] = ev.criterion;
      report.statistics["oracle"] = ev.oracle.all_passed();
      report.statistics["oracle_axioms"] = axioms_json(ev.oracle, p);
      if (!ev.failing_base.empty()) report.statistics["failing_base"] = ev.failing_base;
      CheckList list;
      list.add("homeomorphism criterion agrees with the complementation axioms", ev.agrees(),
               std::string("criterion says ") + (ev.criterion ? "complementation" : "not a complementation") +
                   ", axioms say " + (ev.oracle.all_passed() ? "complementation" : "not a complementation"));
      finish(report, list);
      if (report.witness) {
        (*report.witness)["criterion"] = ev.criterion;
        (*report.witness)["oracle"] = axioms_json(ev.oracle, p);
      }
      break;
    }
  }
}

}  // namespace

std::string_view to_string(Claim claim) noexcept {
  switch (claim) {
    case Claim::Mayet: return "mayet";
    case Claim::Homeo: return "homeo";
    case Claim::MainLemma: return "main-lemma";
    case Claim::PiBicontinuous: return "pi-bicontinuous";
    case Claim::Fix: return "fix";
    case Claim::CoIso: return "co-iso";
    case Claim::EocDetect: return "eoc-detect";
  }
  return "unknown";
}

Claim parse_claim(std::string_view name) {
  for (auto c : {Claim::Mayet, Claim::Homeo, Claim::MainLemma, Claim::PiBicontinuous, Claim::Fix, Claim::CoIso,
                 Claim::EocDetect})
    if (to_string(c) == name) return c;
  throw Error(Errc::InvalidArgument, "unknown claim '" + std::string(name) + "'");
}

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

int VerificationReport::exit_code() const noexcept {
  switch (status) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Error: return 2;
  }
  return 2;
}

json VerificationReport::to_json() const {
  json out;
  out["claim"] = std::string(to_string(claim));
  out["status"] = std::string(to_string(status));
  out["checks"] = checks;
  out["witness"] = witness ? *witness : json(nullptr);
  out["statistics"] = statistics;
  out["wall_time_ms"] = wall_time_ms;
  return out;
}

VerificationReport run_verify(const PosetDocument& doc, Claim claim, const VerifyOptions& options) {
  VerificationReport report;
  report.claim = claim;
  const auto start = std::chrono::steady_clock::now();
  try {
    dispatch(report, doc, options);
  } catch (const Error& e) {
    report.status = Status::Error;
    report.witness = json{{"error", std::string(ordual::to_string(e.code()))}, {"message", e.what()}};
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ordual::cli
