#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ordual/cli/document.hpp"
#include "ordual/closure.hpp"
#include "ordual/poset.hpp"

namespace ordual::cli {

enum class Claim { Mayet, Homeo, MainLemma, PiBicontinuous, Fix, CoIso, EocDetect };

std::string_view to_string(Claim claim) noexcept;
/// Errors: InvalidArgument for an unknown identifier.
Claim parse_claim(std::string_view name);

struct VerifyOptions {
  ContinuityMode mode = ContinuityMode::Weak;
  std::size_t valuation_cap = kDefaultValuationCap;
  std::size_t family_cap = kDefaultFamilyCap;
};

enum class Status { Pass, Fail, Error };

std::string_view to_string(Status status) noexcept;

struct VerificationReport {
  Claim claim = Claim::Mayet;
  Status status = Status::Error;
  /// Present whenever status is Fail; carries the error on Error.
  std::optional<nlohmann::json> witness;
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json statistics = nlohmann::json::object();
  double wall_time_ms = 0.0;

  /// 0 on pass, 1 on a counterexample, 2 on precondition or input errors.
  int exit_code() const noexcept;
  nlohmann::json to_json() const;
};

/// Dispatches to the verification of `claim`. Never throws for input errors;
/// they are reported with status Error.
VerificationReport run_verify(const PosetDocument& doc, Claim claim, const VerifyOptions& options = {});

}  // namespace ordual::cli
