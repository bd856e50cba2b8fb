#pragma once

// Grid sweeps over every identity check in the library. Each named
// identity is swept over k <= k_max and its admissible index ranges
// (secondary parameters exhaustively up to 16); failures are collected as
// printable counterexample reports.

#include <cstdint>
#include <string>
#include <vector>

#include "identities.hpp"

namespace homn {

struct VerifyConfig {
  std::vector<std::string> identities;  // empty means all
  std::uint32_t k_max = 8;
  std::uint64_t n_max = 64;
  bool fail_fast = false;
};

struct IdentitySummary {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::string note;  // e.g. the resolved vajda convention
  std::vector<IdentityReport> counterexamples;
};

struct VerifyResult {
  std::vector<IdentitySummary> summaries;

  bool all_hold() const;
  std::uint64_t total_checks() const;
};

// Names accepted in VerifyConfig::identities, in sweep order.
const std::vector<std::string>& identity_names();

// Runs the selected sweeps; throws std::invalid_argument on an unknown
// identity name or a zero bound.
VerifyResult run_verify(const VerifyConfig& config);

}  // namespace homn
