#pragma once

// Verification harness: runs one named theorem against one named fixture and
// returns a deterministic report.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hocofin/report.hpp"

namespace hocofin {

enum class Outcome { Agree, Disagree, NotCertified };

std::string to_string(Outcome o);
/// 0 agree, 2 disagree, 3 hypothesis not certified.
int exit_code(Outcome o);

struct VerifyOptions {
  std::size_t n_max = 3;
  int effort = 1;
  std::size_t level = 3;       // truncation level for pointed diagrams
  bool unconditional = false;  // compare even when the hypothesis fails
  std::size_t chain_cap = default_chain_cap;
  std::uint64_t hom_budget = 10'000'000;
};

CertifyOptions certify_options(const VerifyOptions& o);

/// Defaults and bounds used for a run.
Json report_header(const VerifyOptions& o);

struct TheoremReport {
  std::string theorem, fixture;
  Outcome outcome = Outcome::NotCertified;
  std::string label;    // certified, conditional, unconditional comparison, not certified
  std::string summary;  // one line
  Json details;
};

Json to_json(const TheoremReport& r, const VerifyOptions& o);

std::vector<std::string> theorem_names();
/// Kind of fixture a theorem takes: category, functor, diagram, dset,
/// dset-morphism or pointed-diagram.
std::string fixture_kind(const std::string& theorem);
/// Fixture names accepted by `theorem` (InvalidInput for unknown theorems).
std::vector<std::string> fixture_names(const std::string& theorem);

/// Unknown theorem names raise InvalidInput and unknown fixtures
/// UnknownObject. CapExceeded, TruncationUnsound, BudgetExceeded and
/// SizeLimitExceeded during the run turn into NotCertified.
TheoremReport verify(const std::string& theorem, const std::string& fixture, const VerifyOptions& opts = {});

}  // namespace hocofin
