#pragma once

// Finally discrete categories, virtual discrete cofibrations and
// contractibility / homotopy-cofinality certificates.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hocofin/fincat.hpp"
#include "hocofin/homalg.hpp"

namespace hocofin {

/// Ordered from weakest to strongest.
enum class Verdict { NonContractible = 0, Inconclusive = 1, Evidence = 2, Contractible = 3 };

std::string to_string(Verdict v);
Verdict weakest(Verdict a, Verdict b);

struct FinallyDiscreteReport {
  bool ok = true;
  std::vector<std::vector<std::size_t>> components;
  // Least final object of each component, if any.
  std::vector<std::optional<std::size_t>> finals;
  std::optional<std::size_t> failing_component;
};
FinallyDiscreteReport finally_discrete(const FinCat& b);

struct VdcReport {
  bool ok = true;
  std::vector<FinallyDiscreteReport> fibres;  // one per object of the target
  std::optional<std::size_t> failing_object;
};
/// Every left fibre S|d finally discrete.
VdcReport is_vdc(const Functor& s);

struct CollapseStep {
  std::vector<std::string> removed;
  std::string rule;  // e.g. "x|i initial", "i|x final", "x|i recursive"
};

struct ContractibilityCertificate {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  std::optional<std::string> cone;  // cone object name
  bool cone_is_final = false;
  std::vector<CollapseStep> collapses;
  std::size_t n_max = 0;
  std::vector<AbelianInvariants> homology;  // filled when the homology stage ran
  std::vector<std::uint64_t> pi1_fingerprint;
  std::string witness;
};

struct CertifyOptions {
  int effort = 1;
  std::size_t n_max = 3;
  std::size_t chain_cap = 200'000;
  std::uint64_t hom_budget = 10'000'000;
};

/// Cone test, then one-object collapses (two-object and recursive collapses
/// from effort 2), then a search for a coned full subcategory that all
/// remaining objects collapse onto at once (small categories only), then
/// homology and pi_1 fingerprints up to n_max + max(0, effort - 2).
ContractibilityCertificate certify_contractible(const FinCat& b, const CertifyOptions& opts = {});

struct CofinalReport {
  bool coinitial = false;
  Verdict aggregate = Verdict::Contractible;
  std::vector<ContractibilityCertificate> per_object;  // indexed by target objects
};
/// Certifies d|S (or S|d in coinitial mode) for every object d.
CofinalReport certify_homotopy_cofinal(const Functor& s, bool coinitial = false, const CertifyOptions& opts = {});

}  // namespace hocofin
