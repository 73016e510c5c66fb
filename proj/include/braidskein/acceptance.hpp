#pragma once

// Release-gate checks, shared by the acceptance test binary and the CLI
// `selftest` command. Each criterion is exact; the two timing bounds are
// wall-clock limits on this machine.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidskein/homfly.hpp"

namespace braidskein {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  /// Run only the fast subset: criteria 1, 2, 4, 5, 7 and 9.
  bool quick = false;
  std::uint64_t seed = 20240611;
  /// Bridge weights used by the HOMFLY criterion; negative controls swap in
  /// wrong ones.
  BridgeWeights bridge = BridgeWeights::standard();
  /// Restrict to these criterion ids when non-empty.
  std::vector<int> only;
};

/// Criterion ids `run_acceptance` would run for these options.
std::vector<int> selected_criteria(const AcceptanceOptions& options);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// "[PASS] 1 trefoil resolution exactness (0.000s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace braidskein
