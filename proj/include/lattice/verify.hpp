#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lattice/catalog.hpp"
#include "lattice/series.hpp"

namespace lattice {

struct VerifyOptions {
  /// Largest n for the per-term checks.
  unsigned max_n = 12;
  /// Truncation order for the series identities.
  std::size_t order = 40;
  /// Square root used by the 1/sqrt(1-4x) check; swappable for fault
  /// injection.
  std::function<Series(const Series&)> sqrt_impl = [](const Series& s) { return sqrt(s); };
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First failure as "family=..., n=..., expected=..., got=...".
  std::string counterexample;
};

/// Every cross-check, in a fixed order:
///   prefix-fidelity, method-agreement, riordan-binomial-arrays,
///   inverse-sqrt-central-binomial, central-binomial-convolution,
///   catalan-identities, reflection-bijection, gf-equivalence,
///   enumerated-counts, down-step-buckets.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Largest n at which the brute-force route joins method-agreement:
/// 8 for central/Dyck, 6 for Delannoy-type, 12 for Motzkin-type families.
unsigned brute_check_limit(catalog::FamilyId family) noexcept;

}  // namespace lattice
