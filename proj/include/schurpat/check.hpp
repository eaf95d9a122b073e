#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schurpat {

struct CheckResult {
  std::string suite;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure, if any

  bool passed() const noexcept { return failures == 0; }
};

/// Cross-module property checks. `suite` is one of spectra, major,
/// schur_horn, patterns, multipliers or all; `scale` multiplies the number of
/// random cases (1.0 runs in a few seconds). Throws Errc::invalid_parameter
/// for an unknown suite.
std::vector<CheckResult> run_checks(std::string_view suite, std::uint64_t seed, double scale = 1.0);

}  // namespace schurpat
