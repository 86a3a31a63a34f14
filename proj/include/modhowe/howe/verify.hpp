#pragma once

#include <cstdint>
#include <vector>

#include "modhowe/howe/howe_table.hpp"

namespace modhowe::howe {

struct VerifyOptions {
  unsigned workers = 1;
  /// Skip the fixed-point and trace suites (they dominate the runtime for q >= 7).
  bool include_varieties = true;
};

struct VerifySummary {
  std::uint32_t n = 0;
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint64_t ell = 0;
  std::vector<Check> checks;
  bool all_pass() const;
};

/// Runs every suite for the given parameters. n >= 2; ell an odd prime
/// different from p (UnsupportedCase otherwise). Failures are recorded as
/// checks, never thrown.
VerifySummary verify_all(std::uint32_t n, std::uint64_t q, std::uint64_t ell, std::uint32_t p,
                         const VerifyOptions& opts = {});

}  // namespace modhowe::howe
