#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fatpoints/core.hpp"

// The three exact identity suites: the binomial and Riemann-Roch forms of v
// agree; v is additive over splittings up to the intersection correction
// F.M.(L-K)/2; and the closed form for v(Cr(L)) - v(L) matches a direct
// evaluation of both sides. All checks are exact integer comparisons.

namespace fatpoints {

struct IdentitySummary {
    std::uint64_t seed = 0;
    int requested = 0;

    int rr_checked = 0;
    int rr_failed = 0;
    int additivity_checked = 0;
    int additivity_failed = 0;
    int vir_change_checked = 0;
    int vir_change_failed = 0;

    std::vector<std::string> failures;  // human-readable description per failure

    bool all_passed() const { return rr_failed == 0 && additivity_failed == 0 && vir_change_failed == 0; }
};

/// Run each suite on `count` random samples (d <= 20, m <= 10, r <= 12).
IdentitySummary run_identity_checks(int count, std::uint64_t seed);

}  // namespace fatpoints
