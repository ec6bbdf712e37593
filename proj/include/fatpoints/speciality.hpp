#pragma once

#include <cstddef>
#include <vector>

#include "fatpoints/base_lines.hpp"
#include "fatpoints/core.hpp"
#include "fatpoints/cremona.hpp"

// Speciality predictor. A system in standard form is predicted special
// exactly when its dimension exceeds the expected one, which the model
// attributes to two sources: quadrics through nine of the points whose
// obstruction number Q(L-Q)(L-K) is negative (they are fixed components
// and get peeled off), and base lines of multiplicity t >= 2. The
// predicted dimension is v(L') + sum binom(t'+1, 3) for the residual L'
// after peeling.

namespace fatpoints {

/// Default cap on the point count for 9-subset scans (C(15,9) = 5005).
inline constexpr std::size_t default_scan_cap = 15;

/// A quadric through nine of the points together with its obstruction
/// number Q(L-Q)(L-K); negative values force Q into the base locus.
struct QuadricObstruction {
    std::vector<std::size_t> subset;  // 9 ascending point indices
    Int value = 0;

    bool operator==(const QuadricObstruction&) const = default;
};

/// Q(L-Q)(L-K) for Q the quadric through the 9 listed points.
/// Throws when r < 9 or the subset is not 9 distinct valid indices.
Int quadric_obstruction(const LinearSystem& sys, const std::vector<std::size_t>& subset);

/// All 9-subsets with negative obstruction, sorted by (value ascending,
/// subset lexicographic). Empty when r < 9. Throws when r exceeds the cap.
std::vector<QuadricObstruction> scan_quadrics(const LinearSystem& sys,
                                              std::size_t scan_cap = default_scan_cap);

/// Quadric peeling of a standard-form system. Rounds repeat while the
/// degree is >= 2 and some obstruction is negative; each round subtracts
/// every currently negative quadric once (subset indices refer to the
/// system at the start of the round), then clamps and re-sorts.
struct QuadricPeel {
    LinearSystem residual;
    std::vector<std::vector<std::vector<std::size_t>>> rounds;  // subsets per round

    std::vector<std::vector<std::size_t>> peeled() const;  // rounds flattened, in order
};

QuadricPeel peel_quadrics(const LinearSystem& sys, std::size_t scan_cap = default_scan_cap);

/// Speciality verdict for the standardized system S of the input:
/// predicted dimension, whether S is predicted special (predicted > e(S)),
/// and the conditions justifying a special verdict.
struct Verdict {
    bool special = false;
    std::vector<QuadricObstruction> quadric_reasons;  // negative obstructions on S
    std::vector<MultipleLine> line_reasons;           // lines of S with t >= 2
    Int predicted = -1;
    ReductionTrace standard_trace;
    std::vector<std::vector<std::size_t>> peeled_quadrics;

    bool has_reasons() const { return !quadric_reasons.empty() || !line_reasons.empty(); }
};

Verdict speciality_verdict(const LinearSystem& sys, std::size_t scan_cap = default_scan_cap);

/// Homogeneous fast path: L(d; m^r) is empty when d <= 2m-1 and r >= 8.
bool homogeneous_empty(Int d, Int m, Int r);

/// Homogeneous fast path for d >= 2m: special iff r = 9 and
/// d < -1 + (3/2) sqrt(2m^2+2m), compared exactly as 4(d+1)^2 < 9(2m^2+2m).
/// Throws when d < 2m (outside the stated range).
bool homogeneous_special(Int d, Int m, Int r);

}  // namespace fatpoints
