#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "fatpoints/core.hpp"

// The cubo-cubic Cremona action on multiplicity vectors and the reduction
// of a system to standard form (sorted multiplicities, 2d >= m1+m2+m3+m4).
// Every reduction step preserves the projective dimension of the system;
// traces carry enough data to replay the reduction deterministically.

namespace fatpoints {

enum class StepKind { Cremona, PlaneRemoval, ClampNegative, Resort };

/// One reduction step. Point indices are 0-based and refer to the state of
/// the system just before the step (steps are replayed in order).
struct ReductionStep {
    StepKind kind;
    std::vector<std::size_t> indices;  // 4 for Cremona, 3 for plane removal, else empty
    Int k = 0;                         // Cremona only: k = 2d - (m_i+m_j+m_k+m_l)

    bool operator==(const ReductionStep&) const = default;
};

struct ReductionTrace {
    LinearSystem initial;
    std::vector<ReductionStep> steps;
    LinearSystem final;

    /// Final degree < 0 encodes the empty system (dimension -1).
    bool empty() const { return final.degree < 0; }
};

/// k = 2d - sum of the four selected multiplicities (indices beyond r count
/// as zero multiplicities).
Int cremona_k(const LinearSystem& sys, const std::array<std::size_t, 4>& idx);

/// Raw Cremona action based at four points: degree d+k, the four selected
/// multiplicities increased by k, everything else untouched. No clamping,
/// no sorting; k may be negative. Indices beyond r pad the system with
/// zero multiplicities. Throws on repeated indices.
LinearSystem cremona_raw(const LinearSystem& sys, const std::array<std::size_t, 4>& idx);

/// Replace every negative multiplicity by 0 (negative multiplicities impose
/// no conditions); degree unchanged. Never changes v or the dimension.
LinearSystem clamp(const LinearSystem& sys);

/// Subtract the plane through the three selected points once:
/// (d-1; ..., m_i - 1, m_j - 1, m_k - 1, ...). Requires 2d < m_i+m_j+m_k,
/// which makes that plane a fixed component. Indices beyond r pad with zeros.
LinearSystem remove_fixed_plane(const LinearSystem& sys, const std::array<std::size_t, 3>& idx);

/// True when the system is sorted non-increasing with all multiplicities
/// >= 0, d >= 0 and 2d >= m1+m2+m3+m4 (missing multiplicities count as 0).
bool is_standard_form(const LinearSystem& sys);

/// Reduce to standard form. Each round sorts (Resort) and clamps
/// (ClampNegative) as needed, then removes a fixed plane through the top
/// three points if 2d < m1+m2+m3, else applies a Cremona map on the top four
/// if 2d < m1+m2+m3+m4 (k < 0, so the degree strictly drops), else stops.
/// Degree < 0 terminates with the system marked empty. The working system
/// is padded to at least 4 points; the final keeps the padded length.
ReductionTrace standard_form(const LinearSystem& sys);

/// Re-apply recorded steps to `initial`; used to audit traces.
/// standard_form(s).final == replay_steps(s, standard_form(s).steps) always.
LinearSystem replay_steps(const LinearSystem& initial, std::span<const ReductionStep> steps);

/// The closed form for v(Cr(L)) - v(L) when 2d >= m_i+m_j+m_k for every
/// triple inside the first four points:
///   sum_{t_ij >= 2} binom(1+t_ij, 3) - sum_{t_ij <= -2} binom(1-t_ij, 3)
/// over the six pairs {i,j} in {0,1,2,3}, t_ij = m_i + m_j - d.
/// Throws when the precondition fails.
Int vir_change_rhs(const LinearSystem& sys);

}  // namespace fatpoints
