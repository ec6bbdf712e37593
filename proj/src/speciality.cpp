#include "fatpoints/speciality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fatpoints {

namespace {

/// Visit all ascending 9-subsets of {0,...,r-1} in lexicographic order.
template <typename Fn>
void for_each_9_subset(std::size_t r, Fn&& fn) {
    std::vector<std::size_t> idx(9);
    for (std::size_t i = 0; i < 9; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        // advance to the next combination
        std::size_t pos = 9;
        while (pos > 0) {
            --pos;
            if (idx[pos] != pos + r - 9) break;
            if (pos == 0) return;
        }
        if (idx[pos] == pos + r - 9) return;
        ++idx[pos];
        for (std::size_t j = pos + 1; j < 9; ++j) idx[j] = idx[j - 1] + 1;
    }
}

LinearSystem subtract_quadric(const LinearSystem& sys, const std::vector<std::size_t>& subset) {
    LinearSystem out = sys;
    out.degree -= 2;
    for (std::size_t i : subset) out.mults[i] -= 1;
    return out;
}

/// A system that provably has no members: negative degree, or a point of
/// multiplicity exceeding the degree.
bool trivially_empty(const LinearSystem& sys) {
    if (sys.degree < 0) return true;
    for (Int m : sys.mults)
        if (m > sys.degree) return true;
    return false;
}

}  // namespace

std::vector<std::vector<std::size_t>> QuadricPeel::peeled() const {
    std::vector<std::vector<std::size_t>> flat;
    for (const auto& round : rounds) flat.insert(flat.end(), round.begin(), round.end());
    return flat;
}

Int quadric_obstruction(const LinearSystem& sys, const std::vector<std::size_t>& subset) {
    if (sys.points() < 9) throw std::invalid_argument("quadric_obstruction: needs at least 9 points");
    if (subset.size() != 9) throw std::invalid_argument("quadric_obstruction: subset must have 9 points");
    std::set<std::size_t> seen(subset.begin(), subset.end());
    if (seen.size() != 9 || *seen.rbegin() >= sys.points())
        throw std::invalid_argument("quadric_obstruction: subset must be 9 distinct valid indices");

    // Q = (2; 1 on the subset), L-Q = (d-2; m_i - [i in subset]), L-K = (d+4; m_i+2).
    Int value = 2 * (sys.degree - 2) * (sys.degree + 4);
    for (std::size_t i : subset) value -= (sys.mults[i] - 1) * (sys.mults[i] + 2);
    return value;
}

std::vector<QuadricObstruction> scan_quadrics(const LinearSystem& sys, std::size_t scan_cap) {
    const std::size_t r = sys.points();
    if (r < 9) return {};
    if (r > scan_cap)
        throw std::invalid_argument("scan_quadrics: point count " + std::to_string(r) +
                                    " exceeds the subset-scan cap " + std::to_string(scan_cap));

    std::vector<QuadricObstruction> out;
    for_each_9_subset(r, [&](const std::vector<std::size_t>& subset) {
        Int value = 2 * (sys.degree - 2) * (sys.degree + 4);
        for (std::size_t i : subset) value -= (sys.mults[i] - 1) * (sys.mults[i] + 2);
        if (value < 0) out.push_back({subset, value});
    });
    std::stable_sort(out.begin(), out.end(), [](const QuadricObstruction& a, const QuadricObstruction& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.subset < b.subset;
    });
    return out;
}

QuadricPeel peel_quadrics(const LinearSystem& sys, std::size_t scan_cap) {
    if (!is_standard_form(sys)) throw std::invalid_argument("peel_quadrics: system is not in standard form");

    QuadricPeel peel;
    LinearSystem work = sys;
    while (work.degree >= 2) {
        const std::vector<QuadricObstruction> found = scan_quadrics(work, scan_cap);
        if (found.empty()) break;
        // Every negative quadric is a fixed component of the current system,
        // so the whole batch comes off at once.
        std::vector<std::vector<std::size_t>> round;
        for (const QuadricObstruction& obs : found) {
            work = subtract_quadric(work, obs.subset);
            round.push_back(obs.subset);
        }
        peel.rounds.push_back(std::move(round));
        work = clamp(work).sorted();
    }
    peel.residual = work;
    return peel;
}

Verdict speciality_verdict(const LinearSystem& sys, std::size_t scan_cap) {
    Verdict verdict;
    verdict.standard_trace = standard_form(sys);
    const LinearSystem& standard = verdict.standard_trace.final;

    if (standard.degree < 0) {
        verdict.predicted = -1;
        verdict.special = false;
        return verdict;
    }

    QuadricPeel peel = peel_quadrics(standard, scan_cap);
    verdict.peeled_quadrics = peel.peeled();

    const Int expected = expected_dimension(standard);
    Int predicted;
    if (trivially_empty(peel.residual)) {
        predicted = -1;
    } else {
        predicted = std::max<Int>(-1, virtual_dimension(peel.residual) + line_speciality_term(peel.residual));
    }
    // The true dimension never drops below e(S); neither may the prediction.
    verdict.predicted = std::max(predicted, expected);
    verdict.special = verdict.predicted > expected;

    if (verdict.special) {
        verdict.quadric_reasons = scan_quadrics(standard, scan_cap);
        for (const MultipleLine& line : multiple_lines(standard))
            if (line.t >= 2) verdict.line_reasons.push_back(line);
    }
    return verdict;
}

bool homogeneous_empty(Int d, Int m, Int r) {
    return d <= 2 * m - 1 && r >= 8;
}

bool homogeneous_special(Int d, Int m, Int r) {
    if (d < 2 * m) throw std::invalid_argument("homogeneous_special: requires d >= 2m");
    return r == 9 && 4 * (d + 1) * (d + 1) < 9 * (2 * m * m + 2 * m);
}

}  // namespace fatpoints
