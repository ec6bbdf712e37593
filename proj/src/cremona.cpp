#include "fatpoints/cremona.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fatpoints {

namespace {

std::size_t max_index(std::span<const std::size_t> idx) {
    std::size_t m = 0;
    for (std::size_t i : idx) m = std::max(m, i);
    return m;
}

void require_distinct(std::span<const std::size_t> idx, const char* what) {
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] == idx[b]) throw std::invalid_argument(std::string(what) + ": repeated point index");
}

Int mult_at(const LinearSystem& sys, std::size_t i) {
    return i < sys.mults.size() ? sys.mults[i] : 0;
}

bool sorted_desc(const std::vector<Int>& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<Int>());
}

}  // namespace

Int cremona_k(const LinearSystem& sys, const std::array<std::size_t, 4>& idx) {
    Int s = 0;
    for (std::size_t i : idx) s += mult_at(sys, i);
    return 2 * sys.degree - s;
}

LinearSystem cremona_raw(const LinearSystem& sys, const std::array<std::size_t, 4>& idx) {
    require_distinct(idx, "cremona_raw");
    const Int k = cremona_k(sys, idx);
    LinearSystem out = sys.padded(max_index(idx) + 1);
    out.degree += k;
    for (std::size_t i : idx) out.mults[i] += k;
    return out;
}

LinearSystem clamp(const LinearSystem& sys) {
    LinearSystem out = sys;
    for (Int& m : out.mults) m = std::max<Int>(m, 0);
    return out;
}

LinearSystem remove_fixed_plane(const LinearSystem& sys, const std::array<std::size_t, 3>& idx) {
    require_distinct(idx, "remove_fixed_plane");
    Int s = 0;
    for (std::size_t i : idx) s += mult_at(sys, i);
    if (2 * sys.degree >= s)
        throw std::invalid_argument("remove_fixed_plane: 2d >= m_i+m_j+m_k, plane is not a fixed component");
    LinearSystem out = sys.padded(max_index(idx) + 1);
    out.degree -= 1;
    for (std::size_t i : idx) out.mults[i] -= 1;
    return out;
}

bool is_standard_form(const LinearSystem& sys) {
    if (sys.degree < 0) return false;
    if (!sorted_desc(sys.mults)) return false;
    for (Int m : sys.mults) {
        if (m < 0) return false;
    }
    Int top4 = 0;
    for (std::size_t i = 0; i < 4 && i < sys.mults.size(); ++i) top4 += sys.mults[i];
    return 2 * sys.degree >= top4;
}

ReductionTrace standard_form(const LinearSystem& sys) {
    ReductionTrace trace;
    trace.initial = sys;
    LinearSystem work = sys.padded(4);

    while (true) {
        if (!sorted_desc(work.mults)) {
            work = work.sorted();
            trace.steps.push_back({StepKind::Resort, {}, 0});
        }
        if (work.mults.back() < 0) {  // sorted, so negatives sit at the end
            work = clamp(work);
            trace.steps.push_back({StepKind::ClampNegative, {}, 0});
        }
        if (work.degree < 0) break;  // empty

        const Int top3 = work.mults[0] + work.mults[1] + work.mults[2];
        if (2 * work.degree < top3) {
            work = remove_fixed_plane(work, {0, 1, 2});
            trace.steps.push_back({StepKind::PlaneRemoval, {0, 1, 2}, 0});
            continue;
        }
        const Int top4 = top3 + work.mults[3];
        if (2 * work.degree < top4) {
            const Int k = 2 * work.degree - top4;
            work = cremona_raw(work, {0, 1, 2, 3});
            trace.steps.push_back({StepKind::Cremona, {0, 1, 2, 3}, k});
            continue;
        }
        break;  // standard form reached
    }

    trace.final = work;
    return trace;
}

LinearSystem replay_steps(const LinearSystem& initial, std::span<const ReductionStep> steps) {
    LinearSystem work = initial.padded(4);
    for (const ReductionStep& step : steps) {
        switch (step.kind) {
            case StepKind::Resort:
                work = work.sorted();
                break;
            case StepKind::ClampNegative:
                work = clamp(work);
                break;
            case StepKind::PlaneRemoval: {
                if (step.indices.size() != 3) throw std::invalid_argument("replay: plane removal needs 3 indices");
                work = remove_fixed_plane(work, {step.indices[0], step.indices[1], step.indices[2]});
                break;
            }
            case StepKind::Cremona: {
                if (step.indices.size() != 4) throw std::invalid_argument("replay: cremona needs 4 indices");
                work = cremona_raw(work, {step.indices[0], step.indices[1], step.indices[2], step.indices[3]});
                break;
            }
        }
    }
    return work;
}

Int vir_change_rhs(const LinearSystem& sys) {
    const LinearSystem padded = sys.padded(4);
    const Int d = padded.degree;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::size_t k = j + 1; k < 4; ++k)
                if (2 * d < padded.mults[i] + padded.mults[j] + padded.mults[k])
                    throw std::invalid_argument(
                        "vir_change_rhs: needs 2d >= m_i+m_j+m_k for every triple in the first four points");
    Int out = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            const Int t = padded.mults[i] + padded.mults[j] - d;
            if (t >= 2) out += binomial(1 + t, 3);
            else if (t <= -2) out -= binomial(1 - t, 3);
        }
    }
    return out;
}

}  // namespace fatpoints
