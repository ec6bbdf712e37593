#include "fatpoints/identities.hpp"

#include "fatpoints/cremona.hpp"
#include "fatpoints/parse.hpp"
#include "fatpoints/rng.hpp"
#include "fatpoints/system_gen.hpp"

namespace fatpoints {

namespace {

bool vir_change_precondition(const LinearSystem& sys) {
    const LinearSystem padded = sys.padded(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::size_t k = j + 1; k < 4; ++k)
                if (2 * padded.degree < padded.mults[i] + padded.mults[j] + padded.mults[k]) return false;
    return true;
}

}  // namespace

IdentitySummary run_identity_checks(int count, std::uint64_t seed) {
    IdentitySummary summary;
    summary.seed = seed;
    summary.requested = count;

    // v == RR-v on arbitrary random systems.
    {
        SplitMix64 rng(seed);
        for (int i = 0; i < count; ++i) {
            const LinearSystem sys = random_system(rng);
            ++summary.rr_checked;
            if (virtual_dimension(sys) != rr_virtual_dimension(sys)) {
                ++summary.rr_failed;
                summary.failures.push_back("v != RR-v on " + format_system(sys));
            }
        }
    }

    // Additivity over random splittings L = F + M of non-negative classes.
    {
        SplitMix64 rng(seed + 0x9d2c5680);
        for (int i = 0; i < count; ++i) {
            const LinearSystem sys = random_system(rng);
            LinearSystem part_f(rng.range(0, sys.degree), {});
            LinearSystem part_m(sys.degree - part_f.degree, {});
            for (Int m : sys.mults) {
                const Int f = rng.range(0, m);
                part_f.mults.push_back(f);
                part_m.mults.push_back(m - f);
            }
            ++summary.additivity_checked;
            const Int cross = triple_product(divisor_class(part_f), divisor_class(part_m),
                                             divisor_class(sys) - canonical_class(sys.points()));
            const bool even = cross % 2 == 0;
            const bool equal =
                even && virtual_dimension(sys) ==
                            virtual_dimension(part_f) + virtual_dimension(part_m) + cross / 2;
            if (!equal) {
                ++summary.additivity_failed;
                summary.failures.push_back("additivity failed on " + format_system(sys) + " = " +
                                           format_system(part_f) + " + " + format_system(part_m));
            }
        }
    }

    // v(Cr(L)) - v(L) against the closed form, on systems meeting its precondition.
    {
        SplitMix64 rng(seed + 0xefc60000);
        int done = 0;
        while (done < count) {
            SystemBounds bounds;
            bounds.min_points = 4;
            const LinearSystem sys = random_system(rng, bounds);
            if (!vir_change_precondition(sys)) continue;
            ++done;
            ++summary.vir_change_checked;
            const LinearSystem image = cremona_raw(sys, {0, 1, 2, 3});
            const Int lhs = virtual_dimension(image) - virtual_dimension(sys);
            if (lhs != vir_change_rhs(sys)) {
                ++summary.vir_change_failed;
                summary.failures.push_back("vir-change mismatch on " + format_system(sys));
            }
        }
    }

    return summary;
}

}  // namespace fatpoints
