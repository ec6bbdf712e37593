#pragma once

#include "fatpoints/core.hpp"
#include "fatpoints/rng.hpp"

namespace fatpoints {

struct SystemBounds {
    Int max_degree = 20;
    Int max_mult = 10;
    Int min_points = 0;
    Int max_points = 12;
};

/// Uniform random system within the bounds (degree, point count and each
/// multiplicity drawn independently; not sorted).
inline LinearSystem random_system(SplitMix64& rng, const SystemBounds& bounds = {}) {
    LinearSystem sys;
    sys.degree = rng.range(0, bounds.max_degree);
    const Int r = rng.range(bounds.min_points, bounds.max_points);
    sys.mults.reserve(static_cast<std::size_t>(r));
    for (Int i = 0; i < r; ++i) sys.mults.push_back(rng.range(0, bounds.max_mult));
    return sys;
}

}  // namespace fatpoints
