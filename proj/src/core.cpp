#include "fatpoints/core.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace fatpoints {

LinearSystem LinearSystem::sorted() const {
    LinearSystem out = *this;
    std::stable_sort(out.mults.begin(), out.mults.end(), std::greater<Int>());
    return out;
}

LinearSystem LinearSystem::padded(std::size_t n) const {
    LinearSystem out = *this;
    if (out.mults.size() < n) out.mults.resize(n, 0);
    return out;
}

LinearSystem homogeneous_system(Int d, Int m, std::size_t count) {
    return LinearSystem(d, std::vector<Int>(count, m));
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    if (x.e.size() != y.e.size())
        throw std::invalid_argument("divisor classes live on blow-ups at different point counts");
    DivisorClass out(x.h + y.h, x.e);
    for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] += y.e[i];
    return out;
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    if (x.e.size() != y.e.size())
        throw std::invalid_argument("divisor classes live on blow-ups at different point counts");
    DivisorClass out(x.h - y.h, x.e);
    for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] -= y.e[i];
    return out;
}

DivisorClass divisor_class(const LinearSystem& sys) {
    return DivisorClass(sys.degree, sys.mults);
}

DivisorClass canonical_class(std::size_t r) {
    return DivisorClass(-4, std::vector<Int>(r, -2));
}

Int binomial(Int a, int k) {
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    if (a < k) return 0;
    __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (a - k + i) / i;  // prefix products are binomials, division exact
    }
    assert(acc >= 0 && acc <= __int128(INT64_MAX));
    return static_cast<Int>(acc);
}

Int triple_product(const DivisorClass& d1, const DivisorClass& d2, const DivisorClass& d3) {
    if (d1.e.size() != d2.e.size() || d2.e.size() != d3.e.size())
        throw std::invalid_argument("triple_product: classes have different point counts");
    Int out = d1.h * d2.h * d3.h;
    for (std::size_t i = 0; i < d1.e.size(); ++i) out -= d1.e[i] * d2.e[i] * d3.e[i];
    return out;
}

Int virtual_dimension(const LinearSystem& sys) {
    Int out = binomial(sys.degree + 3, 3) - 1;
    for (Int m : sys.mults) out -= binomial(m + 2, 3);
    return out;
}

Int expected_dimension(const LinearSystem& sys) {
    return std::max<Int>(virtual_dimension(sys), -1);
}

Int rr_virtual_dimension(const LinearSystem& sys) {
    const DivisorClass cls = divisor_class(sys);
    const DivisorClass k = canonical_class(sys.points());
    const DivisorClass lmk = cls - k;
    const DivisorClass l2mk = cls + lmk;  // 2L - K
    const Int chi12 = triple_product(cls, lmk, l2mk) + 6 * cls.h;
    assert(chi12 % 12 == 0);
    return chi12 / 12;
}

Int euler_characteristic(const LinearSystem& sys) {
    return virtual_dimension(sys) + 1;
}

}  // namespace fatpoints
