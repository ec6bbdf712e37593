#pragma once

#include <cstdint>
#include <vector>

// Divisor-class arithmetic on the blow-up X of P^3 at r general points.
//
// Conventions used throughout:
//   * a class (a; b_1,...,b_r) stands for aH - sum b_i E_i,
//   * intersection ring: H^3 = 1, H.E_i = 0, E_i.E_j = 0 (i != j), E_i^3 = 1,
//   * canonical class K_X = -4H + 2 sum E_i, i.e. (a = -4, b_i = -2),
//   * c_2(X) pairs as c_2(X).(aH - sum b_i E_i) = 6a.
// All arithmetic is exact; there is no floating point in this module.

namespace fatpoints {

using Int = std::int64_t;

/// L_3(d; m_1,...,m_r): surfaces of degree d with multiplicity m_i at point i.
/// Trailing zero multiplicities are allowed and never affect any computed
/// quantity. Negative degrees/multiplicities are tolerated (they arise
/// transiently during reductions).
struct LinearSystem {
    Int degree = 0;
    std::vector<Int> mults;

    LinearSystem() = default;
    LinearSystem(Int d, std::vector<Int> m) : degree(d), mults(std::move(m)) {}

    std::size_t points() const { return mults.size(); }

    /// Same system with multiplicities sorted non-increasing.
    LinearSystem sorted() const;
    /// Same system padded with zero multiplicities up to n points.
    LinearSystem padded(std::size_t n) const;

    bool operator==(const LinearSystem&) const = default;
};

/// Convenience builder: L(d; m repeated count times).
LinearSystem homogeneous_system(Int d, Int m, std::size_t count);

/// Integer class aH - sum b_i E_i on the blow-up.
struct DivisorClass {
    Int h = 0;
    std::vector<Int> e;

    DivisorClass() = default;
    DivisorClass(Int a, std::vector<Int> b) : h(a), e(std::move(b)) {}

    std::size_t points() const { return e.size(); }
    bool operator==(const DivisorClass&) const = default;
};

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);

/// The embedding (d; m_1,...,m_r) -> dH - sum m_i E_i.
DivisorClass divisor_class(const LinearSystem& sys);

/// K_X = -4H + 2 sum E_i for the blow-up at r points.
DivisorClass canonical_class(std::size_t r);

/// binom(a, k) with the convention binom(a, k) = 0 whenever a < k
/// (in particular for all a < 0 when k >= 1). Exact for the ranges the
/// library uses (k <= 6, |a| <= 10^6); intermediates are 128-bit.
Int binomial(Int a, int k);

/// Triple intersection number D1.D2.D3 = a a' a'' - sum_i b_i b'_i b''_i.
/// Throws std::invalid_argument when the classes have different r.
Int triple_product(const DivisorClass& d1, const DivisorClass& d2, const DivisorClass& d3);

/// v(L) = binom(d+3,3) - sum binom(m_i+2,3) - 1.
Int virtual_dimension(const LinearSystem& sys);

/// e(L) = max(v(L), -1); a lower bound for the projective dimension.
Int expected_dimension(const LinearSystem& sys);

/// The Riemann-Roch form (L(L-K)(2L-K) + c_2(X).L)/12. Always equals
/// virtual_dimension on systems with d >= -3 and m_i >= -2; the agreement
/// is the module's master consistency test.
Int rr_virtual_dimension(const LinearSystem& sys);

/// chi of the line bundle at general points: v(L) + 1.
Int euler_characteristic(const LinearSystem& sys);

}  // namespace fatpoints
