#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fatpoints/core.hpp"

// Ground-truth dimension by interpolation: put the r points at random
// positions over GF(p), build the matrix of vanishing conditions (rows:
// partial derivatives of order < m_i at point i; columns: the monomials of
// degree <= d in the affine chart x0 = 1) and compute its exact rank.
// Specializing can only drop the rank, so the minimum corank over several
// trials gives the generic value with overwhelming probability, and
// dimension = min corank - 1 (projective).

namespace fatpoints {

/// Arithmetic mod a word-sized prime. p must be prime and < 2^32 so that
/// products fit in 64 bits.
class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t prime() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
    std::uint64_t inv(std::uint64_t a) const;

  private:
    std::uint64_t p_;
};

/// Exponent vectors (graded-lexicographic, degree ascending) of the
/// monomials of degree <= d in three affine variables; one per column of
/// the interpolation matrix, binom(d+3,3) in total.
std::vector<std::array<int, 3>> monomial_exponents(Int d);

/// Affine coordinates of a point on the chart (1 : x : y : z).
using FieldPoint = std::array<std::uint64_t, 3>;

/// The binom(m+2,3) vanishing conditions of order m at one point: row beta
/// (|beta| <= m-1, graded-lex order) has entry d^beta(x^alpha)|_point at
/// column alpha. Rows with |beta| > d are identically zero (harmless, they
/// just never cut the rank). Requires p > d so the derivative coefficients
/// stay invertible when needed.
std::vector<std::vector<std::uint64_t>> condition_rows(Int d, Int m, const FieldPoint& point,
                                                       const PrimeField& field);

/// In-place row elimination; pivot = first row with a nonzero entry in the
/// current column, columns visited left to right. Returns the rank.
std::size_t row_rank(std::vector<std::vector<std::uint64_t>>& rows, std::size_t columns,
                     const PrimeField& field);

struct OracleOptions {
    std::uint64_t prime = (1ull << 31) - 1;
    std::uint64_t seed = 1;
    int trials = 3;
};

struct OracleResult {
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<Int> coranks;  // one per trial
    Int dimension = -1;        // min corank - 1

    bool operator==(const OracleResult&) const = default;
};

/// Exact projective dimension of the system at random points over GF(p).
/// Deterministic given (system, options); trial t draws its points from a
/// SplitMix64 stream seeded with seed + t. Throws when prime <= degree or
/// the modulus is not prime. Negative degree short-circuits to -1.
OracleResult oracle_dimension(const LinearSystem& sys, const OracleOptions& options = {});

}  // namespace fatpoints
