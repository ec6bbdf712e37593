#include "fatpoints/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fatpoints/rng.hpp"

namespace fatpoints {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t out = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) out = out * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return out;
}

/// Deterministic Miller-Rabin; bases {2, 7, 61} decide primality below 2^32.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 61ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 7ull, 61ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/// Falling factorial n(n-1)...(n-k+1) reduced mod p; zero when k > n.
std::uint64_t falling_mod(int n, int k, const PrimeField& field) {
    std::uint64_t out = 1;
    for (int i = 0; i < k; ++i) {
        if (n - i <= 0) return 0;
        out = field.mul(out, static_cast<std::uint64_t>(n - i));
    }
    return out;
}

std::vector<FieldPoint> sample_distinct_points(std::size_t count, SplitMix64& rng,
                                               const PrimeField& field) {
    std::set<FieldPoint> seen;
    std::vector<FieldPoint> points;
    while (points.size() < count) {
        FieldPoint pt{rng.below(field.prime()), rng.below(field.prime()), rng.below(field.prime())};
        if (seen.insert(pt).second) points.push_back(pt);
    }
    return points;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ull << 32)) throw std::invalid_argument("PrimeField: modulus must fit in 32 bits");
    if (!is_prime_u64(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
    std::uint64_t out = 1;
    base %= p_;
    while (exp) {
        if (exp & 1) out = mul(out, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return out;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw std::invalid_argument("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
}

std::vector<std::array<int, 3>> monomial_exponents(Int d) {
    std::vector<std::array<int, 3>> out;
    if (d < 0) return out;
    for (int total = 0; total <= d; ++total)
        for (int i = total; i >= 0; --i)
            for (int j = total - i; j >= 0; --j)
                out.push_back({i, j, total - i - j});
    return out;
}

std::vector<std::vector<std::uint64_t>> condition_rows(Int d, Int m, const FieldPoint& point,
                                                       const PrimeField& field) {
    if (field.prime() <= static_cast<std::uint64_t>(std::max<Int>(d, 0)))
        throw std::invalid_argument("condition_rows: prime must exceed the degree");
    if (m < 0) throw std::invalid_argument("condition_rows: negative multiplicity");

    const std::vector<std::array<int, 3>> columns = monomial_exponents(d);
    const std::vector<std::array<int, 3>> derivs = monomial_exponents(m - 1);  // |beta| <= m-1

    // Power tables for the three coordinates up to exponent d.
    std::array<std::vector<std::uint64_t>, 3> powers;
    for (int axis = 0; axis < 3; ++axis) {
        powers[axis].resize(static_cast<std::size_t>(std::max<Int>(d, 0)) + 1);
        powers[axis][0] = 1;
        for (std::size_t k = 1; k < powers[axis].size(); ++k)
            powers[axis][k] = field.mul(powers[axis][k - 1], point[axis] % field.prime());
    }

    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(derivs.size());
    for (const std::array<int, 3>& beta : derivs) {
        std::vector<std::uint64_t> row(columns.size(), 0);
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const std::array<int, 3>& alpha = columns[c];
            if (alpha[0] < beta[0] || alpha[1] < beta[1] || alpha[2] < beta[2]) continue;
            std::uint64_t value = 1;
            for (int axis = 0; axis < 3; ++axis) {
                value = field.mul(value, falling_mod(alpha[axis], beta[axis], field));
                value = field.mul(value, powers[axis][static_cast<std::size_t>(alpha[axis] - beta[axis])]);
            }
            row[c] = value;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::size_t row_rank(std::vector<std::vector<std::uint64_t>>& rows, std::size_t columns,
                     const PrimeField& field) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);

        const std::uint64_t inv = field.inv(rows[rank][col]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const std::uint64_t lead = rows[r][col];
            if (lead == 0) continue;
            const std::uint64_t factor = field.mul(lead, inv);
            std::vector<std::uint64_t>& target = rows[r];
            const std::vector<std::uint64_t>& source = rows[rank];
            for (std::size_t c = col; c < columns; ++c)
                target[c] = field.sub(target[c], field.mul(factor, source[c]));
        }
        ++rank;
        if (rank == columns) break;  // corank 0, no further row can matter
    }
    return rank;
}

OracleResult oracle_dimension(const LinearSystem& sys, const OracleOptions& options) {
    if (options.trials < 1) throw std::invalid_argument("oracle_dimension: needs at least one trial");

    OracleResult result;
    result.prime = options.prime;
    result.seed = options.seed;
    result.trials = options.trials;

    if (sys.degree < 0) {
        result.coranks.assign(static_cast<std::size_t>(options.trials), 0);
        result.dimension = -1;
        return result;
    }

    const PrimeField field(options.prime);
    if (options.prime <= static_cast<std::uint64_t>(sys.degree))
        throw std::invalid_argument("oracle_dimension: prime must exceed the degree");

    const Int column_count = binomial(sys.degree + 3, 3);
    Int min_corank = column_count;
    for (int trial = 0; trial < options.trials; ++trial) {
        SplitMix64 rng(options.seed + static_cast<std::uint64_t>(trial));
        const std::vector<FieldPoint> points = sample_distinct_points(sys.points(), rng, field);

        std::vector<std::vector<std::uint64_t>> matrix;
        for (std::size_t i = 0; i < sys.points(); ++i) {
            const Int m = std::min<Int>(sys.mults[i], sys.degree + 1);  // higher orders add zero rows only
            if (m <= 0) continue;
            std::vector<std::vector<std::uint64_t>> rows = condition_rows(sys.degree, m, points[i], field);
            for (std::vector<std::uint64_t>& row : rows) matrix.push_back(std::move(row));
        }

        const std::size_t rank = row_rank(matrix, static_cast<std::size_t>(column_count), field);
        const Int corank = column_count - static_cast<Int>(rank);
        result.coranks.push_back(corank);
        min_corank = std::min(min_corank, corank);
    }
    result.dimension = min_corank - 1;
    return result;
}

}  // namespace fatpoints
