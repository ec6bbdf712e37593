#include <doctest.h>

#include <stdexcept>

#include "fatpoints/cremona.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/rng.hpp"
#include "fatpoints/system_gen.hpp"

using namespace fatpoints;

namespace {
const PrimeField field((1ull << 31) - 1);
}

TEST_CASE("monomial basis") {
    CHECK(monomial_exponents(0).size() == 1);
    CHECK(monomial_exponents(1).size() == 4);
    CHECK(monomial_exponents(3).size() == 20);
    // graded-lex: degree ascending, x before y before z inside a degree
    const auto basis = monomial_exponents(1);
    CHECK(basis[0] == std::array<int, 3>{0, 0, 0});
    CHECK(basis[1] == std::array<int, 3>{1, 0, 0});
    CHECK(basis[2] == std::array<int, 3>{0, 1, 0});
    CHECK(basis[3] == std::array<int, 3>{0, 0, 1});
}

TEST_CASE("condition rows") {
    SUBCASE("simple point on a plane") {
        const FieldPoint pt{5, 7, 11};
        const auto rows = condition_rows(1, 1, pt, field);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0] == std::vector<std::uint64_t>{1, 5, 7, 11});
    }
    SUBCASE("double point at the origin picks the low-order coefficients") {
        const auto rows = condition_rows(2, 2, {0, 0, 0}, field);
        REQUIRE(rows.size() == 4);  // binom(4,3)
        const std::size_t cols = monomial_exponents(2).size();
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                CHECK(rows[r][c] == (r == c ? 1u : 0u));
    }
    SUBCASE("double point at a generic point has full row rank") {
        SplitMix64 rng(8);
        FieldPoint pt{rng.below(field.prime()), rng.below(field.prime()), rng.below(field.prime())};
        auto rows = condition_rows(3, 2, pt, field);
        REQUIRE(rows.size() == 4);
        CHECK(row_rank(rows, 20, field) == 4);
    }
    SUBCASE("row counts follow binom(m+2,3)") {
        const FieldPoint pt{3, 1, 4};
        CHECK(condition_rows(5, 3, pt, field).size() == 10);
        CHECK(condition_rows(5, 0, pt, field).size() == 0);
    }
}

TEST_CASE("oracle dimensions: pinned systems") {
    CHECK(oracle_dimension({3, {2, 2, 2, 2}}).dimension == 3);
    CHECK(oracle_dimension({4, std::vector<Int>(9, 2)}).dimension == 0);
    CHECK(oracle_dimension({3, std::vector<Int>(8, 2)}).dimension == -1);
    CHECK(oracle_dimension({-1, {}}).dimension == -1);
    CHECK(oracle_dimension({2, {}}).dimension == 9);
}

TEST_CASE("oracle input validation") {
    OracleOptions options;
    options.prime = 5;
    CHECK_THROWS_AS(oracle_dimension({7, {1}}, options), std::invalid_argument);
    options.prime = 6;
    CHECK_THROWS_AS(oracle_dimension({2, {1}}, options), std::invalid_argument);
    options.prime = 101;
    CHECK(oracle_dimension({2, {1}}, options).dimension == 8);
}

TEST_CASE("oracle determinism") {
    OracleOptions options;
    options.seed = 987;
    const OracleResult a = oracle_dimension({4, {3, 2, 2, 1}}, options);
    const OracleResult b = oracle_dimension({4, {3, 2, 2, 1}}, options);
    CHECK(a == b);
    CHECK(a.coranks.size() == 3);
}

TEST_CASE("oracle dimension is at least the expected dimension") {
    SplitMix64 rng(31337);
    OracleOptions options;
    options.trials = 1;
    for (int i = 0; i < 25; ++i) {
        SystemBounds bounds;
        bounds.max_degree = 6;
        bounds.max_mult = 4;
        bounds.max_points = 8;
        const LinearSystem sys = random_system(rng, bounds);
        CHECK(oracle_dimension(sys, options).dimension >= expected_dimension(sys));
    }
}

TEST_CASE("trailing zero multiplicities do not change the oracle dimension") {
    OracleOptions options;
    for (const LinearSystem& sys :
         {LinearSystem{4, std::vector<Int>(9, 2)}, LinearSystem{3, {2, 2, 2, 2}},
          LinearSystem{6, {5, 3, 2, 2}}}) {
        CHECK(oracle_dimension(sys.padded(sys.points() + 2), options).dimension ==
              oracle_dimension(sys, options).dimension);
    }
}

TEST_CASE("dropping a point never decreases the dimension") {
    OracleOptions options;
    for (const LinearSystem& sys :
         {LinearSystem{4, std::vector<Int>(9, 2)}, LinearSystem{5, {3, 3, 2, 2, 1}},
          LinearSystem{3, std::vector<Int>(8, 2)}}) {
        LinearSystem dropped = sys;
        dropped.mults.pop_back();
        CHECK(oracle_dimension(dropped, options).dimension >= oracle_dimension(sys, options).dimension);
    }
}

TEST_CASE("oracle dimension is invariant under reduction steps (spot check)") {
    SplitMix64 rng(161803);
    OracleOptions options;
    options.trials = 2;
    SystemBounds bounds;
    bounds.max_degree = 6;
    bounds.max_mult = 4;
    bounds.min_points = 4;
    bounds.max_points = 6;
    int done = 0;
    while (done < 8) {
        const LinearSystem sys = random_system(rng, bounds);
        // k <= 0 keeps the image at desk scale; the involution makes the
        // k >= 0 direction the same set of pairs.
        if (cremona_k(sys, {0, 1, 2, 3}) > 0) continue;
        ++done;
        const LinearSystem image = cremona_raw(sys, {0, 1, 2, 3});
        CHECK(oracle_dimension(sys, options).dimension == oracle_dimension(image, options).dimension);
    }
}
