#include <doctest.h>

#include <stdexcept>

#include "fatpoints/oracle.hpp"
#include "fatpoints/speciality.hpp"

using namespace fatpoints;

namespace {

std::vector<std::size_t> first_nine() { return {0, 1, 2, 3, 4, 5, 6, 7, 8}; }

LinearSystem homog(Int d, Int m, std::size_t r) { return homogeneous_system(d, m, r); }

}  // namespace

TEST_CASE("quadric obstruction values") {
    CHECK(quadric_obstruction(homog(4, 2, 9), first_nine()) == -4);
    CHECK(quadric_obstruction(homog(5, 2, 9), first_nine()) == 18);
    CHECK(quadric_obstruction(homog(2, 1, 9), first_nine()) == 0);
    CHECK(quadric_obstruction(homog(8, 4, 9), first_nine()) == -18);
    CHECK_THROWS_AS(quadric_obstruction(homog(4, 2, 8), {0, 1, 2, 3, 4, 5, 6, 7}), std::invalid_argument);
    CHECK_THROWS_AS(quadric_obstruction(homog(4, 2, 9), {0, 0, 2, 3, 4, 5, 6, 7, 8}), std::invalid_argument);
}

TEST_CASE("scan over nine-point subsets") {
    SUBCASE("unique triggering subset") {
        const std::vector<QuadricObstruction> found = scan_quadrics(homog(4, 2, 9));
        REQUIRE(found.size() == 1);
        CHECK(found[0].subset == first_nine());
        CHECK(found[0].value == -4);
    }
    SUBCASE("fewer than nine points scan to nothing") {
        CHECK(scan_quadrics(LinearSystem{6, {5, 3, 2, 2}}).empty());
    }
    SUBCASE("a tenth zero-multiplicity point changes nothing") {
        LinearSystem sys = homog(4, 2, 9).padded(10);
        const std::vector<QuadricObstruction> found = scan_quadrics(sys);
        REQUIRE(found.size() == 1);
        CHECK(found[0].subset == first_nine());
        CHECK(found[0].value == -4);
    }
    SUBCASE("cap on the subset scan") {
        CHECK_THROWS_AS(scan_quadrics(homog(4, 2, 16)), std::invalid_argument);
        CHECK(scan_quadrics(homog(12, 2, 12)).empty());
    }
}

TEST_CASE("quadric peeling") {
    SUBCASE("one peel exposes the double quadric") {
        const QuadricPeel peel = peel_quadrics(homog(4, 2, 9));
        CHECK(peel.residual == homog(2, 1, 9));
        REQUIRE(peel.rounds.size() == 1);
        REQUIRE(peel.rounds[0].size() == 1);
        CHECK(peel.rounds[0][0] == first_nine());
    }
    SUBCASE("nothing to peel") {
        const QuadricPeel peel = peel_quadrics(homog(5, 2, 9));
        CHECK(peel.residual == homog(5, 2, 9));
        CHECK(peel.rounds.empty());
    }
    SUBCASE("repeated peeling down a homogeneous chain") {
        const QuadricPeel peel = peel_quadrics(homog(8, 4, 9));
        CHECK(peel.residual == homog(2, 1, 9));
        CHECK(peel.peeled().size() == 3);
    }
    SUBCASE("requires standard form") {
        CHECK_THROWS_AS(peel_quadrics({3, {2, 2, 2, 2}}), std::invalid_argument);
    }
}

TEST_CASE("peeling satisfies the additivity identity step by step") {
    // The identity is polynomial in the class entries, so it is checked in
    // the Riemann-Roch form; the binomial form joins in while the chain
    // stays inside the regime where the two forms coincide.
    const auto in_binomial_regime = [](const LinearSystem& sys) {
        if (sys.degree < -3) return false;
        for (Int m : sys.mults)
            if (m < -2) return false;
        return true;
    };
    for (const LinearSystem& start : {homog(8, 4, 9), homog(6, 3, 10), homog(4, 2, 9), homog(8, 4, 10)}) {
        const QuadricPeel peel = peel_quadrics(start);
        LinearSystem work = start;
        for (const auto& round : peel.rounds) {
            for (const std::vector<std::size_t>& subset : round) {
                LinearSystem next = work;
                next.degree -= 2;
                for (std::size_t i : subset) next.mults[i] -= 1;
                LinearSystem quadric(2, std::vector<Int>(work.points(), 0));
                for (std::size_t i : subset) quadric.mults[i] = 1;
                const Int cross = triple_product(divisor_class(quadric), divisor_class(next),
                                                 divisor_class(work) - canonical_class(work.points()));
                REQUIRE(cross % 2 == 0);
                CHECK(rr_virtual_dimension(work) ==
                      rr_virtual_dimension(next) + rr_virtual_dimension(quadric) + cross / 2);
                if (in_binomial_regime(work) && in_binomial_regime(next))
                    CHECK(virtual_dimension(work) ==
                          virtual_dimension(next) + virtual_dimension(quadric) + cross / 2);
                work = next;
            }
            work = clamp(work).sorted();
        }
        CHECK(work == peel.residual);
    }
}

TEST_CASE("speciality verdicts: pinned systems") {
    SUBCASE("special via a quadric obstruction") {
        const Verdict verdict = speciality_verdict(homog(4, 2, 9));
        CHECK(verdict.special);
        CHECK(verdict.predicted == 0);
        REQUIRE(verdict.quadric_reasons.size() == 1);
        CHECK(verdict.quadric_reasons[0].value == -4);
        CHECK(verdict.line_reasons.empty());
    }
    SUBCASE("special via a double base line") {
        const Verdict verdict = speciality_verdict({6, {5, 3, 2, 2}});
        CHECK(verdict.special);
        CHECK(verdict.predicted == 31);
        CHECK(verdict.quadric_reasons.empty());
        REQUIRE(verdict.line_reasons.size() == 1);
        CHECK(verdict.line_reasons[0] == MultipleLine{0, 1, 2});
    }
    SUBCASE("not special") {
        const Verdict verdict = speciality_verdict(homog(5, 2, 9));
        CHECK_FALSE(verdict.special);
        CHECK(verdict.predicted == 19);
        CHECK(verdict.quadric_reasons.empty());
        CHECK(verdict.line_reasons.empty());
    }
    SUBCASE("ten-point homogeneous systems collapse to empty") {
        CHECK(speciality_verdict(homog(4, 2, 10)).predicted == -1);
        CHECK_FALSE(speciality_verdict(homog(4, 2, 10)).special);
        CHECK(speciality_verdict(homog(6, 3, 10)).predicted == -1);
        CHECK_FALSE(speciality_verdict(homog(6, 3, 10)).special);
        CHECK(speciality_verdict(homog(8, 4, 10)).predicted == -1);
        CHECK_FALSE(speciality_verdict(homog(8, 4, 10)).special);
    }
    SUBCASE("standardization that ends empty") {
        const Verdict verdict = speciality_verdict(homog(3, 2, 8));
        CHECK(verdict.predicted == -1);
        CHECK_FALSE(verdict.special);
        CHECK(verdict.standard_trace.empty());
    }
    SUBCASE("reduction can expose speciality of the input without conditions on S") {
        // L(4; 3^4) has e = -1 but dimension 0; its standard form L(0)
        // is an honest nonspecial system of dimension 0.
        const Verdict verdict = speciality_verdict({4, {3, 3, 3, 3}});
        CHECK(verdict.predicted == 0);
        CHECK_FALSE(verdict.special);
        CHECK_FALSE(verdict.has_reasons());
    }
}

TEST_CASE("a negative obstruction makes the quadric a fixed component") {
    // removing the triggering quadric leaves the dimension unchanged
    OracleOptions oracle;
    const std::vector<LinearSystem> triggering = {
        homog(4, 2, 9), homog(6, 3, 9), homog(8, 4, 9), LinearSystem{4, {2, 2, 2, 2, 2, 2, 2, 2, 2, 1}}};
    for (const LinearSystem& sys : triggering) {
        const std::vector<QuadricObstruction> found = scan_quadrics(sys);
        REQUIRE_FALSE(found.empty());
        LinearSystem residual = sys;
        residual.degree -= 2;
        for (std::size_t i : found[0].subset) residual.mults[i] -= 1;
        CHECK(oracle_dimension(sys, oracle).dimension == oracle_dimension(residual, oracle).dimension);
    }
}

TEST_CASE("homogeneous fast paths") {
    CHECK(homogeneous_empty(3, 2, 8));
    CHECK_FALSE(homogeneous_empty(4, 2, 9));
    CHECK_FALSE(homogeneous_empty(3, 2, 7));

    CHECK(homogeneous_special(4, 2, 9));
    CHECK_FALSE(homogeneous_special(5, 2, 9));
    CHECK_FALSE(homogeneous_special(2, 1, 9));
    CHECK(homogeneous_special(6, 3, 9));
    CHECK_FALSE(homogeneous_special(7, 3, 9));
    CHECK(homogeneous_special(8, 4, 9));
    CHECK_FALSE(homogeneous_special(9, 4, 9));
    CHECK_FALSE(homogeneous_special(4, 2, 10));
    CHECK_THROWS_AS(homogeneous_special(3, 2, 9), std::invalid_argument);
}

TEST_CASE("homogeneous fast paths agree with the full predictor") {
    for (Int m = 0; m <= 4; ++m) {
        for (Int d = 2 * m; d <= 12; ++d) {
            for (Int r = 0; r <= 10; ++r) {
                CAPTURE(d);
                CAPTURE(m);
                CAPTURE(r);
                const Verdict verdict = speciality_verdict(homog(d, m, static_cast<std::size_t>(r)));
                CHECK(homogeneous_special(d, m, r) == verdict.special);
            }
        }
    }
}

TEST_CASE("predicted dimension never drops below the expected one") {
    for (Int d = 0; d <= 8; ++d) {
        for (Int m = 0; m <= 4; ++m) {
            for (Int r = 0; r <= 10; ++r) {
                const Verdict verdict = speciality_verdict(homog(d, m, static_cast<std::size_t>(r)));
                CHECK(verdict.predicted >= expected_dimension(verdict.standard_trace.final));
                CHECK(verdict.special == verdict.has_reasons());
            }
        }
    }
}
