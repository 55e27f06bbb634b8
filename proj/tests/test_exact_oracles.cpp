#include <doctest.h>

#include <random>

#include "hanoi/decimation.hpp"

using namespace hanoi;

// Determinant identity checks at 20 random non-degenerate rational points
// each.  These push 81x81 and 243x243 fraction-free determinants, so they are
// kept in their own binary with a generous timeout.

TEST_CASE("determinant recursion holds at 20 random points for n = 2, 3, 4") {
    std::mt19937_64 rng(424242);
    for (int n = 2; n <= 4; ++n) {
        int checked = 0;
        while (checked < 20) {
            const RationalPoint pt = sample_nondegenerate_point(rng, 1);
            const CheckStatus status = recursion_check(n, pt);
            REQUIRE(status != CheckStatus::fails);
            if (status == CheckStatus::holds) ++checked;
        }
    }
}

TEST_CASE("determinant recursion holds at 20 random points for n = 5") {
    std::mt19937_64 rng(515151);
    int checked = 0;
    while (checked < 20) {
        const RationalPoint pt = sample_nondegenerate_point(rng, 1);
        const CheckStatus status = recursion_check(5, pt);
        REQUIRE(status != CheckStatus::fails);
        if (status == CheckStatus::holds) ++checked;
    }
}

TEST_CASE("factorization holds at 20 random points for n = 1..4") {
    std::mt19937_64 rng(636363);
    for (int n = 1; n <= 4; ++n) {
        int checked = 0;
        while (checked < 20) {
            const RationalPoint pt = sample_nondegenerate_point(rng, 0);
            const CheckStatus status = factorization_check(n, pt);
            REQUIRE(status != CheckStatus::fails);
            if (status == CheckStatus::holds) ++checked;
        }
    }
}
