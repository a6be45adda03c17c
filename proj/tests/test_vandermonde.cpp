#include "ewb/error.hpp"
#include "ewb/lie_series.hpp"
#include "ewb/vandermonde.hpp"

#include <doctest.h>

using namespace ewb;

TEST_SUITE_BEGIN("vandermonde");

TEST_CASE("k = 1 degenerates to c = (1)") {
    VandermondeSystem sys = solve_system(1, 3, 1);
    REQUIRE(sys.c.size() == 1);
    CHECK(sys.c[0] == Rat(1));
    CHECK(sys.delta == 1);
}

TEST_CASE("k = 2, p = 3, m = 1: c = (4/3, -1/3)") {
    VandermondeSystem sys = solve_system(2, 3, 1);
    CHECK(sys.nodes == std::vector<Int>{1, 4});
    CHECK(sys.c[0] == Rat(4, 3));
    CHECK(sys.c[1] == Rat(-1, 3));
    // even k: the customary product form carries the opposite sign
    CHECK(sys.product_form_sign_flips == std::vector<int>{0, 1});
    CHECK(sys.product_form[0] == Rat(-4, 3));
}

TEST_CASE("k = 3, p = 3, m = 1: c_0 = 40/27, product form agrees including sign") {
    VandermondeSystem sys = solve_system(3, 3, 1);
    CHECK(sys.nodes == std::vector<Int>{1, 4, 10});
    CHECK(sys.c[0] == Rat(40, 27));
    CHECK(sys.c[1] == Rat(-5, 9));
    CHECK(sys.c[2] == Rat(2, 27));
    CHECK(sys.product_form_sign_flips.empty()); // odd k
    CHECK(sys.delta == Int(162)); // (4-1)(10-1)(10-4)
}

TEST_CASE("defining residuals vanish exactly on the grid") {
    for (int k = 1; k <= 6; ++k)
        for (int p : {2, 3, 5})
            for (int m = 1; m <= 2; ++m) {
                VandermondeSystem sys = solve_system(k, p, m);
                for (int t = 0; t < k; ++t) {
                    Rat sum(0);
                    for (int i = 0; i < k; ++i) {
                        Rat pw(1);
                        for (int e = 0; e < t; ++e) pw *= Rat(sys.nodes[i]);
                        sum += sys.c[i] * pw;
                    }
                    CHECK(sum == (t == 0 ? Rat(1) : Rat(0)));
                }
            }
}

TEST_CASE("beta values: frozen instances") {
    // k = 2, p = 3, m = 1
    {
        VandermondeSystem sys = solve_system(2, 3, 1);
        auto beta = beta_sequence(sys, 5);
        CHECK(beta[0] == Rat(1));
        CHECK(beta[1] == Rat(0));
        CHECK(beta[2] == Rat(-4));  // interpolation remainder: -(x_0 x_1) at 0
        CHECK(beta[3] == Rat(-20)); // 4/3 - 64/3
    }
    // k = 3, p = 3, m = 1: beta_3 = x_0 x_1 x_2 = 40 by the remainder route
    {
        VandermondeSystem sys = solve_system(3, 3, 1);
        auto beta = beta_sequence(sys, 5);
        CHECK(beta[1] == Rat(0));
        CHECK(beta[2] == Rat(0));
        CHECK(beta[3] == Rat(40));
        CHECK(is_p_integer(beta[3], 3));
    }
}

TEST_CASE("beta agrees with the linear-recurrence oracle") {
    for (int k = 2; k <= 5; ++k)
        for (int p : {2, 3})
            for (int m = 1; m <= 2; ++m) {
                VandermondeSystem sys = solve_system(k, p, m);
                auto direct = beta_sequence(sys, 30);
                auto recur = beta_by_recurrence(sys, 30);
                CHECK(direct == recur);
            }
}

TEST_CASE("denominator valuations match the closed formula") {
    {
        VandermondeSystem sys = solve_system(2, 3, 1);
        ValuationReport rep = valuation_checks(sys, 12);
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].i == 1);
        CHECK(rep.rows[0].denom_val == 1); // 1*1*(4-1-1)/2
        CHECK(rep.c0_denom_val == 1);      // recorded, not asserted by formula
    }
    {
        VandermondeSystem sys = solve_system(3, 3, 1);
        ValuationReport rep = valuation_checks(sys, 12);
        REQUIRE(rep.rows.size() == 2);
        CHECK(rep.rows[1].i == 2);
        CHECK(rep.rows[1].denom_val == 3); // 1*2*(6-2-1)/2
        CHECK(rep.c0_denom_val == 3);      // 40/27
    }
}

TEST_CASE("delta clears every denominator") {
    for (int k = 2; k <= 5; ++k) {
        VandermondeSystem sys = solve_system(k, 3, 1);
        for (int i = 0; i < k; ++i) CHECK(denominator(sys.c[i] * Rat(sys.delta)) == 1);
    }
}

TEST_CASE("linearization identity, k = 1: everything is reproduced") {
    LinearizationReport rep = linearization_identity_check(1, 1, 3, 1, 3);
    CHECK(rep.degree_zero_matches);
    CHECK(rep.beta_parts_match);
    CHECK(rep.cancellation_ok);
}

TEST_CASE("linearization identity, l = 1, k = 2, p = 3: degree-2 part is -4 w_2") {
    LinearizationReport rep = linearization_identity_check(1, 2, 3, 1, 4);
    CHECK(rep.low_degrees_vanish);
    CHECK(rep.beta_parts_match);
    CHECK(rep.delta_multipliers_integral);
    // cross-check the -4 directly: combine the substituted words by hand
    VandermondeSystem sys = solve_system(2, 3, 1);
    LieSeries x = lie_letter("xyz", 4, 0);
    LieSeries y = lie_letter("xyz", 4, 1);
    LieSeries z = lie_letter("xyz", 4, 2);
    LieSeries lhs = lie_zero("xyz", 4);
    for (int i = 0; i < 2; ++i) {
        LieSeries e = engel_commutator_series(lie_add(lie_scale(Rat(sys.nodes[i]), x), y), z, 1);
        lhs = lie_add(lhs, lie_scale(sys.c[i], e));
    }
    auto lhs_parts = decompose_by_degree(lhs, 0);
    auto w = decompose_by_degree(engel_word(1, 4), 0);
    CHECK(lhs_parts[2] == lie_scale(Rat(-4), w[2]));
    CHECK(lhs_parts[1].is_zero());
}

TEST_CASE("linearization identity, l = 2, k = 3, p = 3: degree-3 part is 40 w_3") {
    LinearizationReport rep = linearization_identity_check(2, 3, 3, 1, 5);
    CHECK(rep.low_degrees_vanish);
    CHECK(rep.beta_parts_match);
    VandermondeSystem sys = solve_system(3, 3, 1);
    auto beta = beta_sequence(sys, 5);
    CHECK(beta[3] == Rat(40));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(solve_system(0, 3, 1), Error);
    VandermondeSystem sys = solve_system(2, 3, 1);
    CHECK_THROWS_AS(beta_sequence(sys, 1), Error);
    CHECK_THROWS_AS(valuation_checks(sys, 1), Error);
    CHECK_THROWS_AS(linearization_identity_check(3, 2, 3, 1, 3), Error); // W < l+1
}

TEST_SUITE_END();
