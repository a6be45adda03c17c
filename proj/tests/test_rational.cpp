#include "ewb/error.hpp"
#include "ewb/group.hpp"
#include "ewb/rational.hpp"

#include <doctest.h>

#include <random>

using namespace ewb;

TEST_SUITE_BEGIN("rational");

TEST_CASE("padic valuation basics") {
    CHECK(padic_val(Int(12), Int(2)) == 2);
    CHECK(padic_val(Int(12), Int(3)) == 1);
    CHECK(padic_val(Int(-27), Int(3)) == 3);
    CHECK(padic_val(Rat(3, 2), Int(3)) == 1);
    CHECK(padic_val(Rat(1, 9), Int(3)) == -2);
    CHECK(!padic_val(Rat(0), Int(5)).has_value()); // v(0) = infinity marker
}

TEST_CASE("p-integers") {
    CHECK(is_p_integer(Rat(7, 4), Int(3)));
    CHECK(!is_p_integer(Rat(1, 3), Int(3)));
    CHECK(is_p_integer(Rat(0), Int(3)));
    CHECK(is_p_integer(Rat(6, 1), Int(3)));
}

TEST_CASE("string round trip") {
    CHECK(rat_to_string(Rat(4, 3)) == "4/3");
    CHECK(rat_to_string(Rat(-1, 3)) == "-1/3");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(parse_rational("4/3") == Rat(4, 3));
    CHECK(parse_rational("-12") == Rat(-12));
    CHECK_THROWS_AS(parse_rational("x/y"), Error);
}

TEST_CASE("valuation is additive and ultrametric") {
    std::mt19937_64 rng(kDefaultSeed);
    const Int p(3);
    for (int t = 0; t < 500; ++t) {
        Rat u((long)(rng() % 2000) - 1000, 1 + (long)(rng() % 60));
        Rat v((long)(rng() % 2000) - 1000, 1 + (long)(rng() % 60));
        if (u == 0 || v == 0) continue;
        auto vu = padic_val(u, p), vv = padic_val(v, p);
        CHECK(padic_val(u * v, p) == *vu + *vv);
        if (u + v != 0) CHECK(*padic_val(u + v, p) >= std::min(*vu, *vv));
    }
}

TEST_SUITE_END();
