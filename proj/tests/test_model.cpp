#include "ewb/error.hpp"
#include "ewb/group.hpp"
#include "ewb/nilpotent_model.hpp"

#include <doctest.h>

#include <random>

using namespace ewb;

namespace {

NilpotentModel::Elt random_elt(const NilpotentModel& m, std::mt19937_64& rng) {
    auto e = m.zero();
    long p = m.prime().convert_to<long>();
    for (int i = 0; i < m.dim(); ++i) {
        long den = 1 + (long)(rng() % 9);
        while (den % p == 0) den = 1 + (long)(rng() % 9);
        e[i] = Rat((long)(rng() % 19) - 9, den);
    }
    return e;
}

} // namespace

TEST_SUITE_BEGIN("model");

TEST_CASE("bracket carries one factor of p") {
    NilpotentModel m(2, 3, 3);
    auto x = m.generator(0), y = m.generator(1);
    auto b = m.bracket(x, y);
    // [X,Y]_model = 3 * (basis monomial XY)
    int count = 0;
    for (int i = 0; i < m.dim(); ++i)
        if (b[i] != 0) {
            ++count;
            CHECK(b[i] == Rat(3));
        }
    CHECK(count == 1);
}

TEST_CASE("inverse and integer powers") {
    NilpotentModel m(2, 4, 3);
    std::mt19937_64 rng(kDefaultSeed);
    auto u = random_elt(m, rng);
    CHECK(m.is_zero(m.mul(u, m.inverse(u))));
    CHECK(m.mul(u, u) == m.power(Rat(2), u)); // x^2 = 2x
    auto acc = m.zero();
    for (int a = 1; a <= 10; ++a) {
        acc = m.mul(acc, u);
        CHECK(acc == m.power(Rat(a), u));
    }
}

TEST_CASE("commuting elements multiply additively") {
    NilpotentModel m(2, 4, 3);
    std::mt19937_64 rng(kDefaultSeed ^ 1);
    auto u = random_elt(m, rng);
    auto v = m.power(Rat(5), u); // scalar multiples commute
    REQUIRE(m.is_zero(m.bracket(u, v)));
    CHECK(m.mul(u, v) == m.add(u, v));
    CHECK(m.mul(u, v) == m.mul(v, u));
}

TEST_CASE("group law rejects non-p-integral input") {
    NilpotentModel m(2, 3, 3);
    auto u = m.zero();
    u[0] = Rat(1, 3); // denominator divisible by p
    CHECK_THROWS_AS(m.mul(u, m.generator(1)), Error);
    CHECK_THROWS_AS(m.power(Rat(1, 3), m.generator(0)), Error);
}

TEST_CASE("associativity is exact in the truncated model") {
    for (auto [r, c, p] : std::vector<std::tuple<int, int, int>>{{2, 4, 3}, {2, 3, 2}}) {
        NilpotentModel m(r, c, p);
        std::mt19937_64 rng(kDefaultSeed ^ (uint64_t)(100 * c + p));
        for (int t = 0; t < 50; ++t) {
            auto u = random_elt(m, rng), v = random_elt(m, rng), w = random_elt(m, rng);
            CHECK(m.mul(m.mul(u, v), w) == m.mul(u, m.mul(v, w)));
        }
    }
}

TEST_CASE("valuation profile of the product of the generators") {
    // p = 3: weight-2 part is (1/2)*3*[X,Y], valuation exactly 1
    {
        NilpotentModel m(2, 4, 3);
        auto phi = m.mul(m.generator(0), m.generator(1));
        auto f = m.valuation_profile(phi);
        REQUIRE(f[1].has_value());
        CHECK(*f[1] == 0);
        REQUIRE(f[2].has_value());
        CHECK(*f[2] == 1); // v_3(3/2) = 1
        for (int w = 1; w <= 4; ++w) {
            if (!f[w]) continue;
            CHECK(Rat(*f[w]) >= Rat((w - 1) * (3 - 2), 3 - 1));
        }
    }
    // p = 2 with bracket scale 4: f(i) >= i - 1
    {
        NilpotentModel m(2, 3, 2);
        CHECK(m.bracket_scale() == 4);
        auto phi = m.mul(m.generator(0), m.generator(1));
        auto f = m.valuation_profile(phi);
        for (int w = 1; w <= 3; ++w) {
            if (!f[w]) continue;
            CHECK(*f[w] >= w - 1);
        }
    }
    // p = 5 at class 6: f(i) >= ceil(3(i-1)/4) throughout
    {
        NilpotentModel m(2, 6, 5);
        auto phi = m.mul(m.generator(0), m.generator(1));
        auto f = m.valuation_profile(phi);
        REQUIRE(f[1].has_value());
        CHECK(*f[1] == 0);
        for (int w = 2; w <= 6; ++w) {
            if (!f[w]) continue;
            long bound = (3 * (w - 1) + 3) / 4; // ceil(3(w-1)/4)
            CHECK(*f[w] >= bound);
        }
    }
}

TEST_CASE("checked profiles assert the growth bound themselves") {
    for (auto [c, p] : std::vector<std::pair<int, int>>{{4, 3}, {4, 5}, {3, 2}, {6, 5}}) {
        NilpotentModel m(2, c, p);
        CHECK_NOTHROW(m.bch_valuation_profile());
        CHECK_NOTHROW(m.engel_valuation_profile(1));
        CHECK_NOTHROW(m.engel_valuation_profile(2));
    }
    // the unchecked profile stays available for arbitrary elements, where
    // the bound has no reason to hold
    NilpotentModel m(2, 4, 5);
    auto e = m.zero();
    e[m.dim() - 1] = Rat(1); // bare top-weight coefficient, valuation 0
    auto f = m.valuation_profile(e);
    REQUIRE(f[4].has_value());
    CHECK(*f[4] == 0);
}

TEST_CASE("group commutator against the scaled bracket") {
    NilpotentModel m(2, 4, 5);
    auto x = m.generator(0), y = m.generator(1);
    auto gc = m.group_comm(x, y);
    // lowest term of [x,y]_G is the model bracket [x,y]
    auto br = m.bracket(x, y);
    auto [b2, e2] = m.basis().weight_range(2);
    for (int i = b2; i < e2; ++i) CHECK(gc[i] == br[i]);
    // weight-1 part vanishes
    auto [b1, e1] = m.basis().weight_range(1);
    for (int i = b1; i < e1; ++i) CHECK(gc[i] == 0);
    // engel towers stay p-integral
    auto eng = m.engel(x, y, 3);
    CHECK(m.is_p_integral(eng));
}

TEST_SUITE_END();
