#include "ewb/error.hpp"
#include "ewb/lie_series.hpp"
#include "ewb/lyndon.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace ewb;

TEST_SUITE_BEGIN("free-lie");

TEST_CASE("lyndon counts match the brute-force rank oracle") {
    const auto& basis2 = LyndonBasis::get(2, 6);
    // expected from the oracle: 2 1 2 3 6 9
    std::vector<int> expected{2, 1, 2, 3, 6, 9};
    for (int w = 1; w <= 6; ++w) {
        CHECK(basis2.count_of_weight(w) == oracles::brute_force_lie_dimension(2, w));
        CHECK(basis2.count_of_weight(w) == expected[w - 1]);
    }
    const auto& basis3 = LyndonBasis::get(3, 6);
    for (int w = 1; w <= 6; ++w)
        CHECK(basis3.count_of_weight(w) == oracles::brute_force_lie_dimension(3, w));
}

TEST_CASE("small basis structure") {
    const auto& basis = LyndonBasis::get(2, 3);
    // weight 1: X, Y; weight 2: only XY; weight 3: XXY, XYY
    CHECK(basis.count_of_weight(1) == 2);
    CHECK(basis.count_of_weight(2) == 1);
    CHECK(basis.count_of_weight(3) == 2);
    CHECK(basis.word_string(basis.index_of_word({0, 1}), "XY") == "XY");
    CHECK(basis.bracket_string(basis.index_of_word({0, 0, 1}), "XY") == "[X,[X,Y]]");
    CHECK(basis.bracket_string(basis.index_of_word({0, 1, 1}), "XY") == "[[X,Y],Y]");
}

TEST_CASE("series bracket rewrites into the basis") {
    LieSeries x = lie_letter("XY", 4, 0);
    LieSeries y = lie_letter("XY", 4, 1);
    CHECK(lie_bracket(x, x).is_zero());
    LieSeries xy = lie_bracket(x, y);
    const auto& basis = xy.basis();
    REQUIRE(xy.coeffs.size() == 1);
    CHECK(xy.coeff(basis.index_of_word({0, 1})) == Rat(1));
    // [[X,Y],X] = -[X,[X,Y]]: coefficient -1 on the XXY basis monomial
    LieSeries xyx = lie_bracket(xy, x);
    REQUIRE(xyx.coeffs.size() == 1);
    CHECK(xyx.coeff(basis.index_of_word({0, 0, 1})) == Rat(-1));
}

TEST_CASE("bracket against a direct associative-algebra computation") {
    // [[X,Y],X] expanded by hand in the associative algebra
    AssocPoly X = AssocPoly::letter(2, 3, 0);
    AssocPoly Y = AssocPoly::letter(2, 3, 1);
    AssocPoly direct = (X * Y - Y * X) * X - X * (X * Y - Y * X);
    LieSeries x = lie_letter("XY", 3, 0);
    LieSeries y = lie_letter("XY", 3, 1);
    CHECK(lie_to_assoc(lie_bracket(lie_bracket(x, y), x)) == direct);
}

TEST_CASE("antisymmetry, Jacobi, and bilinearity on random series") {
    std::mt19937_64 rng(kDefaultSeed);
    const auto& basis = LyndonBasis::get(3, 4);
    auto random_series = [&] {
        LieSeries s = lie_zero("xyz", 4);
        for (int t = 0; t < 6; ++t) {
            int idx = (int)(rng() % basis.size());
            s.coeffs[idx] += Rat((long)(rng() % 11) - 5, 1 + (long)(rng() % 4));
        }
        s.prune();
        return s;
    };
    for (int t = 0; t < 1000; ++t) {
        LieSeries a = random_series(), b = random_series(), c = random_series();
        CHECK(lie_add(lie_bracket(a, b), lie_bracket(b, a)).is_zero());
        LieSeries jac = lie_add(lie_bracket(lie_bracket(a, b), c),
                                lie_add(lie_bracket(lie_bracket(b, c), a),
                                        lie_bracket(lie_bracket(c, a), b)));
        CHECK(jac.is_zero());
        if (t % 50 == 0) {
            LieSeries lhs = lie_bracket(lie_add(a, b), c);
            LieSeries rhs = lie_add(lie_bracket(a, c), lie_bracket(b, c));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("alphabet mismatch is rejected") {
    LieSeries a = lie_letter("XY", 3, 0);
    LieSeries b = lie_letter("xyz", 3, 0);
    CHECK_THROWS_AS(lie_add(a, b), Error);
}

TEST_CASE("bch series low-weight coefficients") {
    const LieSeries& phi2 = bch_series(2);
    const auto& b2 = phi2.basis();
    CHECK(phi2.coeff(b2.index_of_word({0})) == Rat(1));
    CHECK(phi2.coeff(b2.index_of_word({1})) == Rat(1));
    CHECK(phi2.coeff(b2.index_of_word({0, 1})) == Rat(1, 2));
    CHECK(phi2.coeffs.size() == 3);

    const LieSeries& phi3 = bch_series(3);
    const auto& b3 = phi3.basis();
    CHECK(phi3.coeff(b3.index_of_word({0, 0, 1})) == Rat(1, 12)); // = -1/12 [[X,Y],X]
    CHECK(phi3.coeff(b3.index_of_word({0, 1, 1})) == Rat(1, 12)); // = +1/12 [[X,Y],Y]
}

TEST_CASE("bch recomposes: exp(Phi) = exp(X) exp(Y)") {
    for (int w : {3, 5}) {
        const LieSeries& phi = bch_series(w);
        AssocPoly lhs = exp_truncated(lie_to_assoc(phi));
        AssocPoly rhs = exp_truncated(AssocPoly::letter(2, w, 0)) *
                        exp_truncated(AssocPoly::letter(2, w, 1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bch weight 4 is (1/24)[X,[[X,Y],Y]] alone") {
    const LieSeries& phi = bch_series(4);
    const auto& b = phi.basis();
    CHECK(phi.coeff(b.index_of_word({0, 0, 1, 1})) == Rat(1, 24));
    CHECK(phi.coeff(b.index_of_word({0, 0, 0, 1})) == Rat(0));
    CHECK(phi.coeff(b.index_of_word({0, 1, 1, 1})) == Rat(0));
}

TEST_CASE("bch swap-negate involution: Phi(-Y,-X) = -Phi(X,Y)") {
    // exp(-Y) exp(-X) inverts exp(X) exp(Y)
    for (int w : {4, 6}) {
        LieSeries x = lie_letter("XY", w, 0);
        LieSeries y = lie_letter("XY", w, 1);
        LieSeries lhs = bch_product(lie_scale(Rat(-1), y), lie_scale(Rat(-1), x));
        CHECK(lhs == lie_scale(Rat(-1), bch_series(w)));
    }
}

TEST_CASE("bch product degenerate cases") {
    LieSeries x = lie_letter("XY", 4, 0);
    LieSeries zero = lie_zero("XY", 4);
    CHECK(bch_product(x, zero) == x);                             // Phi(X, 0) = X
    CHECK(bch_product(x, lie_scale(Rat(-1), x)).is_zero());      // Phi(X, -X) = 0
}

TEST_CASE("group commutator series leading term") {
    LieSeries x = lie_letter("XY", 4, 0);
    LieSeries y = lie_letter("XY", 4, 1);
    LieSeries gc = group_commutator_series(x, y);
    CHECK(weight_part(gc, 1).is_zero());
    CHECK(weight_part(gc, 2) == lie_bracket(x, y));
}

TEST_CASE("engel word") {
    // l = 1, W = 2: lowest term [x,z] + [y,z]
    {
        LieSeries e = engel_word(1, 2);
        LieSeries x = lie_letter("xyz", 2, 0);
        LieSeries y = lie_letter("xyz", 2, 1);
        LieSeries z = lie_letter("xyz", 2, 2);
        CHECK(e == lie_add(lie_bracket(x, z), lie_bracket(y, z)));
    }
    // l = 2, W = 3: exactly [[x+y,z],z] at weight 3, nothing below
    {
        LieSeries e = engel_word(2, 3);
        LieSeries x = lie_letter("xyz", 3, 0);
        LieSeries y = lie_letter("xyz", 3, 1);
        LieSeries z = lie_letter("xyz", 3, 2);
        LieSeries lie_part = lie_bracket(lie_bracket(lie_add(x, y), z), z);
        CHECK(weight_part(e, 1).is_zero());
        CHECK(weight_part(e, 2).is_zero());
        CHECK(weight_part(e, 3) == lie_part);
    }
    // substituting z = 0 kills the word
    {
        LieSeries e = engel_word(2, 4);
        CHECK(substitute_zero(e, 2).is_zero());
    }
    // lowest-weight part of [x+y, _l z] is the Lie commutator, any l
    for (int l : {1, 2, 3}) {
        LieSeries e = engel_word(l, l + 1);
        LieSeries x = lie_letter("xyz", l + 1, 0);
        LieSeries y = lie_letter("xyz", l + 1, 1);
        LieSeries z = lie_letter("xyz", l + 1, 2);
        LieSeries lie_part = lie_add(x, y);
        for (int i = 0; i < l; ++i) lie_part = lie_bracket(lie_part, z);
        CHECK(weight_part(e, l + 1) == lie_part);
    }
}

TEST_CASE("decompose by degree") {
    // s = [X,Y], letter X: everything sits in degree 1
    {
        LieSeries x = lie_letter("XY", 3, 0);
        LieSeries y = lie_letter("XY", 3, 1);
        LieSeries s = lie_bracket(x, y);
        auto parts = decompose_by_degree(s, 0);
        CHECK(parts[1] == s);
        CHECK(parts[0].is_zero());
        CHECK(parts[2].is_zero());
    }
    // s = [x+y, z]_G at W = 2: w_0 = [y,z], w_1 = [x,z]
    {
        LieSeries x = lie_letter("xyz", 2, 0);
        LieSeries y = lie_letter("xyz", 2, 1);
        LieSeries z = lie_letter("xyz", 2, 2);
        LieSeries s = group_commutator_series(lie_add(x, y), z);
        auto parts = decompose_by_degree(s, 0);
        CHECK(parts[0] == lie_bracket(y, z));
        CHECK(parts[1] == lie_bracket(x, z));
    }
    // parts sum to the whole; part 0 equals the zero-substitution
    {
        LieSeries e = engel_word(2, 4);
        auto parts = decompose_by_degree(e, 0);
        LieSeries sum = lie_zero("xyz", 4);
        for (const auto& p : parts) sum = lie_add(sum, p);
        CHECK(sum == e);
        CHECK(parts[0] == substitute_zero(e, 0));
    }
}

TEST_CASE("scaling a letter scales parts by powers") {
    LieSeries e = engel_word(1, 4);
    LieSeries scaled = substitute_scale(e, 0, Rat(4));
    auto parts = decompose_by_degree(e, 0);
    auto sparts = decompose_by_degree(scaled, 0);
    for (int t = 0; t <= 4; ++t) {
        Rat f(1);
        for (int i = 0; i < t; ++i) f *= 4;
        CHECK(sparts[t] == lie_scale(f, parts[t]));
    }
}

TEST_CASE("non-Lie input is rejected by the coordinate conversion") {
    AssocPoly p = AssocPoly::letter(2, 3, 0) * AssocPoly::letter(2, 3, 1); // XY alone
    CHECK_THROWS_AS(lie_from_assoc("XY", p), Error);
}

TEST_SUITE_END();
