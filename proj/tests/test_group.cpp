#include "ewb/catalog.hpp"
#include "ewb/error.hpp"
#include "ewb/group.hpp"
#include "ewb/run.hpp"
#include "ewb/spec_text.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace ewb;

namespace {

const char* kS3 = "group S3\nkind permutation degree 3\ngen s = (1 2)\ngen r = (1 2 3)\nend\n";

int resolve_gen(const GroupPtr& g, const std::string& name) {
    return resolve_element_arg(g, name);
}

int resolve_element(const GroupPtr& g, const std::string& expr) {
    return resolve_element_arg(g, expr);
}

} // namespace

TEST_SUITE_BEGIN("group");

TEST_CASE("load S3: order 6") {
    GroupPtr g = load_group(kS3);
    CHECK(g->order == 6);
    CHECK(g->label(0) == "()");
}

TEST_CASE("load Q8: order 8, exponent 4, against the naive closure oracle") {
    GroupPtr g = catalog_group("Q8");
    CHECK(g->order == 8);
    CHECK(g->exponent() == 4);
    auto closed = oracles::naive_closure(*g, g->generators);
    CHECK((int)closed.size() == 8);
}

TEST_CASE("non-closed table rows raise AxiomViolation") {
    // two transposition rows on 3 ids generate all of S3, more than order 3
    const char* bad = "group bad\nkind table order 3\ngen a = 1 0 2\ngen b = 0 2 1\nend\n";
    CHECK_THROWS_AS(load_group(bad), Error);
    try {
        load_group(bad);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AxiomViolation);
    }
}

TEST_CASE("closure cap") {
    CHECK_THROWS_AS(load_group(kS3, 4), Error); // |S3| = 6 > 4
}

TEST_CASE("commutator basics") {
    GroupPtr g = load_group(kS3);
    for (int x = 0; x < 6; ++x) CHECK(g->comm(x, x) == 0);
    GroupPtr a = catalog_group("C3xC3");
    for (int x = 0; x < a->order; ++x)
        for (int y = 0; y < a->order; ++y) CHECK(a->comm(x, y) == 0);
    // S3: [(1 2 3), (1 2)] is a nontrivial rotation
    int r = resolve_gen(g, "r"), s = resolve_gen(g, "s");
    int c = g->comm(r, s);
    CHECK(c != 0);
    CHECK(g->element_order(c) == 3);
}

TEST_CASE("subgroup closure") {
    GroupPtr g = load_group(kS3);
    CHECK(subgroup_closure(g, {0}).order() == 1);
    int r = resolve_gen(g, "r");
    Subgroup a3 = subgroup_closure(g, {r});
    CHECK(a3.order() == 3);
    CHECK(a3.members == oracles::members_of(oracles::naive_closure(*g, {r})));

    GroupPtr d8 = catalog_group("D8");
    int rr = resolve_gen(d8, "r");
    Subgroup z = subgroup_closure(d8, {d8->mul(rr, rr)});
    CHECK(z.order() == 2);
    for (int x = 0; x < d8->order; ++x)
        for (int m : z.members) CHECK(d8->mul(x, m) == d8->mul(m, x)); // central
}

TEST_CASE("lower central series") {
    // abelian: class 1
    {
        SeriesData sd = lower_central_series(catalog_group("C3xC3"));
        CHECK(sd.nilpotency_class == 1);
    }
    // S3: gamma_2 = gamma_3 = A3
    {
        GroupPtr g = load_group(kS3);
        SeriesData sd = lower_central_series(g);
        CHECK(!sd.nilpotency_class.has_value());
        CHECK(sd.gamma_infinity.order() == 3);
        REQUIRE(sd.terms.size() >= 2);
        CHECK(sd.terms[1].order() == 3);
    }
    // D8: gamma_2 = <r^2>, class 2
    {
        SeriesData sd = lower_central_series(catalog_group("D8"));
        CHECK(sd.nilpotency_class == 2);
        CHECK(sd.terms[1].order() == 2);
    }
}

TEST_CASE("series terms satisfy [gamma_i, G] = gamma_{i+1} exactly") {
    for (const char* name : {"S4", "D8", "F21", "SL23"}) {
        GroupPtr g = catalog_group(name);
        SeriesData sd = lower_central_series(g);
        for (size_t i = 0; i + 1 < sd.terms.size(); ++i) {
            std::vector<int> comms;
            for (int x : sd.terms[i].members)
                for (int y = 0; y < g->order; ++y) comms.push_back(g->comm(x, y));
            auto recomputed = oracles::naive_closure(*g, comms);
            CHECK(oracles::members_of(recomputed) == sd.terms[i + 1].members);
        }
    }
}

TEST_CASE("gamma_inf is stable under further commutation") {
    for (const char* name : {"S3", "S4", "A5", "F21"}) {
        GroupPtr g = catalog_group(name);
        SeriesData sd = lower_central_series(g);
        std::vector<int> comms;
        for (int x : sd.gamma_infinity.members)
            for (int y = 0; y < g->order; ++y) comms.push_back(g->comm(x, y));
        Subgroup again = subgroup_closure(g, comms);
        CHECK(again.same_members(sd.gamma_infinity));
    }
}

TEST_CASE("fitting data") {
    // nilpotent: F(G) = G, height 1
    {
        FittingData fd = fitting_data(catalog_group("D8"));
        CHECK(fd.fitting.order() == 8);
        CHECK(fd.height == 1);
        CHECK(fd.is_nilpotent);
    }
    // S3: F = A3, height 2
    {
        FittingData fd = fitting_data(catalog_group("S3"));
        CHECK(fd.fitting.order() == 3);
        CHECK(fd.height == 2);
        CHECK(fd.is_soluble);
        CHECK(!fd.is_nilpotent);
    }
    // S4: F = V4, height 3
    {
        GroupPtr g = catalog_group("S4");
        FittingData fd = fitting_data(g);
        CHECK(fd.fitting.order() == 4);
        CHECK(fd.height == 3);
        // p-core oracle: largest normal p-subgroup from the lattice
        CHECK(p_core(g, 2).members == oracles::p_core_by_scan(g, 2).members);
        CHECK(p_core(g, 3).order() == 1);
    }
    // A5: insoluble, no finite height, F trivial
    {
        FittingData fd = fitting_data(catalog_group("A5"));
        CHECK(!fd.height.has_value());
        CHECK(!fd.is_soluble);
        CHECK(fd.fitting.is_trivial());
    }
}

TEST_CASE("fitting subgroup is nilpotent, normal, and maximal such") {
    for (const char* name : {"S3", "S4", "A4", "F21", "SL23", "GDih9"}) {
        GroupPtr g = catalog_group(name);
        Subgroup f = fitting_data(g).fitting;
        CHECK(is_subgroup_normal(f));
        CHECK(is_nilpotent_subgroup(f));
        for (const auto& n : normal_subgroups(g)) {
            if (!is_nilpotent_subgroup(n)) continue;
            for (int x : n.members) CHECK(f.contains(x));
        }
    }
}

TEST_CASE("sylow subgroups") {
    CHECK(sylow_subgroup(catalog_group("D8"), 2).order() == 8); // p-group: everything
    CHECK(sylow_subgroup(catalog_group("S3"), 2).order() == 2);
    CHECK(sylow_subgroup(catalog_group("S3"), 5).order() == 1); // p does not divide
    Subgroup s = sylow_subgroup(catalog_group("S4"), 2);
    CHECK(s.order() == 8);
    // D8 signature: element orders 1,2,2,2,2,2,4,4
    GroupPtr g = catalog_group("S4");
    std::vector<int> orders;
    for (int x : s.members) orders.push_back(g->element_order(x));
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4});
}

TEST_CASE("quotient groups") {
    GroupPtr g = load_group(kS3);
    // N = G: trivial quotient
    {
        QuotientResult q = quotient_group(g, whole_group(g));
        CHECK(q.group->order == 1);
    }
    // S3 / A3 has order 2
    {
        SeriesData sd = lower_central_series(g);
        QuotientResult q = quotient_group(g, sd.gamma_infinity);
        CHECK(q.group->order == 2);
    }
    // D8 / <r^2> is elementary abelian of order 4
    {
        GroupPtr d8 = catalog_group("D8");
        int r = resolve_gen(d8, "r");
        Subgroup z = subgroup_closure(d8, {d8->mul(r, r)});
        QuotientResult q = quotient_group(d8, z);
        CHECK(q.group->order == 4);
        CHECK(q.group->exponent() == 2);
    }
    // non-normal subgroup is rejected
    {
        int s = resolve_gen(g, "s");
        CHECK_THROWS_AS(quotient_group(g, subgroup_closure(g, {s})), Error);
    }
}

TEST_CASE("projection is a homomorphism (exhaustive)") {
    for (const char* name : {"S4", "D8", "Heis3", "GDih9"}) {
        GroupPtr g = catalog_group(name);
        for (const auto& n : normal_subgroups(g)) {
            QuotientResult q = quotient_group(g, n);
            for (int x = 0; x < g->order; ++x)
                for (int y = 0; y < g->order; ++y)
                    CHECK(q.projection[g->mul(x, y)] ==
                          q.group->mul(q.projection[x], q.projection[y]));
        }
    }
}

TEST_CASE("normal closure") {
    GroupPtr g = load_group(kS3);
    CHECK(normal_closure(g, {0}).order() == 1);
    int s = resolve_gen(g, "s");
    CHECK(normal_closure(g, {s}).order() == 6);
    GroupPtr s4 = catalog_group("S4");
    // (1 2)(3 4) generates V4 as a normal closure
    int v = resolve_element(s4, "(1 2)(3 4)");
    Subgroup vc = normal_closure(s4, {v});
    CHECK(vc.order() == 4);
    CHECK(vc.members == oracles::members_of(oracles::conjugate_closure(*s4, {v})));
}

TEST_CASE("normal subgroup lattice") {
    {
        auto ns = normal_subgroups(catalog_group("S4"));
        std::vector<int> orders;
        for (const auto& n : ns) orders.push_back(n.order());
        CHECK(orders == std::vector<int>{1, 4, 12, 24});
    }
    {
        auto ns = normal_subgroups(catalog_group("C2xC2xC2"));
        CHECK(ns.size() == 16); // all subgroups of an elementary abelian group
    }
}

TEST_CASE("catalog regression values") {
    for (const auto& e : catalog_entries()) {
        CAPTURE(e.name);
        GroupPtr g = catalog_group(e.name);
        CHECK(g->order == e.expect_order);
        SeriesData lcs = lower_central_series(g);
        if (e.expect_nilpotent)
            CHECK(lcs.gamma_infinity.is_trivial() == *e.expect_nilpotent);
        if (e.expect_class) CHECK(lcs.nilpotency_class == *e.expect_class);
        if (e.expect_gamma_inf_order)
            CHECK(lcs.gamma_infinity.order() == *e.expect_gamma_inf_order);
        if (e.expect_soluble || e.expect_fitting_height || e.expect_fitting_order) {
            FittingData fd = fitting_data(g);
            if (e.expect_soluble) CHECK(fd.is_soluble == *e.expect_soluble);
            if (e.expect_fitting_height) {
                if (*e.expect_fitting_height == -1) CHECK(!fd.height.has_value());
                else CHECK(fd.height == *e.expect_fitting_height);
            }
            if (e.expect_fitting_order) CHECK(fd.fitting.order() == *e.expect_fitting_order);
        }
    }
}

TEST_CASE("sampled associativity path for larger groups") {
    // order 211 > 200 exercises the seeded-sampling branch of the axiom check
    std::string cyc = "(";
    for (int i = 1; i <= 211; ++i) cyc += (i > 1 ? " " : "") + std::to_string(i);
    cyc += ")";
    GroupPtr g = load_group("group C211\nkind permutation degree 211\ngen g = " + cyc + "\nend\n");
    CHECK(g->order == 211);
    CHECK(g->element_order(g->generators[0]) == 211);
}

TEST_SUITE_END();
