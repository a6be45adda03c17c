#include "ewb/action.hpp"
#include "ewb/catalog.hpp"
#include "ewb/error.hpp"
#include "ewb/run.hpp"

#include <doctest.h>

using namespace ewb;

TEST_SUITE_BEGIN("action");

TEST_CASE("trivial actor: valid action, all centralizers are G") {
    GroupPtr g = catalog_group("S3");
    GroupPtr one = load_group("group C1\nkind permutation degree 1\ngen e = ()\nend\n");
    AutAction act = validate_action(g, one, {identity_automorphism(g)});
    CHECK(act.coprime);
    CHECK(centralizer(act, 0).order() == g->order);
}

TEST_CASE("klein action on C3xC3: centralizers via a direct fixed-point scan") {
    AutAction act = catalog_action("klein_on_C3xC3");
    CHECK(act.coprime);
    CHECK(act.faithful);
    GroupPtr g = act.group;
    int u = resolve_element_arg(g, "u");
    int v = resolve_element_arg(g, "v");
    // a inverts u and fixes v: C_G(a) = <v>
    Subgroup ca = centralizer(act, act.actor->generators[0]);
    CHECK(ca.order() == 3);
    CHECK(ca.contains(v));
    CHECK(!ca.contains(u));
    for (int x = 0; x < g->order; ++x)
        CHECK(ca.contains(x) == (act.assignment[act.actor->generators[0]].image[x] == x));
    // the product of the two actor generators inverts everything: C = 1
    int ab = act.actor->mul(act.actor->generators[0], act.actor->generators[1]);
    CHECK(centralizer(act, ab).order() == 1);
    // full C_G(A) is trivial too
    CHECK(centralizer_of_set(act, {}).order() == 1);
}

TEST_CASE("a non-bijective generator image is rejected") {
    GroupPtr c4 = catalog_group("C4");
    int g2 = c4->mul(c4->generators[0], c4->generators[0]);
    CHECK_THROWS_AS(automorphism_from_gen_images(c4, {g2}), Error);
    try {
        automorphism_from_gen_images(c4, {g2});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAutomorphism);
    }
}

TEST_CASE("an assignment that is no homomorphism is rejected") {
    // actor C2 but the assigned automorphism has order 3
    GroupPtr v4 = catalog_group("V4");
    GroupPtr c2 = catalog_group("C2");
    int u = v4->generators[0], v = v4->generators[1];
    Automorphism rot = automorphism_from_gen_images(v4, {v, v4->mul(u, v)});
    REQUIRE(rot.order() == 3);
    CHECK_THROWS_AS(validate_action(v4, c2, {rot}), Error);
}

TEST_CASE("action lemmas on the klein instance") {
    AutAction act = catalog_action("klein_on_C3xC3");
    GroupPtr g = act.group;
    int u = resolve_element_arg(g, "u");
    Subgroup n = subgroup_closure(g, {u}); // first factor, A-invariant
    REQUIRE(subgroup_is_action_invariant(act, n));
    ActionLemmaReport rep = check_action_lemmas(act, n);
    REQUIRE(rep.generation.has_value());
    CHECK(*rep.generation);
    REQUIRE(rep.covering.has_value());
    CHECK(*rep.covering);
    CHECK(rep.commutator_stable);
    CHECK(rep.commutator_order == 9); // [G,A] = G here
}

TEST_CASE("generation check is skipped for cyclic actors") {
    AutAction act = catalog_action("inv_C7");
    ActionLemmaReport rep = check_action_lemmas(act, std::nullopt);
    CHECK(!rep.generation.has_value());
    CHECK(rep.generation_skip_reason == "actor is cyclic");
}

TEST_CASE("non-coprime actions are representable but the lemmas refuse them") {
    GroupPtr c4 = catalog_group("C4");
    GroupPtr c2 = catalog_group("C2");
    Automorphism inv = automorphism_from_gen_images(c4, {c4->inv(c4->generators[0])});
    AutAction act = validate_action(c4, c2, {inv});
    CHECK(!act.coprime);
    CHECK_THROWS_AS(check_action_lemmas(act, std::nullopt), Error);
}

TEST_CASE("invariant Sylow subgroups") {
    // p-group: the whole group
    AutAction k3 = catalog_action("klein_on_C3xC3");
    CHECK(invariant_sylow(k3, 3).order() == 9);
    // S3 with a trivial actor, p = 3: the unique (normal) Sylow subgroup
    GroupPtr s3 = catalog_group("S3");
    GroupPtr one = load_group("group C1\nkind permutation degree 1\ngen e = ()\nend\n");
    AutAction triv = validate_action(s3, one, {identity_automorphism(s3)});
    Subgroup syl = invariant_sylow(triv, 3);
    CHECK(syl.order() == 3);
    CHECK(is_subgroup_normal(syl));
    // mixed-order instance
    AutAction f75 = catalog_action("klein_on_F75");
    Subgroup s5 = invariant_sylow(f75, 5);
    CHECK(s5.order() == 25);
    CHECK(subgroup_is_action_invariant(f75, s5));
}

TEST_CASE("semidirect product by the identity is a copy of G") {
    GroupPtr g = catalog_group("C7");
    Semidirect sd = semidirect_product(g, identity_automorphism(g), 1);
    CHECK(sd.group->order == 7);
}

TEST_CASE("C7 with inversion gives a dihedral group of order 14") {
    GroupPtr g = catalog_group("C7");
    Automorphism inv = automorphism_from_gen_images(g, {g->inv(g->generators[0])});
    Semidirect sd = semidirect_product(g, inv, 2);
    CHECK(sd.group->order == 14);
    CHECK(is_subgroup_normal(sd.base));
    // conjugation by phi_hat realizes the automorphism pointwise
    for (int x = 0; x < g->order; ++x) {
        int lhs = sd.group->conj(sd.embed_base[x], sd.phi_hat);
        CHECK(lhs == sd.embed_base[inv.image[x]]);
    }
    SeriesData sdd = lower_central_series(sd.group);
    CHECK(sdd.gamma_infinity.order() == 7);
    // all seven reflections have order 2
    int invol = 0;
    for (int x = 0; x < sd.group->order; ++x)
        if (sd.group->element_order(x) == 2) ++invol;
    CHECK(invol == 7);
}

TEST_CASE("C3xC3 extended by a factor inversion has order 18") {
    GroupPtr g = catalog_group("C3xC3");
    int u = g->generators[0], v = g->generators[1];
    Automorphism phi = automorphism_from_gen_images(g, {g->inv(u), v});
    Semidirect sd = semidirect_product(g, phi, 2);
    CHECK(sd.group->order == 18);
    for (int x = 0; x < g->order; ++x)
        CHECK(sd.group->conj(sd.embed_base[x], sd.phi_hat) == sd.embed_base[phi.image[x]]);
}

TEST_CASE("declared order must match") {
    GroupPtr g = catalog_group("C7");
    Automorphism inv = automorphism_from_gen_images(g, {g->inv(g->generators[0])});
    CHECK_THROWS_AS(semidirect_product(g, inv, 3), Error);
    try {
        semidirect_product(g, inv, 3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OrderMismatch);
    }
}

TEST_CASE("actor shape helpers") {
    CHECK(actor_is_elementary_abelian_q2(catalog_action("klein_on_C3xC3")));
    CHECK(actor_is_elementary_abelian_q2(catalog_action("q3_on_V4")));
    CHECK(!actor_is_elementary_abelian_q2(catalog_action("mul2_C5"))); // C4 actor
    int q = 0;
    actor_is_elementary_abelian_q2(catalog_action("q3_on_C7xC7"), &q);
    CHECK(q == 3);
}

TEST_SUITE_END();
