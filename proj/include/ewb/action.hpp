#ifndef EWB_ACTION_HPP
#define EWB_ACTION_HPP

#include "ewb/group.hpp"
#include "ewb/spec_text.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ewb {

/// An automorphism stored as the full map x -> x^phi. Exponent notation is
/// a right action: (x^a)^b = x^(ab).
struct Automorphism {
    GroupPtr parent;
    std::vector<int> image;

    int apply(int x) const { return image[x]; }
    bool is_identity() const;
    int order() const;
};

Automorphism identity_automorphism(GroupPtr g);
/// Extends generator images multiplicatively and verifies the result is an
/// automorphism (bijective homomorphism fixing the identity).
Automorphism automorphism_from_gen_images(GroupPtr g, const std::vector<int>& gen_images);
Automorphism compose(const Automorphism& a, const Automorphism& b); // x -> (x^a)^b
Automorphism inverse(const Automorphism& a);
Automorphism automorphism_power(const Automorphism& a, int e);

/// A finite group A acting on G through a homomorphism A -> Aut(G).
struct AutAction {
    std::string name;
    GroupPtr group; // G
    GroupPtr actor; // A
    std::vector<Automorphism> assignment; // indexed by A-id
    bool coprime = false;
    bool faithful = false;

    int apply(int a_id, int x) const { return assignment[a_id].image[x]; }
};

/// Assignment given on the actor's generators; extends over A, verifies
/// the homomorphism property pairwise (fully for |A| <= 64, sampled above),
/// and computes the coprime/faithful flags.
AutAction validate_action(GroupPtr g, GroupPtr actor,
                          const std::vector<Automorphism>& gen_assignment,
                          const std::string& name = "");

/// Resolves an action spec against named groups.
AutAction realize_action(const ActionSpecAst& ast,
                         const std::function<GroupPtr(const std::string&)>& resolve_group);

bool actor_is_cyclic(const AutAction& action);
bool actor_is_elementary_abelian_q2(const AutAction& action, int* q_out = nullptr);
std::vector<int> actor_nonidentity(const AutAction& action);

/// Fixed points of the automorphism assigned to a.
Subgroup centralizer(const AutAction& action, int a_id);
/// C_G(A) for a subset of A (the whole of A when ids is empty).
Subgroup centralizer_of_set(const AutAction& action, const std::vector<int>& a_ids);
/// [G, A] = <g^{-1} g^a>.
Subgroup action_commutator(const AutAction& action);
bool subgroup_is_action_invariant(const AutAction& action, const Subgroup& s);

struct ActionLemmaReport {
    // (i) G = <C_G(a) : a in A^#>; needs A non-cyclic
    std::optional<bool> generation; // nullopt = skipped
    std::string generation_skip_reason;
    // (ii) with N: C_{G/N}(A) = image of C_G(A)
    std::optional<bool> covering;
    // (iii) [[G,A],A] = [G,A]
    bool commutator_stable = false;
    int commutator_order = 0; // |[G,A]|
};

/// Verdicts for the three coprime-action lemmas. Coprimality is a hard
/// precondition for (ii) and (iii); the generation check is skipped with a
/// reason when A is cyclic.
ActionLemmaReport check_action_lemmas(const AutAction& action, const std::optional<Subgroup>& n);

/// An A-invariant Sylow p-subgroup, found by scanning conjugates of one
/// Sylow subgroup in id order. Existence is guaranteed for coprime actions;
/// exhausting the scan raises NotFound.
Subgroup invariant_sylow(const AutAction& action, int p);

struct Semidirect {
    GroupPtr group;
    std::vector<int> embed_base; // G-id -> product id
    int phi_hat = 0;             // the acting generator inside the product
    Subgroup base;               // embedded copy of G
};

/// G extended by one automorphism of the given order d: the product has
/// order |G|*d, the base is normal, and conjugation by phi_hat realizes
/// phi: phi_hat^{-1} g phi_hat = g^phi.
Semidirect semidirect_product(GroupPtr g, const Automorphism& phi, int declared_order);

} // namespace ewb

#endif
