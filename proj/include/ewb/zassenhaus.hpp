#ifndef EWB_ZASSENHAUS_HPP
#define EWB_ZASSENHAUS_HPP

#include "ewb/fp_linalg.hpp"
#include "ewb/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ewb {

/// The p-dimension series G_i = <g^{p^k} : g in gamma_j(G), j*p^k >= i> of
/// a finite p-group, down to the first trivial term. Terms may repeat.
struct ZFiltration {
    GroupPtr parent;
    int p = 0;
    std::vector<Subgroup> terms; // terms[0] = G_1 = G, ..., back() = 1
    /// degree[u] = the i with u in G_i \ G_{i+1}; kDegreeInfinity for the
    /// identity (it lies in every term).
    std::vector<int> degree;
    static constexpr int kDegreeInfinity = 1 << 20;

    int top_degree() const { return (int)terms.size() - 1; } // last nontrivial index + padding
    const Subgroup& term(int i) const; // G_i, trivial beyond the computed range
    int degree_of(int u) const { return degree[u]; }
};

ZFiltration zassenhaus_filtration(GroupPtr p_group, int p);

/// The graded F_p Lie algebra of the filtration: one component per degree
/// (possibly zero-dimensional), coset bases chosen by a greedy elimination
/// in element-id order, brackets as structure constants from commutators of
/// representatives.
struct GradedLie {
    int p = 0;
    ZFiltration filtration;

    struct Component {
        int degree = 0;
        int dim = 0;
        std::vector<int> basis_reps;      // parent element ids
        GroupPtr quotient;                // G_i / G_{i+1}
        std::vector<int> coset_of_parent; // parent id -> quotient id (-1 outside G_i)
        std::vector<std::vector<int>> coords_of_coset; // quotient id -> coordinates
    };
    std::vector<Component> components; // components[0] <-> degree 1

    // sc[i][j][a][b] = coordinates in degree (i+1)+(j+1) of the bracket of
    // basis a of degree i+1 with basis b of degree j+1 (empty when the
    // target degree is past the top)
    std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> sc;

    int num_degrees() const { return (int)components.size(); }
    int total_dim = 0;
    std::vector<std::pair<int, int>> flat_index; // flat -> (component, position)
    /// dims of the subalgebra generated by degree 1, per degree
    std::vector<int> lp_dims;
    int lp_total_dim = 0;
};

/// A vector of D_p(G): per-degree coordinate blocks.
struct LieVector {
    std::vector<std::vector<int>> comps;
    bool is_zero() const;
    bool is_homogeneous(int* degree_out = nullptr) const;
};

GradedLie graded_lie(const ZFiltration& filtration, uint64_t seed = kDefaultSeed);

LieVector lie_vector_zero(const GradedLie& alg);
/// Homogeneous image of a group element in its degree component (the zero
/// vector for the identity).
LieVector image_of_element(const GradedLie& alg, int u);
LieVector basis_vector(const GradedLie& alg, int component, int position);
LieVector bracket(const GradedLie& alg, const LieVector& a, const LieVector& b);
LieVector add(const GradedLie& alg, const LieVector& a, const LieVector& b);

std::vector<int> flatten(const GradedLie& alg, const LieVector& v);
LieVector unflatten(const GradedLie& alg, const std::vector<int>& flat);

/// Least n with [w, v, ..., v] = 0 (v repeated n times) for every basis w;
/// finite because the algebra is graded nilpotent.
int ad_index(const GradedLie& alg, const LieVector& v);

struct PowerIdentityReport {
    int u = 0;
    int degree_u = 0;
    bool power_in_expected_term = false; // delta(u^p) >= p * delta(u)
    bool power_trivial = false;          // u^p = 1, so the rest is vacuous
    bool bracket_identity = false;       // [x, image(u^p)] = [x, u, ..., u] (p times)
    std::string details;
};
/// Checks u^p in G_{p delta(u)} and, when u^p != 1, the bracket-power
/// identity against every basis vector.
PowerIdentityReport verify_power_identities(const GradedLie& alg, int u);

struct AdBoundReport {
    bool hypothesis_holds = false; // [[nb, _i g], g^{p^k}] = 1 for all n in N
    int i = 0, k = 0, m = 0;
    int bound = 0;     // i + m + p^k
    int ad_idx = 0;    // ad index of the image of g
    bool bound_holds = false;
    std::string details;
};
/// The coset identity is checked exhaustively first; when it fails the
/// report simply records that (an input condition, not an error). When it
/// holds, asserts ad_index(image of g) <= i + m + p^k.
AdBoundReport verify_ad_bound(const GradedLie& alg, int g, int i, int k, const Subgroup& n, int b);

struct IteratedActionResult {
    bool divergent = false;
    int epsilon = 0;       // least e with [M, H, ..., H] = 0 (e factors)
    int stabilized_dim = 0; // dim of the stable nonzero term when divergent
};
/// Chain M >= [M,H] >= [[M,H],H] >= ... for the subalgebra H generated by
/// the given vectors; H = 0 gives epsilon = 1.
IteratedActionResult iterated_action_nilpotency(const GradedLie& alg,
                                                const std::vector<LieVector>& h_gens);

} // namespace ewb

#endif
