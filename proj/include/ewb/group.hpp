#ifndef EWB_GROUP_HPP
#define EWB_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ewb {

inline constexpr uint64_t kDefaultSeed = 0xE9E1;
inline constexpr int kDefaultOrderCap = 5000;

/// Enumerated finite group: dense element ids with id 0 the identity, a
/// full product table, and named generators. Immutable after construction.
struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<int> table;   // row-major: table[x*order + y] = x*y
    std::vector<int> inverse; // two-sided inverses
    std::vector<int> generators;
    std::vector<std::string> gen_names;
    std::vector<std::string> labels; // optional per-element renderings

    // permutation-backed groups keep their images for label/lookup purposes
    int perm_degree = 0;
    std::vector<std::vector<int>> perms;

    int mul(int x, int y) const { return table[(size_t)x * order + y]; }
    int inv(int x) const { return inverse[x]; }
    /// x^g = g^{-1} x g
    int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
    /// [x,y] = x^{-1} y^{-1} x y
    int comm(int x, int y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
    int pow(int x, long e) const;
    int element_order(int x) const;
    int exponent() const;
    std::string label(int x) const;
    /// Element id of the permutation, -1 if absent (perm-backed groups only).
    int id_of_perm(const std::vector<int>& perm) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Validates group axioms (associativity exhaustive for order <= 200, else
/// 10^5 seeded samples; identity/inverse always exhaustive) and generator
/// closure, then freezes the group.
GroupPtr make_group(FiniteGroup g, uint64_t seed = kDefaultSeed);

struct Subgroup {
    GroupPtr parent;
    std::vector<int> members; // sorted ascending
    std::vector<uint8_t> mask;
    std::vector<int> gens;

    int order() const { return (int)members.size(); }
    bool contains(int x) const { return mask[x] != 0; }
    bool is_trivial() const { return members.size() == 1; }
    bool is_whole_group() const { return (int)members.size() == parent->order; }
    bool same_members(const Subgroup& o) const { return members == o.members; }
};

Subgroup trivial_subgroup(GroupPtr g);
Subgroup whole_group(GroupPtr g);
Subgroup subgroup_from_members(GroupPtr g, std::vector<int> members, std::vector<int> gens = {});

/// [x, y, ..., y] with y repeated k times.
int iterated_commutator(const FiniteGroup& g, int x, int y, int k);

/// Smallest subgroup containing the given generators, by breadth-first
/// closure; members are reported sorted.
Subgroup subgroup_closure(GroupPtr g, const std::vector<int>& gens);

bool is_subgroup_normal(const Subgroup& s);
Subgroup conjugate_subgroup(const Subgroup& s, int g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// Closure of the union.
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup normal_closure(GroupPtr g, const std::vector<int>& seed_elements);

/// All normal subgroups (join-closure of the normal closures of cyclic
/// subgroups). Sorted by (order, members) for determinism.
std::vector<Subgroup> normal_subgroups(GroupPtr g);

enum class SeriesKind { LowerCentral, Derived, Fitting };

struct SeriesData {
    SeriesKind kind = SeriesKind::LowerCentral;
    std::vector<Subgroup> terms;
    bool stabilized = false;
    Subgroup gamma_infinity;               // stable term (descending kinds)
    std::optional<int> nilpotency_class;   // set when the series reaches 1
};

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G]; stops at stabilization.
SeriesData lower_central_series(GroupPtr g);
SeriesData derived_series(GroupPtr g);

/// Lower central series of a subgroup computed inside the parent:
/// gamma_{i+1} = <[x, s] : x in gamma_i, s in S>.
std::vector<Subgroup> lower_central_series_of(const Subgroup& s);
Subgroup gamma_infinity_of(const Subgroup& s);
bool is_nilpotent_subgroup(const Subgroup& s);

/// One Sylow p-subgroup, deterministically chosen: grow a p-subgroup by
/// scanning p-elements in id order for one that extends it.
Subgroup sylow_subgroup(GroupPtr g, int p);

/// O_p(G): intersection of the conjugates of one Sylow p-subgroup.
Subgroup p_core(GroupPtr g, int p);

struct FittingData {
    Subgroup fitting;            // F(G) = product of the p-cores
    std::optional<int> height;   // nullopt marks insoluble (no finite height)
    bool is_nilpotent = false;
    bool is_soluble = false;
    SeriesData series;           // kind Fitting, ascending F_1 <= F_2 <= ...
};
FittingData fitting_data(GroupPtr g);

struct QuotientResult {
    GroupPtr group;
    std::vector<int> projection; // parent id -> coset id
};
/// Coset group of a normal subgroup; cosets are represented by their least
/// member id and numbered in that order (identity coset first).
QuotientResult quotient_group(GroupPtr g, const Subgroup& n);

struct SubgroupAsGroup {
    GroupPtr group;
    std::vector<int> to_parent;   // new id -> parent id
    std::vector<int> from_parent; // parent id -> new id, -1 outside
};
SubgroupAsGroup group_from_subgroup(const Subgroup& s);

std::vector<int> primes_dividing(int n);
bool is_prime_power(int n, int p);

} // namespace ewb

#endif
