#include "ewb/action.hpp"

#include "ewb/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace ewb {

bool Automorphism::is_identity() const {
    for (int i = 0; i < (int)image.size(); ++i)
        if (image[i] != i) return false;
    return true;
}

int Automorphism::order() const {
    Automorphism acc = *this;
    int n = 1;
    while (!acc.is_identity()) {
        acc = compose(acc, *this);
        ++n;
        if (n > parent->order * parent->order)
            throw Error(ErrorCode::Internal, "automorphism order runaway");
    }
    return n;
}

Automorphism identity_automorphism(GroupPtr g) {
    Automorphism a;
    a.parent = g;
    a.image.resize(g->order);
    std::iota(a.image.begin(), a.image.end(), 0);
    return a;
}

Automorphism automorphism_from_gen_images(GroupPtr g, const std::vector<int>& gen_images) {
    const FiniteGroup& gr = *g;
    if (gen_images.size() != gr.generators.size())
        throw Error(ErrorCode::PreconditionViolated, "one image per generator required");
    // extend multiplicatively over a BFS spanning tree
    std::vector<int> image(gr.order, -1);
    image[0] = 0;
    std::vector<int> queue{0};
    for (size_t h = 0; h < queue.size(); ++h) {
        int x = queue[h];
        for (size_t gi = 0; gi < gr.generators.size(); ++gi) {
            int y = gr.mul(x, gr.generators[gi]);
            if (image[y] < 0) {
                image[y] = gr.mul(image[x], gen_images[gi]);
                queue.push_back(y);
            }
        }
    }
    for (int v : image)
        if (v < 0) throw Error(ErrorCode::Internal, "generators do not span the group");
    // bijectivity
    {
        std::vector<uint8_t> hit(gr.order, 0);
        for (int v : image) {
            if (hit[v])
                throw Error(ErrorCode::NotAutomorphism, "generator images induce a non-bijective map");
            hit[v] = 1;
        }
    }
    // multiplicativity, full pairwise
    for (int x = 0; x < gr.order; ++x)
        for (int y = 0; y < gr.order; ++y)
            if (image[gr.mul(x, y)] != gr.mul(image[x], image[y]))
                throw Error(ErrorCode::NotAutomorphism, "generator images do not extend to a homomorphism");
    Automorphism a;
    a.parent = g;
    a.image = std::move(image);
    return a;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
    if (a.parent != b.parent)
        throw Error(ErrorCode::PreconditionViolated, "automorphisms of different groups");
    Automorphism out;
    out.parent = a.parent;
    out.image.resize(a.image.size());
    for (size_t i = 0; i < a.image.size(); ++i) out.image[i] = b.image[a.image[i]];
    return out;
}

Automorphism inverse(const Automorphism& a) {
    Automorphism out;
    out.parent = a.parent;
    out.image.resize(a.image.size());
    for (size_t i = 0; i < a.image.size(); ++i) out.image[a.image[i]] = (int)i;
    return out;
}

Automorphism automorphism_power(const Automorphism& a, int e) {
    Automorphism acc = identity_automorphism(a.parent);
    Automorphism base = e < 0 ? inverse(a) : a;
    int n = std::abs(e);
    for (int i = 0; i < n; ++i) acc = compose(acc, base);
    return acc;
}

AutAction validate_action(GroupPtr g, GroupPtr actor,
                          const std::vector<Automorphism>& gen_assignment,
                          const std::string& name) {
    const FiniteGroup& a = *actor;
    if (gen_assignment.size() != a.generators.size())
        throw Error(ErrorCode::PreconditionViolated, "one automorphism per actor generator");
    for (const auto& phi : gen_assignment)
        if (phi.parent != g)
            throw Error(ErrorCode::PreconditionViolated, "assignment acts on the wrong group");
    AutAction act;
    act.name = name;
    act.group = g;
    act.actor = actor;
    act.assignment.assign(a.order, Automorphism{});
    std::vector<uint8_t> have(a.order, 0);
    act.assignment[0] = identity_automorphism(g);
    have[0] = 1;
    std::vector<int> queue{0};
    for (size_t h = 0; h < queue.size(); ++h) {
        int x = queue[h];
        for (size_t gi = 0; gi < a.generators.size(); ++gi) {
            int y = a.mul(x, a.generators[gi]);
            if (!have[y]) {
                act.assignment[y] = compose(act.assignment[x], gen_assignment[gi]);
                have[y] = 1;
                queue.push_back(y);
            }
        }
    }
    for (uint8_t h : have)
        if (!h) throw Error(ErrorCode::Internal, "actor generators do not span the actor");
    // homomorphism property: x^(ab) = (x^a)^b
    {
        auto check_pair = [&](int p, int q) {
            const auto& lhs = act.assignment[a.mul(p, q)];
            for (int x = 0; x < g->order; ++x)
                if (lhs.image[x] != act.assignment[q].image[act.assignment[p].image[x]])
                    throw Error(ErrorCode::NotHomomorphism,
                                "assignment is not a homomorphism into Aut(G)");
        };
        if (a.order <= 64) {
            for (int p = 0; p < a.order; ++p)
                for (int q = 0; q < a.order; ++q) check_pair(p, q);
        } else {
            std::mt19937_64 rng(kDefaultSeed);
            for (int t = 0; t < 4096; ++t)
                check_pair((int)(rng() % a.order), (int)(rng() % a.order));
            for (int p = 0; p < a.order; ++p)
                for (int gen : a.generators) check_pair(p, gen);
        }
    }
    act.coprime = std::gcd(a.order, g->order) == 1;
    {
        std::map<std::vector<int>, int> distinct;
        for (int p = 0; p < a.order; ++p) distinct.emplace(act.assignment[p].image, p);
        act.faithful = (int)distinct.size() == a.order;
    }
    return act;
}

AutAction realize_action(const ActionSpecAst& ast,
                         const std::function<GroupPtr(const std::string&)>& resolve_group) {
    GroupPtr g = resolve_group(ast.group_name);
    GroupPtr actor = resolve_group(ast.actor_name);
    // generator name -> id in G
    std::map<std::string, int> g_gen;
    for (size_t i = 0; i < g->gen_names.size(); ++i) g_gen[g->gen_names[i]] = g->generators[i];
    std::map<std::string, size_t> a_gen_pos;
    for (size_t i = 0; i < actor->gen_names.size(); ++i) a_gen_pos[actor->gen_names[i]] = i;

    std::vector<Automorphism> assignment(actor->generators.size(), identity_automorphism(g));
    std::vector<uint8_t> provided(actor->generators.size(), 0);
    for (const auto& al : ast.autos) {
        auto it = a_gen_pos.find(al.actor_gen);
        if (it == a_gen_pos.end())
            throw Error(ErrorCode::ParseError, "unknown actor generator '" + al.actor_gen + "'");
        if (provided[it->second])
            throw Error(ErrorCode::ParseError, "duplicate auto line for '" + al.actor_gen + "'");
        provided[it->second] = 1;
        // build image per G-generator; unmentioned generators map to themselves
        std::vector<int> gen_images = g->generators;
        for (const auto& [gname, word] : al.images) {
            auto git = g_gen.find(gname);
            if (git == g_gen.end())
                throw Error(ErrorCode::ParseError, "unknown group generator '" + gname + "'");
            int value = 0;
            for (const auto& [factor, e] : word.factors) {
                auto fit = g_gen.find(factor);
                if (fit == g_gen.end())
                    throw Error(ErrorCode::ParseError, "unknown generator '" + factor + "' in word");
                value = g->mul(value, g->pow(fit->second, e));
            }
            for (size_t i = 0; i < g->generators.size(); ++i)
                if (g->generators[i] == git->second) gen_images[i] = value;
        }
        assignment[it->second] = automorphism_from_gen_images(g, gen_images);
    }
    return validate_action(g, actor, assignment, ast.name);
}

bool actor_is_cyclic(const AutAction& action) {
    const FiniteGroup& a = *action.actor;
    for (int x = 0; x < a.order; ++x)
        if (a.element_order(x) == a.order) return true;
    return false;
}

bool actor_is_elementary_abelian_q2(const AutAction& action, int* q_out) {
    const FiniteGroup& a = *action.actor;
    auto primes = primes_dividing(a.order);
    if (primes.size() != 1) return false;
    int q = primes[0];
    if (a.order != q * q) return false;
    for (int x = 0; x < a.order; ++x) {
        if (x != 0 && a.element_order(x) != q) return false;
        for (int y = 0; y < a.order; ++y)
            if (a.mul(x, y) != a.mul(y, x)) return false;
    }
    if (q_out) *q_out = q;
    return true;
}

std::vector<int> actor_nonidentity(const AutAction& action) {
    std::vector<int> out;
    for (int x = 1; x < action.actor->order; ++x) out.push_back(x);
    return out;
}

Subgroup centralizer(const AutAction& action, int a_id) {
    std::vector<int> fixed;
    const auto& phi = action.assignment[a_id];
    for (int x = 0; x < action.group->order; ++x)
        if (phi.image[x] == x) fixed.push_back(x);
    return subgroup_from_members(action.group, std::move(fixed));
}

Subgroup centralizer_of_set(const AutAction& action, const std::vector<int>& a_ids) {
    std::vector<int> ids = a_ids;
    if (ids.empty())
        for (int x = 0; x < action.actor->order; ++x) ids.push_back(x);
    std::vector<int> fixed;
    for (int x = 0; x < action.group->order; ++x) {
        bool all = true;
        for (int a : ids)
            if (action.assignment[a].image[x] != x) {
                all = false;
                break;
            }
        if (all) fixed.push_back(x);
    }
    return subgroup_from_members(action.group, std::move(fixed));
}

Subgroup action_commutator(const AutAction& action) {
    const FiniteGroup& g = *action.group;
    std::vector<int> gens;
    std::vector<uint8_t> got(g.order, 0);
    for (int x = 0; x < g.order; ++x)
        for (int a = 0; a < action.actor->order; ++a) {
            int c = g.mul(g.inv(x), action.assignment[a].image[x]);
            if (!got[c]) {
                got[c] = 1;
                gens.push_back(c);
            }
        }
    return subgroup_closure(action.group, gens);
}

bool subgroup_is_action_invariant(const AutAction& action, const Subgroup& s) {
    for (int a = 1; a < action.actor->order; ++a)
        for (int x : s.members)
            if (!s.contains(action.assignment[a].image[x])) return false;
    return true;
}

ActionLemmaReport check_action_lemmas(const AutAction& action, const std::optional<Subgroup>& n) {
    ActionLemmaReport report;
    const FiniteGroup& g = *action.group;

    // (i) generation by centralizers -- needs coprime and A non-cyclic
    if (!action.coprime) {
        report.generation_skip_reason = "action is not coprime";
    } else if (actor_is_cyclic(action)) {
        report.generation_skip_reason = "actor is cyclic";
    } else {
        std::vector<int> gens;
        for (int a : actor_nonidentity(action)) {
            Subgroup c = centralizer(action, a);
            gens.insert(gens.end(), c.members.begin(), c.members.end());
        }
        Subgroup gen = subgroup_closure(action.group, gens);
        report.generation = gen.order() == g.order;
    }

    if (!action.coprime)
        throw Error(ErrorCode::PreconditionViolated,
                    "the covering and commutator lemmas assume a coprime action");

    // (ii) fixed-point covering on G/N
    if (n) {
        if (!is_subgroup_normal(*n))
            throw Error(ErrorCode::PreconditionViolated, "N must be normal");
        if (!subgroup_is_action_invariant(action, *n))
            throw Error(ErrorCode::PreconditionViolated, "N must be A-invariant");
        QuotientResult quo = quotient_group(action.group, *n);
        const int q = quo.group->order;
        // induced automorphism per actor element is well defined on cosets
        std::vector<uint8_t> fixed_all(q, 1);
        for (int a = 1; a < action.actor->order; ++a) {
            std::vector<int> induced(q, -1);
            for (int x = 0; x < g.order; ++x) {
                int src = quo.projection[x];
                int dst = quo.projection[action.assignment[a].image[x]];
                if (induced[src] < 0) induced[src] = dst;
                else if (induced[src] != dst)
                    throw Error(ErrorCode::Internal, "induced map not well defined");
            }
            for (int cc = 0; cc < q; ++cc)
                if (induced[cc] != cc) fixed_all[cc] = 0;
        }
        Subgroup cga = centralizer_of_set(action, {});
        std::vector<uint8_t> image_of_cga(q, 0);
        for (int x : cga.members) image_of_cga[quo.projection[x]] = 1;
        bool equal = true;
        for (int cc = 0; cc < q; ++cc)
            if ((fixed_all[cc] != 0) != (image_of_cga[cc] != 0)) equal = false;
        report.covering = equal;
    }

    // (iii) [[G,A],A] = [G,A]
    Subgroup ga = action_commutator(action);
    report.commutator_order = ga.order();
    {
        std::vector<int> gens;
        std::vector<uint8_t> got(g.order, 0);
        for (int x : ga.members)
            for (int a = 0; a < action.actor->order; ++a) {
                int c = g.mul(g.inv(x), action.assignment[a].image[x]);
                if (!got[c]) {
                    got[c] = 1;
                    gens.push_back(c);
                }
            }
        Subgroup gaa = subgroup_closure(action.group, gens);
        report.commutator_stable = gaa.same_members(ga);
    }
    return report;
}

Subgroup invariant_sylow(const AutAction& action, int p) {
    if (!action.coprime)
        throw Error(ErrorCode::PreconditionViolated, "invariant Sylow needs a coprime action");
    Subgroup s = sylow_subgroup(action.group, p);
    for (int t = 0; t < action.group->order; ++t) {
        Subgroup cand = conjugate_subgroup(s, t);
        bool invariant = true;
        for (int a = 1; a < action.actor->order && invariant; ++a)
            for (int x : cand.members)
                if (!cand.contains(action.assignment[a].image[x])) {
                    invariant = false;
                    break;
                }
        if (invariant) return cand;
    }
    throw Error(ErrorCode::NotFound,
                "no A-invariant Sylow subgroup among conjugates; this contradicts the lemma");
}

Semidirect semidirect_product(GroupPtr g, const Automorphism& phi, int declared_order) {
    if (phi.parent != g)
        throw Error(ErrorCode::PreconditionViolated, "automorphism acts on a different group");
    int true_order = phi.order();
    if (true_order != declared_order)
        throw Error(ErrorCode::OrderMismatch,
                    "declared order " + std::to_string(declared_order) + " but the automorphism has order " +
                        std::to_string(true_order));
    const FiniteGroup& gr = *g;
    const int n = gr.order;
    const int d = declared_order;
    // element (x, i) = x * phi_hat^i gets id i*n + x
    std::vector<Automorphism> powers(d, identity_automorphism(g));
    for (int i = 1; i < d; ++i) powers[i] = compose(powers[i - 1], phi);
    FiniteGroup prod;
    prod.name = gr.name + ":phi" + std::to_string(d);
    prod.order = n * d;
    prod.table.assign((size_t)n * d * n * d, 0);
    auto id_of = [&](int x, int i) { return i * n + x; };
    const size_t side = (size_t)n * d;
    for (int i = 0; i < d; ++i) {
        const Automorphism& neg = powers[(d - i) % d]; // phi^{-i} = phi^{d-i}
        for (int x = 0; x < n; ++x)
            for (int j = 0; j < d; ++j)
                for (int y = 0; y < n; ++y) {
                    // (x phi^i)(y phi^j) = x * (y^(phi^-i)) * phi^(i+j)
                    prod.table[(size_t)id_of(x, i) * side + id_of(y, j)] =
                        id_of(gr.mul(x, neg.image[y]), (i + j) % d);
                }
    }
    prod.labels.resize((size_t)n * d);
    for (int i = 0; i < d; ++i)
        for (int x = 0; x < n; ++x) {
            std::string l = gr.label(x);
            if (i > 0) l += ".f" + (i > 1 ? std::to_string(i) : std::string());
            prod.labels[id_of(x, i)] = l;
        }
    for (size_t gi = 0; gi < gr.generators.size(); ++gi) {
        prod.generators.push_back(id_of(gr.generators[gi], 0));
        prod.gen_names.push_back(gi < gr.gen_names.size() ? gr.gen_names[gi]
                                                          : "g" + std::to_string(gi));
    }
    if (d > 1) {
        prod.generators.push_back(id_of(0, 1));
        prod.gen_names.push_back("f");
    }
    Semidirect out;
    out.group = make_group(std::move(prod));
    out.embed_base.resize(n);
    for (int x = 0; x < n; ++x) out.embed_base[x] = id_of(x, 0);
    out.phi_hat = (d > 1) ? id_of(0, 1) : 0;
    out.base = subgroup_from_members(out.group, out.embed_base,
                                     std::vector<int>(out.group->generators.begin(),
                                                      out.group->generators.begin() +
                                                          gr.generators.size()));
    return out;
}

} // namespace ewb
