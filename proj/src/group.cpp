#include "ewb/group.hpp"

#include "ewb/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace ewb {

int FiniteGroup::pow(int x, long e) const {
    int acc = 0;
    int base = x;
    if (e < 0) {
        base = inv(x);
        e = -e;
    }
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int FiniteGroup::element_order(int x) const {
    int n = 1;
    int y = x;
    while (y != 0) {
        y = mul(y, x);
        ++n;
        if (n > order) throw Error(ErrorCode::Internal, "element order exceeds group order");
    }
    return n;
}

int FiniteGroup::exponent() const {
    long e = 1;
    for (int x = 0; x < order; ++x) {
        long o = element_order(x);
        e = std::lcm(e, o);
    }
    return (int)e;
}

std::string FiniteGroup::label(int x) const {
    if (x >= 0 && x < (int)labels.size() && !labels[x].empty()) return labels[x];
    return "#" + std::to_string(x);
}

int FiniteGroup::id_of_perm(const std::vector<int>& perm) const {
    for (int i = 0; i < (int)perms.size(); ++i)
        if (perms[i] == perm) return i;
    return -1;
}

GroupPtr make_group(FiniteGroup g, uint64_t seed) {
    const int n = g.order;
    if (n < 1 || (int)g.table.size() != n * n)
        throw Error(ErrorCode::AxiomViolation, "table shape mismatch");
    for (int v : g.table)
        if (v < 0 || v >= n) throw Error(ErrorCode::AxiomViolation, "table entry out of range");
    // identity
    for (int x = 0; x < n; ++x)
        if (g.mul(0, x) != x || g.mul(x, 0) != x)
            throw Error(ErrorCode::AxiomViolation, "id 0 is not a two-sided identity");
    // inverses
    if ((int)g.inverse.size() != n) {
        g.inverse.assign(n, -1);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (g.mul(x, y) == 0) { g.inverse[x] = y; break; }
    }
    for (int x = 0; x < n; ++x) {
        int y = g.inverse[x];
        if (y < 0 || y >= n || g.mul(x, y) != 0 || g.mul(y, x) != 0)
            throw Error(ErrorCode::AxiomViolation, "inverse table is wrong");
    }
    // associativity
    if (n <= 200) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
                        throw Error(ErrorCode::AxiomViolation, "associativity fails");
    } else {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < 100000; ++t) {
            int x = (int)(rng() % n), y = (int)(rng() % n), z = (int)(rng() % n);
            if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
                throw Error(ErrorCode::AxiomViolation, "associativity fails (sampled)");
        }
    }
    // generator closure reaches everything
    {
        std::vector<uint8_t> seen(n, 0);
        seen[0] = 1;
        std::vector<int> queue{0};
        for (size_t h = 0; h < queue.size(); ++h) {
            for (int gen : g.generators) {
                int y = g.mul(queue[h], gen);
                if (!seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
            }
        }
        if ((int)queue.size() != n)
            throw Error(ErrorCode::AxiomViolation, "generators do not reach every element");
    }
    return std::make_shared<const FiniteGroup>(std::move(g));
}

Subgroup trivial_subgroup(GroupPtr g) {
    Subgroup s;
    s.parent = std::move(g);
    s.members = {0};
    s.mask.assign(s.parent->order, 0);
    s.mask[0] = 1;
    return s;
}

Subgroup whole_group(GroupPtr g) {
    Subgroup s;
    s.parent = g;
    s.members.resize(g->order);
    for (int i = 0; i < g->order; ++i) s.members[i] = i;
    s.mask.assign(g->order, 1);
    s.gens = g->generators;
    return s;
}

Subgroup subgroup_from_members(GroupPtr g, std::vector<int> members, std::vector<int> gens) {
    Subgroup s;
    s.parent = std::move(g);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    s.members = std::move(members);
    s.mask.assign(s.parent->order, 0);
    for (int m : s.members) s.mask[m] = 1;
    s.gens = std::move(gens);
    return s;
}

int iterated_commutator(const FiniteGroup& g, int x, int y, int k) {
    int acc = x;
    for (int i = 0; i < k; ++i) acc = g.comm(acc, y);
    return acc;
}

Subgroup subgroup_closure(GroupPtr g, const std::vector<int>& gens) {
    const FiniteGroup& gr = *g;
    std::vector<uint8_t> mask(gr.order, 0);
    mask[0] = 1;
    std::vector<int> queue{0};
    for (int x : gens) {
        if (x < 0 || x >= gr.order) throw Error(ErrorCode::Internal, "bad generator id");
        if (!mask[x]) {
            mask[x] = 1;
            queue.push_back(x);
        }
    }
    for (size_t h = 0; h < queue.size(); ++h) {
        for (int gen : gens) {
            int y = gr.mul(queue[h], gen);
            if (!mask[y]) {
                mask[y] = 1;
                queue.push_back(y);
            }
            int z = gr.mul(queue[h], gr.inv(gen));
            if (!mask[z]) {
                mask[z] = 1;
                queue.push_back(z);
            }
        }
    }
    Subgroup s;
    s.parent = g;
    s.mask = std::move(mask);
    std::sort(queue.begin(), queue.end());
    s.members = std::move(queue);
    s.gens = gens;
    return s;
}

bool is_subgroup_normal(const Subgroup& s) {
    const FiniteGroup& g = *s.parent;
    for (int x : s.members)
        for (int t = 0; t < g.order; ++t)
            if (!s.contains(g.conj(x, t))) return false;
    return true;
}

Subgroup conjugate_subgroup(const Subgroup& s, int g) {
    std::vector<int> members;
    members.reserve(s.members.size());
    for (int x : s.members) members.push_back(s.parent->conj(x, g));
    std::vector<int> gens;
    for (int x : s.gens) gens.push_back(s.parent->conj(x, g));
    return subgroup_from_members(s.parent, std::move(members), std::move(gens));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<int> members;
    for (int x : a.members)
        if (b.contains(x)) members.push_back(x);
    return subgroup_from_members(a.parent, std::move(members));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    std::vector<int> gens = a.members;
    gens.insert(gens.end(), b.members.begin(), b.members.end());
    return subgroup_closure(a.parent, gens);
}

Subgroup normal_closure(GroupPtr g, const std::vector<int>& seed_elements) {
    const FiniteGroup& gr = *g;
    // close under both products and conjugation
    std::vector<uint8_t> mask(gr.order, 0);
    mask[0] = 1;
    std::vector<int> queue{0};
    auto push = [&](int x) {
        if (!mask[x]) {
            mask[x] = 1;
            queue.push_back(x);
        }
    };
    for (int x : seed_elements) push(x);
    for (size_t h = 0; h < queue.size(); ++h) {
        int x = queue[h];
        for (int t = 0; t < gr.order; ++t) push(gr.conj(x, t));
        push(gr.inv(x));
        for (size_t k = 0; k <= h; ++k) {
            push(gr.mul(x, queue[k]));
            push(gr.mul(queue[k], x));
        }
    }
    std::sort(queue.begin(), queue.end());
    Subgroup s;
    s.parent = g;
    s.mask = std::move(mask);
    s.members = std::move(queue);
    // the seeds alone need not generate the closure; leave gens empty so a
    // group copy falls back to the member list
    return s;
}

std::vector<Subgroup> normal_subgroups(GroupPtr g) {
    // atoms: normal closures of single elements
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> found;
    auto add = [&](Subgroup s) {
        if (seen.insert(s.members).second) found.push_back(std::move(s));
    };
    add(trivial_subgroup(g));
    for (int x = 1; x < g->order; ++x) add(normal_closure(g, {x}));
    // join-closure
    for (size_t i = 0; i < found.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            Subgroup joined = join(found[i], found[j]);
            add(std::move(joined));
        }
    }
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return found;
}

namespace {

// <[x, s] : x in A, s in B>, all pairs
Subgroup commutator_subgroup_of(const Subgroup& a, const Subgroup& b) {
    const FiniteGroup& g = *a.parent;
    std::vector<int> gens;
    std::vector<uint8_t> got(g.order, 0);
    for (int x : a.members)
        for (int s : b.members) {
            int c = g.comm(x, s);
            if (!got[c]) {
                got[c] = 1;
                gens.push_back(c);
            }
        }
    return subgroup_closure(a.parent, gens);
}

} // namespace

SeriesData lower_central_series(GroupPtr g) {
    SeriesData sd;
    sd.kind = SeriesKind::LowerCentral;
    Subgroup whole = whole_group(g);
    sd.terms.push_back(whole);
    while (true) {
        Subgroup next = commutator_subgroup_of(sd.terms.back(), whole);
        if (next.same_members(sd.terms.back())) {
            sd.stabilized = true;
            break;
        }
        sd.terms.push_back(std::move(next));
        if (sd.terms.back().is_trivial()) {
            sd.stabilized = true;
            break;
        }
    }
    sd.gamma_infinity = sd.terms.back();
    if (sd.gamma_infinity.is_trivial())
        sd.nilpotency_class = (int)sd.terms.size() - 1;
    return sd;
}

SeriesData derived_series(GroupPtr g) {
    SeriesData sd;
    sd.kind = SeriesKind::Derived;
    sd.terms.push_back(whole_group(g));
    while (true) {
        Subgroup next = commutator_subgroup_of(sd.terms.back(), sd.terms.back());
        if (next.same_members(sd.terms.back())) {
            sd.stabilized = true;
            break;
        }
        sd.terms.push_back(std::move(next));
        if (sd.terms.back().is_trivial()) {
            sd.stabilized = true;
            break;
        }
    }
    sd.gamma_infinity = sd.terms.back();
    return sd;
}

std::vector<Subgroup> lower_central_series_of(const Subgroup& s) {
    std::vector<Subgroup> terms{s};
    while (true) {
        Subgroup next = commutator_subgroup_of(terms.back(), s);
        if (next.same_members(terms.back())) break;
        terms.push_back(std::move(next));
        if (terms.back().is_trivial()) break;
    }
    return terms;
}

Subgroup gamma_infinity_of(const Subgroup& s) {
    return lower_central_series_of(s).back();
}

bool is_nilpotent_subgroup(const Subgroup& s) {
    return gamma_infinity_of(s).is_trivial();
}

Subgroup sylow_subgroup(GroupPtr g, int p) {
    const FiniteGroup& gr = *g;
    if (p < 2) throw Error(ErrorCode::PreconditionViolated, "p must be prime");
    int full = 1;
    {
        int n = gr.order;
        while (n % p == 0) {
            n /= p;
            full *= p;
        }
    }
    Subgroup s = trivial_subgroup(g);
    if (full == 1) return s;
    while (s.order() < full) {
        bool extended = false;
        for (int x = 1; x < gr.order && !extended; ++x) {
            if (s.contains(x)) continue;
            if (!is_prime_power(gr.element_order(x), p)) continue;
            std::vector<int> gens = s.gens;
            gens.push_back(x);
            Subgroup bigger = subgroup_closure(g, gens);
            if (is_prime_power(bigger.order(), p) && bigger.order() > s.order()) {
                s = std::move(bigger);
                extended = true;
            }
        }
        if (!extended)
            throw Error(ErrorCode::Internal, "Sylow extension search stalled");
    }
    return s;
}

Subgroup p_core(GroupPtr g, int p) {
    Subgroup s = sylow_subgroup(g, p);
    Subgroup core = s;
    for (int t = 0; t < g->order; ++t) {
        core = intersect(core, conjugate_subgroup(s, t));
        if (core.is_trivial()) break;
    }
    return core;
}

QuotientResult quotient_group(GroupPtr g, const Subgroup& n) {
    const FiniteGroup& gr = *g;
    if (!is_subgroup_normal(n)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
    std::vector<int> coset_of(gr.order, -1);
    std::vector<int> reps; // least member of each coset, in discovery order by least id
    for (int x = 0; x < gr.order; ++x) {
        if (coset_of[x] >= 0) continue;
        int id = (int)reps.size();
        reps.push_back(x);
        for (int m : n.members) coset_of[gr.mul(m, x)] = id; // coset Nx
    }
    const int q = (int)reps.size();
    FiniteGroup quo;
    quo.name = gr.name + "/N" + std::to_string(n.order());
    quo.order = q;
    quo.table.assign((size_t)q * q, 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            quo.table[(size_t)a * q + b] = coset_of[gr.mul(reps[a], reps[b])];
    for (int gen : gr.generators) {
        int img = coset_of[gen];
        if (img != 0 &&
            std::find(quo.generators.begin(), quo.generators.end(), img) == quo.generators.end())
            quo.generators.push_back(img);
    }
    quo.labels.resize(q);
    for (int a = 0; a < q; ++a) quo.labels[a] = gr.label(reps[a]) + "N";
    QuotientResult out;
    out.group = make_group(std::move(quo));
    out.projection = std::move(coset_of);
    return out;
}

SubgroupAsGroup group_from_subgroup(const Subgroup& s) {
    const FiniteGroup& gr = *s.parent;
    SubgroupAsGroup out;
    out.to_parent = s.members; // sorted, 0 first
    out.from_parent.assign(gr.order, -1);
    for (int i = 0; i < (int)s.members.size(); ++i) out.from_parent[s.members[i]] = i;
    const int n = (int)s.members.size();
    FiniteGroup sub;
    sub.name = gr.name + ".sub" + std::to_string(n);
    sub.order = n;
    sub.table.assign((size_t)n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int prod = gr.mul(s.members[a], s.members[b]);
            int id = out.from_parent[prod];
            if (id < 0) throw Error(ErrorCode::AxiomViolation, "member set not closed");
            sub.table[(size_t)a * n + b] = id;
        }
    // generators: prefer recorded gens, else all members
    for (int g0 : s.gens.empty() ? s.members : s.gens) {
        int id = out.from_parent[g0];
        if (id > 0) sub.generators.push_back(id);
    }
    if (sub.generators.empty() && n > 1)
        throw Error(ErrorCode::Internal, "no generators for subgroup copy");
    sub.labels.resize(n);
    for (int a = 0; a < n; ++a) sub.labels[a] = gr.label(s.members[a]);
    out.group = make_group(std::move(sub));
    return out;
}

FittingData fitting_data(GroupPtr g) {
    FittingData fd;
    // F(G) as the product (= join) of the p-cores
    Subgroup f = trivial_subgroup(g);
    for (int p : primes_dividing(g->order)) f = join(f, p_core(g, p));
    fd.fitting = f;

    SeriesData der = derived_series(g);
    fd.is_soluble = der.terms.back().is_trivial();
    SeriesData lcs = lower_central_series(g);
    fd.is_nilpotent = lcs.gamma_infinity.is_trivial();

    // Fitting series by iterated quotients
    fd.series.kind = SeriesKind::Fitting;
    fd.series.terms.push_back(f);
    if (fd.is_soluble) {
        Subgroup level = f;
        int height = (g->order == 1) ? 0 : 1;
        while (!level.is_whole_group()) {
            QuotientResult quo = quotient_group(g, level);
            // F of the quotient, pulled back
            Subgroup fq = trivial_subgroup(quo.group);
            for (int p : primes_dividing(quo.group->order)) fq = join(fq, p_core(quo.group, p));
            std::vector<int> members;
            for (int x = 0; x < g->order; ++x)
                if (fq.contains(quo.projection[x])) members.push_back(x);
            Subgroup next = subgroup_from_members(g, std::move(members));
            if (next.same_members(level))
                throw Error(ErrorCode::Internal, "Fitting series stalled on a soluble group");
            level = std::move(next);
            fd.series.terms.push_back(level);
            ++height;
        }
        fd.height = height;
    } else {
        // ascend while possible; no finite height
        Subgroup level = f;
        while (true) {
            QuotientResult quo = quotient_group(g, level);
            Subgroup fq = trivial_subgroup(quo.group);
            for (int p : primes_dividing(quo.group->order)) fq = join(fq, p_core(quo.group, p));
            std::vector<int> members;
            for (int x = 0; x < g->order; ++x)
                if (fq.contains(quo.projection[x])) members.push_back(x);
            Subgroup next = subgroup_from_members(g, std::move(members));
            if (next.same_members(level)) break;
            level = std::move(next);
            fd.series.terms.push_back(level);
        }
        fd.height = std::nullopt;
    }
    fd.series.stabilized = true;
    fd.series.gamma_infinity = fd.series.terms.back();
    return fd;
}

std::vector<int> primes_dividing(int n) {
    std::vector<int> out;
    for (int p = 2; (long)p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_prime_power(int n, int p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

} // namespace ewb
