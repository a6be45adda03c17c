#include "ewb/zassenhaus.hpp"

#include "ewb/error.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ewb {

const Subgroup& ZFiltration::term(int i) const {
    if (i < 1) throw Error(ErrorCode::Internal, "terms start at index 1");
    if (i - 1 < (int)terms.size()) return terms[i - 1];
    return terms.back(); // trivial
}

ZFiltration zassenhaus_filtration(GroupPtr p_group, int p) {
    const FiniteGroup& g = *p_group;
    if (!is_prime_power(g.order, p))
        throw Error(ErrorCode::NotPGroup, "group order is not a power of p");
    ZFiltration z;
    z.parent = p_group;
    z.p = p;

    std::vector<Subgroup> gamma = lower_central_series_of(whole_group(p_group));
    // gamma[j-1] = gamma_j; a p-group's series reaches 1
    if (!gamma.back().is_trivial())
        throw Error(ErrorCode::Internal, "lower central series of a p-group must reach 1");

    auto gamma_j = [&](int j) -> const Subgroup& {
        if (j - 1 < (int)gamma.size()) return gamma[j - 1];
        return gamma.back();
    };
    const int max_j = (int)gamma.size(); // gamma_j trivial for j >= max_j
    int pk_cap = 1;
    int kmax = 0;
    while (pk_cap < g.order) {
        pk_cap *= p;
        ++kmax;
    }

    for (int i = 1;; ++i) {
        std::vector<int> gens;
        std::vector<uint8_t> got(g.order, 0);
        for (int j = 1; j <= max_j; ++j) {
            const Subgroup& gj = gamma_j(j);
            if (gj.is_trivial()) continue;
            long pk = 1;
            for (int k = 0; k <= kmax; ++k) {
                if ((long)j * pk >= i) {
                    for (int x : gj.members) {
                        int y = g.pow(x, pk);
                        if (!got[y]) {
                            got[y] = 1;
                            gens.push_back(y);
                        }
                    }
                }
                pk *= p;
            }
        }
        Subgroup gi = subgroup_closure(p_group, gens);
        z.terms.push_back(gi);
        if (gi.is_trivial() && i > 1) break;
        if (i == 1 && gi.order() != g.order)
            throw Error(ErrorCode::Internal, "G_1 must be the whole group");
        if (gi.is_trivial()) break; // trivial group: G_1 = 1 already
    }
    // degrees
    z.degree.assign(g.order, 0);
    for (int u = 0; u < g.order; ++u) {
        if (u == 0) {
            z.degree[u] = ZFiltration::kDegreeInfinity;
            continue;
        }
        int d = 0;
        for (int i = 0; i < (int)z.terms.size(); ++i)
            if (z.terms[i].contains(u)) d = i + 1;
        z.degree[u] = d;
    }
    return z;
}

namespace {

// elementary abelian coordinates: greedy basis in quotient-id order with a
// full span/coordinate table (equivalent to Gaussian elimination with
// pivots in id order)
void coordinatize(const FiniteGroup& q, int p, std::vector<int>& basis,
                  std::vector<std::vector<int>>& coords) {
    const int n = q.order;
    coords.assign(n, {});
    basis.clear();
    coords[0] = {};
    std::vector<int> span{0};
    std::vector<uint8_t> in_span(n, 0);
    in_span[0] = 1;
    for (int x = 1; x < n; ++x) {
        if (in_span[x]) continue;
        // new basis element: extend every current span member by x^e
        basis.push_back(x);
        std::vector<int> grown = span;
        for (int member : span) {
            int y = member;
            for (int e = 1; e < p; ++e) {
                y = q.mul(y, x);
                if (in_span[y]) throw Error(ErrorCode::Internal, "span collision");
                in_span[y] = 1;
                coords[y] = coords[member];
                coords[y].push_back(e);
                grown.push_back(y);
            }
            coords[member].push_back(0);
        }
        span = std::move(grown);
    }
    const int d = (int)basis.size();
    for (int x = 0; x < n; ++x)
        if ((int)coords[x].size() != d)
            throw Error(ErrorCode::Internal, "coordinate table incomplete");
}

} // namespace

GradedLie graded_lie(const ZFiltration& filtration, uint64_t seed) {
    GradedLie alg;
    alg.p = filtration.p;
    alg.filtration = filtration;
    const FiniteGroup& g = *filtration.parent;
    const int top = (int)filtration.terms.size() - 1; // degrees 1..top have quotients

    for (int deg = 1; deg <= top; ++deg) {
        GradedLie::Component comp;
        comp.degree = deg;
        const Subgroup& gi = filtration.term(deg);
        const Subgroup& gi1 = filtration.term(deg + 1);
        SubgroupAsGroup sub = group_from_subgroup(gi);
        // image of G_{i+1} inside the copy
        std::vector<int> nmem;
        for (int x : gi1.members) nmem.push_back(sub.from_parent[x]);
        Subgroup inner = subgroup_from_members(sub.group, nmem);
        QuotientResult quo = quotient_group(sub.group, inner);
        comp.quotient = quo.group;
        comp.coset_of_parent.assign(g.order, -1);
        for (int x : gi.members) comp.coset_of_parent[x] = quo.projection[sub.from_parent[x]];
        // exponent-p check
        for (int x = 0; x < quo.group->order; ++x)
            if (x != 0 && quo.group->element_order(x) != filtration.p)
                throw Error(ErrorCode::InconsistentStructure,
                            "a filtration quotient is not elementary abelian");
        std::vector<int> basis_cosets;
        coordinatize(*quo.group, filtration.p, basis_cosets, comp.coords_of_coset);
        comp.dim = (int)basis_cosets.size();
        // representative in the parent: least parent element mapping to the coset
        for (int coset : basis_cosets) {
            int rep = -1;
            for (int x : gi.members)
                if (comp.coset_of_parent[x] == coset) {
                    rep = x;
                    break;
                }
            comp.basis_reps.push_back(rep);
        }
        alg.components.push_back(std::move(comp));
    }

    // dimension sum = log_p |G|
    {
        int total = 0;
        for (const auto& c : alg.components) total += c.dim;
        int logp = 0;
        int n = g.order;
        while (n > 1) {
            n /= filtration.p;
            ++logp;
        }
        if (total != logp)
            throw Error(ErrorCode::InconsistentStructure, "dimension sum differs from log_p |G|");
        alg.total_dim = total;
    }
    for (int ci = 0; ci < (int)alg.components.size(); ++ci)
        for (int a = 0; a < alg.components[ci].dim; ++a) alg.flat_index.emplace_back(ci, a);

    // structure constants via commutators of representatives
    const int nc = (int)alg.components.size();
    alg.sc.assign(nc, {});
    for (int i = 0; i < nc; ++i) {
        alg.sc[i].assign(nc, {});
        for (int j = 0; j < nc; ++j) {
            const auto& ci = alg.components[i];
            const auto& cj = alg.components[j];
            alg.sc[i][j].assign(ci.dim, std::vector<std::vector<int>>(cj.dim));
            int target = (i + 1) + (j + 1);
            for (int a = 0; a < ci.dim; ++a)
                for (int b = 0; b < cj.dim; ++b) {
                    int z = g.comm(ci.basis_reps[a], cj.basis_reps[b]);
                    if (target > nc) {
                        if (z != 0)
                            throw Error(ErrorCode::InconsistentStructure,
                                        "bracket escapes past the trivial term");
                        continue;
                    }
                    const auto& ct = alg.components[target - 1];
                    int coset = ct.coset_of_parent[z];
                    if (coset < 0)
                        throw Error(ErrorCode::InconsistentStructure,
                                    "strong centrality fails for representatives");
                    alg.sc[i][j][a][b] = ct.coords_of_coset[coset];
                }
        }
    }

    // well-definedness: shifting representatives inside G_{deg+1} must not
    // change any structure constant (full check for small groups, seeded
    // samples otherwise)
    {
        std::mt19937_64 rng(seed);
        const bool full = g.order <= 64;
        for (int i = 0; i < nc; ++i)
            for (int j = 0; j < nc; ++j) {
                const auto& ci = alg.components[i];
                const auto& cj = alg.components[j];
                int target = (i + 1) + (j + 1);
                if (target > nc) continue;
                const auto& ct = alg.components[target - 1];
                const Subgroup& shift_i = alg.filtration.term(i + 2);
                const Subgroup& shift_j = alg.filtration.term(j + 2);
                for (int a = 0; a < ci.dim; ++a)
                    for (int b = 0; b < cj.dim; ++b) {
                        auto check_shift = [&](int zi, int zj) {
                            int xa = g.mul(ci.basis_reps[a], zi);
                            int yb = g.mul(cj.basis_reps[b], zj);
                            int z = g.comm(xa, yb);
                            int coset = ct.coset_of_parent[z];
                            if (coset < 0 || ct.coords_of_coset[coset] != alg.sc[i][j][a][b])
                                throw Error(ErrorCode::InconsistentStructure,
                                            "bracket depends on the representatives");
                        };
                        if (full) {
                            for (int zi : shift_i.members)
                                for (int zj : shift_j.members) check_shift(zi, zj);
                        } else {
                            for (int t = 0; t < 24; ++t)
                                check_shift(shift_i.members[rng() % shift_i.members.size()],
                                            shift_j.members[rng() % shift_j.members.size()]);
                        }
                    }
            }
    }

    // subalgebra generated by degree 1
    {
        alg.lp_dims.assign(nc, 0);
        FpSpan span(alg.p, alg.total_dim);
        std::vector<std::vector<int>> frontier;
        for (int a = 0; a < (alg.components.empty() ? 0 : alg.components[0].dim); ++a) {
            LieVector v = basis_vector(alg, 0, a);
            auto flat = flatten(alg, v);
            if (span.insert(flat)) frontier.push_back(flat);
        }
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            auto rows_now = span.rows();
            for (const auto& f : frontier)
                for (const auto& r : rows_now) {
                    LieVector br = bracket(alg, unflatten(alg, f), unflatten(alg, r));
                    auto flat = flatten(alg, br);
                    if (span.insert(flat)) next.push_back(flat);
                }
            frontier = std::move(next);
        }
        alg.lp_total_dim = span.rank();
        // per-degree dims of the span
        for (int deg = 0; deg < nc; ++deg) {
            FpSpan degspan(alg.p, alg.total_dim);
            for (const auto& r : span.rows()) {
                LieVector v = unflatten(alg, r);
                // homogeneous parts of span elements stay in the span of a
                // graded subalgebra; count rank per degree
                LieVector h = lie_vector_zero(alg);
                h.comps[deg] = v.comps[deg];
                degspan.insert(flatten(alg, h));
            }
            alg.lp_dims[deg] = degspan.rank();
        }
    }
    return alg;
}

bool LieVector::is_zero() const {
    for (const auto& c : comps)
        if (!fp_is_zero(c)) return false;
    return true;
}

bool LieVector::is_homogeneous(int* degree_out) const {
    int deg = -1;
    for (int i = 0; i < (int)comps.size(); ++i)
        if (!fp_is_zero(comps[i])) {
            if (deg >= 0) return false;
            deg = i;
        }
    if (degree_out) *degree_out = deg + 1;
    return true;
}

LieVector lie_vector_zero(const GradedLie& alg) {
    LieVector v;
    v.comps.resize(alg.components.size());
    for (size_t i = 0; i < alg.components.size(); ++i)
        v.comps[i].assign(alg.components[i].dim, 0);
    return v;
}

LieVector image_of_element(const GradedLie& alg, int u) {
    LieVector v = lie_vector_zero(alg);
    if (u == 0) return v;
    int deg = alg.filtration.degree_of(u);
    if (deg < 1 || deg > (int)alg.components.size())
        throw Error(ErrorCode::Internal, "element degree outside graded range");
    const auto& comp = alg.components[deg - 1];
    int coset = comp.coset_of_parent[u];
    v.comps[deg - 1] = comp.coords_of_coset[coset];
    return v;
}

LieVector basis_vector(const GradedLie& alg, int component, int position) {
    LieVector v = lie_vector_zero(alg);
    v.comps[component][position] = 1;
    return v;
}

LieVector bracket(const GradedLie& alg, const LieVector& a, const LieVector& b) {
    LieVector out = lie_vector_zero(alg);
    const int nc = (int)alg.components.size();
    for (int i = 0; i < nc; ++i)
        for (int ai = 0; ai < alg.components[i].dim; ++ai) {
            int ca = a.comps[i][ai];
            if (ca == 0) continue;
            for (int j = 0; j < nc; ++j) {
                int target = i + j + 2;
                if (target > nc) continue;
                for (int bj = 0; bj < alg.components[j].dim; ++bj) {
                    int cb = b.comps[j][bj];
                    if (cb == 0) continue;
                    const auto& v = alg.sc[i][j][ai][bj];
                    if (v.empty()) continue;
                    long long f = (long long)ca * cb % alg.p;
                    auto& dst = out.comps[target - 1];
                    for (size_t t = 0; t < v.size(); ++t)
                        dst[t] = (int)((dst[t] + f * v[t]) % alg.p);
                }
            }
        }
    return out;
}

LieVector add(const GradedLie& alg, const LieVector& a, const LieVector& b) {
    LieVector out = a;
    for (size_t i = 0; i < out.comps.size(); ++i)
        out.comps[i] = fp_add(out.comps[i], b.comps[i], alg.p);
    return out;
}

std::vector<int> flatten(const GradedLie& alg, const LieVector& v) {
    std::vector<int> flat;
    flat.reserve(alg.total_dim);
    for (const auto& c : v.comps) flat.insert(flat.end(), c.begin(), c.end());
    return flat;
}

LieVector unflatten(const GradedLie& alg, const std::vector<int>& flat) {
    LieVector v = lie_vector_zero(alg);
    size_t pos = 0;
    for (auto& c : v.comps)
        for (auto& x : c) x = flat[pos++];
    return v;
}

int ad_index(const GradedLie& alg, const LieVector& v) {
    const int n = alg.total_dim;
    if (n == 0) return 1;
    // matrix of ad_v on the flat space: column e -> bracket(e, v)
    std::vector<std::vector<int>> mat(n, std::vector<int>(n, 0));
    for (int e = 0; e < n; ++e) {
        auto [ci, pos] = alg.flat_index[e];
        LieVector img = bracket(alg, basis_vector(alg, ci, pos), v);
        auto flat = flatten(alg, img);
        for (int r = 0; r < n; ++r) mat[r][e] = flat[r];
    }
    int idx = nilpotency_index(mat, alg.p, (int)alg.components.size() + 1);
    if (idx < 0)
        throw Error(ErrorCode::Internal, "adjoint map is not nilpotent in a graded algebra");
    return idx;
}

PowerIdentityReport verify_power_identities(const GradedLie& alg, int u) {
    if (u == 0) throw Error(ErrorCode::PreconditionViolated, "u must not be the identity");
    const FiniteGroup& g = *alg.filtration.parent;
    PowerIdentityReport report;
    report.u = u;
    report.degree_u = alg.filtration.degree_of(u);
    int up = g.pow(u, alg.p);
    if (up == 0) {
        report.power_trivial = true;
        report.power_in_expected_term = true; // delta(1) = infinity marker
        report.bracket_identity = true;
        report.details = "u^p = 1";
        return report;
    }
    int dup = alg.filtration.degree_of(up);
    int pd = alg.p * report.degree_u;
    report.power_in_expected_term = dup >= pd;
    if (!report.power_in_expected_term) {
        std::ostringstream os;
        os << "u^p has degree " << dup << " < p*delta(u) = " << pd;
        report.details = os.str();
        return report;
    }
    // image of u^p in degree p*delta(u) (the zero vector when it sits deeper)
    LieVector up_bar = lie_vector_zero(alg);
    if (pd <= (int)alg.components.size()) {
        const auto& comp = alg.components[pd - 1];
        int coset = comp.coset_of_parent[up];
        up_bar.comps[pd - 1] = comp.coords_of_coset[coset];
    }
    LieVector u_bar = image_of_element(alg, u);
    bool all = true;
    for (int ci = 0; ci < (int)alg.components.size() && all; ++ci)
        for (int a = 0; a < alg.components[ci].dim && all; ++a) {
            LieVector x = basis_vector(alg, ci, a);
            LieVector lhs = bracket(alg, x, up_bar);
            LieVector rhs = x;
            for (int t = 0; t < alg.p; ++t) rhs = bracket(alg, rhs, u_bar);
            if (!(flatten(alg, lhs) == flatten(alg, rhs))) all = false;
        }
    report.bracket_identity = all;
    std::ostringstream os;
    os << "delta(u)=" << report.degree_u << ", delta(u^p)=" << dup << ", p*delta(u)=" << pd;
    report.details = os.str();
    return report;
}

AdBoundReport verify_ad_bound(const GradedLie& alg, int g, int i, int k, const Subgroup& n,
                              int b) {
    const FiniteGroup& gr = *alg.filtration.parent;
    if (!is_subgroup_normal(n))
        throw Error(ErrorCode::PreconditionViolated, "N must be normal");
    AdBoundReport report;
    report.i = i;
    report.k = k;
    // |G : N| = p^m
    {
        int index = gr.order / n.order();
        int m = 0;
        while (index > 1) {
            if (index % alg.p != 0)
                throw Error(ErrorCode::PreconditionViolated, "index of N must be a power of p");
            index /= alg.p;
            ++m;
        }
        report.m = m;
    }
    long pk = 1;
    for (int t = 0; t < k; ++t) pk *= alg.p;
    int gpk = gr.pow(g, pk);
    report.hypothesis_holds = true;
    for (int nn : n.members) {
        int base = gr.mul(nn, b);
        int it = iterated_commutator(gr, base, g, i);
        if (gr.comm(it, gpk) != 0) {
            report.hypothesis_holds = false;
            report.details = "coset identity fails at n = " + gr.label(nn);
            break;
        }
    }
    report.bound = i + report.m + (int)pk;
    if (!report.hypothesis_holds) return report;
    report.ad_idx = ad_index(alg, image_of_element(alg, g));
    report.bound_holds = report.ad_idx <= report.bound;
    if (!report.bound_holds)
        report.details = "ad index " + std::to_string(report.ad_idx) + " exceeds " +
                         std::to_string(report.bound);
    return report;
}

IteratedActionResult iterated_action_nilpotency(const GradedLie& alg,
                                                const std::vector<LieVector>& h_gens) {
    // H: subalgebra closure of the generators
    FpSpan h_span(alg.p, alg.total_dim);
    std::vector<std::vector<int>> frontier;
    for (const auto& v : h_gens) {
        auto flat = flatten(alg, v);
        if (h_span.insert(flat)) frontier.push_back(flat);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        auto rows_now = h_span.rows();
        for (const auto& f : frontier)
            for (const auto& r : rows_now) {
                auto flat = flatten(alg, bracket(alg, unflatten(alg, f), unflatten(alg, r)));
                if (h_span.insert(flat)) next.push_back(flat);
            }
        frontier = std::move(next);
    }
    IteratedActionResult out;
    // chain M_0 = everything, M_{t+1} = [M_t, H]
    FpSpan m(alg.p, alg.total_dim);
    for (int e = 0; e < alg.total_dim; ++e) {
        auto [ci, pos] = alg.flat_index[e];
        m.insert(flatten(alg, basis_vector(alg, ci, pos)));
    }
    for (int eps = 1;; ++eps) {
        FpSpan next(alg.p, alg.total_dim);
        for (const auto& mv : m.rows())
            for (const auto& hv : h_span.rows())
                next.insert(flatten(alg, bracket(alg, unflatten(alg, mv), unflatten(alg, hv))));
        if (next.rank() == 0) {
            out.epsilon = eps;
            return out;
        }
        if (next.rank() == m.rank()) {
            out.divergent = true;
            out.stabilized_dim = next.rank();
            return out;
        }
        m = std::move(next);
    }
}

} // namespace ewb
