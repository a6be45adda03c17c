#include "ewb/engel.hpp"

#include "ewb/error.hpp"

#include <algorithm>
#include <numeric>

namespace ewb {

EngelSink smallest_sink(GroupPtr g, int elt) {
    const FiniteGroup& gr = *g;
    const int n = gr.order;
    EngelSink out;
    out.group = g;
    out.base = elt;
    out.per_start.resize(n);

    // functional graph of f(x) = [x, g]; memoized orbit walk
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) next[x] = gr.comm(x, elt);

    constexpr int kUnknown = -1;
    std::vector<int> tail(n, kUnknown);
    std::vector<int> cycle_len(n, 0);
    std::vector<uint8_t> in_sink(n, 0);
    std::vector<int> pos_in_path(n);
    std::vector<int> path;

    for (int start = 0; start < n; ++start) {
        if (tail[start] != kUnknown) continue;
        path.clear();
        int x = start;
        while (tail[x] == kUnknown) {
            // walk until a classified node or a repeat within this path
            bool on_path = false;
            for (int i = (int)path.size() - 1; i >= 0; --i)
                if (path[i] == x) {
                    on_path = true;
                    pos_in_path[x] = i;
                    break;
                }
            if (on_path) {
                // new cycle found: path[pos..] is periodic
                int pos = pos_in_path[x];
                int clen = (int)path.size() - pos;
                for (int i = pos; i < (int)path.size(); ++i) {
                    tail[path[i]] = 0;
                    cycle_len[path[i]] = clen;
                    in_sink[path[i]] = 1;
                }
                for (int i = pos - 1; i >= 0; --i) {
                    tail[path[i]] = pos - i;
                    cycle_len[path[i]] = clen;
                }
                path.clear();
                break;
            }
            path.push_back(x);
            x = next[x];
        }
        if (!path.empty()) {
            // hit a classified node x; unwind the path onto it
            int t = tail[x];
            int clen = cycle_len[x];
            for (int i = (int)path.size() - 1; i >= 0; --i) {
                ++t;
                tail[path[i]] = t;
                cycle_len[path[i]] = clen;
            }
        }
    }

    for (int x = 0; x < n; ++x) {
        out.per_start[x] = {tail[x], cycle_len[x]};
        if (in_sink[x]) out.sink.push_back(x);
    }
    for (int s : out.sink) {
        // minimal k with s = [s, _k g] is the period of s
        int k = 1;
        int y = next[s];
        while (y != s) {
            y = next[y];
            ++k;
        }
        out.witnesses.emplace_back(s, k);
    }
    return out;
}

bool is_engel_element(GroupPtr g, int elt) {
    EngelSink s = smallest_sink(g, elt);
    return s.sink.size() == 1 && s.sink[0] == 0;
}

BaerReport baer_check(GroupPtr g) {
    BaerReport report;
    for (int x = 0; x < g->order; ++x)
        if (is_engel_element(g, x)) report.engel_elements.push_back(x);
    report.fitting = fitting_data(g).fitting;
    for (int x : report.engel_elements)
        if (!report.fitting.contains(x)) report.engel_minus_fitting.push_back(x);
    for (int x : report.fitting.members)
        if (!std::binary_search(report.engel_elements.begin(), report.engel_elements.end(), x))
            report.fitting_minus_engel.push_back(x);
    report.equal = report.engel_minus_fitting.empty() && report.fitting_minus_engel.empty();
    return report;
}

TheoremShadowReport finite_theorem_checks(const AutAction& action) {
    if (!action.coprime)
        throw Error(ErrorCode::PreconditionViolated, "the theorems assume a coprime action");
    if (!actor_is_elementary_abelian_q2(action))
        throw Error(ErrorCode::PreconditionViolated,
                    "the actor must be elementary abelian of order q^2");
    TheoremShadowReport report;
    GroupPtr g = action.group;

    // (W) hypothesis: every C_G(a), a != 1, is nilpotent
    bool ward_hyp = true;
    std::string ward_witness;
    for (int a : actor_nonidentity(action)) {
        Subgroup c = centralizer(action, a);
        if (!is_nilpotent_subgroup(c)) {
            ward_hyp = false;
            ward_witness = "C_G(a" + std::to_string(a) + ") of order " +
                           std::to_string(c.order()) + " is not nilpotent";
            break;
        }
    }
    if (ward_hyp) {
        report.ward_hypothesis = HypothesisState::Holds;
        FittingData fd = fitting_data(g);
        bool ok = fd.is_soluble && fd.height && *fd.height <= 2;
        report.ward_conclusion = ok;
        report.ward_details = fd.is_soluble
                                  ? "soluble, Fitting height " + std::to_string(fd.height.value_or(-1))
                                  : "not soluble";
    } else {
        report.ward_hypothesis = HypothesisState::Vacuous;
        report.ward_details = "hypothesis fails: " + ward_witness;
    }

    // (E) hypothesis: every element of every C_G(a) is Engel in G
    std::vector<uint8_t> engel_flag(g->order, 2); // 2 = unknown
    auto engel = [&](int x) {
        if (engel_flag[x] == 2) engel_flag[x] = is_engel_element(g, x) ? 1 : 0;
        return engel_flag[x] == 1;
    };
    bool engel_hyp = true;
    std::string engel_witness;
    for (int a : actor_nonidentity(action)) {
        Subgroup c = centralizer(action, a);
        for (int x : c.members)
            if (!engel(x)) {
                engel_hyp = false;
                engel_witness = g->label(x) + " in C_G(a" + std::to_string(a) +
                                ") is not an Engel element";
                break;
            }
        if (!engel_hyp) break;
    }
    if (engel_hyp) {
        report.engel_hypothesis = HypothesisState::Holds;
        SeriesData lcs = lower_central_series(g);
        report.engel_conclusion = lcs.gamma_infinity.is_trivial();
        report.engel_details = report.engel_conclusion
                                   ? "nilpotent of class " + std::to_string(*lcs.nilpotency_class)
                                   : "gamma_inf has order " +
                                         std::to_string(lcs.gamma_infinity.order());
    } else {
        report.engel_hypothesis = HypothesisState::Vacuous;
        report.engel_details = "hypothesis fails: " + engel_witness;
    }
    return report;
}

CoprimeSinkReport coprime_sink_check(GroupPtr f, const Automorphism& phi) {
    if (!gamma_infinity_of(whole_group(f)).is_trivial())
        throw Error(ErrorCode::PreconditionViolated, "F must be nilpotent");
    int d = phi.order();
    if (std::gcd(d, f->order) != 1)
        throw Error(ErrorCode::PreconditionViolated, "automorphism order must be coprime to |F|");

    Semidirect sd = semidirect_product(f, phi, d);
    CoprimeSinkReport report;
    report.product_order = sd.group->order;

    EngelSink sink = smallest_sink(sd.group, sd.phi_hat);
    report.sink = sink.sink;

    std::vector<int> kset;
    for (int x = 0; x < f->order; ++x)
        kset.push_back(sd.group->comm(sd.embed_base[x], sd.phi_hat));
    std::sort(kset.begin(), kset.end());
    kset.erase(std::unique(kset.begin(), kset.end()), kset.end());
    report.commutator_set = kset;
    report.sink_equals_commutator_set = (report.sink == kset);

    Subgroup gamma = gamma_infinity_of(whole_group(sd.group));
    Subgroup k_span = subgroup_closure(sd.group, kset);
    report.gamma_inf_equals_commutator_subgroup = gamma.same_members(k_span);
    report.gamma_inf_order = gamma.order();
    return report;
}

Subgroup gamma_inf_with_element(const Subgroup& f, int g) {
    if (!is_subgroup_normal(f))
        throw Error(ErrorCode::PreconditionViolated, "F must be normal in the parent");
    if (!is_nilpotent_subgroup(f))
        throw Error(ErrorCode::PreconditionViolated, "F must be nilpotent");
    std::vector<int> gens = f.members;
    gens.push_back(g);
    Subgroup span = subgroup_closure(f.parent, gens);
    return gamma_infinity_of(span);
}

} // namespace ewb
