#include "ewb/suites.hpp"

#include "ewb/catalog.hpp"
#include "ewb/engel.hpp"
#include "ewb/error.hpp"
#include "ewb/lie_series.hpp"
#include "ewb/nilpotent_model.hpp"
#include "ewb/vandermonde.hpp"
#include "ewb/zassenhaus.hpp"

#include <atomic>
#include <random>
#include <sstream>
#include <thread>

namespace ewb {

namespace {

uint64_t unit_seed(uint64_t base, const std::string& id) {
    uint64_t h = 1469598103934665603ull;
    for (char c : id) {
        h ^= (unsigned char)c;
        h *= 1099511628211ull;
    }
    return h ^ base;
}

OrderedJson cx(std::initializer_list<std::pair<std::string, OrderedJson>> kv) {
    OrderedJson j;
    for (const auto& [k, v] : kv) j[k] = v;
    return j;
}

// ---------------------------------------------------------------- actions

} // namespace

std::vector<CheckRecord> action_lemma_records(const AutAction& action,
                                              const std::string& unit_id) {
    std::vector<CheckRecord> out;
    const std::string& action_name = action.name;
    const std::string& base = unit_id;
    GroupPtr g = action.group;

    ActionLemmaReport rep = check_action_lemmas(action, std::nullopt);
    if (rep.generation.has_value()) {
        if (*rep.generation)
            out.push_back(pass_record(base + "/generation", "centralizer-generation",
                                      "G is generated by the fixed-point subgroups"));
        else
            out.push_back(fail_record(base + "/generation", "centralizer-generation",
                                      "proper subgroup generated",
                                      cx({{"action", action_name}})));
    } else {
        out.push_back(skipped_record(base + "/generation", "centralizer-generation",
                                     rep.generation_skip_reason));
    }
    out.push_back(rep.commutator_stable
                      ? pass_record(base + "/gff", "commutator-action-stability",
                                    "[[G,A],A] = [G,A], order " +
                                        std::to_string(rep.commutator_order))
                      : fail_record(base + "/gff", "commutator-action-stability",
                                    "[[G,A],A] != [G,A]", cx({{"action", action_name}})));

    // fixed-point covering, every A-invariant normal subgroup (small G)
    if (g->order <= 100) {
        int checked = 0;
        bool all_ok = true;
        OrderedJson bad;
        for (const auto& n : normal_subgroups(g)) {
            if (!subgroup_is_action_invariant(action, n)) continue;
            ActionLemmaReport r2 = check_action_lemmas(action, n);
            ++checked;
            if (!r2.covering.value_or(false)) {
                all_ok = false;
                bad = cx({{"action", action_name}, {"normal_order", n.order()}});
                break;
            }
        }
        out.push_back(all_ok ? pass_record(base + "/covering", "fixed-point-covering",
                                           std::to_string(checked) +
                                               " invariant normal subgroups checked")
                             : fail_record(base + "/covering", "fixed-point-covering",
                                           "covering failed", bad));
    } else {
        out.push_back(skipped_record(base + "/covering", "fixed-point-covering",
                                     "group order above the exhaustive-normal-subgroup bound"));
    }

    // invariant Sylow subgroups
    for (int p : primes_dividing(g->order)) {
        Subgroup s = invariant_sylow(action, p);
        bool sylow_ok = is_prime_power(s.order(), p) && (g->order / s.order()) % p != 0;
        bool invariant = subgroup_is_action_invariant(action, s);
        std::string id = base + "/invariant-sylow-p" + std::to_string(p);
        out.push_back(sylow_ok && invariant
                          ? pass_record(id, "invariant-sylow",
                                        "order " + std::to_string(s.order()))
                          : fail_record(id, "invariant-sylow", "scan returned a bad subgroup",
                                        cx({{"action", action_name}, {"p", p}})));
    }
    return out;
}

// ------------------------------------------------------------------ sinks

std::vector<CheckRecord> sink_records(const GroupPtr& g, const std::string& unit_id) {
    std::vector<CheckRecord> out;
    const std::string& group_name = g->name;
    const std::string& base = unit_id;
    const int n = g->order;

    std::vector<EngelSink> sinks;
    sinks.reserve(n);
    for (int x = 0; x < n; ++x) sinks.push_back(smallest_sink(g, x));

    // minimality: x -> [x,g] restricted to the sink is onto the sink
    {
        bool ok = true;
        OrderedJson bad;
        for (int x = 0; x < n && ok; ++x) {
            const auto& s = sinks[x];
            std::vector<uint8_t> hit(n, 0);
            for (int m : s.sink) hit[g->comm(m, x)] = 1;
            for (int m : s.sink)
                if (!hit[m]) {
                    ok = false;
                    bad = cx({{"group", group_name},
                              {"element", g->label(x)},
                              {"missed", g->label(m)}});
                    break;
                }
        }
        out.push_back(ok ? pass_record(base + "/minimality", "sink-minimality",
                                       "the commutator map is onto every sink")
                         : fail_record(base + "/minimality", "sink-minimality",
                                       "sink not surjective under the commutator map", bad));
    }
    // recurrence witnesses: s = [s, _k g], 1 <= k <= |G|
    {
        bool ok = true;
        OrderedJson bad;
        for (int x = 0; x < n && ok; ++x)
            for (const auto& [s, k] : sinks[x].witnesses) {
                if (k < 1 || k > n || iterated_commutator(*g, s, x, k) != s) {
                    ok = false;
                    bad = cx({{"group", group_name},
                              {"element", g->label(x)},
                              {"sink_member", g->label(s)},
                              {"k", k}});
                    break;
                }
            }
        out.push_back(ok ? pass_record(base + "/witnesses", "sink-recurrence",
                                       "every sink member recurs within |G| steps")
                         : fail_record(base + "/witnesses", "sink-recurrence",
                                       "recurrence witness failed", bad));
    }
    // Baer: Engel elements = Fitting subgroup
    {
        BaerReport br = baer_check(g);
        out.push_back(br.equal
                          ? pass_record(base + "/baer", "baer-fitting-equality",
                                        std::to_string(br.engel_elements.size()) +
                                            " Engel elements = F(G)")
                          : fail_record(base + "/baer", "baer-fitting-equality",
                                        "Engel set differs from the Fitting subgroup",
                                        cx({{"group", group_name},
                                            {"engel_not_fitting",
                                             (int)br.engel_minus_fitting.size()},
                                            {"fitting_not_engel",
                                             (int)br.fitting_minus_engel.size()}})));
    }
    // quotient respect (small groups): the image of a sink contains the
    // sink of the image
    if (n <= 100) {
        bool ok = true;
        int pairs = 0;
        OrderedJson bad;
        for (const auto& nn : normal_subgroups(g)) {
            if (nn.is_whole_group()) continue;
            QuotientResult quo = quotient_group(g, nn);
            std::vector<EngelSink> qsinks;
            for (int q = 0; q < quo.group->order; ++q)
                qsinks.push_back(smallest_sink(quo.group, q));
            for (int x = 0; x < n && ok; ++x) {
                std::vector<uint8_t> image(quo.group->order, 0);
                for (int m : sinks[x].sink) image[quo.projection[m]] = 1;
                for (int m : qsinks[quo.projection[x]].sink)
                    if (!image[m]) {
                        ok = false;
                        bad = cx({{"group", group_name},
                                  {"normal_order", nn.order()},
                                  {"element", g->label(x)}});
                        break;
                    }
                ++pairs;
            }
            if (!ok) break;
        }
        out.push_back(ok ? pass_record(base + "/quotient", "sink-quotient-image",
                                       std::to_string(pairs) + " (element, quotient) pairs")
                         : fail_record(base + "/quotient", "sink-quotient-image",
                                       "quotient sink escaped the image of the sink", bad));
    }
    return out;
}

// --------------------------------------------------------------- theorems

std::vector<CheckRecord> theorem_shadow_records(const AutAction& action,
                                                const std::string& unit_id) {
    std::vector<CheckRecord> out;
    const std::string& action_name = action.name;
    const std::string& base = unit_id;
    TheoremShadowReport rep = finite_theorem_checks(action);
    if (rep.ward_hypothesis == HypothesisState::Holds) {
        out.push_back(rep.ward_conclusion
                          ? pass_record(base + "/ward", "ward-height-bound", rep.ward_details)
                          : fail_record(base + "/ward", "ward-height-bound", rep.ward_details,
                                        cx({{"action", action_name}})));
    } else {
        out.push_back(vacuous_record(base + "/ward", "ward-height-bound", rep.ward_details));
    }
    if (rep.engel_hypothesis == HypothesisState::Holds) {
        out.push_back(rep.engel_conclusion
                          ? pass_record(base + "/engel", "engel-centralizer-nilpotency",
                                        rep.engel_details)
                          : fail_record(base + "/engel", "engel-centralizer-nilpotency",
                                        rep.engel_details, cx({{"action", action_name}})));
    } else {
        out.push_back(
            vacuous_record(base + "/engel", "engel-centralizer-nilpotency", rep.engel_details));
    }
    return out;
}

// ----------------------------------------------------------- coprime sinks

std::vector<CheckRecord> coprime_sink_records(const AutAction& action,
                                              const std::string& unit_id) {
    std::vector<CheckRecord> out;
    const std::string& action_name = action.name;
    const std::string& base = unit_id;
    // the pair is (G of the action, image of the actor's first generator)
    const Automorphism& phi = action.assignment[action.actor->generators.at(0)];
    CoprimeSinkReport rep = coprime_sink_check(action.group, phi);
    out.push_back(rep.sink_equals_commutator_set
                      ? pass_record(base + "/sink-set", "coprime-sink-set",
                                    "sink = {[g,phi]}, size " +
                                        std::to_string(rep.sink.size()))
                      : fail_record(base + "/sink-set", "coprime-sink-set",
                                    "smallest sink differs from the commutator set",
                                    cx({{"action", action_name},
                                        {"sink_size", (int)rep.sink.size()},
                                        {"set_size", (int)rep.commutator_set.size()}})));
    out.push_back(rep.gamma_inf_equals_commutator_subgroup
                      ? pass_record(base + "/gamma-inf", "semidirect-gamma-inf",
                                    "gamma_inf(F<phi>) = [F,phi], order " +
                                        std::to_string(rep.gamma_inf_order))
                      : fail_record(base + "/gamma-inf", "semidirect-gamma-inf",
                                    "gamma_inf(F<phi>) != [F,phi]",
                                    cx({{"action", action_name}})));
    return out;
}

// -------------------------------------------------------------- zassenhaus

std::vector<CheckRecord> zassenhaus_records(const GroupPtr& g, int p,
                                            const std::string& unit_id, uint64_t seed) {
    std::vector<CheckRecord> out;
    const std::string& group_name = g->name;
    const std::string& base = unit_id;

    ZFiltration z = zassenhaus_filtration(g, p);
    {
        std::ostringstream os;
        os << "terms of order";
        for (const auto& t : z.terms) os << " " << t.order();
        out.push_back(pass_record(base + "/filtration", "p-dimension-series", os.str()));
    }
    // strong centrality for all pairs
    {
        bool ok = true;
        OrderedJson bad;
        const int r = (int)z.terms.size();
        for (int i = 1; i <= r && ok; ++i)
            for (int j = 1; j <= r && ok; ++j) {
                const Subgroup& target = (i + j <= r) ? z.term(i + j) : z.terms.back();
                for (int x : z.term(i).members) {
                    bool stop = false;
                    for (int y : z.term(j).members)
                        if (!target.contains(g->comm(x, y))) {
                            ok = false;
                            bad = cx({{"group", group_name}, {"i", i}, {"j", j}});
                            stop = true;
                            break;
                        }
                    if (stop) break;
                }
            }
        out.push_back(ok ? pass_record(base + "/strong-centrality", "strong-centrality",
                                       "[G_i, G_j] <= G_{i+j} for all pairs")
                         : fail_record(base + "/strong-centrality", "strong-centrality",
                                       "strong centrality fails", bad));
    }

    GradedLie alg = graded_lie(z, seed);
    {
        std::ostringstream os;
        os << "dims";
        for (const auto& c : alg.components) os << " " << c.dim;
        os << " (sum " << alg.total_dim << "), generated subalgebra dim " << alg.lp_total_dim;
        out.push_back(pass_record(base + "/dimension-sum", "graded-dimension-sum", os.str()));
    }
    // Jacobi on all flat basis triples
    {
        bool ok = true;
        const int d = alg.total_dim;
        for (int a = 0; a < d && ok; ++a)
            for (int b = 0; b < d && ok; ++b)
                for (int c = 0; c < d; ++c) {
                    auto va = basis_vector(alg, alg.flat_index[a].first, alg.flat_index[a].second);
                    auto vb = basis_vector(alg, alg.flat_index[b].first, alg.flat_index[b].second);
                    auto vc = basis_vector(alg, alg.flat_index[c].first, alg.flat_index[c].second);
                    LieVector sum = add(alg, bracket(alg, bracket(alg, va, vb), vc),
                                        add(alg, bracket(alg, bracket(alg, vb, vc), va),
                                            bracket(alg, bracket(alg, vc, va), vb)));
                    if (!sum.is_zero()) {
                        ok = false;
                        break;
                    }
                }
        out.push_back(ok ? pass_record(base + "/jacobi", "jacobi-identity",
                                       "all basis triples")
                         : fail_record(base + "/jacobi", "jacobi-identity",
                                       "Jacobi identity fails on a basis triple",
                                       cx({{"group", group_name}})));
    }
    // antisymmetry [v,v] = 0 on basis
    {
        bool ok = true;
        for (int a = 0; a < alg.total_dim && ok; ++a) {
            auto va = basis_vector(alg, alg.flat_index[a].first, alg.flat_index[a].second);
            if (!bracket(alg, va, va).is_zero()) ok = false;
        }
        out.push_back(ok ? pass_record(base + "/alternating", "alternating-bracket", "")
                         : fail_record(base + "/alternating", "alternating-bracket",
                                       "[v,v] != 0", cx({{"group", group_name}})));
    }
    // power identities for every non-identity element
    {
        bool deg_ok = true, br_ok = true;
        OrderedJson bad_deg, bad_br;
        for (int u = 1; u < g->order; ++u) {
            PowerIdentityReport rep = verify_power_identities(alg, u);
            if (!rep.power_in_expected_term && deg_ok) {
                deg_ok = false;
                bad_deg = cx({{"group", group_name}, {"u", g->label(u)}, {"info", rep.details}});
            }
            if (!rep.bracket_identity && br_ok) {
                br_ok = false;
                bad_br = cx({{"group", group_name}, {"u", g->label(u)}, {"info", rep.details}});
            }
        }
        out.push_back(deg_ok ? pass_record(base + "/power-degree", "power-degree-growth",
                                           "delta(u^p) >= p*delta(u) for every u")
                             : fail_record(base + "/power-degree", "power-degree-growth",
                                           "degree growth fails", bad_deg));
        out.push_back(br_ok ? pass_record(base + "/power-bracket", "power-bracket-identity",
                                          "[x, image(u^p)] = p-fold bracket for every u")
                            : fail_record(base + "/power-bracket", "power-bracket-identity",
                                          "bracket-power identity fails", bad_br));
    }
    // ad-index sanity bound
    {
        bool ok = true;
        int degrees_nonzero = 0;
        for (const auto& c : alg.components)
            if (c.dim > 0) ++degrees_nonzero;
        for (int a = 0; a < alg.total_dim && ok; ++a) {
            auto va = basis_vector(alg, alg.flat_index[a].first, alg.flat_index[a].second);
            if (ad_index(alg, va) > degrees_nonzero + 1) ok = false;
        }
        out.push_back(ok ? pass_record(base + "/ad-sanity", "ad-index-sanity",
                                       "ad indices within the graded bound")
                         : fail_record(base + "/ad-sanity", "ad-index-sanity",
                                       "an ad index exceeds the graded bound",
                                       cx({{"group", group_name}})));
    }
    // exhaustively found coset-identity parameters vs the ad bound
    {
        bool ok = true;
        long admissible = 0;
        int tightest = -1;
        OrderedJson bad;
        auto normals = normal_subgroups(g);
        for (int elt = 1; elt < g->order && ok; ++elt) {
            int adx = ad_index(alg, image_of_element(alg, elt));
            for (const auto& nn : normals) {
                if (!ok) break;
                // coset representatives: least member per coset
                std::vector<int> reps;
                {
                    std::vector<uint8_t> seen(g->order, 0);
                    for (int x = 0; x < g->order; ++x) {
                        if (seen[x]) continue;
                        reps.push_back(x);
                        for (int m : nn.members) seen[g->mul(m, x)] = 1;
                    }
                }
                int m = 0;
                for (int idx = g->order / nn.order(); idx > 1; idx /= p) ++m;
                for (int b : reps) {
                    for (int i = 1; i <= 4 && ok; ++i)
                        for (int k = 0; k <= 2; ++k) {
                            long pk = 1;
                            for (int t = 0; t < k; ++t) pk *= p;
                            int gpk = g->pow(elt, pk);
                            bool hyp = true;
                            for (int x : nn.members) {
                                int it = iterated_commutator(*g, g->mul(x, b), elt, i);
                                if (g->comm(it, gpk) != 0) {
                                    hyp = false;
                                    break;
                                }
                            }
                            if (!hyp) continue;
                            ++admissible;
                            int bound = i + m + (int)pk;
                            if (tightest < 0 || bound < tightest) tightest = bound;
                            if (adx > bound) {
                                ok = false;
                                bad = cx({{"group", group_name},
                                          {"g", g->label(elt)},
                                          {"i", i},
                                          {"k", k},
                                          {"m", m},
                                          {"ad_index", adx}});
                                break;
                            }
                        }
                    if (!ok) break;
                }
            }
        }
        std::ostringstream os;
        os << admissible << " admissible (g,N,b,i,k) tuples";
        if (tightest >= 0) os << ", tightest bound " << tightest;
        out.push_back(ok ? pass_record(base + "/ad-bound", "ad-nilpotency-bound", os.str())
                         : fail_record(base + "/ad-bound", "ad-nilpotency-bound",
                                       "ad index exceeded i+m+p^k for an admissible tuple",
                                       bad));
    }
    return out;
}

// ------------------------------------------------------------------ model

namespace {

NilpotentModel::Elt random_p_integral(const NilpotentModel& model, std::mt19937_64& rng) {
    NilpotentModel::Elt e = model.zero();
    for (int i = 0; i < model.dim(); ++i) {
        long num = (long)(rng() % 41) - 20;
        long den = 1 + (long)(rng() % 12);
        while (den % (long)(unsigned long)model.prime().convert_to<unsigned long>() == 0)
            den = 1 + (long)(rng() % 12);
        e[i] = Rat(num, den);
    }
    return e;
}

std::vector<CheckRecord> run_model_checks(int rank, int clazz, int p, uint64_t seed) {
    std::vector<CheckRecord> out;
    std::ostringstream tag;
    tag << "model/r" << rank << "c" << clazz << "p" << p;
    const std::string base = tag.str();
    NilpotentModel model(rank, clazz, p);
    std::mt19937_64 rng(unit_seed(seed, base));

    // group axioms on seeded random triples
    {
        bool ok = true;
        OrderedJson bad;
        for (int t = 0; t < 1000 && ok; ++t) {
            auto u = random_p_integral(model, rng);
            auto v = random_p_integral(model, rng);
            auto w = random_p_integral(model, rng);
            auto left = model.mul(model.mul(u, v), w);
            auto right = model.mul(u, model.mul(v, w));
            if (left != right) {
                ok = false;
                bad = cx({{"config", base}, {"trial", t}, {"law", "associativity"}});
            }
            if (ok && (!model.is_zero(model.mul(u, model.inverse(u))) ||
                       model.mul(u, model.zero()) != u || model.mul(model.zero(), u) != u)) {
                ok = false;
                bad = cx({{"config", base}, {"trial", t}, {"law", "identity/inverse"}});
            }
        }
        out.push_back(ok ? pass_record(base + "/axioms", "model-group-axioms",
                                       "1000 seeded triples, exact")
                         : fail_record(base + "/axioms", "model-group-axioms",
                                       "group axiom failed", bad));
    }
    // x^alpha = alpha x for integer alpha <= 10
    {
        bool ok = true;
        auto u = random_p_integral(model, rng);
        auto acc = model.zero();
        for (int a = 1; a <= 10 && ok; ++a) {
            acc = model.mul(acc, u);
            if (acc != model.power(Rat(a), u)) ok = false;
        }
        out.push_back(ok ? pass_record(base + "/powers", "integer-power-scaling",
                                       "x^alpha = alpha*x for alpha = 1..10")
                         : fail_record(base + "/powers", "integer-power-scaling",
                                       "power law failed", cx({{"config", base}})));
    }
    // commutation bridge
    {
        bool ok = true;
        // commuting pairs: scalar multiples and top-weight elements
        auto u = random_p_integral(model, rng);
        auto v = model.power(Rat(3), u);
        if (!model.is_zero(model.bracket(u, v)) || model.mul(u, v) != model.mul(v, u) ||
            model.mul(u, v) != model.add(u, v))
            ok = false;
        auto topa = model.zero();
        auto topb = model.zero();
        auto [tb, te] = model.basis().weight_range(clazz);
        for (int i = tb; i < te; ++i) {
            topa[i] = Rat(i + 1);
            topb[i] = Rat(2 * i + 1, 3 % p == 0 ? 2 : 3);
        }
        if (ok && (!model.is_zero(model.bracket(topa, topb)) ||
                   model.mul(topa, topb) != model.add(topa, topb)))
            ok = false;
        // sampled converse: uv = vu => [u,v] = 0
        for (int t = 0; t < 200 && ok; ++t) {
            auto a = random_p_integral(model, rng);
            auto b = random_p_integral(model, rng);
            if (model.mul(a, b) == model.mul(b, a) && !model.is_zero(model.bracket(a, b)))
                ok = false;
        }
        out.push_back(ok ? pass_record(base + "/bridge", "commutation-bridge",
                                       "[u,v]=0 implies uv=vu=u+v; sampled converse")
                         : fail_record(base + "/bridge", "commutation-bridge",
                                       "commutation bridge failed", cx({{"config", base}})));
    }
    // valuation growth on the group law and on an Engel word; the checked
    // entry points throw BoundViolated on any violation
    {
        bool ok = true;
        OrderedJson bad;
        std::string note;
        try {
            auto profile = model.bch_valuation_profile();
            model.engel_valuation_profile(2);
            std::ostringstream os;
            os << "f =";
            for (int w = 1; w <= clazz; ++w) {
                if (profile[w]) os << " " << *profile[w];
                else os << " -";
            }
            note = os.str();
        } catch (const Error& e) {
            ok = false;
            bad = cx({{"config", base}, {"error", e.what()}});
        }
        out.push_back(ok ? pass_record(base + "/valuation", "valuation-growth",
                                       "profile respects the factorial bound; " + note)
                         : fail_record(base + "/valuation", "valuation-growth",
                                       "valuation bound violated", bad));
    }
    return out;
}

// ------------------------------------------------------------- vandermonde

std::vector<CheckRecord> run_vandermonde_grid(int k, int p, int m) {
    std::vector<CheckRecord> out;
    std::ostringstream tag;
    tag << "vandermonde/k" << k << "p" << p << "m" << m;
    const std::string base = tag.str();
    try {
        VandermondeSystem sys = solve_system(k, p, m);
        beta_sequence(sys, 50);
        valuation_checks(sys, 12);
        std::ostringstream os;
        os << "c solved, beta p-integral to 50, denominators exact, tails to 12";
        if (!sys.product_form_sign_flips.empty()) {
            os << "; product-form sign flips at i =";
            for (int i : sys.product_form_sign_flips) os << " " << i;
        }
        out.push_back(pass_record(base, "beta-integrality", os.str()));
    } catch (const Error& e) {
        out.push_back(fail_record(base, "beta-integrality", e.what(),
                                  cx({{"k", k}, {"p", p}, {"m", m}})));
    }
    return out;
}

std::vector<CheckRecord> run_linearize(int l, int k, int p, int m, int W) {
    std::vector<CheckRecord> out;
    std::ostringstream tag;
    tag << "linearize/l" << l << "k" << k << "p" << p << "m" << m << "W" << W;
    const std::string base = tag.str();
    try {
        LinearizationReport rep = linearization_identity_check(l, k, p, m, W);
        std::string details = "degrees 1.." + std::to_string(k - 1) +
                              " vanish; beta parts match; delta multipliers integral";
        for (const auto& n : rep.notes) details += "; " + n;
        out.push_back(pass_record(base, "linearization-identity", details));
    } catch (const Error& e) {
        out.push_back(fail_record(base, "linearization-identity", e.what(),
                                  cx({{"l", l}, {"k", k}, {"p", p}, {"m", m}, {"W", W}})));
    }
    return out;
}

} // namespace

std::vector<std::string> core_suite_names() {
    return {"actions", "sinks", "theorems", "coprime-sinks", "zassenhaus"};
}

std::vector<std::string> extended_suite_names() {
    return {"model", "vandermonde", "linearize"};
}

std::vector<CheckUnit> suite_units(const std::string& suite, const SuiteContext& ctx) {
    std::vector<CheckUnit> units;
    if (suite == "actions") {
        for (const auto& a : catalog_action_entries())
            if (a.has_tag("q2"))
                units.push_back({"actions/" + a.name, [name = a.name] {
                                     return action_lemma_records(catalog_action(name),
                                                                 "actions/" + name);
                                 }});
    } else if (suite == "sinks") {
        for (const auto& e : catalog_entries())
            if (e.expect_order <= 200)
                units.push_back({"sinks/" + e.name, [name = e.name] {
                                     return sink_records(catalog_group(name), "sinks/" + name);
                                 }});
    } else if (suite == "theorems") {
        for (const auto& a : catalog_action_entries())
            if (a.has_tag("q2"))
                units.push_back({"theorems/" + a.name, [name = a.name] {
                                     return theorem_shadow_records(catalog_action(name),
                                                                   "theorems/" + name);
                                 }});
    } else if (suite == "coprime-sinks") {
        for (const auto& a : catalog_action_entries())
            if (a.has_tag("sink-pair"))
                units.push_back({"coprime-sinks/" + a.name, [name = a.name] {
                                     return coprime_sink_records(catalog_action(name),
                                                                 "coprime-sinks/" + name);
                                 }});
    } else if (suite == "zassenhaus") {
        for (const auto& e : catalog_entries())
            if (e.p_group_prime() > 0 && e.expect_order <= 256)
                units.push_back({"zassenhaus/" + e.name,
                                 [name = e.name, p = e.p_group_prime(), seed = ctx.seed] {
                                     return zassenhaus_records(catalog_group(name), p,
                                                               "zassenhaus/" + name, seed);
                                 }});
    } else if (suite == "model") {
        for (auto [r, c, p] : std::vector<std::tuple<int, int, int>>{{2, 4, 3}, {2, 4, 5}, {2, 3, 2}})
            units.push_back({"model/r" + std::to_string(r) + "c" + std::to_string(c) + "p" +
                                 std::to_string(p),
                             [r = r, c = c, p = p, seed = ctx.seed] {
                                 return run_model_checks(r, c, p, seed);
                             }});
    } else if (suite == "vandermonde") {
        for (int k = 1; k <= 6; ++k)
            for (int p : {2, 3, 5})
                for (int m = 1; m <= 2; ++m)
                    units.push_back({"vandermonde/k" + std::to_string(k) + "p" +
                                         std::to_string(p) + "m" + std::to_string(m),
                                     [k = k, p = p, m = m] {
                                         return run_vandermonde_grid(k, p, m);
                                     }});
    } else if (suite == "linearize") {
        for (auto [l, k, p] : std::vector<std::tuple<int, int, int>>{{1, 2, 3}, {2, 3, 3}})
            units.push_back({"linearize/l" + std::to_string(l) + "k" + std::to_string(k) + "p" +
                                 std::to_string(p),
                             [l = l, k = k, p = p] { return run_linearize(l, k, p, 1, 5); }});
    } else {
        throw Error(ErrorCode::UsageError, "unknown suite '" + suite + "'");
    }
    return units;
}

std::vector<CheckRecord> run_units(std::vector<CheckUnit> units, int jobs) {
    std::vector<std::vector<CheckRecord>> results(units.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < units.size(); ++i) results[i] = units[i].run();
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        int nthreads = std::min<size_t>(jobs, units.size());
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= units.size()) return;
                    results[i] = units[i].run();
                }
            });
        for (auto& th : pool) th.join();
    }
    std::vector<CheckRecord> out;
    for (auto& r : results)
        for (auto& c : r) out.push_back(std::move(c));
    return out;
}

} // namespace ewb
