#ifndef EWB_ENGEL_HPP
#define EWB_ENGEL_HPP

#include "ewb/action.hpp"
#include "ewb/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ewb {

/// The smallest Engel sink of g: the union over all starts x of the cycle
/// part of the orbit of x under x -> [x, g]. In a finite group this is the
/// set of periodic points of that map and is the unique smallest sink.
struct EngelSink {
    GroupPtr group;
    int base = 0; // g
    std::vector<int> sink; // sorted
    struct StartStat {
        int tail = 0;  // steps before entering the sink
        int cycle = 0; // length of the cycle entered
    };
    std::vector<StartStat> per_start; // indexed by start id
    /// s = [s, g, ..., g] with g repeated k times; k minimal (the period).
    std::vector<std::pair<int, int>> witnesses;
};

EngelSink smallest_sink(GroupPtr g, int elt);
bool is_engel_element(GroupPtr g, int elt);

struct BaerReport {
    bool equal = false;
    std::vector<int> engel_elements; // sorted
    Subgroup fitting;
    std::vector<int> engel_minus_fitting;
    std::vector<int> fitting_minus_engel;
};
/// Engel elements coincide with the Fitting subgroup in a finite group.
BaerReport baer_check(GroupPtr g);

enum class HypothesisState { Holds, Vacuous };

struct TheoremShadowReport {
    // (W): all C_G(a) nilpotent  =>  G soluble with Fitting height <= 2
    HypothesisState ward_hypothesis = HypothesisState::Vacuous;
    bool ward_conclusion = false; // meaningful when the hypothesis holds
    std::string ward_details;
    // (E): every element of every C_G(a) is Engel in G  =>  G nilpotent
    HypothesisState engel_hypothesis = HypothesisState::Vacuous;
    bool engel_conclusion = false;
    std::string engel_details;
};

/// Conditional verdicts for a coprime action of an elementary abelian group
/// of order q^2; hypothesis satisfaction and conclusion are reported
/// separately so vacuous instances stay visible.
TheoremShadowReport finite_theorem_checks(const AutAction& action);

struct CoprimeSinkReport {
    int product_order = 0;
    std::vector<int> sink;              // ids in the semidirect product
    std::vector<int> commutator_set;    // K = {[g, phi] : g in F}
    bool sink_equals_commutator_set = false;
    bool gamma_inf_equals_commutator_subgroup = false;
    int gamma_inf_order = 0;
};

/// For nilpotent F and a coprime automorphism phi: in F<phi> the smallest
/// sink of phi is exactly K = {[g, phi] : g in F}, and gamma_inf(F<phi>)
/// equals <K> = [F, phi].
CoprimeSinkReport coprime_sink_check(GroupPtr f, const Automorphism& phi);

/// gamma_inf(F<g>) computed inside the parent; F must be normal in the
/// parent and nilpotent.
Subgroup gamma_inf_with_element(const Subgroup& f, int g);

} // namespace ewb

#endif
