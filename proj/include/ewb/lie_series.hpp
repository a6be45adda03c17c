#ifndef EWB_LIE_SERIES_HPP
#define EWB_LIE_SERIES_HPP

#include "ewb/free_algebra.hpp"
#include "ewb/lyndon.hpp"
#include "ewb/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace ewb {

/// A truncated element of the free Lie algebra, held as coordinates on the
/// Lyndon basis. `letters` names the generators (single characters); two
/// series combine only when letters and truncation agree.
struct LieSeries {
    std::string letters; // e.g. "XY" or "xyz"
    int max_weight = 0;
    std::map<int, Rat> coeffs; // basis index -> nonzero coefficient

    const LyndonBasis& basis() const;
    bool is_zero() const { return coeffs.empty(); }
    void prune(); // drop explicit zeros
    Rat coeff(int idx) const;

    bool operator==(const LieSeries& o) const;
};

LieSeries lie_zero(const std::string& letters, int max_weight);
LieSeries lie_letter(const std::string& letters, int max_weight, int letter);

LieSeries lie_add(const LieSeries& a, const LieSeries& b);
LieSeries lie_sub(const LieSeries& a, const LieSeries& b);
LieSeries lie_scale(const Rat& c, const LieSeries& a);
/// Lie bracket, rewritten into the Lyndon basis (weights above the
/// truncation are dropped).
LieSeries lie_bracket(const LieSeries& a, const LieSeries& b);

/// Round-trips through the associative algebra.
AssocPoly lie_to_assoc(const LieSeries& a);
LieSeries lie_from_assoc(const std::string& letters, const AssocPoly& p);

/// Slice of a fixed total weight.
LieSeries weight_part(const LieSeries& a, int weight);
/// Parts of fixed degree in one letter; index t holds the degree-t part.
std::vector<LieSeries> decompose_by_degree(const LieSeries& a, int letter);
/// Substitute 0 for a letter; computed through the associative expansion.
LieSeries substitute_zero(const LieSeries& a, int letter);
/// Substitute c*letter for a letter (scales each monomial by c^deg).
LieSeries substitute_scale(const LieSeries& a, int letter, const Rat& c);

/// The Baker-Campbell-Hausdorff series log(exp X * exp Y) on letters "XY",
/// computed in the truncated free associative algebra and certified
/// primitive by the Dynkin idempotent before conversion. Cached per weight.
const LieSeries& bch_series(int max_weight);

/// log(exp a * exp b) for Lie series on a shared alphabet.
LieSeries bch_product(const LieSeries& a, const LieSeries& b);
/// Group commutator log(exp(-a) exp(-b) exp(a) exp(b)).
LieSeries group_commutator_series(const LieSeries& a, const LieSeries& b);
/// Left-normed [a, z, z, ..., z] with z repeated l times, in the BCH group.
LieSeries engel_commutator_series(const LieSeries& a, const LieSeries& z, int l);
/// [x+y, z, ..., z] (l times) on the alphabet "xyz".
LieSeries engel_word(int l, int max_weight);

} // namespace ewb

#endif
