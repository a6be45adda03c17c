#ifndef EWB_NILPOTENT_MODEL_HPP
#define EWB_NILPOTENT_MODEL_HPP

#include "ewb/lyndon.hpp"
#include "ewb/rational.hpp"

#include <optional>
#include <vector>

namespace ewb {

/// Free nilpotent Lie algebra of the given class over the rationals, with
/// every structural bracket carrying one factor of `p` (a factor of 4 when
/// p = 2), so that [L,L] lies in pL and the BCH group law stays p-integral
/// on p-integral coefficient vectors.
class NilpotentModel {
  public:
    NilpotentModel(int rank, int nilpotency_class, const Int& p);

    using Elt = std::vector<Rat>; // dense over the Lyndon basis

    int rank() const { return rank_; }
    int nilpotency_class() const { return class_; }
    const Int& prime() const { return p_; }
    const Int& bracket_scale() const { return scale_; }
    int dim() const { return basis_->size(); }
    const LyndonBasis& basis() const { return *basis_; }

    Elt zero() const;
    Elt generator(int i) const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt scale(const Rat& c, const Elt& a) const;
    /// The p-scaled bracket.
    Elt bracket(const Elt& a, const Elt& b) const;
    bool is_zero(const Elt& a) const;
    bool is_p_integral(const Elt& a) const;

    /// Group law via the BCH series; throws NotPIntegral when an input or
    /// the computed product has a coefficient of negative valuation.
    Elt mul(const Elt& a, const Elt& b) const;
    Elt inverse(const Elt& a) const { return scale(Rat(-1), a); }
    /// alpha-th power = alpha * a (p-integral alpha).
    Elt power(const Rat& alpha, const Elt& a) const;
    /// Group commutator a^{-1} b^{-1} a b via the group law.
    Elt group_comm(const Elt& a, const Elt& b) const;
    /// Left-normed [a, z, ..., z], z repeated l times.
    Elt engel(const Elt& a, const Elt& z, int l) const;

    /// Minimum p-adic valuation of the weight-w coefficients, for
    /// w = 1..class; nullopt marks an identically zero slice.
    std::vector<std::optional<long>> valuation_profile(const Elt& a) const;

    /// Profile of the group-law product of the two first generators, with
    /// the growth bound asserted: f(i) >= (i-1)(p-2)/(p-1) for odd p,
    /// f(i) >= i-1 for p = 2 (bracket scale 4). BoundViolated on failure.
    std::vector<std::optional<long>> bch_valuation_profile() const;
    /// Same bound check on the Engel word [g0, g1, ..., g1] (l factors).
    std::vector<std::optional<long>> engel_valuation_profile(int l) const;

  private:
    int rank_;
    int class_;
    Int p_;
    Int scale_;
    const LyndonBasis* basis_;
    // structure constants of the scaled bracket:
    // sc_[i][j] = sparse list of (basis index, coefficient)
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> sc_;
};

} // namespace ewb

#endif
