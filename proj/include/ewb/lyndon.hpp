#ifndef EWB_LYNDON_HPP
#define EWB_LYNDON_HPP

#include "ewb/free_algebra.hpp"
#include "ewb/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace ewb {

/// The Lyndon-word basis of the free Lie algebra on `nletters` generators,
/// truncated above `max_weight`. Monomials are ordered by (weight, word),
/// which fixes every index used downstream.
class LyndonBasis {
  public:
    struct Monomial {
        std::vector<int> word;        // letters, Lyndon
        int weight;
        int left = -1, right = -1;    // standard factorization, as basis indices
        std::vector<int> multidegree; // per-letter counts
    };

    LyndonBasis(int nletters, int max_weight);

    int nletters() const { return nletters_; }
    int max_weight() const { return max_weight_; }
    int size() const { return (int)monomials_.size(); }
    const Monomial& monomial(int idx) const { return monomials_[idx]; }
    /// Basis indices [begin, end) of the given weight.
    std::pair<int, int> weight_range(int weight) const;
    int count_of_weight(int weight) const;
    /// -1 when the word is not Lyndon (or out of range).
    int index_of_word(const std::vector<int>& word) const;
    /// Associative expansion of the standard bracketing of monomial idx.
    const AssocPoly& expansion(int idx) const { return expansions_[idx]; }
    /// Word rendered with the given single-character letter names.
    std::string word_string(int idx, const std::string& letters) const;
    /// Nested-bracket rendering, e.g. [x,[x,y]].
    std::string bracket_string(int idx, const std::string& letters) const;

    /// Shared, cached instance.
    static const LyndonBasis& get(int nletters, int max_weight);

  private:
    int nletters_;
    int max_weight_;
    std::vector<Monomial> monomials_;
    std::vector<AssocPoly> expansions_;
    std::vector<int> weight_begin_; // size max_weight_+2
    std::map<std::vector<int>, int> index_;
};

/// Coordinates of a Lie element (given in associative form) on the Lyndon
/// basis. Throws NotPrimitive when the input is not a Lie element.
std::map<int, Rat> lie_coordinates(const LyndonBasis& basis, const AssocPoly& p);

} // namespace ewb

#endif
