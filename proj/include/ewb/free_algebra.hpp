#ifndef EWB_FREE_ALGEBRA_HPP
#define EWB_FREE_ALGEBRA_HPP

#include "ewb/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ewb {

/// Element of the free associative algebra on `nletters` generators,
/// truncated above `max_weight`. Stored densely per weight: the weight-w
/// slice has nletters^w entries, one per word, indexed so that numeric
/// order equals lexicographic order of words of that length.
class AssocPoly {
  public:
    AssocPoly(int nletters, int max_weight);

    static AssocPoly constant(int nletters, int max_weight, const Rat& c);
    static AssocPoly letter(int nletters, int max_weight, int letter);

    int nletters() const { return nletters_; }
    int max_weight() const { return max_weight_; }

    const Rat& coeff(int weight, long word) const;
    void set_coeff(int weight, long word, const Rat& c);
    void add_coeff(int weight, long word, const Rat& c);

    bool is_zero() const;
    /// Least weight with a nonzero slice; max_weight + 1 when zero.
    int min_weight() const;

    AssocPoly& operator+=(const AssocPoly& o);
    AssocPoly& operator-=(const AssocPoly& o);
    AssocPoly& operator*=(const Rat& c);
    friend AssocPoly operator+(AssocPoly a, const AssocPoly& b) { return a += b; }
    friend AssocPoly operator-(AssocPoly a, const AssocPoly& b) { return a -= b; }
    friend AssocPoly operator*(AssocPoly a, const Rat& c) { return a *= c; }
    friend AssocPoly operator*(const AssocPoly& a, const AssocPoly& b);
    bool operator==(const AssocPoly& o) const;

    /// The slice of a single weight, as a standalone polynomial.
    AssocPoly weight_part(int weight) const;

    const std::vector<Rat>& slice(int weight) const { return by_weight_[weight]; }

    static long word_count(int nletters, int weight);
    static std::vector<int> decode_word(int nletters, int weight, long word);
    static long encode_word(int nletters, const std::vector<int>& letters);
    /// Concatenation index of (wa,a)·(wb,b).
    static long concat(int nletters, long a, int wb, long b);

  private:
    void check_compatible(const AssocPoly& o) const;

    int nletters_;
    int max_weight_;
    std::vector<std::vector<Rat>> by_weight_; // [0..max_weight_]
};

/// exp of a polynomial with zero constant term (includes the 1).
AssocPoly exp_truncated(const AssocPoly& a);
/// log of a polynomial with constant term exactly 1.
AssocPoly log_truncated(const AssocPoly& a);
/// a*b - b*a.
AssocPoly assoc_commutator(const AssocPoly& a, const AssocPoly& b);
/// Left-normed bracketing [[..[l0,l1],..],l_{w-1}] of a single word, expanded.
AssocPoly left_normed_word(int nletters, int max_weight, const std::vector<int>& letters);

} // namespace ewb

#endif
