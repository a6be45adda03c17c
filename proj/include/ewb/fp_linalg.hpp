#ifndef EWB_FP_LINALG_HPP
#define EWB_FP_LINALG_HPP

#include <vector>

namespace ewb {

/// Row-space accumulator over F_p with rows kept in reduced echelon form.
class FpSpan {
  public:
    FpSpan(int p, int dim) : p_(p), dim_(dim) {}

    /// Adds a vector; returns true when the rank grew.
    bool insert(std::vector<int> v);
    bool contains(std::vector<int> v) const;
    int rank() const { return (int)rows_.size(); }
    int dim() const { return dim_; }
    int p() const { return p_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

  private:
    void reduce(std::vector<int>& v) const;

    int p_;
    int dim_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> pivots_;
};

int fp_inverse(int a, int p);
std::vector<int> fp_add(const std::vector<int>& a, const std::vector<int>& b, int p);
std::vector<int> fp_scale(int c, const std::vector<int>& a, int p);
bool fp_is_zero(const std::vector<int>& a);

/// A^n = 0 detection: least n >= 1 with A^n = 0, or -1 if A^cap != 0.
int nilpotency_index(const std::vector<std::vector<int>>& a, int p, int cap);

} // namespace ewb

#endif
