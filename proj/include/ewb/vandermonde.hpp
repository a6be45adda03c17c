#ifndef EWB_VANDERMONDE_HPP
#define EWB_VANDERMONDE_HPP

#include "ewb/rational.hpp"

#include <string>
#include <vector>

namespace ewb {

/// The k x k system on nodes 1, 1+p^m, 1+p^{2m}, ..., 1+p^{(k-1)m}:
/// c solves  sum_i c_i x_i^t = [t == 0]  for t = 0..k-1
/// (the first row of the inverse Vandermonde matrix).
struct VandermondeSystem {
    int k = 0;
    Int p;
    int m = 0;
    std::vector<Int> nodes;
    std::vector<Rat> c;
    Int delta; // det V = prod_{i<j} (x_j - x_i)
    /// The customary product formulas for the c_i. Their usual rendering
    /// drops a (-1)^{k-1}, so for even k they come out with the opposite
    /// sign; the defining system is authoritative and mismatches are
    /// recorded here rather than corrected.
    std::vector<Rat> product_form;
    std::vector<int> product_form_sign_flips;
};

VandermondeSystem solve_system(int k, const Int& p, int m);

/// beta_t = sum_i c_i x_i^t for t = 0..T, verified to be p-integers
/// (IntegralityViolated on failure), with beta_0 = 1 and beta_1..beta_{k-1} = 0.
std::vector<Rat> beta_sequence(const VandermondeSystem& sys, int T);

/// Independent route to the same numbers: the beta_t satisfy the linear
/// recurrence with characteristic polynomial prod_i (x - x_i), seeded by
/// beta_0..beta_{k-1} = (1, 0, ..., 0). Used as a test oracle.
std::vector<Rat> beta_by_recurrence(const VandermondeSystem& sys, int T);

struct ValuationReport {
    struct Row {
        int i;
        long denom_val;
        long claimed; // m*i*(2k-i-1)/2
    };
    std::vector<Row> rows; // i = 1..k-1
    long c0_denom_val = 0; // recorded; the formula above does not cover i = 0
    int tail_checked_to = 0;
};

/// Exact denominator valuations (ClaimViolated on mismatch, carrying the
/// counterexample) plus the tail check: c_i * p^{imu} is a p-integer for
/// k <= u <= U, i >= 1.
ValuationReport valuation_checks(const VandermondeSystem& sys, int U);

struct LinearizationReport {
    int l = 0, k = 0, m = 0, W = 0;
    Int p;
    bool degree_zero_matches = false;  // degree-0 part equals w_0
    bool low_degrees_vanish = false;   // degrees 1..k-1 identically zero
    bool beta_parts_match = false;     // degree-t part == beta_t * w_t, k<=t<=W
    bool delta_multipliers_integral = false; // all c_i * delta are integers
    bool cancellation_ok = false;      // delta-cleared identity / delta == identity
    std::vector<std::string> notes;
};

/// End-to-end check of the elimination identity on the Engel word
/// [x+y, z, ..., z]: combine the recomputed substituted series with the
/// solved coefficients and compare the degree parts in x against
/// beta_t-scaled parts of the original. Throws IdentityViolated if any
/// asserted part fails.
LinearizationReport linearization_identity_check(int l, int k, const Int& p, int m, int W);

} // namespace ewb

#endif
