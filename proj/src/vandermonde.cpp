#include "ewb/vandermonde.hpp"

#include "ewb/error.hpp"
#include "ewb/lie_series.hpp"

#include <sstream>

namespace ewb {

namespace {

Int int_pow(const Int& b, long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

Rat rat_pow(const Rat& b, long e) {
    Rat r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

// Dense exact linear solve, A x = rhs.
std::vector<Rat> solve_dense(std::vector<std::vector<Rat>> a, std::vector<Rat> rhs) {
    const int n = (int)rhs.size();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) throw Error(ErrorCode::Internal, "singular system");
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (int cc = col; cc < n; ++cc) a[r][cc] -= f * a[col][cc];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
    return x;
}

} // namespace

VandermondeSystem solve_system(int k, const Int& p, int m) {
    if (k < 1 || m < 1 || p < 2)
        throw Error(ErrorCode::PreconditionViolated, "need k >= 1, m >= 1, p prime");
    VandermondeSystem sys;
    sys.k = k;
    sys.p = p;
    sys.m = m;
    sys.nodes.resize(k);
    sys.nodes[0] = 1;
    for (int i = 1; i < k; ++i) sys.nodes[i] = 1 + int_pow(p, (long)i * m);

    // defining system: sum_i c_i x_i^t = [t == 0]
    std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
    std::vector<Rat> rhs(k, Rat(0));
    rhs[0] = 1;
    for (int t = 0; t < k; ++t)
        for (int i = 0; i < k; ++i) a[t][i] = Rat(int_pow(sys.nodes[i], t));
    sys.c = solve_dense(std::move(a), std::move(rhs));

    // Lagrange cross-check: c_i = prod_{j != i} (0 - x_j) / (x_i - x_j)
    for (int i = 0; i < k; ++i) {
        Rat l(1);
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            l *= Rat(-sys.nodes[j]) / Rat(sys.nodes[i] - sys.nodes[j]);
        }
        if (l != sys.c[i])
            throw Error(ErrorCode::Internal, "linear solve disagrees with Lagrange form");
    }

    sys.delta = 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) sys.delta *= sys.nodes[j] - sys.nodes[i];

    // customary product formulas; their rendering omits a (-1)^{k-1}
    sys.product_form.resize(k);
    {
        Rat num(1), den(1);
        for (int j = 1; j < k; ++j) {
            num *= Rat(sys.nodes[j]);
            den *= Rat(-int_pow(p, (long)j * m));
        }
        sys.product_form[0] = num / den;
    }
    for (int s = 1; s < k; ++s) {
        Rat num(1), den(Int(int_pow(p, (long)s * m)));
        for (int j = 1; j < k; ++j) {
            if (j == s) continue;
            num *= Rat(sys.nodes[j]);
            den *= Rat(int_pow(p, (long)s * m) - int_pow(p, (long)j * m));
        }
        sys.product_form[s] = num / den;
    }
    for (int i = 0; i < k; ++i) {
        if (sys.product_form[i] == sys.c[i]) continue;
        if (sys.product_form[i] == -sys.c[i]) {
            sys.product_form_sign_flips.push_back(i);
        } else {
            throw Error(ErrorCode::Internal, "product formula differs beyond sign");
        }
    }
    return sys;
}

std::vector<Rat> beta_sequence(const VandermondeSystem& sys, int T) {
    if (T < sys.k) throw Error(ErrorCode::PreconditionViolated, "need T >= k");
    std::vector<Rat> beta(T + 1);
    std::vector<Rat> node_pow(sys.k, Rat(1));
    for (int t = 0; t <= T; ++t) {
        Rat b(0);
        for (int i = 0; i < sys.k; ++i) {
            b += sys.c[i] * node_pow[i];
            node_pow[i] *= Rat(sys.nodes[i]);
        }
        beta[t] = b;
        if (!is_p_integer(b, sys.p)) {
            std::ostringstream os;
            os << "beta_" << t << " = " << rat_to_string(b) << " is not a " << sys.p
               << "-integer (k=" << sys.k << ", m=" << sys.m << ")";
            throw Error(ErrorCode::IntegralityViolated, os.str());
        }
    }
    if (beta[0] != 1)
        throw Error(ErrorCode::IntegralityViolated, "beta_0 != 1");
    for (int t = 1; t < sys.k; ++t)
        if (beta[t] != 0)
            throw Error(ErrorCode::IntegralityViolated, "beta_t != 0 below k");
    return beta;
}

std::vector<Rat> beta_by_recurrence(const VandermondeSystem& sys, int T) {
    // characteristic polynomial prod (x - x_i) = x^k - e_1 x^{k-1} + ...
    const int k = sys.k;
    std::vector<Rat> charpoly{Rat(1)}; // leading first
    for (int i = 0; i < k; ++i) {
        std::vector<Rat> next(charpoly.size() + 1, Rat(0));
        for (size_t j = 0; j < charpoly.size(); ++j) {
            next[j] += charpoly[j];
            next[j + 1] -= charpoly[j] * Rat(sys.nodes[i]);
        }
        charpoly = std::move(next);
    }
    std::vector<Rat> beta(T + 1, Rat(0));
    beta[0] = 1;
    for (int t = k; t <= T; ++t) {
        Rat b(0);
        for (int j = 1; j <= k; ++j) b -= charpoly[j] * beta[t - j];
        beta[t] = b;
    }
    return beta;
}

ValuationReport valuation_checks(const VandermondeSystem& sys, int U) {
    if (U < sys.k) throw Error(ErrorCode::PreconditionViolated, "need U >= k");
    ValuationReport report;
    report.tail_checked_to = U;
    report.c0_denom_val = padic_val(denominator(sys.c[0]), sys.p);
    for (int i = 1; i < sys.k; ++i) {
        long denom_val = padic_val(denominator(sys.c[i]), sys.p);
        long claimed = (long)sys.m * i * (2 * sys.k - i - 1) / 2;
        if (denom_val != claimed) {
            std::ostringstream os;
            os << "denominator valuation of c_" << i << " is " << denom_val << ", formula says "
               << claimed << " (k=" << sys.k << ", p=" << sys.p << ", m=" << sys.m
               << ", c_i=" << rat_to_string(sys.c[i]) << ")";
            throw Error(ErrorCode::ClaimViolated, os.str());
        }
        report.rows.push_back({i, denom_val, claimed});
    }
    for (int i = 1; i < sys.k; ++i) {
        for (int u = sys.k; u <= U; ++u) {
            Rat t = sys.c[i] * Rat(int_pow(sys.p, (long)i * sys.m * u));
            if (!is_p_integer(t, sys.p)) {
                std::ostringstream os;
                os << "c_" << i << " * p^(imu) not a p-integer at u=" << u;
                throw Error(ErrorCode::ClaimViolated, os.str());
            }
        }
    }
    return report;
}

LinearizationReport linearization_identity_check(int l, int k, const Int& p, int m, int W) {
    if (W < l + 1)
        throw Error(ErrorCode::PreconditionViolated, "need W >= l + 1");
    LinearizationReport report;
    report.l = l;
    report.k = k;
    report.p = p;
    report.m = m;
    report.W = W;

    VandermondeSystem sys = solve_system(k, p, m);
    std::vector<Rat> beta = beta_sequence(sys, W);

    LieSeries base = engel_word(l, W);
    std::vector<LieSeries> w_parts = decompose_by_degree(base, 0);

    // recompute each substituted series from scratch, then combine
    LieSeries x = lie_letter("xyz", W, 0);
    LieSeries y = lie_letter("xyz", W, 1);
    LieSeries z = lie_letter("xyz", W, 2);
    LieSeries lhs = lie_zero("xyz", W);
    std::vector<LieSeries> substituted;
    for (int i = 0; i < k; ++i) {
        LieSeries first = lie_add(lie_scale(Rat(sys.nodes[i]), x), y);
        LieSeries e_i = engel_commutator_series(first, z, l);
        substituted.push_back(e_i);
        lhs = lie_add(lhs, lie_scale(sys.c[i], e_i));
    }
    std::vector<LieSeries> lhs_parts = decompose_by_degree(lhs, 0);

    auto fail = [&](const std::string& what) {
        throw Error(ErrorCode::IdentityViolated,
                    what + " (l=" + std::to_string(l) + ", k=" + std::to_string(k) +
                        ", p=" + p.str() + ", m=" + std::to_string(m) +
                        ", W=" + std::to_string(W) + ")");
    };

    if (!(lhs_parts[0] == w_parts[0])) fail("degree-0 part differs from w_0");
    report.degree_zero_matches = true;

    for (int t = 1; t < k && t <= W; ++t)
        if (!lhs_parts[t].is_zero()) fail("degree-" + std::to_string(t) + " part did not vanish");
    report.low_degrees_vanish = true;

    for (int t = k; t <= W; ++t)
        if (!(lhs_parts[t] == lie_scale(beta[t], w_parts[t])))
            fail("degree-" + std::to_string(t) + " part is not beta_t * w_t");
    report.beta_parts_match = true;

    // delta-cleared variant: all multipliers c_i * delta are integers
    report.delta_multipliers_integral = true;
    LieSeries lhs_cleared = lie_zero("xyz", W);
    for (int i = 0; i < k; ++i) {
        Rat mult = sys.c[i] * Rat(sys.delta);
        if (denominator(mult) != 1) {
            report.delta_multipliers_integral = false;
            fail("delta-cleared multiplier c_" + std::to_string(i) + "*delta is not an integer");
        }
        lhs_cleared = lie_add(lhs_cleared, lie_scale(mult, substituted[i]));
    }
    // torsion-free cancellation: dividing the cleared combination by delta
    // reproduces the uncleared one exactly
    if (!(lie_scale(Rat(Int(1), sys.delta), lhs_cleared) == lhs))
        fail("delta cancellation failed");
    report.cancellation_ok = true;

    if (!sys.product_form_sign_flips.empty()) {
        std::string note = "product-form sign flips at i =";
        for (int i : sys.product_form_sign_flips) note += " " + std::to_string(i);
        report.notes.push_back(note);
    }
    return report;
}

} // namespace ewb
