#include "ewb/nilpotent_model.hpp"

#include "ewb/error.hpp"
#include "ewb/lie_series.hpp"

namespace ewb {

NilpotentModel::NilpotentModel(int rank, int nilpotency_class, const Int& p)
    : rank_(rank), class_(nilpotency_class), p_(p) {
    if (rank < 1 || rank > 4) throw Error(ErrorCode::Internal, "rank out of range");
    if (nilpotency_class < 1 || nilpotency_class > 8)
        throw Error(ErrorCode::Internal, "class out of range");
    if (p < 2) throw Error(ErrorCode::Internal, "bad prime");
    scale_ = (p == 2) ? Int(4) : p;
    basis_ = &LyndonBasis::get(rank_, class_);
    const int n = basis_->size();
    sc_.assign(n, std::vector<std::vector<std::pair<int, Rat>>>(n));
    // free-Lie structure constants through the associative embedding,
    // then one factor of the scale per bracket
    std::string letters = std::string("abcd").substr(0, rank_);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int w = basis_->monomial(i).weight + basis_->monomial(j).weight;
            if (w > class_ || i == j) continue;
            AssocPoly prod = assoc_commutator(basis_->expansion(i), basis_->expansion(j));
            auto coords = lie_coordinates(*basis_, prod);
            for (const auto& [idx, c] : coords)
                if (c != 0) sc_[i][j].emplace_back(idx, c * Rat(scale_));
        }
    }
}

NilpotentModel::Elt NilpotentModel::zero() const { return Elt(dim(), Rat(0)); }

NilpotentModel::Elt NilpotentModel::generator(int i) const {
    if (i < 0 || i >= rank_) throw Error(ErrorCode::Internal, "generator out of range");
    Elt e = zero();
    e[i] = Rat(1); // weight-1 monomials come first, in letter order
    return e;
}

NilpotentModel::Elt NilpotentModel::add(const Elt& a, const Elt& b) const {
    Elt out = a;
    for (int i = 0; i < dim(); ++i) out[i] += b[i];
    return out;
}

NilpotentModel::Elt NilpotentModel::sub(const Elt& a, const Elt& b) const {
    Elt out = a;
    for (int i = 0; i < dim(); ++i) out[i] -= b[i];
    return out;
}

NilpotentModel::Elt NilpotentModel::scale(const Rat& c, const Elt& a) const {
    Elt out = a;
    for (auto& v : out) v *= c;
    return out;
}

NilpotentModel::Elt NilpotentModel::bracket(const Elt& a, const Elt& b) const {
    Elt out = zero();
    for (int i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[j] == 0) continue;
            if (i == j) continue;
            const Rat f = a[i] * b[j];
            for (const auto& [idx, c] : sc_[i][j]) out[idx] += f * c;
        }
    }
    return out;
}

bool NilpotentModel::is_zero(const Elt& a) const {
    for (const auto& v : a)
        if (v != 0) return false;
    return true;
}

bool NilpotentModel::is_p_integral(const Elt& a) const {
    for (const auto& v : a)
        if (!is_p_integer(v, p_)) return false;
    return true;
}

NilpotentModel::Elt NilpotentModel::mul(const Elt& a, const Elt& b) const {
    if (!is_p_integral(a) || !is_p_integral(b))
        throw Error(ErrorCode::NotPIntegral, "group law needs p-integral inputs");
    const LieSeries& phi = bch_series(class_);
    const auto& bch_basis = phi.basis();
    // evaluate each BCH monomial at (a, b), memoized along the shared
    // standard-factorization subtrees
    std::vector<std::optional<Elt>> memo(bch_basis.size());
    std::function<const Elt&(int)> eval = [&](int idx) -> const Elt& {
        if (memo[idx]) return *memo[idx];
        const auto& m = bch_basis.monomial(idx);
        if (m.weight == 1) {
            memo[idx] = (m.word[0] == 0) ? a : b;
        } else {
            memo[idx] = bracket(eval(m.left), eval(m.right));
        }
        return *memo[idx];
    };
    Elt out = zero();
    for (const auto& [idx, c] : phi.coeffs) {
        const Elt& v = eval(idx);
        for (int i = 0; i < dim(); ++i)
            if (v[i] != 0) out[i] += c * v[i];
    }
    if (!is_p_integral(out))
        throw Error(ErrorCode::NotPIntegral, "group law produced a non-p-integral coefficient");
    return out;
}

NilpotentModel::Elt NilpotentModel::power(const Rat& alpha, const Elt& a) const {
    if (!is_p_integer(alpha, p_))
        throw Error(ErrorCode::NotPIntegral, "exponent must be a p-integer");
    return scale(alpha, a);
}

NilpotentModel::Elt NilpotentModel::group_comm(const Elt& a, const Elt& b) const {
    return mul(mul(mul(inverse(a), inverse(b)), a), b);
}

NilpotentModel::Elt NilpotentModel::engel(const Elt& a, const Elt& z, int l) const {
    Elt acc = a;
    for (int i = 0; i < l; ++i) acc = group_comm(acc, z);
    return acc;
}

std::vector<std::optional<long>> NilpotentModel::valuation_profile(const Elt& a) const {
    std::vector<std::optional<long>> profile(class_ + 1);
    for (int w = 1; w <= class_; ++w) {
        auto [b, e] = basis_->weight_range(w);
        std::optional<long> best;
        for (int i = b; i < e; ++i) {
            auto v = padic_val(a[i], p_);
            if (!v) continue;
            if (!best || *v < *best) best = v;
        }
        profile[w] = best;
    }
    return profile;
}

namespace {

void check_growth_bound(const std::vector<std::optional<long>>& profile, const Int& p,
                        int clazz) {
    for (int w = 1; w <= clazz; ++w) {
        if (!profile[w]) continue;
        bool fine = (p == 2) ? (*profile[w] >= w - 1)
                             : (Rat(*profile[w]) >= Rat(Int(w - 1) * (p - 2), p - 1));
        if (!fine)
            throw Error(ErrorCode::BoundViolated,
                        "weight-" + std::to_string(w) + " valuation " +
                            std::to_string(*profile[w]) + " breaks the growth bound");
    }
}

} // namespace

std::vector<std::optional<long>> NilpotentModel::bch_valuation_profile() const {
    if (rank_ < 2) throw Error(ErrorCode::PreconditionViolated, "needs two generators");
    auto profile = valuation_profile(mul(generator(0), generator(1)));
    check_growth_bound(profile, p_, class_);
    return profile;
}

std::vector<std::optional<long>> NilpotentModel::engel_valuation_profile(int l) const {
    if (rank_ < 2) throw Error(ErrorCode::PreconditionViolated, "needs two generators");
    auto profile = valuation_profile(engel(generator(0), generator(1), l));
    check_growth_bound(profile, p_, class_);
    return profile;
}

} // namespace ewb
