#include "ewb/lie_series.hpp"

#include "ewb/error.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace ewb {

const LyndonBasis& LieSeries::basis() const {
    return LyndonBasis::get((int)letters.size(), max_weight);
}

void LieSeries::prune() {
    for (auto it = coeffs.begin(); it != coeffs.end();)
        it = (it->second == 0) ? coeffs.erase(it) : std::next(it);
}

Rat LieSeries::coeff(int idx) const {
    auto it = coeffs.find(idx);
    return it == coeffs.end() ? Rat(0) : it->second;
}

bool LieSeries::operator==(const LieSeries& o) const {
    return letters == o.letters && max_weight == o.max_weight && coeffs == o.coeffs;
}

namespace {

void check_same_shape(const LieSeries& a, const LieSeries& b) {
    if (a.letters != b.letters || a.max_weight != b.max_weight)
        throw Error(ErrorCode::AlphabetMismatch, "mixing series over different alphabets");
}

} // namespace

LieSeries lie_zero(const std::string& letters, int max_weight) {
    if (letters.empty() || max_weight < 1)
        throw Error(ErrorCode::Internal, "bad series shape");
    return LieSeries{letters, max_weight, {}};
}

LieSeries lie_letter(const std::string& letters, int max_weight, int letter) {
    LieSeries s = lie_zero(letters, max_weight);
    std::vector<int> w{letter};
    int idx = s.basis().index_of_word(w);
    if (idx < 0) throw Error(ErrorCode::Internal, "letter out of range");
    s.coeffs[idx] = Rat(1);
    return s;
}

LieSeries lie_add(const LieSeries& a, const LieSeries& b) {
    check_same_shape(a, b);
    LieSeries out = a;
    for (const auto& [idx, c] : b.coeffs) out.coeffs[idx] += c;
    out.prune();
    return out;
}

LieSeries lie_sub(const LieSeries& a, const LieSeries& b) {
    return lie_add(a, lie_scale(Rat(-1), b));
}

LieSeries lie_scale(const Rat& c, const LieSeries& a) {
    LieSeries out = a;
    if (c == 0) {
        out.coeffs.clear();
        return out;
    }
    for (auto& [idx, v] : out.coeffs) v *= c;
    return out;
}

AssocPoly lie_to_assoc(const LieSeries& a) {
    const auto& basis = a.basis();
    AssocPoly p((int)a.letters.size(), a.max_weight);
    for (const auto& [idx, c] : a.coeffs) {
        AssocPoly term = basis.expansion(idx);
        term *= c;
        p += term;
    }
    return p;
}

LieSeries lie_from_assoc(const std::string& letters, const AssocPoly& p) {
    const auto& basis = LyndonBasis::get((int)letters.size(), p.max_weight());
    LieSeries out = lie_zero(letters, p.max_weight());
    out.coeffs = lie_coordinates(basis, p);
    out.prune();
    return out;
}

LieSeries lie_bracket(const LieSeries& a, const LieSeries& b) {
    check_same_shape(a, b);
    AssocPoly p = assoc_commutator(lie_to_assoc(a), lie_to_assoc(b));
    return lie_from_assoc(a.letters, p);
}

LieSeries weight_part(const LieSeries& a, int weight) {
    LieSeries out = lie_zero(a.letters, a.max_weight);
    const auto& basis = a.basis();
    for (const auto& [idx, c] : a.coeffs)
        if (basis.monomial(idx).weight == weight) out.coeffs[idx] = c;
    return out;
}

std::vector<LieSeries> decompose_by_degree(const LieSeries& a, int letter) {
    std::vector<LieSeries> parts(a.max_weight + 1, lie_zero(a.letters, a.max_weight));
    const auto& basis = a.basis();
    for (const auto& [idx, c] : a.coeffs) {
        int d = basis.monomial(idx).multidegree.at(letter);
        parts[d].coeffs[idx] = c;
    }
    return parts;
}

LieSeries substitute_zero(const LieSeries& a, int letter) {
    AssocPoly p = lie_to_assoc(a);
    const int n = (int)a.letters.size();
    for (int w = 1; w <= p.max_weight(); ++w) {
        const long count = AssocPoly::word_count(n, w);
        for (long idx = 0; idx < count; ++idx) {
            if (p.coeff(w, idx) == 0) continue;
            auto word = AssocPoly::decode_word(n, w, idx);
            if (std::find(word.begin(), word.end(), letter) != word.end())
                p.set_coeff(w, idx, Rat(0));
        }
    }
    return lie_from_assoc(a.letters, p);
}

LieSeries substitute_scale(const LieSeries& a, int letter, const Rat& c) {
    LieSeries out = lie_zero(a.letters, a.max_weight);
    const auto& basis = a.basis();
    for (const auto& [idx, v] : a.coeffs) {
        int d = basis.monomial(idx).multidegree.at(letter);
        Rat factor(1);
        for (int i = 0; i < d; ++i) factor *= c;
        if (factor * v != 0) out.coeffs[idx] = factor * v;
    }
    return out;
}

namespace {

// Dynkin certificate: for each homogeneous part P_n of a constant-free
// polynomial, the left-normed bracketing map must satisfy D(P_n) = n P_n.
void check_primitive(const AssocPoly& p) {
    const int n = p.nletters();
    for (int w = 1; w <= p.max_weight(); ++w) {
        AssocPoly dynkin(n, p.max_weight());
        const long count = AssocPoly::word_count(n, w);
        bool any = false;
        for (long idx = 0; idx < count; ++idx) {
            const Rat& c = p.coeff(w, idx);
            if (c == 0) continue;
            any = true;
            AssocPoly br = left_normed_word(n, p.max_weight(), AssocPoly::decode_word(n, w, idx));
            br *= c;
            dynkin += br;
        }
        if (!any) continue;
        AssocPoly scaled = p.weight_part(w);
        scaled *= Rat(w);
        if (!(dynkin.weight_part(w) == scaled))
            throw Error(ErrorCode::NotPrimitive, "Dynkin projection is not the identity");
    }
}

} // namespace

const LieSeries& bch_series(int max_weight) {
    static std::mutex mu;
    static std::map<int, LieSeries> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(max_weight);
    if (it != cache.end()) return it->second;

    AssocPoly X = AssocPoly::letter(2, max_weight, 0);
    AssocPoly Y = AssocPoly::letter(2, max_weight, 1);
    AssocPoly prod = exp_truncated(X) * exp_truncated(Y);
    AssocPoly phi = log_truncated(prod);
    check_primitive(phi);
    LieSeries s = lie_from_assoc("XY", phi);
    return cache.emplace(max_weight, std::move(s)).first->second;
}

LieSeries bch_product(const LieSeries& a, const LieSeries& b) {
    check_same_shape(a, b);
    AssocPoly prod = exp_truncated(lie_to_assoc(a)) * exp_truncated(lie_to_assoc(b));
    return lie_from_assoc(a.letters, log_truncated(prod));
}

LieSeries group_commutator_series(const LieSeries& a, const LieSeries& b) {
    check_same_shape(a, b);
    AssocPoly ea = exp_truncated(lie_to_assoc(a));
    AssocPoly eb = exp_truncated(lie_to_assoc(b));
    AssocPoly ea_inv = exp_truncated(lie_to_assoc(lie_scale(Rat(-1), a)));
    AssocPoly eb_inv = exp_truncated(lie_to_assoc(lie_scale(Rat(-1), b)));
    return lie_from_assoc(a.letters, log_truncated(ea_inv * eb_inv * ea * eb));
}

LieSeries engel_commutator_series(const LieSeries& a, const LieSeries& z, int l) {
    if (l < 1) throw Error(ErrorCode::Internal, "need l >= 1");
    LieSeries acc = a;
    for (int i = 0; i < l; ++i) acc = group_commutator_series(acc, z);
    return acc;
}

LieSeries engel_word(int l, int max_weight) {
    if (max_weight < l + 1)
        throw Error(ErrorCode::Internal, "truncation too low for the requested Engel word");
    LieSeries x = lie_letter("xyz", max_weight, 0);
    LieSeries y = lie_letter("xyz", max_weight, 1);
    LieSeries z = lie_letter("xyz", max_weight, 2);
    return engel_commutator_series(lie_add(x, y), z, l);
}

} // namespace ewb
