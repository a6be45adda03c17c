#include "ewb/free_algebra.hpp"

#include "ewb/error.hpp"

namespace ewb {

namespace {
constexpr long kSliceCap = 2000000;
}

AssocPoly::AssocPoly(int nletters, int max_weight)
    : nletters_(nletters), max_weight_(max_weight) {
    if (nletters < 1 || max_weight < 0)
        throw Error(ErrorCode::Internal, "bad algebra shape");
    by_weight_.resize(max_weight_ + 1);
    long count = 1;
    for (int w = 0; w <= max_weight_; ++w) {
        if (count > kSliceCap) throw Error(ErrorCode::CapExceeded, "word space too large");
        by_weight_[w].assign(count, Rat(0));
        count *= nletters_;
    }
}

AssocPoly AssocPoly::constant(int nletters, int max_weight, const Rat& c) {
    AssocPoly p(nletters, max_weight);
    p.by_weight_[0][0] = c;
    return p;
}

AssocPoly AssocPoly::letter(int nletters, int max_weight, int letter) {
    if (letter < 0 || letter >= nletters)
        throw Error(ErrorCode::Internal, "letter out of range");
    AssocPoly p(nletters, max_weight);
    if (max_weight >= 1) p.by_weight_[1][letter] = Rat(1);
    return p;
}

const Rat& AssocPoly::coeff(int weight, long word) const {
    return by_weight_.at(weight).at(word);
}

void AssocPoly::set_coeff(int weight, long word, const Rat& c) {
    by_weight_.at(weight).at(word) = c;
}

void AssocPoly::add_coeff(int weight, long word, const Rat& c) {
    by_weight_.at(weight).at(word) += c;
}

bool AssocPoly::is_zero() const {
    for (const auto& slice : by_weight_)
        for (const auto& c : slice)
            if (c != 0) return false;
    return true;
}

int AssocPoly::min_weight() const {
    for (int w = 0; w <= max_weight_; ++w)
        for (const auto& c : by_weight_[w])
            if (c != 0) return w;
    return max_weight_ + 1;
}

void AssocPoly::check_compatible(const AssocPoly& o) const {
    if (nletters_ != o.nletters_ || max_weight_ != o.max_weight_)
        throw Error(ErrorCode::AlphabetMismatch, "mixing incompatible truncated algebras");
}

AssocPoly& AssocPoly::operator+=(const AssocPoly& o) {
    check_compatible(o);
    for (int w = 0; w <= max_weight_; ++w)
        for (size_t i = 0; i < by_weight_[w].size(); ++i)
            by_weight_[w][i] += o.by_weight_[w][i];
    return *this;
}

AssocPoly& AssocPoly::operator-=(const AssocPoly& o) {
    check_compatible(o);
    for (int w = 0; w <= max_weight_; ++w)
        for (size_t i = 0; i < by_weight_[w].size(); ++i)
            by_weight_[w][i] -= o.by_weight_[w][i];
    return *this;
}

AssocPoly& AssocPoly::operator*=(const Rat& c) {
    for (auto& slice : by_weight_)
        for (auto& v : slice)
            v *= c;
    return *this;
}

AssocPoly operator*(const AssocPoly& a, const AssocPoly& b) {
    a.check_compatible(b);
    const int W = a.max_weight_;
    AssocPoly out(a.nletters_, W);
    for (int wa = 0; wa <= W; ++wa) {
        const auto& sa = a.by_weight_[wa];
        for (int wb = 0; wa + wb <= W; ++wb) {
            const auto& sb = b.by_weight_[wb];
            auto& dst = out.by_weight_[wa + wb];
            const long shift = sb.size();
            for (long i = 0; i < (long)sa.size(); ++i) {
                if (sa[i] == 0) continue;
                const long base = i * shift;
                for (long j = 0; j < (long)sb.size(); ++j) {
                    if (sb[j] == 0) continue;
                    dst[base + j] += sa[i] * sb[j];
                }
            }
        }
    }
    return out;
}

bool AssocPoly::operator==(const AssocPoly& o) const {
    check_compatible(o);
    return by_weight_ == o.by_weight_;
}

AssocPoly AssocPoly::weight_part(int weight) const {
    AssocPoly out(nletters_, max_weight_);
    out.by_weight_[weight] = by_weight_[weight];
    return out;
}

long AssocPoly::word_count(int nletters, int weight) {
    long n = 1;
    for (int i = 0; i < weight; ++i) n *= nletters;
    return n;
}

std::vector<int> AssocPoly::decode_word(int nletters, int weight, long word) {
    std::vector<int> letters(weight);
    for (int i = weight - 1; i >= 0; --i) {
        letters[i] = (int)(word % nletters);
        word /= nletters;
    }
    return letters;
}

long AssocPoly::encode_word(int nletters, const std::vector<int>& letters) {
    long w = 0;
    for (int l : letters) w = w * nletters + l;
    return w;
}

long AssocPoly::concat(int nletters, long a, int wb, long b) {
    return a * word_count(nletters, wb) + b;
}

AssocPoly exp_truncated(const AssocPoly& a) {
    if (a.coeff(0, 0) != 0)
        throw Error(ErrorCode::Internal, "exp needs zero constant term");
    const int W = a.max_weight();
    AssocPoly out = AssocPoly::constant(a.nletters(), W, Rat(1));
    AssocPoly pw = AssocPoly::constant(a.nletters(), W, Rat(1));
    Rat fact(1);
    for (int k = 1; k <= W; ++k) {
        pw = pw * a;
        fact *= k;
        AssocPoly term = pw;
        term *= Rat(1) / fact;
        out += term;
    }
    return out;
}

AssocPoly log_truncated(const AssocPoly& a) {
    if (a.coeff(0, 0) != 1)
        throw Error(ErrorCode::Internal, "log needs constant term 1");
    const int W = a.max_weight();
    AssocPoly z = a;
    z.add_coeff(0, 0, Rat(-1));
    AssocPoly out(a.nletters(), W);
    AssocPoly pw = AssocPoly::constant(a.nletters(), W, Rat(1));
    for (int k = 1; k <= W; ++k) {
        pw = pw * z;
        AssocPoly term = pw;
        term *= Rat((k % 2 == 1) ? 1 : -1, k);
        out += term;
    }
    return out;
}

AssocPoly assoc_commutator(const AssocPoly& a, const AssocPoly& b) {
    return a * b - b * a;
}

AssocPoly left_normed_word(int nletters, int max_weight, const std::vector<int>& letters) {
    if (letters.empty()) throw Error(ErrorCode::Internal, "empty word");
    AssocPoly acc = AssocPoly::letter(nletters, max_weight, letters[0]);
    for (size_t i = 1; i < letters.size(); ++i)
        acc = assoc_commutator(acc, AssocPoly::letter(nletters, max_weight, letters[i]));
    return acc;
}

} // namespace ewb
