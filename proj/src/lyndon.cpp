#include "ewb/lyndon.hpp"

#include "ewb/error.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace ewb {

namespace {

// Duval's algorithm: all Lyndon words over {0..n-1} of length <= maxlen.
std::vector<std::vector<int>> lyndon_words_classic(int nletters, int maxlen) {
    std::vector<std::vector<int>> out;
    std::vector<int> w{0};
    out.push_back(w);
    while (true) {
        // extend w periodically to maxlen
        std::vector<int> x = w;
        int period = (int)w.size();
        while ((int)x.size() < maxlen) x.push_back(x[x.size() - period]);
        // find next: strip trailing max letters, bump last
        while (!x.empty() && x.back() == nletters - 1) x.pop_back();
        if (x.empty()) break;
        ++x.back();
        w = x;
        out.push_back(w);
    }
    return out;
}

bool is_lyndon(const std::vector<int>& w) {
    // strictly smaller than every proper rotation
    const int n = (int)w.size();
    for (int r = 1; r < n; ++r) {
        for (int i = 0; i < n; ++i) {
            int a = w[i];
            int b = w[(i + r) % n];
            if (a < b) break;
            if (a > b) return false;
            if (i == n - 1) return false; // equal rotation => periodic, not Lyndon
        }
    }
    return true;
}

} // namespace

LyndonBasis::LyndonBasis(int nletters, int max_weight)
    : nletters_(nletters), max_weight_(max_weight) {
    if (nletters < 1 || max_weight < 1)
        throw Error(ErrorCode::Internal, "bad Lyndon basis shape");
    auto words = lyndon_words_classic(nletters, max_weight);
    for (auto& w : words) {
        if (!is_lyndon(w)) throw Error(ErrorCode::Internal, "enumeration produced non-Lyndon word");
    }
    std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    weight_begin_.assign(max_weight_ + 2, 0);
    for (const auto& w : words) {
        Monomial m;
        m.word = w;
        m.weight = (int)w.size();
        m.multidegree.assign(nletters_, 0);
        for (int l : w) ++m.multidegree[l];
        index_[w] = (int)monomials_.size();
        monomials_.push_back(std::move(m));
    }
    for (int w = 1; w <= max_weight_ + 1; ++w) {
        int begin = weight_begin_[w - 1];
        while (begin < (int)monomials_.size() && monomials_[begin].weight < w) ++begin;
        weight_begin_[w] = begin;
    }
    // standard factorization: longest proper Lyndon suffix is the right factor
    for (auto& m : monomials_) {
        if (m.weight == 1) continue;
        for (size_t cut = 1; cut < m.word.size(); ++cut) {
            std::vector<int> suffix(m.word.begin() + cut, m.word.end());
            auto it = index_.find(suffix);
            if (it != index_.end()) {
                std::vector<int> prefix(m.word.begin(), m.word.begin() + cut);
                auto pit = index_.find(prefix);
                if (pit == index_.end())
                    throw Error(ErrorCode::Internal, "standard factorization left part not Lyndon");
                m.left = pit->second;
                m.right = it->second;
                break;
            }
        }
        if (m.left < 0) throw Error(ErrorCode::Internal, "no standard factorization found");
    }
    // associative expansions
    expansions_.reserve(monomials_.size());
    for (int i = 0; i < (int)monomials_.size(); ++i) {
        const auto& m = monomials_[i];
        if (m.weight == 1) {
            expansions_.push_back(AssocPoly::letter(nletters_, max_weight_, m.word[0]));
        } else {
            expansions_.push_back(assoc_commutator(expansions_[m.left], expansions_[m.right]));
        }
        // triangularity: lowest word of the expansion is the word itself, coeff 1
        long idx = AssocPoly::encode_word(nletters_, m.word);
        if (expansions_.back().coeff(m.weight, idx) != 1)
            throw Error(ErrorCode::Internal, "expansion lost unit leading coefficient");
    }
}

std::pair<int, int> LyndonBasis::weight_range(int weight) const {
    if (weight < 1 || weight > max_weight_) return {0, 0};
    int end = (weight == max_weight_) ? (int)monomials_.size() : weight_begin_[weight + 1];
    return {weight_begin_[weight], end};
}

int LyndonBasis::count_of_weight(int weight) const {
    auto [b, e] = weight_range(weight);
    return e - b;
}

int LyndonBasis::index_of_word(const std::vector<int>& word) const {
    auto it = index_.find(word);
    return it == index_.end() ? -1 : it->second;
}

std::string LyndonBasis::word_string(int idx, const std::string& letters) const {
    std::string s;
    for (int l : monomials_[idx].word) s += letters.at(l);
    return s;
}

std::string LyndonBasis::bracket_string(int idx, const std::string& letters) const {
    const auto& m = monomials_[idx];
    if (m.weight == 1) return std::string(1, letters.at(m.word[0]));
    return "[" + bracket_string(m.left, letters) + "," + bracket_string(m.right, letters) + "]";
}

const LyndonBasis& LyndonBasis::get(int nletters, int max_weight) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<LyndonBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(nletters, max_weight);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<LyndonBasis>(nletters, max_weight)).first;
    return *it->second;
}

std::map<int, Rat> lie_coordinates(const LyndonBasis& basis, const AssocPoly& p) {
    if (p.nletters() != basis.nletters() || p.max_weight() != basis.max_weight())
        throw Error(ErrorCode::AlphabetMismatch, "polynomial does not fit the basis");
    if (p.coeff(0, 0) != 0)
        throw Error(ErrorCode::NotPrimitive, "nonzero constant term");
    std::map<int, Rat> coords;
    AssocPoly rest = p;
    const int n = basis.nletters();
    for (int w = 1; w <= p.max_weight(); ++w) {
        const long count = AssocPoly::word_count(n, w);
        for (long idx = 0; idx < count; ++idx) {
            const Rat& c = rest.coeff(w, idx);
            if (c == 0) continue;
            int bi = basis.index_of_word(AssocPoly::decode_word(n, w, idx));
            if (bi < 0)
                throw Error(ErrorCode::NotPrimitive,
                            "residue on non-Lyndon word: input is not a Lie element");
            Rat coeff = c;
            AssocPoly sub = basis.expansion(bi);
            sub *= coeff;
            rest -= sub;
            coords[bi] = coeff;
        }
    }
    if (!rest.is_zero())
        throw Error(ErrorCode::NotPrimitive, "nonzero residue above truncation bookkeeping");
    return coords;
}

} // namespace ewb
