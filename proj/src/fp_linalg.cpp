#include "ewb/fp_linalg.hpp"

#include "ewb/error.hpp"

namespace ewb {

int fp_inverse(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw Error(ErrorCode::Internal, "inverse of zero");
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) { // a^(p-2), p prime
        if (e & 1) r = (int)((long long)r * a % p);
        a = (int)((long long)a * a % p);
    }
    return r;
}

std::vector<int> fp_add(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
    return out;
}

std::vector<int> fp_scale(int c, const std::vector<int>& a, int p) {
    c %= p;
    if (c < 0) c += p;
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = (int)((long long)c * a[i] % p);
    return out;
}

bool fp_is_zero(const std::vector<int>& a) {
    for (int v : a)
        if (v != 0) return false;
    return true;
}

void FpSpan::reduce(std::vector<int>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        int piv = pivots_[r];
        if (v[piv] == 0) continue;
        int f = v[piv]; // rows are normalized to pivot 1
        for (int j = 0; j < dim_; ++j) {
            v[j] = (v[j] - (int)((long long)f * rows_[r][j] % p_)) % p_;
            if (v[j] < 0) v[j] += p_;
        }
    }
}

bool FpSpan::insert(std::vector<int> v) {
    for (auto& x : v) {
        x %= p_;
        if (x < 0) x += p_;
    }
    reduce(v);
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (v[j] != 0) { piv = j; break; }
    if (piv < 0) return false;
    int inv = fp_inverse(v[piv], p_);
    for (int j = 0; j < dim_; ++j) v[j] = (int)((long long)v[j] * inv % p_);
    // back-substitute into existing rows to keep reduced form
    for (size_t r = 0; r < rows_.size(); ++r) {
        int f = rows_[r][piv];
        if (f == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            rows_[r][j] = (rows_[r][j] - (int)((long long)f * v[j] % p_)) % p_;
            if (rows_[r][j] < 0) rows_[r][j] += p_;
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool FpSpan::contains(std::vector<int> v) const {
    for (auto& x : v) {
        x %= p_;
        if (x < 0) x += p_;
    }
    reduce(v);
    return fp_is_zero(v);
}

int nilpotency_index(const std::vector<std::vector<int>>& a, int p, int cap) {
    const int n = (int)a.size();
    auto is_zero = [&](const std::vector<std::vector<int>>& m) {
        for (const auto& row : m)
            for (int v : row)
                if (v != 0) return false;
        return true;
    };
    std::vector<std::vector<int>> pw = a; // A^k, k starting at 1
    for (int k = 1; k <= cap; ++k) {
        if (is_zero(pw)) return k;
        std::vector<std::vector<int>> next(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) {
                if (pw[i][t] == 0) continue;
                for (int j = 0; j < n; ++j)
                    next[i][j] = (int)((next[i][j] + (long long)pw[i][t] * a[t][j]) % p);
            }
        pw = std::move(next);
    }
    return -1;
}

} // namespace ewb
