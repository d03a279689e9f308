#include "qcover/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace qcover {

BigInt gaussian(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    BigInt qq = q;
    for (int i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(qq, n - i) - 1;
        den *= boost::multiprecision::pow(qq, i + 1) - 1;
    }
    return num / den;
}

GrassmannIndexer::GrassmannIndexer(int n, int k) : n_(n), k_(k) {
    if (k < 0 || k > n || n < 1 || n > 31) throw std::invalid_argument("bad grassmannian parameters");
    for (int i = 0; i <= 32; ++i) {
        binom_[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom_[i][j] = binom_[i - 1][j - 1] + (j <= i - 1 ? binom_[i - 1][j] : 0);
        for (int j = i + 1; j <= 32; ++j) binom_[i][j] = 0;
    }
    BigInt total = gaussian(n, k, 2);
    if (total > BigInt(UINT64_MAX)) throw std::overflow_error("grassmannian too large to index");

    offsets_.push_back(0);
    if (k == 0) {  // single zero subspace
        colmasks_.push_back(0);
        offsets_.push_back(1);
        return;
    }
    // Pivot-column sets in colex order == increasing numeric mask order.
    uint32_t mask = (1u << k) - 1;
    uint32_t limit = 1u << n;
    while (mask < limit) {
        colmasks_.push_back(mask);
        // free positions: for the i-th smallest pivot column j (1-based i),
        // every non-pivot column to its right contributes one free bit
        int free_bits = 0;
        uint32_t m = mask;
        for (int i = 1; i <= k; ++i) {
            int j = std::countr_zero(m) + 1;
            m &= m - 1;
            free_bits += (n - j) - (k - i);
        }
        offsets_.push_back(offsets_.back() + (uint64_t{1} << free_bits));
        // Gosper's hack: next mask with the same popcount.
        uint32_t c = mask & -mask, r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    assert(BigInt(offsets_.back()) == total);
}

uint64_t GrassmannIndexer::memory_bytes() const {
    return colmasks_.size() * sizeof(uint32_t) + offsets_.size() * sizeof(uint64_t);
}

uint64_t GrassmannIndexer::colex_rank(uint32_t colmask) const {
    uint64_t r = 0;
    int i = 0;
    while (colmask) {
        int j = std::countr_zero(colmask) + 1;  // column, 1-based
        colmask &= colmask - 1;
        ++i;
        r += binom_[j - 1][i];
    }
    return r;
}

Subspace GrassmannIndexer::unrank(uint64_t index) const {
    if (index >= count()) throw std::out_of_range("subspace index out of range");
    size_t lo = std::upper_bound(offsets_.begin(), offsets_.end(), index) - offsets_.begin() - 1;
    uint32_t colmask = colmasks_[lo];
    uint64_t free_val = index - offsets_[lo];

    // Pivot columns ascending; free positions filled row-major, low bit first.
    std::vector<int> pivots;
    for (uint32_t m = colmask; m; m &= m - 1) pivots.push_back(std::countr_zero(m) + 1);
    std::vector<uint32_t> rows(k_);
    int t = 0;
    for (int i = 0; i < k_; ++i) {
        rows[i] = 1u << (n_ - pivots[i]);
        for (int j = pivots[i] + 1; j <= n_; ++j) {
            if (colmask >> (j - 1) & 1) continue;
            if (free_val >> t & 1) rows[i] |= 1u << (n_ - j);
            ++t;
        }
    }
    Subspace s;
    s.n = n_;
    s.rows = std::move(rows);  // already in RREF by construction
    return s;
}

uint64_t GrassmannIndexer::rank(const Subspace& s) const {
    if (s.n != n_ || s.dim() != k_) throw std::invalid_argument("subspace has wrong shape for indexer");
    uint32_t colmask = 0;
    std::vector<int> pivots(k_);
    for (int i = 0; i < k_; ++i) {
        int j = n_ - (31 - std::countl_zero(s.rows[i]));
        pivots[i] = j;
        colmask |= 1u << (j - 1);
    }
    uint64_t free_val = 0;
    int t = 0;
    for (int i = 0; i < k_; ++i) {
        for (int j = pivots[i] + 1; j <= n_; ++j) {
            if (colmask >> (j - 1) & 1) continue;
            if (s.rows[i] >> (n_ - j) & 1) free_val |= uint64_t{1} << t;
            ++t;
        }
    }
    return offsets_[colex_rank(colmask)] + free_val;
}

void GrassmannIndexer::for_each(const std::function<void(uint64_t, const Subspace&)>& f) const {
    for (uint64_t i = 0; i < count(); ++i) f(i, unrank(i));
}

void for_each_subspace_of(const Subspace& x, int r,
                          const std::function<void(const Subspace&)>& f) {
    int k = x.dim();
    if (r > k) return;
    if (r == k) {
        f(x);
        return;
    }
    GrassmannIndexer local(k, r);
    std::vector<uint32_t> vecs(r);
    for (uint64_t i = 0; i < local.count(); ++i) {
        Subspace ls = local.unrank(i);
        for (int t = 0; t < r; ++t) {
            uint32_t v = 0;
            // local coordinate c (1..k) selects block row c-1
            for (uint32_t m = ls.rows[t]; m; m &= m - 1)
                v ^= x.rows[k - 1 - std::countr_zero(m)];
            vecs[t] = v;
        }
        f(span(x.n, vecs));
    }
}

}  // namespace qcover
