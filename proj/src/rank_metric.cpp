#include "qcover/rank_metric.hpp"

#include <stdexcept>

#include "qcover/grassmann.hpp"

namespace qcover {

int gf2_rank(std::vector<uint32_t> rows) {
    rref(rows);
    return static_cast<int>(rows.size());
}

int rank_distance(const RankMatrix& a, const RankMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("rank distance needs equal shapes");
    std::vector<uint32_t> diff(a.rows);
    for (int i = 0; i < a.rows; ++i) diff[i] = a.row_bits[i] ^ b.row_bits[i];
    return gf2_rank(std::move(diff));
}

void gabidulin_codewords(int k, int ell, int delta,
                         const std::function<void(const RankMatrix&)>& f) {
    if (k > ell) throw std::invalid_argument("gabidulin needs k <= ell");
    if (delta < 1 || delta > k) throw std::invalid_argument("delta out of range");
    Field field(ell);
    int t = k - delta + 1;  // number of linearized coefficients
    // Precompute Frobenius powers of the evaluation points g_i = alpha^i.
    std::vector<std::vector<uint16_t>> gq(k, std::vector<uint16_t>(t));
    for (int i = 0; i < k; ++i) {
        uint16_t g = field.alpha_pow(i);
        for (int j = 0; j < t; ++j) {
            gq[i][j] = g;
            g = field.mul(g, g);
        }
    }
    RankMatrix m;
    m.rows = k;
    m.cols = ell;
    m.row_bits.assign(k, 0);
    std::vector<uint16_t> coeffs(t, 0);
    uint64_t total = uint64_t{1} << (ell * t);
    for (uint64_t word = 0; word < total; ++word) {
        uint64_t w = word;
        for (int j = 0; j < t; ++j, w >>= ell) coeffs[j] = static_cast<uint16_t>(w & ((1u << ell) - 1));
        for (int i = 0; i < k; ++i) {
            uint16_t y = 0;
            for (int j = 0; j < t; ++j) y ^= field.mul(coeffs[j], gq[i][j]);
            m.row_bits[i] = y;  // residue bits double as MSB-first column bits
        }
        f(m);
    }
}

Subspace lift(const RankMatrix& a) {
    int n = a.rows + a.cols;
    Subspace s;
    s.n = n;
    s.rows.resize(a.rows);
    for (int i = 0; i < a.rows; ++i)
        s.rows[i] = (1u << (n - 1 - i)) | a.row_bits[i];
    return s;  // [I | A] is already in RREF
}

std::vector<Subspace> lifted_mrd(int n, int k, int delta) {
    int ell = n - k;
    std::vector<Subspace> out;
    out.reserve(uint64_t{1} << (ell * (k - delta + 1)));
    gabidulin_codewords(k, ell, delta, [&](const RankMatrix& m) { out.push_back(lift(m)); });
    return out;
}

bool std_exact_cover_check(int n, int k, int delta, Subspace* witness) {
    int t = k - delta + 1;
    CoveringDesign d;
    d.n = n;
    d.k = k;
    d.r = t;
    d.blocks = lifted_mrd(n, k, delta);
    d.sort_blocks();
    VerifyOptions opts;
    // restrict to t-subspaces meeting each prefix group in at most one point
    opts.filter = [k](const Subspace& x) { return prefix_kernel_dim(x, k) == 0; };
    auto hist = multiplicity_histogram(d, opts);
    for (const auto& [mult, cnt] : hist)
        if (mult != 1 && cnt > 0) {
            if (witness) {
                GrassmannIndexer idx(n, t);
                std::vector<uint32_t> counts;  // re-scan to find a concrete witness
                for (uint64_t i = 0; i < idx.count(); ++i) {
                    Subspace x = idx.unrank(i);
                    if (prefix_kernel_dim(x, k) != 0) continue;
                    long c = 0;
                    for (const auto& b : d.blocks)
                        if (b.contains(x)) ++c;
                    if (c != 1) { *witness = x; break; }
                }
            }
            return false;
        }
    return true;
}

}  // namespace qcover
