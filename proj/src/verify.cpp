#include "qcover/verify.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace qcover {

namespace {

// Local r-subspace generators of a k-dim block, precomputed once: each entry
// is a list of r row-selection masks (bit t selects block row t).
std::vector<std::vector<uint32_t>> local_row_masks(int k, int r) {
    GrassmannIndexer local(k, r);
    std::vector<std::vector<uint32_t>> out;
    out.reserve(local.count());
    for (uint64_t i = 0; i < local.count(); ++i) {
        Subspace ls = local.unrank(i);
        std::vector<uint32_t> sel(r);
        for (int t = 0; t < r; ++t) {
            uint32_t m = 0;
            for (uint32_t bits = ls.rows[t]; bits; bits &= bits - 1)
                m |= 1u << (k - 1 - std::countr_zero(bits));
            sel[t] = m;
        }
        out.push_back(std::move(sel));
    }
    return out;
}

void check_memory(uint64_t need, uint64_t cap) {
    if (need > cap)
        throw std::runtime_error("verifier needs " + std::to_string(need) +
                                 " bytes, cap is " + std::to_string(cap));
}

// Marks every r-subspace of every block in a per-index table.  Table is
// either a bitmap (Bit=true) or a 32-bit multiplicity array.
template <typename Acc>
void accumulate(const CoveringDesign& d, const GrassmannIndexer& idx, std::vector<Acc>& table,
                int threads) {
    auto locals = local_row_masks(d.k, d.r);
    int nblocks = static_cast<int>(d.blocks.size());
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel
    {
        std::vector<Acc> mine(table.size(), 0);
        std::vector<uint32_t> vecs(d.r);
#pragma omp for schedule(dynamic, 16)
        for (int b = 0; b < nblocks; ++b) {
            const auto& rows = d.blocks[b].rows;
            for (const auto& sel : locals) {
                for (int t = 0; t < d.r; ++t) {
                    uint32_t v = 0;
                    for (uint32_t m = sel[t]; m; m &= m - 1) v ^= rows[std::countr_zero(m)];
                    vecs[t] = v;
                }
                uint64_t i = idx.rank(span(d.n, vecs));
                if constexpr (std::is_same_v<Acc, uint64_t>)
                    mine[i >> 6] |= uint64_t{1} << (i & 63);
                else
                    ++mine[i];
            }
        }
#pragma omp critical
        for (size_t i = 0; i < table.size(); ++i) {
            if constexpr (std::is_same_v<Acc, uint64_t>)
                table[i] |= mine[i];
            else
                table[i] += mine[i];
        }
    }
#else
    (void)threads;
    std::vector<uint32_t> vecs(d.r);
    for (int b = 0; b < nblocks; ++b) {
        const auto& rows = d.blocks[b].rows;
        for (const auto& sel : locals) {
            for (int t = 0; t < d.r; ++t) {
                uint32_t v = 0;
                for (uint32_t m = sel[t]; m; m &= m - 1) v ^= rows[std::countr_zero(m)];
                vecs[t] = v;
            }
            uint64_t i = idx.rank(span(d.n, vecs));
            if constexpr (std::is_same_v<Acc, uint64_t>)
                table[i >> 6] |= uint64_t{1} << (i & 63);
            else
                ++table[i];
        }
    }
#endif
}

void validate(const CoveringDesign& d) {
    if (d.r < 0 || d.r > d.k || d.k > d.n) throw std::invalid_argument("bad design parameters");
    for (const auto& b : d.blocks)
        if (b.n != d.n || b.dim() != d.k)
            throw std::invalid_argument("block with wrong dimension or ambient space");
}

}  // namespace

CoverageReport verify_cover(const CoveringDesign& d, const VerifyOptions& opts) {
    validate(d);
    GrassmannIndexer idx(d.n, d.r);
    uint64_t words = (idx.count() + 63) / 64;
    check_memory(words * 8 + idx.memory_bytes(), opts.memory_cap);
    std::vector<uint64_t> bitmap(words, 0);
    accumulate<uint64_t>(d, idx, bitmap, opts.threads);

    CoverageReport rep;
    for (uint64_t i = 0; i < idx.count(); ++i) {
        bool hit = bitmap[i >> 6] >> (i & 63) & 1;
        if (opts.filter && !opts.filter(idx.unrank(i))) continue;
        ++rep.total;
        if (hit) {
            ++rep.covered;
        } else {
            ++rep.uncovered;
            if (!rep.first_uncovered) rep.first_uncovered = idx.unrank(i);
        }
    }
    return rep;
}

CoverageReport verify_cover_naive(const CoveringDesign& d, const VerifyOptions& opts) {
    validate(d);
    GrassmannIndexer idx(d.n, d.r);
    CoverageReport rep;
    for (uint64_t i = 0; i < idx.count(); ++i) {
        Subspace target = idx.unrank(i);
        if (opts.filter && !opts.filter(target)) continue;
        ++rep.total;
        bool hit = false;
        for (const auto& b : d.blocks)
            if (b.contains(target)) { hit = true; break; }
        if (hit) {
            ++rep.covered;
        } else {
            ++rep.uncovered;
            if (!rep.first_uncovered) rep.first_uncovered = target;
        }
    }
    return rep;
}

std::map<uint64_t, uint64_t> multiplicity_histogram(const CoveringDesign& d,
                                                    const VerifyOptions& opts) {
    validate(d);
    GrassmannIndexer idx(d.n, d.r);
    check_memory(idx.count() * 4 + idx.memory_bytes(), opts.memory_cap);
    std::vector<uint32_t> counts(idx.count(), 0);
    accumulate<uint32_t>(d, idx, counts, opts.threads);
    std::map<uint64_t, uint64_t> hist;
    for (uint64_t i = 0; i < idx.count(); ++i) {
        if (opts.filter && !opts.filter(idx.unrank(i))) continue;
        ++hist[counts[i]];
    }
    return hist;
}

bool packing_check(const CoveringDesign& d, int r, const VerifyOptions& opts) {
    CoveringDesign tmp = d;
    tmp.r = r;
    auto hist = multiplicity_histogram(tmp, opts);
    for (const auto& [mult, cnt] : hist)
        if (mult > 1 && cnt > 0) return false;
    return true;
}

long double density(const CoveringDesign& d) {
    using boost::multiprecision::cpp_bin_float_quad;
    cpp_bin_float_quad num = cpp_bin_float_quad(gaussian(d.k, d.r)) * d.blocks.size();
    cpp_bin_float_quad den(gaussian(d.n, d.r));
    return static_cast<long double>(num / den);
}

}  // namespace qcover
