#pragma once
// Coverage verification.  The parallel path marks, for every block, all of
// its r-subspaces in a bitmap over the full Grassmannian (OpenMP over
// blocks, per-thread bitmaps merged by OR).  A naive serial double loop is
// kept as a reference implementation for small parameters and as the
// comparison baseline in the benchmark.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "qcover/design.hpp"
#include "qcover/grassmann.hpp"

namespace qcover {

struct VerifyOptions {
    int threads = 0;                       // 0 = OpenMP default
    uint64_t memory_cap = uint64_t{1} << 30;  // bytes for bitmap/count tables
    std::function<bool(const Subspace&)> filter;  // restrict target subspaces
};

struct CoverageReport {
    uint64_t total = 0;       // r-subspaces considered (after filter)
    uint64_t covered = 0;
    uint64_t uncovered = 0;
    std::optional<Subspace> first_uncovered;
    bool ok() const { return uncovered == 0; }
};

CoverageReport verify_cover(const CoveringDesign& d, const VerifyOptions& opts = {});
CoverageReport verify_cover_naive(const CoveringDesign& d, const VerifyOptions& opts = {});

// multiplicity -> number of r-subspaces covered that many times (0 included).
std::map<uint64_t, uint64_t> multiplicity_histogram(const CoveringDesign& d,
                                                    const VerifyOptions& opts = {});

// True iff no dim-r subspace lies in two different blocks.
bool packing_check(const CoveringDesign& d, int r, const VerifyOptions& opts = {});

// Density: |blocks| * [k r]_2 / [n r]_2 as a long double.
long double density(const CoveringDesign& d);

}  // namespace qcover
