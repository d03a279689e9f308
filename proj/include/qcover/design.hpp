#pragma once
// A covering design: a set of k-subspaces of F_2^n meant to cover every
// r-subspace.  Blocks are kept deduplicated in canonical (RREF, sorted) order.

#include <optional>
#include <string>
#include <vector>

#include "qcover/subspace.hpp"

namespace qcover {

struct Annotation {
    std::string label;   // e.g. "U"
    Subspace u;
    long count = 0;      // structural constant attached to u
};

struct CoveringDesign {
    int n = 0, k = 0, r = 0;
    std::string provenance;  // short tag naming the construction
    std::vector<Subspace> blocks;
    std::vector<Annotation> annotations;

    size_t size() const { return blocks.size(); }
    void add(Subspace b);                  // keeps blocks sorted & unique
    bool contains_block(const Subspace& b) const;
    const Annotation* annotation(const std::string& label) const;
    void sort_blocks();
};

// Number of blocks contained in u.
long structural_count(const CoveringDesign& d, const Subspace& u);

// Blocks of d contained in u.
std::vector<Subspace> blocks_inside(const CoveringDesign& d, const Subspace& u);

}  // namespace qcover
