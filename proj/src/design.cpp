#include "qcover/design.hpp"

#include <algorithm>

namespace qcover {

void CoveringDesign::add(Subspace b) {
    auto it = std::lower_bound(blocks.begin(), blocks.end(), b);
    if (it != blocks.end() && *it == b) return;
    blocks.insert(it, std::move(b));
}

bool CoveringDesign::contains_block(const Subspace& b) const {
    return std::binary_search(blocks.begin(), blocks.end(), b);
}

const Annotation* CoveringDesign::annotation(const std::string& label) const {
    for (const auto& a : annotations)
        if (a.label == label) return &a;
    return nullptr;
}

void CoveringDesign::sort_blocks() {
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
}

long structural_count(const CoveringDesign& d, const Subspace& u) {
    long c = 0;
    for (const auto& b : d.blocks)
        if (u.contains(b)) ++c;
    return c;
}

std::vector<Subspace> blocks_inside(const CoveringDesign& d, const Subspace& u) {
    std::vector<Subspace> out;
    for (const auto& b : d.blocks)
        if (u.contains(b)) out.push_back(b);
    return out;
}

}  // namespace qcover
