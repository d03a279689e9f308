#pragma once
// Every covering-design construction: direct covers, the recursive
// lengthening machinery, the CMRD-based families and their improvements,
// and the full C_2(10,5,3) pipeline.

#include <optional>

#include "qcover/design.hpp"
#include "qcover/grassmann.hpp"
#include "qcover/spreads.hpp"

namespace qcover {

CoveringDesign all_subspaces(int n, int k);

// r = 1 cover of size exactly ceil((2^n-1)/(2^k-1)).
CoveringDesign point_cover(int n, int k);

// 2^{r+1}-1 hyperplanes through a fixed (n-r-1)-subspace.
CoveringDesign hyperplane_cover(int n, int r);

// C(n,k,r) -> C(n+1,k+1,r): X -> X + <e_{n+1}>.
CoveringDesign lengthen(const CoveringDesign& d);

// Main recursion: s1 = C(n-1,k,r), s2 = C(n-1,k-1,r-1) -> C(n,k,r) of size
// |s1| + 2^{n-k} |s2|.
CoveringDesign recursive_construction(const CoveringDesign& s1, const CoveringDesign& s2);

// C_2(2k,k,2) of size 2^{2k} + 6(2^k-1): lifted MRD plus the S_j blocks.
CoveringDesign simple_cmrd(int k);

// C_2(7,3,2) of size 396.
CoveringDesign cover_7_3_2();

// C_2(8,4,3) of size 6897.
CoveringDesign cover_8_4_3();

// C_2(n,k,2) of size 2^{2(n-k)} + (2^k-1)|base| - (2^k-2)c from a base
// C_2(n-k+1,k,2) carrying an annotation ("U", c).
CoveringDesign improved_cmrd(int n, int k, const CoveringDesign& base);

// Attach the hyperplane with the most blocks inside it as annotation "U".
CoveringDesign with_max_hyperplane(CoveringDesign d);

// Closed-form size of the iterated k=3 chain on F_2^{2n+1}.
BigInt cor_15_size(int n);

// C_2(n,k,3) from a base C_2(n-k+2,k,3) with annotations U0..U3 (c0..c3,
// c1 <= c2 <= c3) and an optional inner C_2(n-k,k,3) placed on V0.  The
// x-indexed embeddings of U0 are twisted by the multiplier beta_x so the
// inner design may be omitted when the twist orbit covers V0 internally.
CoveringDesign improved_cmrd_r3(int n, int k, const CoveringDesign& base,
                                const std::optional<CoveringDesign>& inner);

struct Cover1053Result {
    CoveringDesign design;
    bool refined = true;  // false: fallback 45231 variant with the V0 block
};

// The full C_2(10,5,3) pipeline; refine = true targets 45230.
Cover1053Result cover_10_5_3(bool refine = true);

// Size of the refined design, from the structured base alone (cheap).
BigInt cover_10_5_3_size();

// Best-known buildable design for (n,k,r), if a construction is registered.
std::optional<CoveringDesign> registry_design(int n, int k, int r);

}  // namespace qcover
