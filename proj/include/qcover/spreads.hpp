#pragma once
// Spreads of F_2^n, the partition of G_2(4,2) into seven spreads, spread
// translates (cosets grouped into parallel classes), and the B-set /
// S_j-block machinery built on them.

#include <array>
#include <vector>

#include "qcover/design.hpp"
#include "qcover/field.hpp"
#include "qcover/subspace.hpp"

namespace qcover {

// The (2^n-1)/(2^k-1) multiplicative cosets of GF(2^k) inside GF(2^n);
// requires k | n.
std::vector<Subspace> field_spread(int n, int k);

// C_2(vm+delta, vm-m+delta, v-1) of size (2^{vm}-1)/(2^m-1): duals of the
// field-reduction m-spread of F_2^{vm}, lengthened delta times.  Carries an
// annotation "U": a hyperplane containing exactly one block (delta = 0).
CoveringDesign normal_spread_cover(int v, int m, int delta);

struct Parallelism42 {
    std::array<std::array<Subspace, 5>, 7> spreads;  // partition of G_2(4,2)
};

// Deterministic (lexicographically least) partition of the 35 2-subspaces
// of F_2^4 into 7 spreads.
Parallelism42 parallelism_g2_4_2();

using Coset = std::array<uint32_t, 4>;  // sorted 4-subset of F_2^4

struct SpreadTranslate {
    // classes[c] = the 4 cosets of the c-th subspace of the spread
    std::array<std::array<Coset, 4>, 5> classes;
};

SpreadTranslate spread_translate(const Parallelism42& p, int i);

// Direction subspaces <span of coset> ∩ V0 over all translates of all
// spreads; equals all of G_2(4,2).
std::vector<Subspace> translate_v0_closure(const Parallelism42& p);

// The six halving subsets B_1..B_6 of F_2^k (selected by the two leading
// coordinates), each of size 2^{k-1}.
std::array<std::vector<uint32_t>, 6> b_sets(int k);

// Spans of {(alpha^j, alpha^j * x) : x in B_i} for i = 1..6, k-subspaces of
// F_2^{2k} inside the prefix classes V_0 ∪ V_{alpha^j}.
std::array<Subspace, 6> s_j_blocks(int k, int j, const Field& tower);

}  // namespace qcover
