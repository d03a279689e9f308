#pragma once
// Rank-metric (Gabidulin) codes over F_2 and their lifting to subspaces.
// A codeword is a k x ell binary matrix; row i is the F_2 expansion of the
// evaluation of a linearized polynomial at the i-th point of a normal basis
// of evaluation points 1, alpha, ..., alpha^{k-1} in GF(2^ell).

#include <cstdint>
#include <functional>
#include <vector>

#include "qcover/design.hpp"
#include "qcover/field.hpp"
#include "qcover/verify.hpp"

namespace qcover {

struct RankMatrix {
    int rows = 0, cols = 0;
    std::vector<uint32_t> row_bits;  // column j at bit cols-j (leftmost = MSB)
};

int gf2_rank(std::vector<uint32_t> rows);
int rank_distance(const RankMatrix& a, const RankMatrix& b);

// All 2^{ell*(k-delta+1)} codewords of the [k x ell, ell(k-delta+1), delta]
// Gabidulin code; requires k <= ell.
void gabidulin_codewords(int k, int ell, int delta,
                         const std::function<void(const RankMatrix&)>& f);

// rowspace of [I_k | A]: a k-subspace of F_2^{k + cols}.
Subspace lift(const RankMatrix& a);

// Lifted MRD code: 2^{(n-k)(k-delta+1)} k-subspaces of F_2^n.
std::vector<Subspace> lifted_mrd(int n, int k, int delta);

// Subspace-transversal-design property: with t = k - delta + 1, every
// t-subspace meeting the zero-prefix space trivially lies in exactly one
// lifted codeword.  Verified exhaustively; returns false with a witness on
// the first violation.
bool std_exact_cover_check(int n, int k, int delta, Subspace* witness = nullptr);

}  // namespace qcover
