#pragma once
// Enumeration of the Grassmannian G_2(n,k): Gaussian coefficients, a
// rank/unrank indexer keyed by pivot-column combinations in colex order,
// and enumeration of the r-subspaces of a given subspace.

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcover/subspace.hpp"

namespace qcover {

using BigInt = boost::multiprecision::cpp_int;

// Gaussian binomial [n choose k]_q, exact.
BigInt gaussian(int n, int k, int q = 2);

// q-ary count of k-subspaces containing a fixed j-subspace etc. are derived
// from gaussian() by callers; only the raw coefficient lives here.

class GrassmannIndexer {
public:
    GrassmannIndexer(int n, int k);  // throws if the count overflows 64 bits

    int n() const { return n_; }
    int k() const { return k_; }
    uint64_t count() const { return offsets_.back(); }
    uint64_t memory_bytes() const;

    Subspace unrank(uint64_t index) const;
    uint64_t rank(const Subspace& s) const;  // s must be k-dim in F_2^n

    // Visit every k-subspace; f(index, subspace).
    void for_each(const std::function<void(uint64_t, const Subspace&)>& f) const;

private:
    uint64_t colex_rank(uint32_t colmask) const;
    int n_, k_;
    std::vector<uint32_t> colmasks_;   // bit j-1 set <=> column j is a pivot
    std::vector<uint64_t> offsets_;    // prefix sums, size colmasks_.size()+1
    uint64_t binom_[33][33];
};

// All r-dim subspaces of x (given in RREF), canonicalized in the ambient
// space; f is called once per subspace.
void for_each_subspace_of(const Subspace& x, int r,
                          const std::function<void(const Subspace&)>& f);

}  // namespace qcover
