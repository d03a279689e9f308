#pragma once
// Bit-packed subspaces of F_2^n, n <= 16 in practice (rows fit uint32_t).
// Coordinate j in {1..n} lives at bit n-j, so the leftmost coordinate is the
// most significant bit and a row prints naturally as a binary word.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qcover {

// In-place row reduction to RREF.  Rows end up sorted by descending pivot
// bit (top row has the leftmost pivot); zero rows are dropped.
void rref(std::vector<uint32_t>& rows);

struct Subspace {
    int n = 0;
    std::vector<uint32_t> rows;  // RREF basis, may be empty (zero space)

    Subspace() = default;
    Subspace(int n_, std::vector<uint32_t> basis);  // reduces basis

    static Subspace zero(int n) { return Subspace(n, {}); }
    static Subspace full(int n);

    int dim() const { return static_cast<int>(rows.size()); }
    bool contains(uint32_t v) const;           // membership of a vector
    bool contains(const Subspace& other) const;

    // All 2^dim vectors, in Gray-free order (index bits select basis rows).
    std::vector<uint32_t> elements() const;

    std::string to_binary() const;  // rows as n-bit binary words, space separated
    std::string to_hex() const;     // rows as fixed-width lowercase hex

    auto operator<=>(const Subspace&) const = default;
};

Subspace span(int n, std::span<const uint32_t> vectors);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
int intersect_dim(const Subspace& a, const Subspace& b);
Subspace dual(const Subspace& a);  // orthogonal complement w.r.t. dot product

// Leading ell coordinates of a vector in F_2^n.
inline uint32_t prefix_class(uint32_t v, int ell, int n) {
    return v >> (n - ell);
}

// dim(X ∩ V0) where V0 = {0^ell} x F_2^{n-ell} (zero-prefix subspace).
int prefix_kernel_dim(const Subspace& x, int ell);

uint32_t parse_row_hex(const std::string& s, int n);
std::string row_to_hex(uint32_t v, int n);

}  // namespace qcover
