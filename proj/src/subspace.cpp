#include "qcover/subspace.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <charconv>
#include <stdexcept>

namespace qcover {

void rref(std::vector<uint32_t>& rows) {
    size_t top = 0;
    // Process pivot positions from the most significant bit downwards.
    for (int bit = 31; bit >= 0 && top < rows.size(); --bit) {
        uint32_t mask = 1u << bit;
        size_t pivot = top;
        while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[top], rows[pivot]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != top && (rows[i] & mask)) rows[i] ^= rows[top];
        ++top;
    }
    rows.resize(top);
}

Subspace::Subspace(int n_, std::vector<uint32_t> basis) : n(n_), rows(std::move(basis)) {
    rref(rows);
}

Subspace Subspace::full(int n) {
    std::vector<uint32_t> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = 1u << (n - 1 - i);
    return Subspace(n, std::move(rows));
}

bool Subspace::contains(uint32_t v) const {
    for (uint32_t r : rows) {
        uint32_t pivot = 1u << (31 - std::countl_zero(r));
        if (v & pivot) v ^= r;
    }
    return v == 0;
}

bool Subspace::contains(const Subspace& other) const {
    for (uint32_t r : other.rows)
        if (!contains(r)) return false;
    return true;
}

std::vector<uint32_t> Subspace::elements() const {
    std::vector<uint32_t> out(size_t{1} << rows.size());
    for (size_t idx = 0; idx < out.size(); ++idx) {
        uint32_t v = 0;
        for (size_t t = 0; t < rows.size(); ++t)
            if (idx >> t & 1) v ^= rows[t];
        out[idx] = v;
    }
    return out;
}

std::string Subspace::to_binary() const {
    std::string s;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ' ';
        for (int b = n - 1; b >= 0; --b) s += (rows[i] >> b & 1) ? '1' : '0';
    }
    return s;
}

std::string Subspace::to_hex() const {
    std::string s;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ' ';
        s += row_to_hex(rows[i], n);
    }
    return s;
}

Subspace span(int n, std::span<const uint32_t> vectors) {
    return Subspace(n, std::vector<uint32_t>(vectors.begin(), vectors.end()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
    assert(a.n == b.n);
    std::vector<uint32_t> rows = a.rows;
    rows.insert(rows.end(), b.rows.begin(), b.rows.end());
    return Subspace(a.n, std::move(rows));
}

int intersect_dim(const Subspace& a, const Subspace& b) {
    return a.dim() + b.dim() - sum(a, b).dim();
}

Subspace dual(const Subspace& a) {
    // Kernel of the basis matrix: one generator per non-pivot column.
    uint32_t pivmask = 0;
    for (uint32_t r : a.rows) pivmask |= 1u << (31 - std::countl_zero(r));
    std::vector<uint32_t> out;
    for (int bit = a.n - 1; bit >= 0; --bit) {
        if (pivmask >> bit & 1) continue;
        uint32_t w = 1u << bit;
        for (uint32_t r : a.rows)
            if (r >> bit & 1) w |= 1u << (31 - std::countl_zero(r));
        out.push_back(w);
    }
    return Subspace(a.n, std::move(out));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    return dual(sum(dual(a), dual(b)));
}

int prefix_kernel_dim(const Subspace& x, int ell) {
    int shift = x.n - ell;
    std::vector<uint32_t> prefixes;
    for (uint32_t r : x.rows) prefixes.push_back(r >> shift);
    rref(prefixes);
    return x.dim() - static_cast<int>(prefixes.size());
}

std::string row_to_hex(uint32_t v, int n) {
    int width = (n + 3) / 4;
    std::string s(width, '0');
    static const char* digits = "0123456789abcdef";
    for (int i = width - 1; i >= 0; --i, v >>= 4) s[i] = digits[v & 0xf];
    return s;
}

uint32_t parse_row_hex(const std::string& s, int n) {
    int width = (n + 3) / 4;
    if (static_cast<int>(s.size()) != width)
        throw std::runtime_error("row '" + s + "' has wrong width for n=" + std::to_string(n));
    uint32_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::runtime_error("bad hex row '" + s + "'");
    if (n < 32 && (v >> n))
        throw std::runtime_error("row '" + s + "' out of range for n=" + std::to_string(n));
    return v;
}

}  // namespace qcover
