#pragma once
// GF(2^m) arithmetic for m <= 16 via log/exp tables over a primitive
// polynomial.  Elements are m-bit residues; bit t is the coefficient of x^t.

#include <cstdint>
#include <vector>

namespace qcover {

class Field {
public:
    explicit Field(int m);                // built-in primitive polynomial
    Field(int m, uint32_t modulus);       // validated at construction

    int degree() const { return m_; }
    uint32_t modulus() const { return modulus_; }
    uint32_t order() const { return (1u << m_) - 1; }  // multiplicative order
    uint16_t alpha() const { return exp_[1]; }         // the root x

    uint16_t add(uint16_t a, uint16_t b) const { return a ^ b; }
    uint16_t mul(uint16_t a, uint16_t b) const {
        if (!a || !b) return 0;
        return exp_[(log_[a] + log_[b]) % order()];
    }
    uint16_t inv(uint16_t a) const;
    uint16_t pow(uint16_t a, long long e) const;
    uint16_t alpha_pow(long long e) const {  // alpha^e, e may be negative
        long long r = e % order();
        return exp_[r < 0 ? r + order() : r];
    }
    int log(uint16_t a) const;  // discrete log base alpha; a != 0
    uint16_t frob(uint16_t a, int i) const { return pow(a, 1ll << i); }  // a^(2^i)

    // Evaluate the linearized polynomial sum_i c[i] * y^(2^i) at y.
    uint16_t linpoly_eval(const std::vector<uint16_t>& coeffs, uint16_t y) const;

private:
    void build();
    int m_;
    uint32_t modulus_;
    std::vector<uint16_t> exp_, log_;
};

// Multiply every vector in the set by beta (vectors read as field elements).
std::vector<uint32_t> scale_set(const Field& f, uint16_t beta,
                                const std::vector<uint32_t>& vecs);

}  // namespace qcover
