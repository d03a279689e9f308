#include "qcover/field.hpp"

#include <stdexcept>
#include <string>

namespace qcover {

// Lowest-weight primitive polynomial per degree, bit t = coeff of x^t.
static constexpr uint32_t kPrimPoly[17] = {
    0,      0x3,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,  0x11d,
    0x211,  0x409,  0x805,  0x1053, 0x201b, 0x4443, 0x8003, 0x1100b,
};

Field::Field(int m) : Field(m, (m >= 1 && m <= 16) ? kPrimPoly[m] : 0) {}

Field::Field(int m, uint32_t modulus) : m_(m), modulus_(modulus) {
    if (m < 1 || m > 16) throw std::invalid_argument("field degree must be in 1..16");
    build();
}

void Field::build() {
    uint32_t size = 1u << m_;
    if (modulus_ < size || modulus_ >= 2 * size)
        throw std::invalid_argument("modulus is not a degree-" + std::to_string(m_) + " polynomial");
    exp_.assign(order() + 1, 0);
    log_.assign(size, 0);
    uint32_t v = 1;
    for (uint32_t i = 0; i < order(); ++i) {
        if (v == 1 && i > 0)
            throw std::invalid_argument("modulus is not primitive (x has order " + std::to_string(i) + ")");
        exp_[i] = static_cast<uint16_t>(v);
        log_[v] = static_cast<uint16_t>(i);
        v <<= 1;
        if (v & size) v ^= modulus_;
    }
    if (v != 1) throw std::invalid_argument("modulus is not primitive");
    exp_[order()] = 1;
}

uint16_t Field::inv(uint16_t a) const {
    if (!a) throw std::domain_error("inverse of zero");
    return exp_[(order() - log_[a]) % order()];
}

uint16_t Field::pow(uint16_t a, long long e) const {
    if (!a) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("inverse of zero");
        return 0;
    }
    long long r = (log_[a] * (e % order())) % order();
    if (r < 0) r += order();
    return exp_[r];
}

int Field::log(uint16_t a) const {
    if (!a) throw std::domain_error("log of zero");
    return log_[a];
}

uint16_t Field::linpoly_eval(const std::vector<uint16_t>& coeffs, uint16_t y) const {
    uint16_t acc = 0;
    uint16_t yq = y;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        acc ^= mul(coeffs[i], yq);
        yq = mul(yq, yq);  // next Frobenius power of y
    }
    return acc;
}

std::vector<uint32_t> scale_set(const Field& f, uint16_t beta,
                                const std::vector<uint32_t>& vecs) {
    std::vector<uint32_t> out;
    out.reserve(vecs.size());
    for (uint32_t v : vecs) out.push_back(f.mul(beta, static_cast<uint16_t>(v)));
    return out;
}

}  // namespace qcover
