#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcover/field.hpp"

using namespace qcover;

TEST_CASE("GF(8) arithmetic with x^3 + x + 1") {
    Field f(3);
    CHECK(f.order() == 7);
    CHECK(f.alpha() == 0b010);
    // alpha^3 = alpha + 1
    CHECK(f.alpha_pow(3) == 0b011);
    CHECK(f.mul(0b010, 0b100) == 0b011);  // x * x^2 = x^3 = x+1
    CHECK(f.mul(0b111, f.inv(0b111)) == 1);
    CHECK(f.pow(0b010, 7) == 1);
    CHECK(f.alpha_pow(-1) == f.inv(f.alpha()));
    for (uint16_t a = 1; a < 8; ++a) CHECK(f.alpha_pow(f.log(a)) == a);
}

TEST_CASE("every built-in modulus up to degree 16 is primitive") {
    for (int m = 1; m <= 16; ++m) {
        Field f(m);
        CHECK(f.order() == (1u << m) - 1);
        CHECK(f.pow(f.alpha(), f.order()) == 1);
    }
}

TEST_CASE("an irreducible but imprimitive modulus is rejected") {
    // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5, not 15
    CHECK_THROWS(Field(4, 0x1f));
    CHECK_NOTHROW(Field(4, 0x13));
}

TEST_CASE("Frobenius and linearized polynomial evaluation are additive") {
    Field f(4);
    for (uint16_t a = 0; a < 16; ++a)
        for (uint16_t b = 0; b < 16; ++b) {
            CHECK(f.frob(f.add(a, b), 1) == f.add(f.frob(a, 1), f.frob(b, 1)));
            std::vector<uint16_t> coeffs = {3, 7, 1};
            CHECK(f.linpoly_eval(coeffs, f.add(a, b)) ==
                  f.add(f.linpoly_eval(coeffs, a), f.linpoly_eval(coeffs, b)));
        }
    // degenerate polynomial: identity map
    std::vector<uint16_t> id = {1};
    for (uint16_t a = 0; a < 16; ++a) CHECK(f.linpoly_eval(id, a) == a);
}

TEST_CASE("scale_set multiplies pointwise") {
    Field f(3);
    std::vector<uint32_t> v = {1, 2, 3};
    auto w = scale_set(f, f.alpha(), v);
    REQUIRE(w.size() == 3);
    for (size_t i = 0; i < v.size(); ++i)
        CHECK(w[i] == f.mul(f.alpha(), static_cast<uint16_t>(v[i])));
}
