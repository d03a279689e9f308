#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "qcover/subspace.hpp"

using namespace qcover;

TEST_CASE("rref canonicalizes and drops dependent rows") {
    std::vector<uint32_t> rows = {0b011, 0b110, 0b101};
    rref(rows);
    CHECK(rows == std::vector<uint32_t>{0b101, 0b011});
}

TEST_CASE("identity-augmented block in n=6 prints as 26 13 09") {
    Subspace s(6, {0b100110, 0b010011, 0b001001});
    CHECK(s.dim() == 3);
    CHECK(s.rows == std::vector<uint32_t>{0b100110, 0b010011, 0b001001});
    CHECK(s.to_hex() == "26 13 09");
    CHECK(s.to_binary() == "100110 010011 001001");
}

TEST_CASE("membership and subspace containment") {
    Subspace s(4, {0b1010, 0b0101});
    CHECK(s.contains(0b1111u));
    CHECK(s.contains(0u));
    CHECK_FALSE(s.contains(0b1000u));
    CHECK(s.contains(Subspace(4, {0b1111})));
    CHECK_FALSE(s.contains(Subspace(4, {0b1100})));
    CHECK(s.elements().size() == 4);
}

TEST_CASE("span, sum, intersect, dual") {
    Subspace a = span(4, std::vector<uint32_t>{0b1000, 0b0100});
    Subspace b = span(4, std::vector<uint32_t>{0b0100, 0b0010});
    CHECK(sum(a, b).dim() == 3);
    Subspace m = intersect(a, b);
    CHECK(m.dim() == 1);
    CHECK(m.contains(0b0100u));
    CHECK(intersect_dim(a, b) == 1);

    Subspace d = dual(a);
    CHECK(d.dim() == 2);
    for (uint32_t v : a.elements())
        for (uint32_t w : d.elements())
            CHECK(std::popcount(v & w) % 2 == 0);
    CHECK(dual(d) == a);
}

TEST_CASE("prefix class and prefix kernel dimension") {
    CHECK(prefix_class(0b101100u, 2, 6) == 0b10u);
    Subspace v0_like(6, {0b001000, 0b000001});
    CHECK(prefix_kernel_dim(v0_like, 2) == 2);  // both rows vanish on the prefix
    Subspace mixed(6, {0b100000, 0b000001});
    CHECK(prefix_kernel_dim(mixed, 2) == 1);
}

TEST_CASE("hex row round-trip at the format width") {
    CHECK(row_to_hex(0b100110, 6) == "26");
    CHECK(parse_row_hex("26", 6) == 0b100110u);
    CHECK(row_to_hex(0x1a5, 10) == "1a5");
    CHECK(parse_row_hex("1a5", 10) == 0x1a5u);
    CHECK_THROWS(parse_row_hex("zz", 6));
    CHECK_THROWS(parse_row_hex("40", 6));  // bit above the ambient dimension
}
