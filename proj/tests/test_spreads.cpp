#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qcover/spreads.hpp"
#include "qcover/verify.hpp"

using namespace qcover;

TEST_CASE("field spread partitions the nonzero points") {
    auto sp = field_spread(4, 2);
    CHECK(sp.size() == 5);
    uint32_t seen = 0;
    for (const auto& s : sp) {
        CHECK(s.dim() == 2);
        for (uint32_t v : s.elements())
            if (v) {
                CHECK((seen & (1u << v)) == 0);
                seen |= 1u << v;
            }
    }
    CHECK(seen == 0xfffeu);  // all 15 nonzero vectors, each exactly once
}

TEST_CASE("partition of G_2(4,2) into seven spreads") {
    Parallelism42 p = parallelism_g2_4_2();
    std::set<Subspace> all;
    for (const auto& spread : p.spreads) {
        uint32_t seen = 0;
        for (const auto& s : spread) {
            CHECK(s.dim() == 2);
            for (uint32_t v : s.elements())
                if (v) seen |= 1u << v;
            all.insert(s);
        }
        CHECK(seen == 0xfffeu);  // each spread partitions the points
    }
    CHECK(all.size() == 35);  // together: every 2-subspace exactly once
}

TEST_CASE("spread translates form parallel classes of cosets") {
    Parallelism42 p = parallelism_g2_4_2();
    SpreadTranslate tr = spread_translate(p, 0);
    for (const auto& cls : tr.classes) {
        uint32_t seen = 0;
        for (const auto& coset : cls)
            for (uint32_t v : coset) {
                CHECK((seen & (1u << v)) == 0);
                seen |= 1u << v;
            }
        CHECK(seen == 0xffffu);  // each class partitions all 16 vectors
    }
    CHECK(translate_v0_closure(p).size() == 35);
}

TEST_CASE("normal spread covers: sizes and annotations") {
    struct Case {
        int v, m, delta;
        size_t size;
    };
    for (const Case& c : {Case{3, 2, 0, 21}, Case{3, 2, 1, 21}, Case{3, 2, 2, 21},
                          Case{4, 2, 0, 85}, Case{3, 3, 0, 73}}) {
        CoveringDesign d = normal_spread_cover(c.v, c.m, c.delta);
        CAPTURE(c.v);
        CAPTURE(c.m);
        CAPTURE(c.delta);
        CHECK(d.size() == c.size);
        CHECK(d.n == c.v * c.m + c.delta);
        CHECK(d.k == (c.v - 1) * c.m + c.delta);
        CHECK(d.r == c.v - 1);
        const Annotation* a = d.annotation("U");
        REQUIRE(a != nullptr);
        CHECK(a->u.dim() == d.n - 1);
        CHECK(a->count == 1);
        CHECK(structural_count(d, a->u) == 1);
        CHECK(verify_cover(d).ok());
    }
}

TEST_CASE("B-sets halve the space and S_j blocks have full dimension") {
    auto bs = b_sets(4);
    for (const auto& b : bs) CHECK(b.size() == 8);
    Field tower(4);
    auto blocks = s_j_blocks(4, 3, tower);
    for (const auto& s : blocks) {
        CHECK(s.n == 8);
        CHECK(s.dim() == 4);
    }
}
