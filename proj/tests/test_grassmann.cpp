#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qcover/grassmann.hpp"

using namespace qcover;

TEST_CASE("Gaussian coefficients") {
    CHECK(gaussian(4, 2) == 35);
    CHECK(gaussian(6, 3) == 1395);
    CHECK(gaussian(10, 3) == 6347715);
    CHECK(gaussian(10, 5) == BigInt("109221651"));
    CHECK(gaussian(5, 0) == 1);
    CHECK(gaussian(5, 5) == 1);
    CHECK(gaussian(3, 4) == 0);
    CHECK(gaussian(7, 2) == gaussian(7, 5));  // symmetry
    CHECK(gaussian(4, 2, 3) == 130);          // q = 3
}

TEST_CASE("indexer counts match the Gaussian coefficient") {
    GrassmannIndexer idx(6, 3);
    CHECK(idx.count() == 1395);
    CHECK(GrassmannIndexer(10, 3).count() == 6347715);
}

TEST_CASE("rank and unrank are inverse over all of G_2(6,3)") {
    GrassmannIndexer idx(6, 3);
    std::set<Subspace> seen;
    for (uint64_t i = 0; i < idx.count(); ++i) {
        Subspace s = idx.unrank(i);
        CHECK(s.dim() == 3);
        CHECK(idx.rank(s) == i);
        seen.insert(s);
    }
    CHECK(seen.size() == idx.count());
}

TEST_CASE("for_each visits in rank order") {
    GrassmannIndexer idx(5, 2);
    uint64_t expected = 0;
    idx.for_each([&](uint64_t i, const Subspace& s) {
        CHECK(i == expected++);
        CHECK(idx.rank(s) == i);
    });
    CHECK(expected == idx.count());
}

TEST_CASE("subspace enumeration of a fixed block") {
    GrassmannIndexer idx(6, 4);
    Subspace x = idx.unrank(1234 % idx.count());
    uint64_t cnt = 0;
    std::set<Subspace> seen;
    for_each_subspace_of(x, 2, [&](const Subspace& y) {
        CHECK(y.dim() == 2);
        CHECK(x.contains(y));
        seen.insert(y);
        ++cnt;
    });
    CHECK(cnt == 35);  // [4 2]_2
    CHECK(seen.size() == cnt);
}
