#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qcover/rank_metric.hpp"

using namespace qcover;

TEST_CASE("gf2_rank and rank distance") {
    CHECK(gf2_rank({0b110, 0b011, 0b101}) == 2);
    CHECK(gf2_rank({0b100, 0b010, 0b001}) == 3);
    RankMatrix a{3, 3, {0b110, 0b011, 0b001}};
    RankMatrix b{3, 3, {0b110, 0b011, 0b001}};
    CHECK(rank_distance(a, b) == 0);
    b.row_bits[2] = 0b000;
    CHECK(rank_distance(a, b) == 1);
}

TEST_CASE("lifting produces identity-prefixed echelon blocks") {
    RankMatrix a{3, 3, {0b110, 0b011, 0b001}};
    Subspace s = lift(a);
    CHECK(s.n == 6);
    CHECK(s.to_hex() == "26 13 09");
}

TEST_CASE("code sizes and minimum rank distance at (6,3,2)") {
    std::vector<RankMatrix> words;
    gabidulin_codewords(3, 3, 2, [&](const RankMatrix& m) { words.push_back(m); });
    CHECK(words.size() == 64);  // 2^{ell * (k - delta + 1)}
    int min_d = 99;
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j)
            min_d = std::min(min_d, rank_distance(words[i], words[j]));
    CHECK(min_d == 2);
}

TEST_CASE("lifted code is distinct and echelon at (7,3,2)") {
    auto blocks = lifted_mrd(7, 3, 2);
    CHECK(blocks.size() == 256);  // 2^{(n-k)(k-delta+1)}
    std::set<Subspace> seen(blocks.begin(), blocks.end());
    CHECK(seen.size() == blocks.size());
    for (const auto& b : blocks) {
        CHECK(b.dim() == 3);
        CHECK(prefix_kernel_dim(b, 3) == 0);  // trivial meet with the suffix space
    }
}

TEST_CASE("exact-once transversal property at (6,3,2)") {
    Subspace w;
    CHECK(std_exact_cover_check(6, 3, 2, &w));
}
