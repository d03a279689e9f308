#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qcover/constructions.hpp"
#include "qcover/qcd_io.hpp"

using namespace qcover;

namespace {

std::string dump(const CoveringDesign& d) {
    std::ostringstream os;
    qcd_write(os, d);
    return os.str();
}

CoveringDesign load(const std::string& s) {
    std::istringstream is(s);
    return qcd_read(is);
}

}  // namespace

TEST_CASE("round-trip preserves the canonical design") {
    CoveringDesign d = cover_7_3_2();
    CoveringDesign e = load(dump(d));
    CHECK(e.n == d.n);
    CHECK(e.k == d.k);
    CHECK(e.r == d.r);
    CHECK(e.provenance == d.provenance);
    CHECK(e.blocks == d.blocks);
}

TEST_CASE("annotations round-trip") {
    CoveringDesign d = normal_spread_cover(3, 2, 0);
    CoveringDesign e = load(dump(d));
    REQUIRE(e.annotations.size() == d.annotations.size());
    const Annotation* a = e.annotation("U");
    REQUIRE(a != nullptr);
    CHECK(a->u == d.annotation("U")->u);
    CHECK(a->count == d.annotation("U")->count);
}

TEST_CASE("header example parses") {
    CoveringDesign d = load("QCD1 q=2 n=6 k=3 r=2 count=1 prov=demo\n26 13 09\n");
    CHECK(d.size() == 1);
    CHECK(d.blocks[0].to_hex() == "26 13 09");
}

TEST_CASE("parse errors name lines") {
    CHECK_THROWS_AS(load(""), QcdParseError);
    CHECK_THROWS_AS(load("NOPE q=2 n=6 k=3 r=2 count=0 prov=x\n"), QcdParseError);
    CHECK_THROWS_AS(load("QCD1 q=3 n=6 k=3 r=2 count=0 prov=x\n"), QcdParseError);
    // wrong count
    CHECK_THROWS_AS(load("QCD1 q=2 n=6 k=3 r=2 count=2 prov=x\n26 13 09\n"), QcdParseError);
    // wrong row multiplicity
    CHECK_THROWS_AS(load("QCD1 q=2 n=6 k=3 r=2 count=1 prov=x\n26 13\n"), QcdParseError);
    // rows not in reduced echelon form (dependent rows)
    CHECK_THROWS_AS(load("QCD1 q=2 n=6 k=3 r=2 count=1 prov=x\n26 13 35\n"), QcdParseError);
    // duplicate block
    CHECK_THROWS_AS(load("QCD1 q=2 n=6 k=3 r=2 count=2 prov=x\n26 13 09\n26 13 09\n"),
                    QcdParseError);
    try {
        load("QCD1 q=2 n=6 k=3 r=2 count=1 prov=x\n26 13 zz\n");
        FAIL("expected a parse error");
    } catch (const QcdParseError& e) {
        CHECK(e.line == 2);
    }
}
