#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcover/bounds.hpp"
#include "qcover/constructions.hpp"

using namespace qcover;

TEST_CASE("lower bound formulas") {
    CHECK(covering_lower(6, 3, 2) == 93);
    CHECK(covering_lower(7, 3, 2) == 381);
    CHECK(covering_lower(10, 5, 3) == 40953);
    CHECK(schonheim_lower(10, 5, 3) == 41613);
    CHECK(de_caen_lower(9, 5) == 108574);
    CHECK(de_caen_lower(10, 7) == 451631);
    CHECK(eisfeld_metsch_lower(2) == 27);   // C_2(5,3,2)
    CHECK(eisfeld_metsch_lower(3) == 99);   // C_2(7,5,3)
    CHECK(eisfeld_metsch_lower(4) == 371);  // C_2(9,7,4)
}

TEST_CASE("upper bound formulas") {
    CHECK(metsch_upper(2, 1) == 27);   // C_2(5,3,2) is exactly 27
    CHECK(metsch_upper(2, 2) == 122);  // C_2(6,4,3)
    CHECK(metsch_upper(3, 2) == 426);  // C_2(8,6,4)
    CHECK(metsch_upper(4, 2) == 1546); // C_2(10,8,5)
}

TEST_CASE("exact-value rules") {
    CHECK(exact_value(6, 5, 3) == BigInt(15));    // hyperplanes
    CHECK(exact_value(9, 2, 1) == BigInt(171));   // points
    CHECK(exact_value(6, 4, 2) == BigInt(21));    // normal spread duals
    CHECK(exact_value(9, 6, 2) == BigInt(73));
    CHECK(exact_value(10, 8, 4) == BigInt(341));
    CHECK_FALSE(exact_value(7, 4, 2).has_value());
}

TEST_CASE("schonheim steps from the previous dimension") {
    CHECK(schonheim_lower(6, 4, 3) == 114);
    CHECK(schonheim_lower(7, 3, 2) == 381);
}

TEST_CASE("table engine produces the expected spot values") {
    BoundTable t = best_bounds(8);
    CHECK(t.cell(7, 3, 2).lower == 381);
    CHECK(t.cell(7, 3, 2).upper == 396);
    CHECK(t.cell(7, 3, 2).upper_marker == 'f');
    CHECK(t.cell(8, 4, 3).upper == 6897);
    CHECK(t.cell(8, 4, 3).upper_marker == 'g');
    CHECK(t.cell(8, 4, 2).upper == 346);
    CHECK(t.cell(8, 4, 2).upper_marker == 'c');
    CHECK(t.cell(8, 5, 2).upper == 93);
    CHECK(t.cell(8, 5, 2).upper_marker == 'l');
    CHECK(t.cell(8, 3, 2).upper == 1658);
    CHECK(t.cell(8, 3, 2).upper_marker == 'i');
    CHECK(t.cell(5, 3, 2).lower == 27);
    CHECK(t.cell(5, 3, 2).upper == 27);
    for (const auto& c : t.cells()) {
        CAPTURE(c.n);
        CAPTURE(c.k);
        CAPTURE(c.r);
        CHECK(c.lower <= c.upper);
        CHECK(c.lower >= 1);
    }
}

TEST_CASE("density ratio is exact") {
    CoveringDesign d = simple_cmrd(3);
    CHECK(density_ratio(d) == BigRat(106, 93));
}
