#include "qcover/bounds.hpp"

namespace qcover {

// Reference values for the bound table, n = 5..10.  Each entry records the
// best known lower and upper bound for C_2(n,k,r) together with the one-letter
// rule tags ('l' stands in for the script-ell tag).  Exact cells repeat the
// same value for both bounds.
const std::vector<FixtureCell>& table_fixture() {
    static const std::vector<FixtureCell> cells = {
        // n = 5
        {5, 4, 4, 31, 31, 'q', 'q'},
        {5, 4, 3, 15, 15, 'q', 'q'},
        {5, 3, 3, 155, 155, 'a', 'a'},
        {5, 4, 2, 7, 7, 'q', 'q'},
        {5, 3, 2, 27, 27, 'e', 'm'},
        {5, 2, 2, 155, 155, 'a', 'a'},
        {5, 4, 1, 3, 3, 'p', 'p'},
        {5, 3, 1, 5, 5, 'p', 'p'},
        {5, 2, 1, 11, 11, 'p', 'p'},
        {5, 1, 1, 31, 31, 'p', 'p'},
        // n = 6
        {6, 5, 5, 63, 63, 'q', 'q'},
        {6, 5, 4, 31, 31, 'q', 'q'},
        {6, 4, 4, 651, 651, 'a', 'a'},
        {6, 5, 3, 15, 15, 'q', 'q'},
        {6, 4, 3, 114, 122, 's', 'm'},
        {6, 3, 3, 1395, 1395, 'a', 'a'},
        {6, 5, 2, 7, 7, 'q', 'q'},
        {6, 4, 2, 21, 21, 's', 'n'},
        {6, 3, 2, 99, 106, 's', 'c'},
        {6, 2, 2, 651, 651, 'a', 'a'},
        {6, 5, 1, 3, 3, 'p', 'p'},
        {6, 4, 1, 5, 5, 'p', 'p'},
        {6, 3, 1, 9, 9, 'p', 'p'},
        {6, 2, 1, 21, 21, 'p', 'p'},
        {6, 1, 1, 63, 63, 'p', 'p'},
        // n = 7
        {7, 6, 6, 127, 127, 'q', 'q'},
        {7, 6, 5, 63, 63, 'q', 'q'},
        {7, 5, 5, 2667, 2667, 'a', 'a'},
        {7, 6, 4, 31, 31, 'q', 'q'},
        {7, 5, 4, 468, 519, 's', 'r'},
        {7, 4, 4, 11811, 11811, 'a', 'a'},
        {7, 6, 3, 15, 15, 'q', 'q'},
        {7, 5, 3, 99, 99, 'e', 'r'},
        {7, 4, 3, 839, 970, 's', 'r'},
        {7, 3, 3, 11811, 11811, 'a', 'a'},
        {7, 6, 2, 7, 7, 'q', 'q'},
        {7, 5, 2, 21, 21, 's', 'n'},
        {7, 4, 2, 77, 93, 's', 'r'},
        {7, 3, 2, 381, 396, 's', 'f'},
        {7, 2, 2, 2667, 2667, 'a', 'a'},
        {7, 6, 1, 3, 3, 'p', 'p'},
        {7, 5, 1, 5, 5, 'p', 'p'},
        {7, 4, 1, 9, 9, 'p', 'p'},
        {7, 3, 1, 19, 19, 'p', 'p'},
        {7, 2, 1, 43, 43, 'p', 'p'},
        {7, 1, 1, 127, 127, 'p', 'p'},
        // n = 8
        {8, 7, 7, 255, 255, 'q', 'q'},
        {8, 7, 6, 127, 127, 'q', 'q'},
        {8, 6, 6, 10795, 10795, 'a', 'a'},
        {8, 7, 5, 63, 63, 'q', 'q'},
        {8, 6, 5, 1895, 2139, 's', 'r'},
        {8, 5, 5, 97155, 97155, 'a', 'a'},
        {8, 7, 4, 31, 31, 'q', 'q'},
        {8, 6, 4, 401, 426, 's', 'm'},
        {8, 5, 4, 6902, 8279, 's', 'r'},
        {8, 4, 4, 200787, 200787, 'a', 'a'},
        {8, 7, 3, 15, 15, 'q', 'q'},
        {8, 6, 3, 85, 85, 's', 'n'},
        {8, 5, 3, 634, 843, 's', 'r'},
        {8, 4, 3, 6477, 6897, 's', 'g'},
        {8, 3, 3, 97155, 97155, 'a', 'a'},
        {8, 7, 2, 7, 7, 'q', 'q'},
        {8, 6, 2, 21, 21, 's', 'n'},
        {8, 5, 2, 75, 93, 's', 'l'},
        {8, 4, 2, 323, 346, 's', 'c'},
        {8, 3, 2, 1567, 1658, 's', 'i'},
        {8, 2, 2, 10795, 10795, 'a', 'a'},
        {8, 7, 1, 3, 3, 'p', 'p'},
        {8, 6, 1, 5, 5, 'p', 'p'},
        {8, 5, 1, 9, 9, 'p', 'p'},
        {8, 4, 1, 17, 17, 'p', 'p'},
        {8, 3, 1, 37, 37, 'p', 'p'},
        {8, 2, 1, 85, 85, 'p', 'p'},
        {8, 1, 1, 255, 255, 'p', 'p'},
        // n = 9
        {9, 8, 8, 511, 511, 'q', 'q'},
        {9, 8, 7, 255, 255, 'q', 'q'},
        {9, 7, 7, 43435, 43435, 'a', 'a'},
        {9, 8, 6, 127, 127, 'q', 'q'},
        {9, 7, 6, 7625, 8683, 's', 'r'},
        {9, 6, 6, 788035, 788035, 'a', 'a'},
        {9, 8, 5, 63, 63, 'q', 'q'},
        {9, 7, 5, 1614, 1767, 's', 'r'},
        {9, 6, 5, 55983, 68371, 's', 'r'},
        {9, 5, 5, 3309747, 3309747, 'a', 'a'},
        {9, 8, 4, 31, 31, 'q', 'q'},
        {9, 7, 4, 371, 371, 'e', 'r'},
        {9, 6, 4, 5143, 7170, 's', 'r'},
        {9, 5, 4, 108574, 118631, 'd', 'r'},
        {9, 4, 4, 3309747, 3309747, 'a', 'a'},
        {9, 8, 3, 15, 15, 'q', 'q'},
        {9, 7, 3, 85, 85, 's', 'n'},
        {9, 6, 3, 609, 829, 's', 'r'},
        {9, 5, 3, 5325, 6379, 's', 'r'},
        {9, 4, 3, 53383, 59953, 's', 'r'},
        {9, 3, 3, 788035, 788035, 'a', 'a'},
        {9, 8, 2, 7, 7, 'q', 'q'},
        {9, 7, 2, 21, 21, 's', 'n'},
        {9, 6, 2, 73, 73, 's', 'n'},
        {9, 5, 2, 281, 346, 's', 'l'},
        {9, 4, 2, 1261, 1325, 's', 'i'},
        {9, 3, 2, 6205, 6508, 's', 'i'},
        {9, 2, 2, 43435, 43435, 'a', 'a'},
        {9, 8, 1, 3, 3, 'p', 'p'},
        {9, 7, 1, 5, 5, 'p', 'p'},
        {9, 6, 1, 9, 9, 'p', 'p'},
        {9, 5, 1, 17, 17, 'p', 'p'},
        {9, 4, 1, 35, 35, 'p', 'p'},
        {9, 3, 1, 73, 73, 'p', 'p'},
        {9, 2, 1, 171, 171, 'p', 'p'},
        {9, 1, 1, 511, 511, 'p', 'p'},
        // n = 10
        {10, 9, 9, 1023, 1023, 'q', 'q'},
        {10, 9, 8, 511, 511, 'q', 'q'},
        {10, 8, 8, 174251, 174251, 'a', 'a'},
        {10, 9, 7, 255, 255, 'q', 'q'},
        {10, 8, 7, 30590, 34987, 's', 'r'},
        {10, 7, 7, 6347715, 6347715, 'a', 'a'},
        {10, 9, 6, 127, 127, 'q', 'q'},
        {10, 8, 6, 6475, 7195, 's', 'r'},
        {10, 7, 6, 451631, 555651, 'd', 'r'},
        {10, 6, 6, 53743987, 53743987, 'a', 'a'},
        {10, 9, 5, 63, 63, 'q', 'q'},
        {10, 8, 5, 1489, 1546, 's', 'm'},
        {10, 7, 5, 41428, 59127, 's', 'r'},
        {10, 6, 5, 1777360, 1966467, 'd', 'r'},
        {10, 5, 5, 109221651, 109221651, 'a', 'a'},
        {10, 9, 4, 31, 31, 'q', 'q'},
        {10, 8, 4, 341, 341, 's', 'n'},
        {10, 7, 4, 4906, 7003, 's', 'r'},
        {10, 6, 4, 86468, 109234, 's', 'r'},
        {10, 5, 4, 1761639, 1937127, 's', 'r'},
        {10, 4, 4, 53743987, 53743987, 'a', 'a'},
        {10, 9, 3, 15, 15, 'q', 'q'},
        {10, 8, 3, 85, 85, 's', 'n'},
        {10, 7, 3, 589, 669, 's', 'r'},
        {10, 6, 3, 4563, 6365, 's', 'r'},
        {10, 5, 3, 41613, 45230, 's', 'i'},
        {10, 4, 3, 423181, 476465, 's', 'r'},
        {10, 3, 3, 6347715, 6347715, 'a', 'a'},
        {10, 9, 2, 7, 7, 'q', 'q'},
        {10, 8, 2, 21, 21, 's', 'n'},
        {10, 7, 2, 73, 73, 's', 'n'},
        {10, 6, 2, 277, 345, 's', 'r'},
        {10, 5, 2, 1155, 1210, 's', 'c'},
        {10, 4, 2, 4979, 5197, 's', 'i'},
        {10, 3, 2, 24991, 26298, 's', 'i'},
        {10, 2, 2, 174251, 174251, 'a', 'a'},
        {10, 9, 1, 3, 3, 'p', 'p'},
        {10, 8, 1, 5, 5, 'p', 'p'},
        {10, 7, 1, 9, 9, 'p', 'p'},
        {10, 6, 1, 17, 17, 'p', 'p'},
        {10, 5, 1, 33, 33, 'p', 'p'},
        {10, 4, 1, 69, 69, 'p', 'p'},
        {10, 3, 1, 147, 147, 'p', 'p'},
        {10, 2, 1, 341, 341, 'p', 'p'},
        {10, 1, 1, 1023, 1023, 'p', 'p'},
    };
    return cells;
}

}  // namespace qcover
