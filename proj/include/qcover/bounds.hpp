#pragma once
// Lower/upper bound formulas, exact-value theorems, and the rule engine
// assembling best-known bound tables with provenance markers.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcover/design.hpp"
#include "qcover/grassmann.hpp"

namespace qcover {

using BigRat = boost::multiprecision::cpp_rational;

BigInt covering_lower(int n, int k, int r, int q = 2);
BigInt schonheim_lower(int n, int k, int r, int q = 2);
BigInt de_caen_lower(int n, int k, int q = 2);          // bound at r = k-1
BigInt eisfeld_metsch_lower(int s, int q = 2);          // C_q(2s+1,2s-1,s)
BigInt metsch_upper(int s, int x, int q = 2);           // C_q(2s+x,2s+x-2,s+x-1)
std::optional<BigInt> exact_value(int n, int k, int r, int q = 2);

// |D| / covering bound, exact.
BigRat density_ratio(const CoveringDesign& d);

struct BoundCell {
    int n = 0, k = 0, r = 0;
    BigInt lower, upper;
    char lower_marker = '?', upper_marker = '?';
    bool exact() const { return lower == upper; }
    bool witnessed = false;  // a registered construction attains `upper`
};

class BoundTable {
public:
    explicit BoundTable(int n_max);
    const BoundCell& cell(int n, int k, int r) const;
    const std::vector<BoundCell>& cells() const { return cells_; }
    int n_max() const { return n_max_; }

private:
    BigInt best_lower(int n, int k, int r) const;
    BigInt best_upper(int n, int k, int r) const;
    void compute(int n, int k, int r);
    int n_max_;
    std::vector<BoundCell> cells_;
    std::map<std::tuple<int, int, int>, size_t> index_;
};

BoundTable best_bounds(int n_max);

// Transcription of the published tables for n = 5..10.
struct FixtureCell {
    int n, k, r;
    long long lower, upper;
    char lower_marker, upper_marker;
};
const std::vector<FixtureCell>& table_fixture();

struct FixtureIssue {
    int n, k, r;
    std::string what;
    bool value_mismatch;  // false: marker-only
};
std::vector<FixtureIssue> fixture_check(const BoundTable& t);

}  // namespace qcover
