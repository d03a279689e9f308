#include "qcover/bounds.hpp"

#include <stdexcept>

#include "qcover/constructions.hpp"

namespace qcover {

namespace {

BigInt qpow(int q, int e) { return boost::multiprecision::pow(BigInt(q), e); }

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

}  // namespace

BigInt covering_lower(int n, int k, int r, int q) {
    if (r > k || k > n) throw std::invalid_argument("covering_lower needs r <= k <= n");
    return ceil_div(gaussian(n, r, q), gaussian(k, r, q));
}

BigInt de_caen_lower(int n, int k, int q) {
    if (k >= n) throw std::invalid_argument("de_caen_lower needs k < n");
    BigRat v = BigRat((qpow(q, k) - 1) * (q - 1)) / ((qpow(q, n - k) - 1) * (qpow(q, n - k) - 1));
    v *= BigRat(gaussian(n, k + 1, q));
    return ceil_div(boost::multiprecision::numerator(v), boost::multiprecision::denominator(v));
}

BigInt eisfeld_metsch_lower(int s, int q) {
    if (s < 2) throw std::invalid_argument("eisfeld_metsch_lower needs s >= 2");
    return (qpow(q, 2 * s + 2) - q * q) / (q * q - 1) + (qpow(q, s + 1) - 1) / (q - 1);
}

BigInt metsch_upper(int s, int x, int q) {
    if (x < 1 || x > s) throw std::invalid_argument("metsch_upper needs 1 <= x <= s");
    return (qpow(q, 2 * s + 2 * x) - qpow(q, 2 * x)) / (q * q - 1) +
           (qpow(q, x) - 1) / (q - 1) * ((qpow(q, s + x) - qpow(q, x - 1)) / (q - 1));
}

std::optional<BigInt> exact_value(int n, int k, int r, int q) {
    if (r == 1) return ceil_div(qpow(q, n) - 1, qpow(q, k) - 1);
    if (k == n - 1) return (qpow(q, r + 1) - 1) / (q - 1);
    for (int m = 2; m <= n; ++m)
        for (int v = 2; v * m <= n; ++v) {
            int delta = n - v * m;
            if (k == v * m - m + delta && r == v - 1)
                return (qpow(q, v * m) - 1) / (qpow(q, m) - 1);
        }
    return std::nullopt;
}

BigRat density_ratio(const CoveringDesign& d) {
    return BigRat(BigInt(d.size())) / BigRat(covering_lower(d.n, d.k, d.r, 2));
}

BigInt schonheim_lower(int n, int k, int r, int q) {
    if (r > k || k > n) throw std::invalid_argument("schonheim_lower needs r <= k <= n");
    if (r == 1) return ceil_div(qpow(q, n) - 1, qpow(q, k) - 1);
    if (r == k) return gaussian(n, k, q);
    // one step on top of the engine's best lower for the derived cell
    if (q != 2) throw std::invalid_argument("schonheim_lower is only tabulated for q=2");
    BoundTable t = best_bounds(n - 1);
    return ceil_div((qpow(q, n) - 1) * t.cell(n - 1, k - 1, r - 1).lower, qpow(q, k) - 1);
}

const BoundCell& BoundTable::cell(int n, int k, int r) const {
    auto it = index_.find({n, k, r});
    if (it == index_.end()) throw std::out_of_range("no such bound cell");
    return cells_[it->second];
}

BigInt BoundTable::best_lower(int n, int k, int r) const { return cell(n, k, r).lower; }
BigInt BoundTable::best_upper(int n, int k, int r) const { return cell(n, k, r).upper; }

void BoundTable::compute(int n, int k, int r) {
    BoundCell c;
    c.n = n;
    c.k = k;
    c.r = r;
    if (r == 1) {
        c.lower = c.upper = *exact_value(n, k, 1);
        c.lower_marker = c.upper_marker = 'p';
        c.witnessed = true;
    } else if (k == n - 1) {
        c.lower = c.upper = (qpow(2, r + 1) - 1);
        c.lower_marker = c.upper_marker = 'q';
        c.witnessed = true;
    } else if (k == r) {
        c.lower = c.upper = gaussian(n, k, 2);
        c.lower_marker = c.upper_marker = 'a';
        c.witnessed = true;
    } else {
        struct Cand {
            char marker;
            BigInt value;
        };
        std::optional<BigInt> exact = exact_value(n, k, r, 2);

        // lower bounds, in tie precedence order
        std::vector<Cand> lowers;
        if (n % 2 == 1 && k == n - 2 && r == (n - 1) / 2 && r >= 2)
            lowers.push_back({'e', eisfeld_metsch_lower(r, 2)});
        if (r == k - 1) lowers.push_back({'d', de_caen_lower(n, k, 2)});
        lowers.push_back({'s', ceil_div((qpow(2, n) - 1) * best_lower(n - 1, k - 1, r - 1),
                                        qpow(2, k) - 1)});
        if (exact) lowers.push_back({'n', *exact});
        c.lower = lowers.front().value;
        c.lower_marker = lowers.front().marker;
        for (const auto& cand : lowers)
            if (cand.value > c.lower) {
                c.lower = cand.value;
                c.lower_marker = cand.marker;
            }

        // upper bounds, in tie precedence order
        std::vector<Cand> uppers;
        if (exact) uppers.push_back({'n', *exact});
        if (n == 7 && k == 3 && r == 2) uppers.push_back({'f', 396});
        if (n == 8 && k == 4 && r == 3) uppers.push_back({'g', 6897});
        if (r == 2 && k >= 3 && n == 2 * k)
            uppers.push_back({'c', qpow(2, 2 * k) + 6 * (qpow(2, k) - 1)});
        if (r == 2 && k >= 3 && n >= 2 * k + 1) {
            if (auto base = registry_design(n - k + 1, k, 2)) {
                CoveringDesign annotated = with_max_hyperplane(*base);
                long cc = annotated.annotation("U")->count;
                uppers.push_back({'i', qpow(2, 2 * (n - k)) + (qpow(2, k) - 1) * BigInt(base->size()) -
                                           (qpow(2, k) - 2) * cc});
            }
        }
        if (n == 10 && k == 5 && r == 3) uppers.push_back({'i', cover_10_5_3_size()});
        if (k == n - 2) {
            int s = n - r - 1, x = 2 * r + 2 - n;
            if (x >= 1 && x <= s) uppers.push_back({'m', metsch_upper(s, x, 2)});
        }
        uppers.push_back({'l', best_upper(n - 1, k - 1, r)});
        if (r >= 2)
            uppers.push_back({'r', qpow(2, n - k) * best_upper(n - 1, k - 1, r - 1) +
                                       best_upper(n - 1, k, r)});
        uppers.push_back({'a', gaussian(n, k, 2)});
        c.upper = uppers.front().value;
        c.upper_marker = uppers.front().marker;
        for (const auto& cand : uppers)
            if (cand.value < c.upper) {
                c.upper = cand.value;
                c.upper_marker = cand.marker;
            }
        c.witnessed = std::string("nqfgcia").find(c.upper_marker) != std::string::npos;
        if (c.lower > c.upper) throw std::logic_error("bound inversion in table engine");
    }
    index_[{n, k, r}] = cells_.size();
    cells_.push_back(std::move(c));
}

BoundTable::BoundTable(int n_max) : n_max_(n_max) {
    if (n_max < 2 || n_max > 12) throw std::invalid_argument("best_bounds supports 2 <= n_max <= 12");
    for (int n = 2; n <= n_max; ++n)
        for (int r = 1; r < n; ++r)
            for (int k = r; k <= n - 1; ++k) compute(n, k, r);
}

BoundTable best_bounds(int n_max) { return BoundTable(n_max); }

std::vector<FixtureIssue> fixture_check(const BoundTable& t) {
    std::vector<FixtureIssue> issues;
    for (const auto& f : table_fixture()) {
        if (f.n > t.n_max()) continue;
        const BoundCell& c = t.cell(f.n, f.k, f.r);
        if (c.lower != f.lower || c.upper != f.upper) {
            issues.push_back({f.n, f.k, f.r,
                              "value mismatch: computed " + c.lower.str() + "-" + c.upper.str() +
                                  ", published " + std::to_string(f.lower) + "-" +
                                  std::to_string(f.upper),
                              true});
        } else if (c.lower_marker != f.lower_marker || c.upper_marker != f.upper_marker) {
            issues.push_back({f.n, f.k, f.r,
                              std::string("marker mismatch: computed ") + c.lower_marker + "/" +
                                  c.upper_marker + ", published " + f.lower_marker + "/" +
                                  f.upper_marker,
                              false});
        }
    }
    return issues;
}

}  // namespace qcover
