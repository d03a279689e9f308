#include "qcover/spreads.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "qcover/grassmann.hpp"

namespace qcover {

std::vector<Subspace> field_spread(int n, int k) {
    if (k < 1 || n % k != 0) throw std::invalid_argument("spread requires k | n");
    Field f(n);
    uint32_t s = ((1u << n) - 1) / ((1u << k) - 1);
    std::vector<Subspace> out;
    out.reserve(s);
    for (uint32_t t = 0; t < s; ++t) {
        std::vector<uint32_t> gens;
        for (uint32_t j = 0; j < (1u << k) - 1; ++j)
            gens.push_back(f.alpha_pow(t + static_cast<long long>(j) * s));
        out.push_back(span(n, gens));
        assert(out.back().dim() == k);
    }
    return out;
}

static CoveringDesign lengthen_once(const CoveringDesign& d) {
    CoveringDesign out;
    out.n = d.n + 1;
    out.k = d.k + 1;
    out.r = d.r;
    out.provenance = d.provenance;
    for (const auto& b : d.blocks) {
        std::vector<uint32_t> rows;
        for (uint32_t r : b.rows) rows.push_back(r << 1);
        rows.push_back(1);  // new last coordinate
        out.add(Subspace(out.n, std::move(rows)));
    }
    for (const auto& a : d.annotations) {
        std::vector<uint32_t> rows;
        for (uint32_t r : a.u.rows) rows.push_back(r << 1);
        rows.push_back(1);
        out.annotations.push_back({a.label, Subspace(out.n, std::move(rows)), a.count});
    }
    return out;
}

CoveringDesign normal_spread_cover(int v, int m, int delta) {
    if (v < 2 || m < 2 || delta < 0 || v * m + delta > 31)
        throw std::invalid_argument("bad normal spread parameters");
    int nn = v * m;
    CoveringDesign d;
    d.n = nn;
    d.k = nn - m;
    d.r = v - 1;
    d.provenance = "nspread";
    for (const auto& s : field_spread(nn, m)) d.add(dual(s));
    // designated hyperplane with exactly one block: dual of the first point
    for (uint32_t a = 1; a < (1u << nn); ++a) {
        Subspace u = dual(span(nn, std::vector<uint32_t>{a}));
        if (structural_count(d, u) == 1) {
            d.annotations.push_back({"U", u, 1});
            break;
        }
    }
    for (int i = 0; i < delta; ++i) d = lengthen_once(d);
    return d;
}

namespace {

struct SearchState {
    const std::vector<Subspace>* all;
    const std::vector<uint32_t>* points;  // nonzero-point mask per subspace
    std::array<bool, 35> used{};
    Parallelism42 result;
    bool done = false;

    void solve(int spread_idx) {
        if (done) return;
        if (spread_idx == 7) {
            done = true;
            return;
        }
        int first = 0;
        while (first < 35 && used[first]) ++first;
        std::array<int, 5> chosen{};
        chosen[0] = first;
        used[first] = true;
        extend(spread_idx, chosen, 1, (*points)[first], first + 1);
        used[first] = false;
    }

    void extend(int spread_idx, std::array<int, 5>& chosen, int depth, uint32_t covered, int from) {
        if (done) return;
        if (depth == 5) {
            assert(covered == 0x7fff);
            for (int t = 0; t < 5; ++t) result.spreads[spread_idx][t] = (*all)[chosen[t]];
            solve(spread_idx + 1);
            return;
        }
        for (int i = from; i < 35; ++i) {
            if (used[i] || (covered & (*points)[i])) continue;
            chosen[depth] = i;
            used[i] = true;
            extend(spread_idx, chosen, depth + 1, covered | (*points)[i], i + 1);
            used[i] = false;
            if (done) return;
        }
    }
};

}  // namespace

Parallelism42 parallelism_g2_4_2() {
    GrassmannIndexer idx(4, 2);
    std::vector<Subspace> all;
    std::vector<uint32_t> points;
    for (uint64_t i = 0; i < idx.count(); ++i) {
        all.push_back(idx.unrank(i));
        uint32_t mask = 0;
        for (uint32_t v : all.back().elements())
            if (v) mask |= 1u << (v - 1);
        points.push_back(mask);
    }
    SearchState st;
    st.all = &all;
    st.points = &points;
    st.solve(0);
    if (!st.done) throw std::logic_error("parallelism search failed");
    return st.result;
}

SpreadTranslate spread_translate(const Parallelism42& p, int i) {
    if (i < 0 || i > 6) throw std::invalid_argument("spread index out of range");
    SpreadTranslate out;
    for (int c = 0; c < 5; ++c) {
        auto elems = p.spreads[i][c].elements();
        std::sort(elems.begin(), elems.end());
        std::vector<Coset> cosets;
        for (uint32_t u = 0; u < 16; ++u) {
            Coset cs;
            for (int t = 0; t < 4; ++t) cs[t] = elems[t] ^ u;
            std::sort(cs.begin(), cs.end());
            if (std::find(cosets.begin(), cosets.end(), cs) == cosets.end()) cosets.push_back(cs);
        }
        assert(cosets.size() == 4);
        std::sort(cosets.begin(), cosets.end());
        for (int t = 0; t < 4; ++t) out.classes[c][t] = cosets[t];
    }
    return out;
}

std::vector<Subspace> translate_v0_closure(const Parallelism42& p) {
    Subspace v0 = span(8, std::vector<uint32_t>{8, 4, 2, 1});
    std::vector<Subspace> out;
    for (int i = 0; i < 7; ++i) {
        SpreadTranslate tr = spread_translate(p, i);
        for (const auto& cls : tr.classes)
            for (const auto& coset : cls) {
                std::vector<uint32_t> gens;
                for (uint32_t a : coset) gens.push_back((1u << 4) | a);  // prefix z = 0001
                Subspace meet = intersect(span(8, gens), v0);
                std::vector<uint32_t> rows = meet.rows;  // suffix-only vectors
                Subspace s4 = span(4, rows);
                if (std::find(out.begin(), out.end(), s4) == out.end()) out.push_back(s4);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::array<std::vector<uint32_t>, 6> b_sets(int k) {
    if (k < 3) throw std::invalid_argument("b_sets needs k >= 3");
    std::array<std::vector<uint32_t>, 6> out;
    for (uint32_t x = 0; x < (1u << k); ++x) {
        int b1 = x >> (k - 1) & 1, b2 = x >> (k - 2) & 1;
        out[b1 == 0 ? 0 : 1].push_back(x);
        out[b2 == 0 ? 2 : 3].push_back(x);
        out[b1 == b2 ? 4 : 5].push_back(x);
    }
    return out;
}

std::array<Subspace, 6> s_j_blocks(int k, int j, const Field& tower) {
    if (tower.degree() != k) throw std::invalid_argument("tower degree must equal k");
    if (j < 0 || j > static_cast<int>(tower.order()) - 1) throw std::invalid_argument("bad j");
    uint16_t aj = tower.alpha_pow(j);
    auto bs = b_sets(k);
    std::array<Subspace, 6> out;
    for (int i = 0; i < 6; ++i) {
        std::vector<uint32_t> gens;
        for (uint32_t x : bs[i])
            gens.push_back((static_cast<uint32_t>(aj) << k) | tower.mul(aj, static_cast<uint16_t>(x)));
        out[i] = span(2 * k, gens);
        assert(out[i].dim() == k);
    }
    return out;
}

}  // namespace qcover
