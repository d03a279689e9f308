#include "qcover/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <stdexcept>

#include "qcover/rank_metric.hpp"
#include "qcover/verify.hpp"

namespace qcover {

namespace {

uint32_t reduce_by(uint32_t v, const std::vector<uint32_t>& rows) {
    for (uint32_t r : rows) {
        uint32_t pivot = 1u << (31 - std::countl_zero(r));
        if (v & pivot) v ^= r;
    }
    return v;
}

// blocks contained in the hyperplane orthogonal to a (cheap parity test)
long count_in_hyperplane(const CoveringDesign& d, uint32_t a) {
    long c = 0;
    for (const auto& b : d.blocks) {
        bool in = true;
        for (uint32_t r : b.rows)
            if (std::popcount(r & a) & 1) { in = false; break; }
        if (in) ++c;
    }
    return c;
}

// coordinate map sending U (given in RREF) onto F_2^{dim U}: the pivot bits
// of a member vector are its coordinates in U's basis.
struct PivotIso {
    std::vector<int> pivots;  // bit positions, by row
    explicit PivotIso(const Subspace& u) {
        for (uint32_t r : u.rows) pivots.push_back(31 - std::countl_zero(r));
    }
    uint32_t operator()(uint32_t v) const {
        uint32_t out = 0;
        int d = static_cast<int>(pivots.size());
        for (int i = 0; i < d; ++i)
            if (v >> pivots[i] & 1) out |= 1u << (d - 1 - i);
        return out;
    }
};

// linear map given on a basis, applied by XOR-reduction over tracked pairs
struct LinearMap {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;  // (vec in RREF, image)
    void set(const std::vector<std::pair<uint32_t, uint32_t>>& basis_images) {
        pairs = basis_images;
        // eliminate so that vec parts form an RREF with matching images
        for (size_t i = 0; i < pairs.size(); ++i) {
            size_t best = i;
            for (size_t j = i + 1; j < pairs.size(); ++j)
                if (pairs[j].first > pairs[best].first) best = j;
            std::swap(pairs[i], pairs[best]);
            assert(pairs[i].first);
            uint32_t pivot = 1u << (31 - std::countl_zero(pairs[i].first));
            for (size_t j = 0; j < pairs.size(); ++j)
                if (j != i && (pairs[j].first & pivot)) {
                    pairs[j].first ^= pairs[i].first;
                    pairs[j].second ^= pairs[i].second;
                }
        }
    }
    uint32_t operator()(uint32_t v) const {
        uint32_t img = 0;
        for (const auto& [vec, im] : pairs) {
            uint32_t pivot = 1u << (31 - std::countl_zero(vec));
            if (v & pivot) {
                v ^= vec;
                img ^= im;
            }
        }
        assert(v == 0 && "vector outside the map's domain");
        return img;
    }
    Subspace map_block(const Subspace& b, int n_out) const {
        std::vector<uint32_t> rows;
        for (uint32_t r : b.rows) rows.push_back((*this)(r));
        return Subspace(n_out, std::move(rows));
    }
};

// Append blocks without maintaining sort order; call finalize_checked() once
// the construction is complete to sort and detect collisions in one pass.
void add_all_checked(CoveringDesign& d, const std::vector<Subspace>& blocks) {
    for (const auto& b : blocks) {
        if (b.dim() != d.k || b.n != d.n) throw std::logic_error("construction emitted a bad block");
        d.blocks.push_back(b);
    }
}

void finalize_checked(CoveringDesign& d, size_t expected) {
    std::sort(d.blocks.begin(), d.blocks.end());
    if (std::adjacent_find(d.blocks.begin(), d.blocks.end()) != d.blocks.end())
        throw std::logic_error("construction self-collision");
    if (d.size() != expected) throw std::logic_error("construction produced unexpected size");
}

}  // namespace

CoveringDesign all_subspaces(int n, int k) {
    GrassmannIndexer idx(n, k);
    CoveringDesign d;
    d.n = n;
    d.k = k;
    d.r = k;
    d.provenance = "all";
    d.blocks.reserve(idx.count());
    for (uint64_t i = 0; i < idx.count(); ++i) d.blocks.push_back(idx.unrank(i));
    d.sort_blocks();
    return d;
}

CoveringDesign point_cover(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("point_cover needs 1 <= k <= n");
    CoveringDesign d;
    d.n = n;
    d.k = k;
    d.r = 1;
    d.provenance = "points";
    int b = n % k;
    if (b == 0) {
        if (k == n) {
            d.add(Subspace::full(n));
            return d;
        }
        for (auto& s : field_spread(n, k)) d.add(std::move(s));
        return d;
    }
    // bottom: cover F_2^{k+b} by 2^b+1 blocks through a fixed (k-b)-subspace
    int m0 = k + b;
    std::vector<uint32_t> wrows;
    for (int i = 0; i < k - b; ++i) wrows.push_back(1u << (k - b - 1 - i));
    for (const auto& s : field_spread(2 * b, b)) {
        std::vector<uint32_t> rows = wrows;
        for (uint32_t r : s.rows) rows.push_back(r << (k - b));
        Subspace blk(m0, std::move(rows));
        assert(blk.dim() == k);
        blk.n = n;  // zero-prefix embedding
        d.add(std::move(blk));
    }
    // layers: a delta=k lifted MRD partitions the nonzero-prefix points
    for (int m = m0; m + k <= n; m += k) {
        for (auto& blk : lifted_mrd(m + k, k, k)) {
            blk.n = n;
            d.add(std::move(blk));
        }
    }
    assert(BigInt(d.size()) == ((BigInt(1) << n) - 2) / ((BigInt(1) << k) - 1) + 1);
    return d;
}

CoveringDesign hyperplane_cover(int n, int r) {
    if (r < 1 || r > n - 1) throw std::invalid_argument("hyperplane_cover needs 1 <= r <= n-1");
    CoveringDesign d;
    d.n = n;
    d.k = n - 1;
    d.r = r;
    d.provenance = "hyperplanes";
    // all hyperplanes through span{e_{r+2},..,e_n}: duals of the points
    // supported on the first r+1 coordinates
    for (uint32_t a = 1; a < (1u << (r + 1)); ++a)
        d.add(dual(span(n, std::vector<uint32_t>{a << (n - r - 1)})));
    assert(d.size() == (1u << (r + 1)) - 1);
    return d;
}

CoveringDesign lengthen(const CoveringDesign& d) {
    CoveringDesign out;
    out.n = d.n + 1;
    out.k = d.k + 1;
    out.r = d.r;
    out.provenance = d.provenance.empty() ? "lengthen" : d.provenance + "+len";
    for (const auto& b : d.blocks) {
        std::vector<uint32_t> rows;
        for (uint32_t r : b.rows) rows.push_back(r << 1);
        rows.push_back(1);
        out.add(Subspace(out.n, std::move(rows)));
    }
    return out;
}

CoveringDesign recursive_construction(const CoveringDesign& s1, const CoveringDesign& s2) {
    if (s1.n != s2.n || s2.k != s1.k - 1 || s2.r != s1.r - 1)
        throw std::invalid_argument("recursive_construction: parameter chain mismatch");
    int n = s1.n + 1, k = s1.k, r = s1.r;
    CoveringDesign d;
    d.n = n;
    d.k = k;
    d.r = r;
    d.provenance = "recursive";
    for (const auto& b : s1.blocks) {
        std::vector<uint32_t> rows;
        for (uint32_t row : b.rows) rows.push_back(row << 1);
        d.add(Subspace(n, std::move(rows)));
    }
    for (const auto& b : s2.blocks) {
        // one block per coset representative of b in F_2^{n-1}
        std::vector<uint32_t> reps;
        for (uint32_t v = 0; v < (1u << s2.n); ++v) {
            uint32_t rep = reduce_by(v, b.rows);
            if (std::find(reps.begin(), reps.end(), rep) == reps.end()) reps.push_back(rep);
        }
        assert(reps.size() == (1u << (n - k)));
        for (uint32_t x : reps) {
            std::vector<uint32_t> rows;
            for (uint32_t row : b.rows) rows.push_back(row << 1);
            rows.push_back((x << 1) | 1);
            Subspace blk(n, std::move(rows));
            assert(blk.dim() == k);
            d.add(std::move(blk));
        }
    }
    assert(d.size() == s1.size() + (uint64_t{1} << (n - k)) * s2.size());
    return d;
}

CoveringDesign simple_cmrd(int k) {
    if (k < 3) throw std::invalid_argument("simple_cmrd needs k >= 3");
    CoveringDesign d;
    d.n = 2 * k;
    d.k = k;
    d.r = 2;
    d.provenance = "cmrd";
    add_all_checked(d, lifted_mrd(2 * k, k, k - 1));
    Field tower(k);
    for (int j = 0; j <= static_cast<int>(tower.order()) - 1; ++j) {
        auto blocks = s_j_blocks(k, j, tower);
        add_all_checked(d, std::vector<Subspace>(blocks.begin(), blocks.end()));
    }
    finalize_checked(d, (size_t{1} << (2 * k)) + 6 * ((size_t{1} << k) - 1));
    return d;
}

CoveringDesign cover_7_3_2() {
    CoveringDesign d;
    d.n = 7;
    d.k = 3;
    d.r = 2;
    d.provenance = "b396";
    add_all_checked(d, lifted_mrd(7, 3, 2));
    Field tower(3);
    Parallelism42 p = parallelism_g2_4_2();
    for (int i = 0; i < 7; ++i) {
        uint32_t prefix = tower.alpha_pow(i);
        SpreadTranslate tr = spread_translate(p, i);
        std::vector<Subspace> fam;
        for (const auto& cls : tr.classes)
            for (const auto& coset : cls) {
                std::vector<uint32_t> gens;
                for (uint32_t a : coset) gens.push_back((prefix << 4) | a);
                Subspace blk = span(7, gens);
                assert(blk.dim() == 3);
                fam.push_back(std::move(blk));
            }
        add_all_checked(d, fam);
    }
    finalize_checked(d, 396);
    return d;
}

CoveringDesign cover_8_4_3() {
    CoveringDesign d;
    d.n = 8;
    d.k = 4;
    d.r = 3;
    d.provenance = "b6897";
    add_all_checked(d, lifted_mrd(8, 4, 2));
    Parallelism42 p = parallelism_g2_4_2();
    for (int i = 0; i < 7; ++i) {
        SpreadTranslate tr = spread_translate(p, i);
        for (int c = 0; c < 5; ++c) {
            auto elems = p.spreads[i][c].elements();
            std::sort(elems.begin(), elems.end());
            uint32_t x = elems[1], y = elems[2];
            std::vector<Subspace> fam;
            for (int j = 0; j < 5; ++j)
                for (const Coset& A : tr.classes[j])
                    for (const Coset& B : tr.classes[j]) {
                        std::vector<uint32_t> gens;
                        for (uint32_t a : A) gens.push_back((x << 4) | a);
                        gens.push_back((y << 4) | B[0]);
                        Subspace blk = span(8, gens);
                        assert(blk.dim() == 4);
                        fam.push_back(std::move(blk));
                    }
            add_all_checked(d, fam);
        }
    }
    d.blocks.push_back(span(8, std::vector<uint32_t>{8, 4, 2, 1}));  // V0
    finalize_checked(d, 6897);
    return d;
}

CoveringDesign with_max_hyperplane(CoveringDesign d) {
    long best = -1;
    uint32_t best_a = 0;
    for (uint32_t a = 1; a < (1u << d.n); ++a) {
        long c = count_in_hyperplane(d, a);
        if (c > best) {
            best = c;
            best_a = a;
        }
    }
    d.annotations.push_back({"U", dual(span(d.n, std::vector<uint32_t>{best_a})), best});
    return d;
}

CoveringDesign improved_cmrd(int n, int k, const CoveringDesign& base) {
    if (n < 2 * k) throw std::invalid_argument("improved_cmrd needs n >= 2k");
    if (base.n != n - k + 1 || base.k != k || base.r != 2)
        throw std::invalid_argument("improved_cmrd: base must be a C(n-k+1,k,2)");
    const Annotation* ann = base.annotation("U");
    if (!ann) throw std::runtime_error("structural constant c required");
    const Subspace& u = ann->u;
    int d_suffix = n - k;
    if (u.dim() != d_suffix) throw std::invalid_argument("annotation U must be a hyperplane of the base");

    auto s1 = blocks_inside(base, u);
    assert(static_cast<long>(s1.size()) == ann->count);
    uint32_t w = 1;
    while (u.contains(w)) ++w;  // any vector outside U

    PivotIso psi(u);
    CoveringDesign out;
    out.n = n;
    out.k = k;
    out.r = 2;
    out.provenance = "improved-cmrd";
    add_all_checked(out, lifted_mrd(n, k, k - 1));
    for (uint32_t x = 1; x < (1u << k); ++x) {
        std::vector<Subspace> fam;
        for (const auto& b : base.blocks) {
            if (u.contains(b)) continue;
            std::vector<uint32_t> rows;
            for (uint32_t row : b.rows) {
                uint32_t t = u.contains(row) ? 0 : 1;
                uint32_t inside = t ? row ^ w : row;
                rows.push_back((t ? x << d_suffix : 0) | psi(inside));
            }
            Subspace blk(n, std::move(rows));
            assert(blk.dim() == k);
            fam.push_back(std::move(blk));
        }
        add_all_checked(out, fam);
    }
    {
        std::vector<Subspace> fam;
        for (const auto& b : s1) {
            std::vector<uint32_t> rows;
            for (uint32_t row : b.rows) rows.push_back(psi(row));
            Subspace blk(n, std::move(rows));
            assert(blk.dim() == k);
            fam.push_back(std::move(blk));
        }
        add_all_checked(out, fam);
    }
    finalize_checked(out, (size_t{1} << (2 * (n - k))) +
                              ((size_t{1} << k) - 1) * base.size() -
                              ((size_t{1} << k) - 2) * ann->count);
    return out;
}

BigInt cor_15_size(int n) {
    if (n < 3) throw std::invalid_argument("cor_15_size needs n >= 3");
    BigInt one = 1;
    BigInt total = one << (4 * n - 4);
    BigInt q = one << (2 * n - 2);
    total += 7 * (q * (q - 1)) / 12;
    for (int i = 0; i <= n - 4; ++i) {
        BigInt p = one << (2 * i + 4);
        total += p * (p - 1) / 4;
    }
    return total;
}

CoveringDesign improved_cmrd_r3(int n, int k, const CoveringDesign& base,
                                const std::optional<CoveringDesign>& inner) {
    if (n < 2 * k) throw std::invalid_argument("improved_cmrd_r3 needs n >= 2k");
    if (base.n != n - k + 2 || base.k != k || base.r != 3)
        throw std::invalid_argument("improved_cmrd_r3: base must be a C(n-k+2,k,3)");
    const Annotation* a0 = base.annotation("U0");
    const Annotation* a1 = base.annotation("U1");
    const Annotation* a2 = base.annotation("U2");
    const Annotation* a3 = base.annotation("U3");
    if (!a0 || !a1 || !a2 || !a3) throw std::runtime_error("annotations U0..U3 required");
    long c0 = a0->count, c1 = a1->count, c2 = a2->count, c3 = a3->count;
    if (!(c0 <= c1 && c1 <= c2 && c2 <= c3))
        throw std::invalid_argument("annotation counts must satisfy c0 <= c1 <= c2 <= c3");
    int d_suffix = n - k;
    if (a0->u.dim() != d_suffix) throw std::invalid_argument("U0 must have dim n-k");
    for (const Annotation* a : {a1, a2, a3}) {
        if (a->u.dim() != d_suffix + 1 || !a->u.contains(a0->u))
            throw std::invalid_argument("U1..U3 must be hyperplanes above U0");
    }
    if (intersect(a1->u, a2->u) != a0->u || intersect(a1->u, a3->u) != a0->u ||
        intersect(a2->u, a3->u) != a0->u)
        throw std::invalid_argument("U1..U3 must pairwise meet in U0");

    PivotIso psi(a0->u);
    // vectors extending U0 into U1 / U2 (U3 direction is their sum's class)
    auto pick_outside = [&](const Subspace& ui) {
        for (uint32_t v : ui.elements())
            if (v && !a0->u.contains(v)) return v;
        throw std::logic_error("no extension vector");
    };
    uint32_t u1v = pick_outside(a1->u), u2v = pick_outside(a2->u);

    // suffix multiplier beta_x: only meaningful when prefix and suffix have
    // equal length (n = 2k); identity otherwise
    std::optional<Field> suffix_field;
    if (k == d_suffix) suffix_field.emplace(d_suffix);
    auto twist = [&](uint32_t x, uint32_t v) -> uint32_t {
        if (!suffix_field) return v;
        return suffix_field->mul(static_cast<uint16_t>(x), static_cast<uint16_t>(v));
    };

    // assign, for every 2-subspace of the prefix space, which nonzero
    // element plays the U1 role; every prefix must get the role at least once
    GrassmannIndexer prefix_pairs(k, 2);
    struct Triple {
        uint32_t to_u1, to_u2, to_u3;
    };
    std::vector<Triple> triples;
    std::vector<int> role_count(1u << k, 0);
    for (uint64_t i = 0; i < prefix_pairs.count(); ++i) {
        auto elems = prefix_pairs.unrank(i).elements();
        std::sort(elems.begin(), elems.end());
        uint32_t x = elems[1], y = elems[2], z = elems[3];
        uint32_t pick = x;
        if (role_count[x] == 0)
            pick = x;
        else if (role_count[y] == 0)
            pick = y;
        else if (role_count[z] == 0)
            pick = z;
        ++role_count[pick];
        uint32_t o1 = (pick == x) ? y : x;
        uint32_t o2 = x ^ y ^ z ^ pick ^ o1;
        triples.push_back({pick, o1, o2});
    }
    for (uint32_t x = 1; x < (1u << k); ++x)
        if (role_count[x] == 0) {
            // repair: steal the role in some triple containing x whose
            // current holder has it elsewhere too
            bool fixed = false;
            for (uint64_t i = 0; i < prefix_pairs.count() && !fixed; ++i) {
                Triple& t = triples[i];
                if (t.to_u1 != x && t.to_u2 != x && t.to_u3 != x) continue;
                if (role_count[t.to_u1] <= 1) continue;
                --role_count[t.to_u1];
                uint32_t old = t.to_u1;
                if (t.to_u2 == x)
                    t = {x, old, t.to_u3};
                else
                    t = {x, t.to_u2, old};
                ++role_count[x];
                fixed = true;
            }
            if (!fixed) throw std::runtime_error("U1 role assignment infeasible");
        }

    auto s1 = blocks_inside(base, a1->u);
    std::vector<Subspace> c1_eligible;
    for (const auto& b : base.blocks)
        if (!a1->u.contains(b) && !a2->u.contains(b) && !a3->u.contains(b))
            c1_eligible.push_back(b);
    assert(static_cast<long>(c1_eligible.size()) == static_cast<long>(base.size()) - c1 - c2 - c3 + 2 * c0);

    CoveringDesign out;
    out.n = n;
    out.k = k;
    out.r = 3;
    out.provenance = "improved-cmrd-r3";
    add_all_checked(out, lifted_mrd(n, k, k - 2));

    // C1: one embedding of the base per prefix 2-subspace
    for (size_t ti = 0; ti < triples.size(); ++ti) {
        const Triple& t = triples[ti];
        std::vector<std::pair<uint32_t, uint32_t>> basis;
        for (uint32_t row : a0->u.rows) basis.push_back({row, twist(t.to_u1, psi(row))});
        basis.push_back({u1v, t.to_u1 << d_suffix});
        basis.push_back({u2v, t.to_u2 << d_suffix});
        LinearMap phi;
        phi.set(basis);
        std::vector<Subspace> fam;
        for (const auto& b : c1_eligible) {
            Subspace blk = phi.map_block(b, n);
            assert(blk.dim() == k);
            fam.push_back(std::move(blk));
        }
        add_all_checked(out, fam);
    }

    // C2: the inside-U1 blocks once per nonzero prefix, twisted to match
    for (uint32_t x = 1; x < (1u << k); ++x) {
        std::vector<std::pair<uint32_t, uint32_t>> basis;
        for (uint32_t row : a0->u.rows) basis.push_back({row, twist(x, psi(row))});
        basis.push_back({u1v, x << d_suffix});
        LinearMap mu;
        mu.set(basis);
        std::vector<Subspace> fam;
        for (const auto& b : s1) {
            if (a0->u.contains(b)) continue;
            Subspace blk = mu.map_block(b, n);
            assert(blk.dim() == k);
            fam.push_back(std::move(blk));
        }
        add_all_checked(out, fam);
    }

    // C3: optional inner design placed on the zero-prefix space
    if (inner) {
        if (inner->n != d_suffix || inner->k != k || inner->r != 3)
            throw std::invalid_argument("inner must be a C(n-k,k,3)");
        std::vector<Subspace> fam;
        for (const auto& b : inner->blocks) {
            Subspace blk = b;
            blk.n = n;
            fam.push_back(std::move(blk));
        }
        add_all_checked(out, fam);
    }

    size_t expect = (size_t{1} << (3 * (n - k))) +
                    gaussian(k, 2, 2).convert_to<size_t>() * (base.size() - c1 - c2 - c3 + 2 * c0) +
                    ((size_t{1} << k) - 1) * (c1 - c0) + (inner ? inner->size() : 0);
    finalize_checked(out, expect);
    return out;
}

namespace {

// The structured C2(7,5,3) of size 99 with its U0..U3 annotations.
CoveringDesign structured_base_753() {
    // C2(6,4,2): duals of a normal spread; every hyperplane holds one block
    CoveringDesign d642 = normal_spread_cover(3, 2, 0);
    // C2(6,5,3): hyperplanes through span{e5,e6}
    CoveringDesign d653 = hyperplane_cover(6, 3);
    CoveringDesign d753 = recursive_construction(d653, d642);
    assert(d753.size() == 99);

    // structured subspaces: W = {coordinate 6 = 0} in F_2^6, chosen so the
    // fixed 2-subspace of the hyperplane cover is NOT inside W
    std::vector<uint32_t> u0rows;
    for (int i = 0; i < 5; ++i) u0rows.push_back(1u << (6 - i));  // W x {0}
    Subspace u0 = span(7, u0rows);
    Subspace u3 = span(7, std::vector<uint32_t>{64, 32, 16, 8, 4, 2});  // F_2^6 x {0}
    Subspace u1 = sum(u0, span(7, std::vector<uint32_t>{1}));
    Subspace u2 = sum(u0, span(7, std::vector<uint32_t>{3}));

    struct Cand {
        Subspace u;
        long c;
    };
    std::vector<Cand> cands = {{u1, structural_count(d753, u1)},
                               {u2, structural_count(d753, u2)},
                               {u3, structural_count(d753, u3)}};
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.c < b.c; });
    d753.annotations.push_back({"U0", u0, structural_count(d753, u0)});
    d753.annotations.push_back({"U1", cands[0].u, cands[0].c});
    d753.annotations.push_back({"U2", cands[1].u, cands[1].c});
    d753.annotations.push_back({"U3", cands[2].u, cands[2].c});
    return d753;
}

}  // namespace

BigInt cover_10_5_3_size() {
    CoveringDesign d753 = structured_base_753();
    long c0 = d753.annotation("U0")->count, c1 = d753.annotation("U1")->count;
    long c2 = d753.annotation("U2")->count, c3 = d753.annotation("U3")->count;
    return (BigInt(1) << 15) + gaussian(5, 2, 2) * (BigInt(d753.size()) - c1 - c2 - c3 + 2 * c0) +
           31 * BigInt(c1 - c0);
}

Cover1053Result cover_10_5_3(bool refine) {
    CoveringDesign d753 = structured_base_753();
    std::optional<CoveringDesign> inner;
    if (!refine) inner = all_subspaces(5, 5);
    Cover1053Result res;
    res.design = improved_cmrd_r3(10, 5, d753, inner);
    res.design.provenance = refine ? "c1053" : "c1053-fallback";
    res.refined = refine;
    return res;
}

std::optional<CoveringDesign> registry_design(int n, int k, int r) {
    static std::map<std::tuple<int, int, int>, CoveringDesign> cache;
    auto key = std::make_tuple(n, k, r);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::optional<CoveringDesign> out;
    if (r == k) {
        out = all_subspaces(n, k);
    } else if (r == 1) {
        out = point_cover(n, k);
    } else if (k == n - 1) {
        out = hyperplane_cover(n, r);
    } else {
        // normal spread pattern
        for (int m = 2; !out && m <= n; ++m)
            for (int v = 2; v * m <= n; ++v) {
                int delta = n - v * m;
                if (delta >= 0 && k == v * m - m + delta && r == v - 1) {
                    out = normal_spread_cover(v, m, delta);
                    break;
                }
            }
        if (!out && r == 2 && k >= 3) {
            if (n == 2 * k) {
                out = simple_cmrd(k);
            } else if (n == 7 && k == 3) {
                out = cover_7_3_2();
            } else if (n == 7 && k == 4) {
                out = recursive_construction(normal_spread_cover(3, 2, 0), point_cover(6, 3));
            } else if (n >= 2 * k + 1 && n - k + 1 >= 2) {
                if (auto base = registry_design(n - k + 1, k, 2))
                    out = improved_cmrd(n, k, with_max_hyperplane(*base));
            }
        }
        if (!out && r == 3 && n == 8 && k == 4) out = cover_8_4_3();
        if (!out && r == 3 && n == 10 && k == 5) out = cover_10_5_3(true).design;
    }
    if (out) cache[key] = *out;
    return out;
}

}  // namespace qcover
