#pragma once

// The census of ascending T-pairs: admissible invariants, witness lattices,
// reversion partners, S-pairs and the realization inside the K3 lattice.

#include "zlat/gluing.hpp"
#include "zlat/stability.hpp"

#include <array>
#include <functional>
#include <map>

namespace zlat {

// ---------------------------------------------------------------------------
// Invariants of T-halves.

// discr_3 = p<2/3> + q<-2/3> with p in {0,1}.
struct THalfInvariants {
    int r = 0, r2 = 0, delta2 = 0, p = 0, q = 0;

    int r3() const { return p + q; }
    auto key() const { return std::tie(r, r2, delta2, p, q); }
    friend bool operator==(const THalfInvariants& a, const THalfInvariants& b) { return a.key() == b.key(); }
    friend bool operator!=(const THalfInvariants& a, const THalfInvariants& b) { return !(a == b); }
    friend bool operator<(const THalfInvariants& a, const THalfInvariants& b) { return a.key() < b.key(); }
    std::string text() const {
        return "(r=" + std::to_string(r) + ",r2=" + std::to_string(r2) + ",d2=" + std::to_string(delta2) +
               ",p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
    }
};

struct HalfReport {
    THalfInvariants inv;
    int br2 = 0;  // Brown invariant of discr_2
    int br3 = 0;  // Brown invariant of discr_3
    long sigma = 0;
};

// Invariants of an even hyperbolic lattice whose discriminant is elementary
// at 2 and 3 and trivial elsewhere; nullopt for anything else.
inline std::optional<HalfReport> analyzeHalf(const Lattice& L) {
    if (!L.isEven() || !isHyperbolic(L)) return std::nullopt;
    FQF F = discriminantForm(L);
    for (long p : primesOf(F))
        if (p != 2 && p != 3) return std::nullopt;
    FQF F2 = pPart(F, 2), F3 = pPart(F, 3);
    if (!isElementary(F2, 2) || !isElementary(F3, 3)) return std::nullopt;
    HalfReport h;
    h.inv.r = static_cast<int>(L.rank());
    h.inv.r2 = static_cast<int>(F2.rank());
    h.inv.delta2 = F2.rank() ? parity2(F2) : 0;
    NormalForm3 nf = normalForm3(F3);
    h.inv.p = nf.p();
    h.inv.q = nf.q();
    h.br2 = F2.rank() ? brownElementary2(F2) : 0;
    h.br3 = nf.brown();
    h.sigma = signatureIndex(L);
    return h;
}

inline std::optional<THalfInvariants> tHalfInvariants(const Lattice& L) {
    auto h = analyzeHalf(L);
    if (!h) return std::nullopt;
    return h->inv;
}

// Structural conditions on a quintuple, independent of the restrictions.
inline std::string structuralViolation(const THalfInvariants& t) {
    if (t.r < 1 || t.r > 9) return "rank";
    if (t.r2 < 0 || t.r2 > t.r) return "r2 range";
    if ((t.r2 - t.r) % 2 != 0) return "r2 parity";
    if (t.r2 == 0 && t.delta2 != 0) return "r2=0 forces even";
    if (t.r2 % 2 == 1 && t.delta2 != 1) return "odd r2 forces odd";
    if (t.p < 0 || t.p > 1 || t.q < 0 || t.q > 3) return "(p,q) range";
    return {};
}

// First of the seven rank/parity/3-part restrictions violated, 0 if none.
inline int restrictionViolated(const THalfInvariants& t) {
    auto mod = [](int a, int m) { return ((a % m) + m) % m; };
    const int r = t.r, r2 = t.r2, d = t.delta2, qp = t.q - t.p;
    if (r2 == 0 && (r % 2 != 0 || mod(qp - (r / 2 - 1), 4) != 0)) return 1;
    if (r2 == 1) {
        bool ok = (r % 2 == 1) && (mod(qp - ((r + 1) / 2 - 1), 4) == 0 || mod(qp - ((r - 1) / 2 - 1), 4) == 0);
        if (!ok) return 2;
    }
    if (r2 == 2 && r % 2 == 0 && mod(qp - (r / 2 + 1), 4) == 0 && d != 0) return 3;
    if (d == 0 && (r % 2 != 0 || r2 % 2 != 0 || mod(qp - (r / 2 - 1), 2) != 0)) return 4;
    if (r2 == r && d == 0 && (r % 2 != 0 || mod(-qp - (r / 2 - 1), 4) != 0)) return 5;
    if (t.r3() == r && mod(qp - (r - 2), 4) != 0) return 6;
    if (r < t.r3()) return 7;
    return 0;
}

inline bool passesRestrictions(const THalfInvariants& t) {
    return structuralViolation(t).empty() && restrictionViolated(t) == 0;
}

// The same restrictions phrased through Brown invariants and the signature
// sigma = 2 - r; an independent formulation used as a cross-check.
inline int brownRestrictionViolated(const THalfInvariants& t) {
    auto mod8 = [](int a) { return ((a % 8) + 8) % 8; };
    const int sigma = 2 - t.r, br3 = 2 * (t.p - t.q);
    if (t.r2 == 0 && mod8(br3 - sigma) != 0) return 1;
    if (t.r2 == 1 && mod8(br3 - sigma) != 1 && mod8(br3 - sigma) != 7) return 2;
    if (t.r2 == 2 && mod8(br3 - sigma) == 4 && t.delta2 != 0) return 3;
    if (t.delta2 == 0 && (t.r2 % 2 != 0 || mod8(br3 - sigma) % 4 != 0)) return 4;
    if (t.r2 == t.r && t.delta2 == 0 && mod8(br3 + sigma) != 0) return 5;
    if (t.r3() == t.r && mod8(br3 - 2 * sigma) != 0) return 6;
    if (t.r < t.r3()) return 7;
    return 0;
}

// The complementary half of an ascending pair: r' = 9-r, r2' = r2+1, odd.
inline THalfInvariants complementOf(const THalfInvariants& t) { return {9 - t.r, t.r2 + 1, 1, 1 - t.p, 3 - t.q}; }

struct InvariantPair {
    THalfInvariants t1, t2;
    friend bool operator==(const InvariantPair& a, const InvariantPair& b) { return a.t1 == b.t1 && a.t2 == b.t2; }
};

// Sort key for ascending pairs: (r2, r, delta2, p, q) of the smaller half.
inline auto censusKey(const THalfInvariants& t) { return std::make_tuple(t.r2, t.r, t.delta2, t.p, t.q); }

// Both halves pass the restrictions; r2(T1) <= min(r, 8-r).
inline std::vector<InvariantPair> admissibleInvariants() {
    std::vector<InvariantPair> out;
    for (int r = 1; r <= 8; ++r)
        for (int r2 = 0; r2 <= std::min(r, 8 - r); ++r2)
            for (int d = 0; d <= 1; ++d)
                for (int p = 0; p <= 1; ++p)
                    for (int q = 0; q <= 3; ++q) {
                        THalfInvariants t{r, r2, d, p, q};
                        if (!passesRestrictions(t)) continue;
                        THalfInvariants c = complementOf(t);
                        if (!passesRestrictions(c)) continue;
                        out.push_back({t, c});
                    }
    std::sort(out.begin(), out.end(),
              [](const InvariantPair& a, const InvariantPair& b) { return censusKey(a.t1) < censusKey(b.t1); });
    return out;
}

inline bool isAdmissiblePair(const THalfInvariants& t1, const THalfInvariants& t2) {
    for (const auto& ip : admissibleInvariants())
        if (ip.t1 == t1 && ip.t2 == t2) return true;
    return false;
}

// Whether t occurs as either half of some admissible pair.
inline bool isTHalf(const THalfInvariants& t) {
    for (const auto& ip : admissibleInvariants())
        if (ip.t1 == t || ip.t2 == t) return true;
    return false;
}

inline std::vector<std::pair<int, int>> distinctRankPairs() {
    std::set<std::pair<int, int>> s;
    for (const auto& ip : admissibleInvariants()) s.insert({ip.t1.r, ip.t1.r2});
    return {s.begin(), s.end()};
}

// One row of the grouped admissibility table: a (r, r2) of T1, a set of
// parities, and the (p,q) values admitted for exactly that parity set.
struct GroupedRow {
    std::vector<int> deltas;
    int r = 0, r2 = 0;
    std::vector<std::pair<int, int>> pq;
};

inline std::vector<GroupedRow> groupedAdmissible() {
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, std::vector<int>>> byRank;
    for (const auto& ip : admissibleInvariants())
        byRank[{ip.t1.r2, ip.t1.r}][{ip.t1.p, ip.t1.q}].push_back(ip.t1.delta2);
    std::vector<GroupedRow> rows;
    for (auto& [rk, cells] : byRank) {
        // parity sets in the order {0}, {0,1}, {1}
        const std::vector<std::vector<int>> order{{0}, {0, 1}, {1}};
        for (const auto& ds : order) {
            GroupedRow row{ds, rk.second, rk.first, {}};
            for (auto& [pq, dl] : cells) {
                std::sort(dl.begin(), dl.end());
                if (dl == ds) row.pq.push_back(pq);
            }
            if (!row.pq.empty()) rows.push_back(row);
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Witness search over a fixed block catalog.

struct Block {
    std::string name;
    Lattice lattice;
    bool hyperbolic = false;
    int r = 0, r2 = 0, delta2 = 0, a3 = 0, b3 = 0;  // a3/b3: <2/3> and <-2/3> counts
};

inline const std::vector<Block>& blockCatalog() {
    static const std::vector<Block> catalog = [] {
        const std::vector<std::string> names{"U",   "U(2)", "U(3)", "U(6)", "<2>",   "<6>",
                                             "<-6>", "A1",   "A2",   "A2(2)", "D4", "E6"};
        std::vector<Block> out;
        for (const auto& n : names) {
            Block b;
            b.name = n;
            b.lattice = parseLatticeExpr(n);
            b.hyperbolic = signature(b.lattice).nPlus == 1;
            FQF F = discriminantForm(b.lattice);
            FQF F2 = pPart(F, 2), F3 = pPart(F, 3);
            b.r = static_cast<int>(b.lattice.rank());
            b.r2 = static_cast<int>(F2.rank());
            b.delta2 = F2.rank() ? parity2(F2) : 0;
            NormalForm3 nf = normalForm3(F3);
            b.a3 = nf.a;
            b.b3 = nf.b;
            out.push_back(b);
        }
        return out;
    }();
    return catalog;
}

inline std::string blocksExpr(const std::vector<int>& blocks) {
    const auto& cat = blockCatalog();
    std::string s;
    for (std::size_t i = 0; i < blocks.size();) {
        std::size_t j = i;
        while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
        std::size_t m = j - i;
        s += (s.empty() ? "" : "+") + (m > 1 ? std::to_string(m) : "") + cat[blocks[i]].name;
        i = j;
    }
    return s;
}

inline Lattice blocksLattice(const std::vector<int>& blocks) {
    Lattice L = emptyLattice();
    for (int b : blocks) L = directSum(L, blockCatalog()[b].lattice);
    L.expr = blocksExpr(blocks);
    return L;
}

struct HalfWitness {
    THalfInvariants inv;
    Lattice lattice;
    std::vector<int> blocks;  // indices into blockCatalog(), nondecreasing
};

// Exactly one hyperbolic block; fewest summands first, then lexicographic in
// catalog order. Invariants are combined per block and then recomputed from
// the assembled lattice.
inline std::optional<HalfWitness> findWitness(const THalfInvariants& target) {
    const auto& cat = blockCatalog();
    const int nb = static_cast<int>(cat.size());
    std::optional<HalfWitness> found;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int start, int remaining, int rankLeft) {
        if (found) return;
        if (remaining == 0) {
            if (rankLeft != 0) return;
            int r2 = 0, d = 0, a = 0, b = 0;
            for (int i : cur) {
                r2 += cat[i].r2;
                d = std::max(d, cat[i].delta2);
                a += cat[i].a3;
                b += cat[i].b3;
            }
            THalfInvariants t{target.r, r2, d, a % 2, a + b - a % 2};
            if (t != target) return;
            HalfWitness w{target, blocksLattice(cur), cur};
            auto check = tHalfInvariants(w.lattice);
            if (!check || *check != target) throw std::logic_error("block invariants disagree with recomputation");
            found = w;
            return;
        }
        for (int i = start; i < nb && !found; ++i) {
            if (cat[i].hyperbolic || cat[i].r > rankLeft) continue;
            cur.push_back(i);
            rec(i, remaining - 1, rankLeft - cat[i].r);
            cur.pop_back();
        }
    };
    for (int k = 1; k <= target.r && !found; ++k)
        for (int h = 0; h < nb && !found; ++h) {
            if (!cat[h].hyperbolic || cat[h].r > target.r) continue;
            cur = {h};
            rec(0, k - 1, target.r - cat[h].r);
        }
    return found;
}

inline HalfWitness witnessLattice(const THalfInvariants& inv) {
    auto w = findWitness(inv);
    if (!w) throw std::runtime_error("no witness lattice for " + inv.text());
    return *w;
}

// ---------------------------------------------------------------------------
// Ascending T-pairs.

struct TPair {
    HalfWitness tPlus, tMinus;
    bool ascending = true;
};

// Checks the five pair properties plus the Brown pairing; returns the failures.
inline std::vector<std::string> pairViolations(const Lattice& t1, const Lattice& t2) {
    std::vector<std::string> bad;
    auto h1 = analyzeHalf(t1), h2 = analyzeHalf(t2);
    if (!h1 || !h2) return {"not a pair of T-half shaped lattices"};
    const auto &a = h1->inv, &b = h2->inv;
    if (a.r + b.r != 9) bad.push_back("ranks do not sum to 9");
    if (std::abs(a.r2 - b.r2) != 1) bad.push_back("2-ranks do not differ by 1");
    const THalfInvariants& big = a.r2 > b.r2 ? a : b;
    if (big.delta2 != 1) bad.push_back("larger 2-rank side is even");
    // discr_3 sum: p-counts add to 1 mod 2, ranks add to 4.
    if ((a.p + b.p) % 2 != 1 || a.r3() + b.r3() != 4) bad.push_back("3-parts do not sum to <2/3>+3<-2/3>");
    if ((h1->br2 + h2->br2) % 8 != 7) bad.push_back("Br2 sum is not 7 mod 8");
    return bad;
}

inline std::vector<TPair> enumerateAscendingTPairs() {
    std::vector<TPair> out;
    for (const auto& ip : admissibleInvariants()) {
        TPair tp{witnessLattice(ip.t1), witnessLattice(ip.t2), true};
        auto bad = pairViolations(tp.tPlus.lattice, tp.tMinus.lattice);
        if (!bad.empty()) throw std::logic_error("pair " + ip.t1.text() + ": " + bad.front());
        out.push_back(std::move(tp));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reversion roots and partners.

// [v/2] is the characteristic element of discr_2 L; v must satisfy v.L in 2Z.
inline bool halfIsCharacteristic(const Lattice& L, const IntVec& v) {
    FQF F = discriminantForm(L);
    FQF F2 = pPart(F, 2);
    RatMatrix G = toRat(L.gram);
    RatVec h(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) h[i] = Rat(v[i], 2);
    for (const auto& y : F2.lifts)
        if (fracPart(bilinear(h, G, y) - bilinear(y, G, y)) != 0) return false;
    return true;
}

namespace detail {

struct RootOption {
    long norm;
    bool characteristic;
    IntVec v;
};

// Small vectors w of one block with Gw = 0 mod 2, one per (norm, char) class.
inline std::vector<RootOption> blockRootOptions(const Block& b) {
    const std::size_t n = b.lattice.rank();
    const long box = b.hyperbolic ? 3 : 2;
    std::vector<std::vector<long>> G(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) G[i][j] = b.lattice.gram(i, j).get_si();
    FQF F2 = pPart(discriminantForm(b.lattice), 2);
    std::vector<RatVec> lifts = F2.lifts;
    RatMatrix GR = toRat(b.lattice.gram);
    std::map<std::pair<long, bool>, IntVec> best;
    std::vector<long> w(n, -box);
    for (;;) {
        bool even = true;
        long norm = 0;
        for (std::size_t i = 0; i < n && even; ++i) {
            long s = 0;
            for (std::size_t j = 0; j < n; ++j) s += G[i][j] * w[j];
            if (s % 2 != 0) even = false;
            norm += w[i] * s;
        }
        if (even && norm >= -40 && norm <= 40) {
            bool ch = true;
            for (const auto& y : lifts) {
                RatVec h(n);
                for (std::size_t i = 0; i < n; ++i) h[i] = Rat(w[i], 2);
                if (fracPart(bilinear(h, GR, y) - bilinear(y, GR, y)) != 0) {
                    ch = false;
                    break;
                }
            }
            auto key = std::make_pair(norm, ch);
            if (!best.count(key)) {
                IntVec iv(n);
                for (std::size_t i = 0; i < n; ++i) iv[i] = w[i];
                best[key] = iv;
            }
        }
        std::size_t k = 0;
        while (k < n && w[k] == box) w[k++] = -box;
        if (k == n) break;
        ++w[k];
    }
    std::vector<RootOption> out;
    for (auto& [key, v] : best) out.push_back({key.first, key.second, v});
    return out;
}

}  // namespace detail

// An even (-2)-vector v of the witness with [v/2] characteristic exactly
// when wantCharacteristic; searched block by block inside a bounded box.
inline std::optional<IntVec> findReversionRoot(const HalfWitness& t2, bool wantCharacteristic) {
    const auto& cat = blockCatalog();
    // state: (norm, all components characteristic) -> chosen options
    std::map<std::pair<long, bool>, std::vector<IntVec>> states{{{0, true}, {}}};
    for (int bi : t2.blocks) {
        auto opts = detail::blockRootOptions(cat[bi]);
        std::map<std::pair<long, bool>, std::vector<IntVec>> next;
        for (const auto& [st, chosen] : states)
            for (const auto& o : opts) {
                long norm = st.first + o.norm;
                if (norm < -60 || norm > 60) continue;
                auto key = std::make_pair(norm, st.second && o.characteristic);
                if (next.count(key)) continue;
                auto c = chosen;
                c.push_back(o.v);
                next[key] = c;
            }
        states.swap(next);
    }
    auto it = states.find({-2, wantCharacteristic});
    if (it == states.end()) return std::nullopt;
    IntVec v;
    for (const auto& part : it->second) v.insert(v.end(), part.begin(), part.end());
    const Lattice& L = t2.lattice;
    if (L.norm(v) != -2) throw std::logic_error("root search produced a vector of wrong norm");
    for (const auto& x : mulVec(L.gram, v))
        if (x % 2 != 0) throw std::logic_error("root search produced an odd vector");
    if (halfIsCharacteristic(L, v) != wantCharacteristic) throw std::logic_error("root search: characteristic mismatch");
    return v;
}

struct PartnerResult {
    IntVec root;
    Lattice t1, t2;  // (T2^v, Zv + T1)
};

// Partner invariants are fixed: r -> 8 - r, r2 and delta2 kept, (p,q) -> (1-p, 3-q).
inline THalfInvariants partnerInvariants(const THalfInvariants& t) { return {8 - t.r, t.r2, t.delta2, 1 - t.p, 3 - t.q}; }

inline std::optional<PartnerResult> reversionPartner(const TPair& pair) {
    if (!pair.ascending) throw std::invalid_argument("reversion partner requires an ascending pair");
    auto v = findReversionRoot(pair.tMinus, pair.tPlus.inv.delta2 == 0);
    if (!v) return std::nullopt;
    IntMatrix vb(0, v->size());
    vb.appendRow(*v);
    Lattice t1 = orthogonalComplement({pair.tMinus.lattice, vb}).induced();
    t1.expr = "(" + pair.tMinus.lattice.expr + ")^v";
    Lattice t2 = directSum(latticeA(1), pair.tPlus.lattice);
    t2.expr = "Zv+" + pair.tPlus.lattice.expr;
    auto i1 = tHalfInvariants(t1), i2 = tHalfInvariants(t2);
    THalfInvariants e1 = partnerInvariants(pair.tPlus.inv), e2 = complementOf(e1);
    if (!i1 || !i2 || *i1 != e1 || *i2 != e2) throw std::logic_error("partner invariants disagree with the partnership rule");
    return PartnerResult{*v, t1, t2};
}

// ---------------------------------------------------------------------------
// The census with partners and table placement.

struct CensusEntry {
    TPair pair;
    bool reversible = false;
    std::optional<std::size_t> partnerIndex;
    std::optional<IntVec> root;
    std::string tableRef;  // "8A:3", "8B:12", "8C:12"
};

inline bool isNullPair(const THalfInvariants& t) {
    return t.r == 4 && t.r2 == 4 && t.delta2 == 0 && ((t.p == 1 && t.q == 0) || (t.p == 0 && t.q == 3));
}

inline std::vector<CensusEntry> buildCensus() {
    std::vector<CensusEntry> out;
    for (auto& tp : enumerateAscendingTPairs()) out.push_back({std::move(tp), false, {}, {}, {}});
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto& e = out[i];
        auto pr = reversionPartner(e.pair);
        if (!pr) continue;
        e.reversible = true;
        e.root = pr->root;
        THalfInvariants want = partnerInvariants(e.pair.tPlus.inv);
        for (std::size_t j = 0; j < out.size(); ++j)
            if (out[j].pair.tPlus.inv == want) e.partnerIndex = j;
        if (!e.partnerIndex) throw std::logic_error("partner invariants not in the census");
        const auto& other = out[*e.partnerIndex].pair;
        if (isomorphicInGenus(pr->t1, other.tPlus.lattice) != Verdict::Yes ||
            isomorphicInGenus(pr->t2, other.tMinus.lattice) != Verdict::Yes)
            throw std::logic_error("partner lattices not isomorphic to the census witnesses: " + e.pair.tPlus.lattice.expr +
                                   " (" + verdictText(isomorphicInGenus(pr->t1, other.tPlus.lattice)) + "," +
                                   verdictText(isomorphicInGenus(pr->t2, other.tMinus.lattice)) + ") " +
                                   genusTag(pr->t1).text() + " vs " + genusTag(other.tPlus.lattice).text());
    }
    // Placement: irreversible pairs in census order; reversible p = 0 pairs by
    // (r2, r, q, delta2) with the empty-curve pair last; partners alongside.
    std::vector<std::size_t> irr, minus;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!out[i].reversible) irr.push_back(i);
        else if (out[i].pair.tPlus.inv.p == 0) minus.push_back(i);
    }
    std::sort(minus.begin(), minus.end(), [&](std::size_t a, std::size_t b) {
        const auto &x = out[a].pair.tPlus.inv, &y = out[b].pair.tPlus.inv;
        return std::make_tuple(isNullPair(x), x.r2, x.r, x.q, x.delta2) <
               std::make_tuple(isNullPair(y), y.r2, y.r, y.q, y.delta2);
    });
    for (std::size_t k = 0; k < irr.size(); ++k) out[irr[k]].tableRef = "8A:" + std::to_string(k + 1);
    for (std::size_t k = 0; k < minus.size(); ++k) {
        out[minus[k]].tableRef = "8B:" + std::to_string(k + 1);
        out[*out[minus[k]].partnerIndex].tableRef = "8C:" + std::to_string(k + 1);
    }
    for (const auto& e : out)
        if (e.tableRef.empty()) throw std::logic_error("census entry without table placement");
    return out;
}

inline const std::vector<CensusEntry>& census() {
    static const std::vector<CensusEntry> c = buildCensus();
    return c;
}

inline std::optional<std::size_t> censusIndexByRef(const std::string& ref) {
    const auto& c = census();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].tableRef == ref) return i;
    return std::nullopt;
}

inline std::vector<std::size_t> censusRowsOf(const std::string& table) {
    std::vector<std::pair<int, std::size_t>> rows;
    const auto& c = census();
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto pos = c[i].tableRef.find(':');
        if (c[i].tableRef.substr(0, pos) == table) rows.emplace_back(std::stoi(c[i].tableRef.substr(pos + 1)), i);
    }
    std::sort(rows.begin(), rows.end());
    std::vector<std::size_t> out;
    for (auto& r : rows) out.push_back(r.second);
    return out;
}

// ---------------------------------------------------------------------------
// S-pairs.

enum class Sign { Plus, Minus };

inline const char* signText(Sign s) { return s == Sign::Plus ? "+" : "-"; }

struct SPair {
    int nuI = 0;
    Sign o = Sign::Minus;
    Lattice sPlus, sMinus;
};

namespace detail {

// A sum of A2, A2(2) and <-6> summands with the master vector summing
// e' - e'' over each rank-2 block and the generator over each <-6>.
inline std::pair<Lattice, IntVec> masterSum(int nA2, int nA22, int nM6) {
    Lattice L = emptyLattice();
    IntVec v;
    std::string expr;
    auto add = [&](const std::string& name, int count, const IntVec& part) {
        for (int i = 0; i < count; ++i) {
            L = directSum(L, parseLatticeExpr(name));
            v.insert(v.end(), part.begin(), part.end());
        }
        if (count) expr += (expr.empty() ? "" : "+") + (count > 1 ? std::to_string(count) : "") + name;
    };
    add("A2", nA2, {1, -1});
    add("A2(2)", nA22, {1, -1});
    add("<-6>", nM6, {1});
    L.expr = expr;
    return {L, v};
}

inline Lattice masterExtension(int nA2, int nA22, int nM6) {
    auto [L, v] = masterSum(nA2, nA22, nM6);
    Lattice e = extensionByFraction(L, v, 3);
    e.expr = "[" + L.expr + "]_{s/3}";
    return e;
}

inline Lattice plainSum(const std::vector<std::pair<std::string, int>>& parts) {
    Lattice L = emptyLattice();
    std::string expr;
    for (const auto& [name, count] : parts) {
        for (int i = 0; i < count; ++i) L = directSum(L, parseLatticeExpr(name));
        if (count) expr += (expr.empty() ? "" : "+") + (count > 1 ? std::to_string(count) : "") + name;
    }
    L.expr = expr.empty() ? "0" : expr;
    return L;
}

}  // namespace detail

inline Lattice latticeS0() { return detail::masterExtension(6, 0, 0); }

inline SPair sPair(int nuI, Sign o) {
    if (nuI < 0 || nuI > 3) throw std::invalid_argument("nu_i must be in 0..3");
    SPair s{nuI, o, {}, {}};
    if (o == Sign::Minus) {
        s.sPlus = detail::plainSum({{"A2(2)", nuI}});
        s.sMinus = detail::masterExtension(6 - 2 * nuI, nuI, 0);
    } else {
        s.sPlus = detail::masterExtension(0, nuI, 6 - 2 * nuI);
        s.sMinus = detail::plainSum({{"A1", 6 - 2 * nuI}, {"A2(2)", nuI}});
    }
    return s;
}

// ---------------------------------------------------------------------------
// Realization inside the K3 lattice.

inline Lattice latticeT() { return parseLatticeExpr("U+U(3)+2A2+A1"); }
inline Lattice latticeTPrime() { return parseLatticeExpr("2U+U(3)+2A2"); }

struct GlueResult {
    Overlattice overlattice;
    GlueMap map;
};

// Glues along an anti-isometry between the p-parts (p in primes) of both
// discriminants in full; throws if none exists.
inline GlueResult glueAlongParts(const Lattice& L1, const Lattice& L2, const std::vector<long>& primes) {
    FQF F1 = discriminantForm(L1), F2 = discriminantForm(L2);
    auto partGens = [&](const FQF& F) {
        std::vector<Elem> gens;
        for (std::size_t i = 0; i < F.rank(); ++i) {
            long co = F.orders[i];
            for (long p : primes) co = pAdicCofactor(co, p);
            gens.push_back(smul(F, co, unitElem(F, i)));
        }
        return gens;
    };
    Subquotient S1 = subquotientWithGens(F1, partGens(F1), {});
    Subquotient S2 = subquotientWithGens(F2, partGens(F2), {});
    auto anti = findAntiIsomorphism(S1.form, S2.form);
    if (!anti) throw std::domain_error("no anti-isometry between the discriminant parts");
    GlueMap phi;
    for (std::size_t i = 0; i < S1.form.rank(); ++i)
        phi.pairs.emplace_back(S1.gens[i], toParent(F2, S2, (*anti)[i]));
    return {glueWithBasis(L1, F1, L2, F2, phi), phi};
}

// An anti-isometry from discr_2 T1 onto v^perp in discr_2 T2, for the first
// v with q(v) = -1/2 that admits one.
inline std::optional<GlueMap> antiIsoRoot(const Lattice& t1, const Lattice& t2) {
    FQF F1 = discriminantForm(t1), F2 = discriminantForm(t2);
    auto twoGens = [](const FQF& F) {
        std::vector<Elem> g;
        for (std::size_t i = 0; i < F.rank(); ++i) g.push_back(smul(F, pAdicCofactor(F.orders[i], 2), unitElem(F, i)));
        return g;
    };
    Subquotient K1 = subquotientWithGens(F1, twoGens(F1), {});
    Subquotient D2 = subquotientWithGens(F2, twoGens(F2), {});
    const long n = D2.form.size();
    for (long idx = 1; idx < n; ++idx) {
        Elem v = elemAt(D2.form, idx);
        if (qValue(D2.form, v) != Rat(3, 2)) continue;
        Subquotient K2 = subquotientWithGens(D2.form, orthogonalOfSubgroup(D2.form, {v}), {});
        if (K2.form.size() != K1.form.size()) continue;
        auto anti = findAntiIsomorphism(K1.form, K2.form);
        if (!anti) continue;
        GlueMap phi;
        for (std::size_t i = 0; i < K1.form.rank(); ++i)
            phi.pairs.emplace_back(K1.gens[i], toParent(F2, D2, toParent(D2.form, K2, (*anti)[i])));
        return phi;
    }
    return std::nullopt;
}

struct RealizationReport {
    bool stageA = false, stageB = false, stageC = false;
    std::string failure;  // stage name and reason when a stage fails
    Lattice t, tPrime, k3;
    LatticeInvolution involution;
};

inline RealizationReport realizePair(const TPair& pair) {
    RealizationReport rep;
    const Lattice &t1 = pair.tPlus.lattice, &t2 = pair.tMinus.lattice;
    try {
        auto phi = antiIsoRoot(t1, t2);
        if (!phi) throw std::runtime_error("no anti-isometry onto a root complement");
        Overlattice o = glueWithBasis(t1, discriminantForm(t1), t2, discriminantForm(t2), *phi);
        rep.involution = involutionOnOverlattice(o, t1.rank(), t2.rank());
        Eigenlattices e = eigenlattices(rep.involution);
        if (isomorphicInGenus(e.plus.induced(), t1) != Verdict::Yes ||
            isomorphicInGenus(e.minus.induced(), t2) != Verdict::Yes)
            throw std::runtime_error("eigenlattices differ from the pair");
        rep.t = o.lattice;
        if (isomorphicInGenus(rep.t, latticeT()) != Verdict::Yes) throw std::runtime_error("glued lattice is not U+U(3)+2A2+A1");
        rep.stageA = true;
    } catch (const std::exception& ex) {
        rep.failure = std::string("stage a: ") + ex.what();
        return rep;
    }
    try {
        rep.tPrime = glueAlongParts(rep.t, latticeDiag(2), {2}).overlattice.lattice;
        if (isomorphicInGenus(rep.tPrime, latticeTPrime()) != Verdict::Yes)
            throw std::runtime_error("extension is not 2U+U(3)+2A2");
        rep.stageB = true;
    } catch (const std::exception& ex) {
        rep.failure = std::string("stage b: ") + ex.what();
        return rep;
    }
    try {
        rep.k3 = glueAlongParts(rep.tPrime, latticeS0(), {3}).overlattice.lattice;
        Signature s = signature(rep.k3);
        if (!rep.k3.isEven()) throw std::runtime_error("result is odd");
        if (abs(rep.k3.det()) != 1) throw std::runtime_error("result is not unimodular");
        if (s.nPlus != 3 || s.nMinus != 19) throw std::runtime_error("result has signature other than (3,19)");
        rep.stageC = true;
    } catch (const std::exception& ex) {
        rep.failure = std::string("stage c: ") + ex.what();
    }
    return rep;
}

// ---------------------------------------------------------------------------
// G = 6<-2/3> with delta = a1 + ... + a6.

inline FQF formG() { return diagonalForm(std::vector<std::pair<long, Rat>>(6, {3, Rat(-2, 3)})); }
inline Elem deltaG() { return Elem(6, 1); }

// G^delta / (delta).
inline Subquotient reducedG() {
    FQF G = formG();
    return subquotientWithGens(G, orthogonalOfSubgroup(G, {deltaG()}), {deltaG()});
}

// Nonzero elements of G^delta/(delta) counted by q: {2/3, -2/3, 0}.
inline std::array<long, 3> reducedGCensus() {
    FQF R = reducedG().form;
    std::array<long, 3> c{0, 0, 0};
    for (long i = 1; i < R.size(); ++i) {
        Rat v = qValue(R, elemAt(R, i));
        if (v == Rat(2, 3)) ++c[0];
        else if (v == Rat(4, 3)) ++c[1];
        else if (v == 0) ++c[2];
    }
    return c;
}

// Automorphisms of G sending delta to +-delta, as generator images.
// b(f(a_i), delta) = s b(a_i, delta) cuts each image down to few candidates.
inline void searchAutGDelta(const std::function<void(const FormMap&, int)>& cb) {
    FQF G = formG();
    const Elem d = deltaG();
    for (int s : {1, -1}) {
        Elem target = smul(G, s, d);
        std::vector<Elem> cands;
        for (long i = 1; i < G.size(); ++i) {
            Elem x = elemAt(G, i);
            if (qScaled(G, x) != qScaled(G, unitElem(G, 0))) continue;
            if (bScaled(G, x, target) != bScaled(G, unitElem(G, 0), d)) continue;
            cands.push_back(x);
        }
        FormMap img;
        std::function<void()> rec = [&]() {
            if (img.size() == 6) {
                Elem sum = zeroElem(G);
                for (const auto& x : img) sum = add(G, sum, x);
                if (sum == target) cb(img, s);
                return;
            }
            for (const auto& x : cands) {
                bool ok = true;
                for (const auto& y : img)
                    if (bScaled(G, x, y) != 0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                img.push_back(x);
                rec();
                img.pop_back();
            }
        };
        rec();
    }
}

// A signed permutation with one sign for all generators.
inline bool isUniformSignedPermutation(const FQF& G, const FormMap& m) {
    int sign = 0;
    std::set<std::size_t> used;
    for (const auto& x : m) {
        std::size_t nz = 0, pos = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) {
                ++nz;
                pos = i;
            }
        if (nz != 1) return false;
        int s = x[pos] == 1 ? 1 : (x[pos] == G.orders[pos] - 1 ? -1 : 0);
        if (s == 0 || (sign != 0 && s != sign)) return false;
        sign = s;
        used.insert(pos);
    }
    return used.size() == m.size();
}

struct AutGDeltaSummary {
    long total = 0;             // |Aut(G, delta)|
    long signedPermutations = 0;  // uniform-sign signed permutations among them
    long reductionKernel = 0;   // acting trivially on G^delta/(delta)
    long reducedAut = 0;        // |Aut(G^delta/(delta))| by exhaustive count
};

inline AutGDeltaSummary autGDeltaSummary() {
    FQF G = formG();
    Subquotient R = reducedG();
    const Elem d = deltaG();
    AutGDeltaSummary out;
    searchAutGDelta([&](const FormMap& m, int) {
        ++out.total;
        if (isUniformSignedPermutation(G, m)) ++out.signedPermutations;
        bool trivial = true;
        for (const auto& g : R.gens) {
            Elem diff = add(G, applyMap(G, m, g), smul(G, -1, g));
            if (!isZero(diff) && diff != d && diff != smul(G, -1, d)) {
                trivial = false;
                break;
            }
        }
        if (trivial) ++out.reductionKernel;
    });
    out.reducedAut = autOrder(R.form);
    return out;
}

}  // namespace zlat
