#pragma once

// Uniqueness in the genus: genus tags, the Nikulin and Miranda-Morrison
// criteria, divisibility reductions and binary-form reduction.

#include "zlat/finite_form.hpp"

namespace zlat {

// Signature plus a canonical description of the discriminant form:
// elementary 2- and 3-parts by normal form, anything else raw.
struct GenusTag {
    std::size_t nPlus = 0, nMinus = 0;
    std::vector<std::string> parts;

    friend bool operator==(const GenusTag& a, const GenusTag& b) {
        return a.nPlus == b.nPlus && a.nMinus == b.nMinus && a.parts == b.parts;
    }
    friend bool operator!=(const GenusTag& a, const GenusTag& b) { return !(a == b); }
    std::string text() const {
        std::string s = "(" + std::to_string(nPlus) + "," + std::to_string(nMinus) + ")";
        for (const auto& p : parts) s += " " + p;
        return s;
    }
};

inline std::string rawPartKey(const FQF& Fp) {
    std::string s;
    for (long d : Fp.orders) s += std::to_string(d) + ",";
    s += ";";
    for (const auto& [val, cnt] : qCensus(Fp))
        s += std::to_string(val.first) + "/" + std::to_string(val.second) + "x" + std::to_string(cnt) + ",";
    return s;
}

inline GenusTag genusTag(const Lattice& L) {
    GenusTag t;
    Signature s = signature(L);
    t.nPlus = s.nPlus;
    t.nMinus = s.nMinus;
    FQF F = discriminantForm(L);
    for (long p : primesOf(F)) {
        FQF Fp = pPart(F, p);
        std::string key = std::to_string(p) + ":";
        if (p == 2 && isElementary(Fp, 2)) {
            NormalForm2 nf = normalForm2(Fp);
            key += std::string(nf.even ? "even:" : "odd:") + std::to_string(nf.a) + ":" + std::to_string(nf.b);
        } else if (p == 3 && isElementary(Fp, 3)) {
            NormalForm3 nf = normalForm3(Fp);
            key += std::to_string(nf.rank()) + ":" + std::to_string(nf.p());
        } else {
            key += "raw:" + rawPartKey(Fp);
        }
        t.parts.push_back(key);
    }
    return t;
}

inline bool isIndefinite(const Lattice& L) {
    Signature s = signature(L);
    return s.nPlus > 0 && s.nMinus > 0;
}

// An elementary 2-form splits off u2 or v2 exactly when it is even of rank
// >= 2 or odd of rank >= 3.
inline bool hasUVSummand(const FQF& F2) {
    if (!isElementary(F2, 2) || F2.rank() < 2) return false;
    return parity2(F2) == 0 || F2.rank() >= 3;
}

inline bool nikulinStable(const Lattice& L) {
    if (!L.isEven() || !isIndefinite(L)) return false;
    const std::size_t r = L.rank();
    FQF F = discriminantForm(L);
    for (long p : primesOf(F))
        if (p != 2 && pRank(F, p) + 2 > r) return false;
    std::size_t r2 = pRank(F, 2);
    if (r2 < r) return true;
    return hasUVSummand(pPart(F, 2));
}

inline bool mirandaMorrisonStable(const Lattice& L) {
    if (!L.isEven() || !isIndefinite(L) || L.rank() < 3) return false;
    FQF F = discriminantForm(L);
    for (long p : primesOf(F))
        if (p != 2 && p != 3) return false;
    if (!isElementary(pPart(F, 2), 2) || !isElementary(pPart(F, 3), 3)) return false;
    const std::size_t r = L.rank();
    return !(pRank(F, 2) == r && pRank(F, 3) == r);
}

struct BinaryForm {
    Int a, b, c;  // a x^2 + 2 b x y + c y^2
};

// Reduction to |2b| <= |a| <= |c|; terminates since |a| strictly drops on swaps.
inline BinaryForm gaussReduce(BinaryForm f) {
    for (;;) {
        if (f.a == 0) return f;
        // b -> b - k a with |2b| <= |a|
        Int aa = abs(f.a);
        Int k = floorDiv(2 * f.b + aa, 2 * aa);  // nearest integer to b/|a|
        if (f.a < 0) k = -k;
        Int nb = f.b - k * f.a;
        f.c = f.c - 2 * k * f.b + k * k * f.a;
        f.b = nb;
        if (abs(f.a) <= abs(f.c)) return f;
        std::swap(f.a, f.c);
    }
}

// Divisibility reductions to unimodular hyperbolic lattices of rank <= 8
// (unique: U, <1>+n<-1>) and the rank-2 case with r2 = r and r3 = 1.
inline bool smallRankStable(const Lattice& L) {
    if (!isHyperbolic(L)) return false;
    const std::size_t r = L.rank();
    FQF F = discriminantForm(L);
    std::size_t r2 = pRank(F, 2), r3 = pRank(F, 3);
    auto reducesToUnimodular = [&](long d) {
        if (!isDivisibleBy(L, d)) return false;
        Lattice M = divide(L, d);
        return abs(M.det()) == 1 && isHyperbolic(M) && M.rank() <= 8;
    };
    if (r2 == 0 && r3 == r && reducesToUnimodular(3)) return true;
    if (r2 == r && r3 == 0 && reducesToUnimodular(2)) return true;
    if (r2 == r && r3 == r && reducesToUnimodular(6)) return true;
    if (r == 2 && r2 == 2 && r3 == 1 && isDivisibleBy(L, 2)) {
        Lattice M = divide(L, 2);
        if (abs(M.det()) != 3) return false;
        BinaryForm f = gaussReduce({M.gram(0, 0), M.gram(0, 1), M.gram(1, 1)});
        return f.b == 0 && ((f.a == 1 && f.c == -3) || (f.a == -1 && f.c == 3) || (f.a == 3 && f.c == -1) ||
                            (f.a == -3 && f.c == 1));
    }
    return false;
}

// Name of the first rule certifying uniqueness in the genus, or empty.
inline std::string stabilityRule(const Lattice& L) {
    if (L.rank() == 1) return "rank-1";
    if (nikulinStable(L)) return "nikulin";
    if (mirandaMorrisonStable(L)) return "miranda-morrison";
    if (smallRankStable(L)) return "small-rank";
    return {};
}

inline bool isStable(const Lattice& L) { return !stabilityRule(L).empty(); }

enum class Verdict { Yes, No, Unknown };

inline const char* verdictText(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "unknown";
    }
}

inline Verdict isomorphicInGenus(const Lattice& L1, const Lattice& L2) {
    if (L1.rank() != L2.rank() || genusTag(L1) != genusTag(L2)) return Verdict::No;
    return isStable(L1) ? Verdict::Yes : Verdict::Unknown;
}

}  // namespace zlat
