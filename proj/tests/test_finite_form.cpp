#include "zlat/finite_form.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace zlat;

namespace {

// q-value census of L*/L by brute force: the points x in (1/|det|)Z^n / Z^n
// with Gx integral, valued x.Gx mod 2.
std::map<Rat, long> bruteCensus(const Lattice& L) {
    const std::size_t n = L.rank();
    const long d = Int(abs(L.det())).get_si();
    std::map<Rat, long> out;
    std::vector<long> c(n, 0);
    for (;;) {
        RatVec x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = Rat(c[i], d);
        bool dual = true;
        for (std::size_t i = 0; i < n && dual; ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < n; ++j) s += Rat(L.gram(i, j)) * x[j];
            s.canonicalize();
            dual = s.get_den() == 1;
        }
        if (dual) {
            Rat q = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) q += x[i] * Rat(L.gram(i, j)) * x[j];
            ++out[ratMod(q, 2)];
        }
        std::size_t k = 0;
        while (k < n && ++c[k] == d) c[k++] = 0;
        if (k == n) break;
    }
    return out;
}

std::map<Rat, long> census(const FQF& F) {
    std::map<Rat, long> out;
    for (const auto& [v, cnt] : qCensus(F)) {
        Rat r(v.first, v.second);
        r.canonicalize();
        out[r] += cnt;
    }
    return out;
}

// |O(q)| on (Z/3)^n by trying every matrix over F_3.
long bruteAutOrder3(const FQF& F) {
    const std::size_t n = F.rank();
    std::vector<Elem> all = allElements(F);
    long count = 0;
    std::vector<Elem> img(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a; b < n; ++b)
                    if (bScaled(F, img[a], img[b]) != bScaled(F, unitElem(F, a), unitElem(F, b))) return;
            ++count;
            return;
        }
        for (const auto& x : all) {
            if (qScaled(F, x) != qScaled(F, unitElem(F, i))) continue;
            img[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST(Discriminant, MatchesBruteForceCensus) {
    for (const char* e : {"A1", "A2", "A3", "D4", "E6", "E7", "<6>", "U(2)", "U(3)", "A2(2)", "<2>+A2", "D5", "<-6>+A1"}) {
        Lattice L = parseLatticeExpr(e);
        FQF F = discriminantForm(L);
        EXPECT_EQ(F.size(), Int(abs(L.det())).get_si()) << e;
        EXPECT_EQ(census(F), bruteCensus(L)) << e;
    }
}

TEST(Discriminant, MatchesBruteForceOnRandomEvenLattices) {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> entry(-4, 4), half(-3, 3);
    int done = 0;
    while (done < 25) {
        const std::size_t n = 1 + rng() % 3;
        IntMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            g(i, i) = 2 * half(rng);
            for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = entry(rng);
        }
        Int d = abs(det(g));
        if (d == 0 || d > 60) continue;
        Lattice L = fromGram(g);
        EXPECT_EQ(census(discriminantForm(L)), bruteCensus(L));
        ++done;
    }
}

TEST(Discriminant, A2IsMinusTwoThirds) {
    // Gram [[-2,1],[1,-2]], inverse -(1/3)[[2,1],[1,2]]: q(generator) = -2/3 = 4/3 mod 2.
    FQF F = discriminantForm(parseLatticeExpr("A2"));
    NormalForm3 nf = normalForm3(pPart(F, 3));
    EXPECT_EQ(nf.a, 0);
    EXPECT_EQ(nf.b, 1);
    EXPECT_EQ(renderForm(F, true), "q(-2/3)");
}

TEST(Discriminant, SixSplitsIntoTwoAndThreeParts) {
    FQF F = discriminantForm(parseLatticeExpr("<6>"));
    // 3 * (1/6) has q = 9/6 = 3/2; 2 * (1/6) has q = 4/6 = 2/3.
    EXPECT_EQ(census(pPart(F, 2)), (std::map<Rat, long>{{Rat(0), 1}, {Rat(3, 2), 1}}));
    EXPECT_EQ(normalForm3(pPart(F, 3)).a, 1);
}

TEST(PParts, AreMutuallyOrthogonal) {
    FQF F = discriminantForm(parseLatticeExpr("<6>+A2+A1+<10>"));
    auto primes = primesOf(F);
    ASSERT_EQ(primes, (std::vector<long>{2, 3, 5}));
    std::vector<std::vector<Elem>> parts;
    for (long p : primes) {
        std::vector<Elem> xs;
        for (const auto& x : allElements(F))
            if (pAdicCofactor(elementOrder(F, x), p) == 1) xs.push_back(x);
        parts.push_back(xs);
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (const auto& x : parts[i])
                for (const auto& y : parts[j]) EXPECT_EQ(bScaled(F, x, y), 0);
}

TEST(Brown, VanDerBlijOnRootLattices) {
    // Br(discr L) = sigma(L) mod 8.
    for (const char* e : {"A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "U(2)", "U(3)", "<2>", "<6>", "3A1+<2>"}) {
        Lattice L = parseLatticeExpr(e);
        FQF F = discriminantForm(L);
        EXPECT_EQ(brown(F), posMod(signatureIndex(L), 8)) << e;
        EXPECT_EQ(brownNumeric(F), brown(F)) << e;
    }
}

TEST(Brown, ElementaryNormalForms) {
    EXPECT_EQ(brown(diagonalForm({{2, Rat(1, 2)}})), 1);
    EXPECT_EQ(brown(diagonalForm({{2, Rat(-1, 2)}})), 7);
    EXPECT_EQ(brown(evenTwoForm(1, 0)), 0);  // u2
    EXPECT_EQ(brown(evenTwoForm(0, 1)), 4);  // v2
    EXPECT_EQ(brown(diagonalForm({{3, Rat(2, 3)}})), 2);
    EXPECT_EQ(brown(diagonalForm({{3, Rat(-2, 3)}})), 6);
}

TEST(NormalForm2, RelationsBetweenSummands) {
    // <1/2> + <-1/2> + <1/2> ~ u2 + <1/2>: both odd of rank 3 with Br = 1.
    FQF a = diagonalForm({{2, Rat(1, 2)}, {2, Rat(-1, 2)}, {2, Rat(1, 2)}});
    NormalForm2 nf = normalForm2(a);
    EXPECT_FALSE(nf.even);
    EXPECT_EQ(brownOf(nf), 1);
    EXPECT_TRUE(iso2(a, diagonalForm({{2, Rat(1, 2)}, {2, Rat(1, 2)}, {2, Rat(-1, 2)}})));
    // 2 v2 ~ 2 u2.
    EXPECT_TRUE(iso2(evenTwoForm(0, 2), evenTwoForm(2, 0)));
    EXPECT_FALSE(iso2(evenTwoForm(0, 1), evenTwoForm(1, 0)));
}

TEST(Characteristic, ZeroExactlyForEvenForms) {
    EXPECT_TRUE(isZero(characteristicElement(evenTwoForm(2, 0))));
    FQF odd = diagonalForm({{2, Rat(1, 2)}, {2, Rat(1, 2)}});
    Elem v = characteristicElement(odd);
    EXPECT_EQ(v, (Elem{1, 1}));
    for (const auto& x : allElements(odd)) EXPECT_EQ(bScaled(odd, v, x), bScaled(odd, x, x));
}

TEST(Automorphisms, OrdersAgainstBruteForce) {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 3; ++b) {
            if (a + b == 0) continue;
            std::vector<std::pair<long, Rat>> cyc;
            for (int i = 0; i < a; ++i) cyc.emplace_back(3, Rat(2, 3));
            for (int i = 0; i < b; ++i) cyc.emplace_back(3, Rat(-2, 3));
            FQF F = diagonalForm(cyc);
            EXPECT_EQ(autOrder(F), bruteAutOrder3(F)) << a << "," << b;
        }
}

TEST(Isometries, AntiIsometryOfHalfForms) {
    FQF plus = diagonalForm({{2, Rat(1, 2)}}), minus = diagonalForm({{2, Rat(-1, 2)}});
    EXPECT_TRUE(findAntiIsomorphism(plus, minus).has_value());
    EXPECT_FALSE(findAntiIsomorphism(plus, plus).has_value());
    EXPECT_TRUE(isIsomorphic(negate(plus), minus));
}

TEST(Subquotients, OrthogonalOfIsotropicVector) {
    // 4A1: the sum of generators is isotropic; H^perp/H has order 16/4.
    FQF F = discriminantForm(parseLatticeExpr("4A1"));
    Elem h(4, 1);
    ASSERT_TRUE(isIsotropic(F, {h}));
    FQF S = subquotient(F, orthogonalOfSubgroup(F, {h}), {h});
    EXPECT_EQ(S.size(), 4);
    EXPECT_EQ(brown(S), brown(F));
    auto subs = isotropicSubgroups(F);
    EXPECT_EQ(subs.size(), 2u);  // trivial and <h>
}

TEST(ElementCensus, ReducedSixFold) {
    // G = 6<-2/3>, delta = sum of generators: q(delta) = -4 = 0 mod 2.
    FQF G = diagonalForm(std::vector<std::pair<long, Rat>>(6, {3, Rat(-2, 3)}));
    Elem d(6, 1);
    ASSERT_EQ(qScaled(G, d), 0);
    Subquotient R = subquotientWithGens(G, orthogonalOfSubgroup(G, {d}), {d});
    EXPECT_EQ(R.form.size(), 81);
    std::map<Rat, long> c = census(R.form);
    EXPECT_EQ(c[Rat(2, 3)], 30);
    EXPECT_EQ(c[Rat(4, 3)], 30);
    EXPECT_EQ(c[Rat(0)], 21);  // including zero
    EXPECT_EQ(autOrder(R.form), 1440);
}

TEST(Rendering, CanonicalText) {
    EXPECT_EQ(renderForm(discriminantForm(parseLatticeExpr("U(2)")), true), "u2");
    EXPECT_EQ(renderForm(discriminantForm(parseLatticeExpr("3A1")), true), "3q(-1/2)");
    EXPECT_EQ(renderForm(discriminantForm(parseLatticeExpr("E6")), true), "q(2/3)");
}
