#include "zlat/lattice.hpp"

#include <gtest/gtest.h>

using namespace zlat;

namespace {

Signature sig(const std::string& e) { return signature(parseLatticeExpr(e)); }

}  // namespace

TEST(Parse, ExpressionsAndRanks) {
    Lattice a = parseLatticeExpr("U(3)+2A2+A1");
    EXPECT_EQ(a.rank(), 7u);
    Lattice b = parseLatticeExpr("<2>+3<-6>");
    EXPECT_EQ(b.rank(), 4u);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) EXPECT_EQ(b.gram(i, j), 0);
    EXPECT_EQ(b.gram(0, 0), 2);
    EXPECT_EQ(b.gram(3, 3), -6);
    EXPECT_EQ(parseLatticeExpr(" U + E6 ").rank(), 8u);
    EXPECT_EQ(parseLatticeExpr("A2(2)").gram(0, 0), -4);
}

TEST(Parse, RejectsOutOfRangeNames) {
    EXPECT_THROW(parseLatticeExpr("A0"), ParseError);
    EXPECT_THROW(parseLatticeExpr("D3"), ParseError);
    EXPECT_THROW(parseLatticeExpr("E9"), ParseError);
    EXPECT_THROW(parseLatticeExpr("<0>"), ParseError);
    EXPECT_THROW(parseLatticeExpr("U(0)"), ParseError);
    EXPECT_THROW(parseLatticeExpr("U+"), ParseError);
    EXPECT_THROW(parseLatticeExpr("X2"), ParseError);
    EXPECT_THROW(parseLatticeExpr(""), ParseError);
}

TEST(Parse, ErrorCarriesPosition) {
    try {
        parseLatticeExpr("U+A0");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 2u);
    }
}

TEST(Parse, RenderRoundTrip) {
    for (const char* e : {"U", "U(2)", "U(3)+2A2+A1", "<2>+3<-6>", "U+E6", "<6>+D4", "3A2(2)", "U(6)+A1+A2(2)", "E8+E7"}) {
        EXPECT_EQ(renderTerms(parseTerms(e)), e);
        EXPECT_EQ(parseLatticeExpr(renderTerms(parseTerms(e))).gram, parseLatticeExpr(e).gram);
    }
}

TEST(RootLattices, DeterminantsAndSignatures) {
    // Negative definite: det = (-1)^n |det|; |det| = n+1, 4, 3, 2, 1.
    for (long n = 1; n <= 8; ++n) EXPECT_EQ(latticeA(n).det(), (n % 2 ? -1 : 1) * (n + 1));
    for (long n = 4; n <= 8; ++n) EXPECT_EQ(latticeD(n).det(), (n % 2 ? -4 : 4));
    EXPECT_EQ(latticeE(6).det(), 3);
    EXPECT_EQ(latticeE(7).det(), -2);
    EXPECT_EQ(latticeE(8).det(), 1);
    EXPECT_EQ(sig("E8").nMinus, 8u);
    EXPECT_EQ(sig("U").nPlus, 1u);
    EXPECT_EQ(sig("U").nMinus, 1u);
    EXPECT_EQ(latticeU().det(), -1);
    EXPECT_TRUE(parseLatticeExpr("2E8+3U").isEven());
}

TEST(Rescale, ScalesGramAndKeepsInertia) {
    Lattice L = parseLatticeExpr("U+A2");
    Lattice M = rescale(L, 3);
    EXPECT_EQ(M.gram, scaled(L.gram, Int(3)));
    EXPECT_EQ(signature(M).nPlus, signature(L).nPlus);
    EXPECT_THROW(rescale(L, 0), std::invalid_argument);
    Lattice N = rescale(L, -1);
    EXPECT_EQ(signature(N).nPlus, signature(L).nMinus);
}

TEST(Divisibility, DivideByCommonFactor) {
    Lattice L = parseLatticeExpr("U(6)");
    EXPECT_TRUE(isDivisibleBy(L, 6));
    EXPECT_FALSE(isDivisibleBy(parseLatticeExpr("U(6)+A1"), 6));
    EXPECT_EQ(divide(L, 6).gram, latticeU().gram);
}

TEST(Extension, FourA1ByHalfSumIsD4Determinant) {
    Lattice L = parseLatticeExpr("4A1");
    Lattice E = extensionByFraction(L, {1, 1, 1, 1}, 2);
    EXPECT_EQ(E.rank(), 4u);
    EXPECT_EQ(E.det(), 4);  // 16 / 2^2
    EXPECT_TRUE(E.isEven());
    EXPECT_THROW(extensionByFraction(L, {1, 1, 0, 0}, 2), std::domain_error);  // v^2/4 = -1 odd
    EXPECT_THROW(extensionByFraction(L, {2, 0, 0, 0}, 2), std::domain_error);
}

TEST(Extension, SixA2ByThirdSum) {
    Lattice L = parseLatticeExpr("6A2");
    // (1,2) in each A2 pairs to a multiple of 3 with every basis vector.
    IntVec v;
    for (int i = 0; i < 6; ++i) {
        v.push_back(1);
        v.push_back(2);
    }
    Lattice E = extensionByFraction(L, v, 3);
    EXPECT_EQ(abs(E.det()), 81);
    EXPECT_TRUE(E.isEven());
}

TEST(Sublattice, ComplementIsInvolutiveOnPrimitive) {
    Lattice L = parseLatticeExpr("U+A2+A1");
    SublatticeRef S{L, IntMatrix{{1, 1, 0, 0, 0}, {0, 0, 1, 0, 1}}};
    SublatticeRef cc = orthogonalComplement(orthogonalComplement(S));
    EXPECT_EQ(hermiteNormalForm(cc.basis), hermiteNormalForm(primitiveClosure(S).basis));
    // A non-primitive sublattice closes up.
    SublatticeRef T{L, IntMatrix{{2, 2, 0, 0, 0}}};
    EXPECT_EQ(hermiteNormalForm(orthogonalComplement(orthogonalComplement(T)).basis), hermiteNormalForm(IntMatrix{{1, 1, 0, 0, 0}}));
}

TEST(Sublattice, InducedGram) {
    Lattice L = parseLatticeExpr("U");
    SublatticeRef S{L, IntMatrix{{1, 1}}};
    EXPECT_EQ(S.induced().gram, (IntMatrix{{2}}));
}

TEST(Hyperbolic, RankOnePositiveIsFlagged) {
    EXPECT_EQ(hyperbolicVerdict(parseLatticeExpr("U+A1")).branch, HyperbolicBranch::Strict);
    HyperbolicVerdict v = hyperbolicVerdict(parseLatticeExpr("<2>"));
    EXPECT_TRUE(v.hyperbolic);
    EXPECT_EQ(v.branch, HyperbolicBranch::DefiniteAbuse);
    EXPECT_FALSE(isHyperbolic(parseLatticeExpr("2U")));
    EXPECT_FALSE(isHyperbolic(parseLatticeExpr("E8")));
}

TEST(Lattice, RejectsAsymmetricGram) { EXPECT_THROW(fromGram(IntMatrix{{2, 1}, {0, 2}}), std::invalid_argument); }
