#include "zlat/verify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace zlat;

TEST(GaussReduce, ReducedAndEquivalent) {
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> d(-40, 40);
    for (int trial = 0; trial < 300; ++trial) {
        BinaryForm f{d(rng), d(rng), d(rng)};
        Int disc = f.b * f.b - f.a * f.c;
        if (disc <= 0 || f.a == 0) continue;  // indefinite, a != 0
        // Skip square discriminants: those can reach a = 0.
        Int s = sqrt(disc);
        if (s * s == disc) continue;
        BinaryForm g = gaussReduce(f);
        EXPECT_EQ(g.b * g.b - g.a * g.c, disc);
        EXPECT_LE(abs(2 * g.b), abs(g.a));
        EXPECT_LE(abs(g.a), abs(g.c));
    }
}

TEST(GaussReduce, NegativeLeadingCoefficient) {
    // -x^2 + 2*5xy - 3y^2 -> b reduced against |a| = 1 to 0: -x^2 + 22y^2.
    BinaryForm g = gaussReduce({-1, 5, -3});
    EXPECT_EQ(g.b, 0);
    EXPECT_EQ(g.a, -1);
    EXPECT_EQ(g.c, 22);
}

TEST(SmallRank, RankTwoWithTwoAndThreeRanks) {
    // <6> + A1 = 2 * (<3> + <-1>); reduced form x^2 - 3y^2 up to sign.
    EXPECT_EQ(stabilityRule(parseLatticeExpr("<6>+A1")), "small-rank");
    EXPECT_EQ(stabilityRule(parseLatticeExpr("<2>+<-6>")), "small-rank");
    EXPECT_EQ(stabilityRule(parseLatticeExpr("U(6)")), "small-rank");
}

TEST(Nikulin, UVSummandCriterion) {
    EXPECT_TRUE(nikulinStable(parseLatticeExpr("U+E6")));
    EXPECT_TRUE(nikulinStable(parseLatticeExpr("U(2)")));  // discr u2 splits off
    EXPECT_FALSE(nikulinStable(parseLatticeExpr("U(3)")));  // 3-rank 2 = rank
    EXPECT_FALSE(nikulinStable(parseLatticeExpr("E8")));    // definite
    EXPECT_TRUE(nikulinStable(parseLatticeExpr("U+3A1")));
}

TEST(MirandaMorrison, ThreeRankEqualRank) {
    EXPECT_TRUE(mirandaMorrisonStable(parseLatticeExpr("U(3)+A2")));
    EXPECT_FALSE(mirandaMorrisonStable(parseLatticeExpr("U(6)+<-6>")));  // r2 = r3 = r
}

TEST(GenusTag, PresentationsOfOneGenus) {
    EXPECT_EQ(genusTag(parseLatticeExpr("U+3A2")), genusTag(parseLatticeExpr("U(3)+E6")));
    EXPECT_NE(genusTag(parseLatticeExpr("U+3A2")), genusTag(parseLatticeExpr("U+E6")));
    EXPECT_EQ(isomorphicInGenus(parseLatticeExpr("U+3A2"), parseLatticeExpr("U(3)+E6")), Verdict::Yes);
    EXPECT_EQ(isomorphicInGenus(parseLatticeExpr("U+A2"), parseLatticeExpr("U+2A1")), Verdict::No);
    EXPECT_EQ(isomorphicInGenus(parseLatticeExpr("E8"), parseLatticeExpr("E8")), Verdict::Unknown);
}

TEST(Stability, ReferenceTableLatticesCertified) {
    CheckResult r = checkTable5Stable();
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_GT(r.count, 100);
}

TEST(Stability, PresentationIsomorphismsAndRewritingRules) {
    CheckResult r = checkPresentationIsomorphisms();
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_EQ(r.count, 8);
}

TEST(Stability, RewritingRulesSpelledOut) {
    EXPECT_EQ(isomorphicInGenus(parseLatticeExpr("U(2)+A1"), parseLatticeExpr("<2>+2A1")), Verdict::Yes);
    EXPECT_EQ(isomorphicInGenus(parseLatticeExpr("U(6)+<-6>"), parseLatticeExpr("<6>+2<-6>")), Verdict::Yes);
}
