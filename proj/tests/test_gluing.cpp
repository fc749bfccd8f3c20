#include "zlat/verify.hpp"

#include <gtest/gtest.h>

using namespace zlat;

namespace {

GlueMap fullAntiGlue(const Lattice& a, const Lattice& b) {
    FQF Fa = discriminantForm(a), Fb = discriminantForm(b);
    auto anti = findAntiIsomorphism(Fa, Fb);
    if (!anti) throw std::runtime_error("no anti-isometry");
    return graphOf(Fa, *anti);
}

}  // namespace

TEST(Extend, DiscriminantIsPerpOverH) {
    Lattice L = parseLatticeExpr("8A1");
    FQF F = discriminantForm(L);
    Elem h(8, 1);
    Lattice E = extend(L, {h});
    FQF want = subquotient(F, orthogonalOfSubgroup(F, {h}), {h});
    EXPECT_TRUE(isIsomorphic(discriminantForm(E), want));
    EXPECT_EQ(abs(E.det()), 256 / 4);
    EXPECT_EQ(brown(discriminantForm(E)), brown(F));
}

TEST(Extend, RejectsAnisotropicSubgroup) {
    Lattice L = parseLatticeExpr("2A1");
    EXPECT_THROW(extend(L, {Elem{1, 0}}), std::domain_error);
}

TEST(Extend, IdentitiesOnCatalog) {
    CheckResult r = checkExtensionIdentities();
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_GE(r.count, 20);
}

TEST(Glue, PlusTwoMinusTwoIsEvenUnimodular) {
    Lattice a = parseLatticeExpr("<2>"), b = parseLatticeExpr("<-2>");
    Lattice g = glue(a, b, fullAntiGlue(a, b));
    EXPECT_TRUE(g.isEven());
    EXPECT_EQ(abs(g.det()), 1);
    EXPECT_EQ(signature(g).nPlus, 1u);
    EXPECT_EQ(signature(g).nMinus, 1u);
}

TEST(Glue, DeterminantFormula) {
    // |det| = |det L1| |det L2| / |K|^2 with K the glued subgroup.
    const std::vector<std::pair<std::string, std::string>> cases{{"A1", "<2>"}, {"U(2)", "U(2)"}, {"D4", "D4"}, {"A1+A2", "<2>+A2"}};
    for (const auto& [x, y] : cases) {
        Lattice a = parseLatticeExpr(x), b = parseLatticeExpr(y);
        GlueResult gr = glueAlongParts(a, b, {2});
        std::vector<Elem> glued;
        for (const auto& pr : gr.map.pairs) glued.push_back(pr.first);
        Int k = subgroupOrder(discriminantForm(a), glued);
        EXPECT_EQ(abs(gr.overlattice.lattice.det()) * k * k, abs(a.det()) * abs(b.det())) << x << " / " << y;
    }
}

TEST(Glue, RejectsMapThatIsNotAntiIsometric) {
    Lattice a = parseLatticeExpr("<2>"), b = parseLatticeExpr("<2>");
    GlueMap phi;
    phi.pairs.emplace_back(Elem{1}, Elem{1});
    EXPECT_THROW(glue(a, b, phi), std::domain_error);
}

TEST(Involution, PlusOnFirstMinusOnSecond) {
    Lattice a = parseLatticeExpr("U(2)"), b = parseLatticeExpr("U(2)");
    LatticeInvolution inv = glueInvolution(a, b, fullAntiGlue(a, b));
    const IntMatrix& C = inv.action;
    EXPECT_EQ(C * C, IntMatrix::identity(C.rows));
    EXPECT_EQ(C * inv.lattice.gram * transpose(C), inv.lattice.gram);
    Eigenlattices e = eigenlattices(inv);
    EXPECT_TRUE(sameGenus(e.plus.induced(), a));
    EXPECT_TRUE(sameGenus(e.minus.induced(), b));
    EXPECT_EQ(involutionDefect(inv), 2u);  // the glue group has 2-rank 2
}

TEST(Involution, TwistParity) {
    // Identity on U: x.c(x) = x.x is even. Swap on U: (a,b).(b,a) = a^2 + b^2, odd at (1,0).
    Lattice U = parseLatticeExpr("U");
    EXPECT_EQ(twistParity({U, IntMatrix::identity(2)}), TwistType::I);
    EXPECT_EQ(twistParity({U, IntMatrix{{0, 1}, {1, 0}}}), TwistType::II);
    // Minus identity on <2>: x.c(x) = -2x^2, even.
    EXPECT_EQ(twistParity({parseLatticeExpr("<2>"), IntMatrix{{-1}}}), TwistType::I);
    // On A1 + A1 swapping the summands: (a,b).(b,a) = -4ab, even.
    EXPECT_EQ(twistParity({parseLatticeExpr("2A1"), IntMatrix{{0, 1}, {1, 0}}}), TwistType::I);
}

TEST(Involution, CensusPairRoundTrip) {
    CheckResult r = checkGlueRoundTrip();
    EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Involution, KThreeSideEigenlatticesTwoElementary) {
    // T+ and T- of every census pair glue to a lattice with discr_2 = <1/2>
    // (before the <2> extension); the eigenlattice 2-ranks differ by one.
    for (const auto& e : census()) {
        RealizationReport rep = realizePair(e.pair);
        ASSERT_TRUE(rep.stageA) << rep.failure;
        Eigenlattices ev = eigenlattices(rep.involution);
        FQF Fp = discriminantForm(ev.plus.induced()), Fm = discriminantForm(ev.minus.induced());
        ASSERT_TRUE(isElementary(pPart(Fp, 2), 2));
        ASSERT_TRUE(isElementary(pPart(Fm, 2), 2));
        long d = static_cast<long>(pRank(Fp, 2)) - static_cast<long>(pRank(Fm, 2));
        EXPECT_EQ(std::abs(d), 1) << e.tableRef;
    }
}
