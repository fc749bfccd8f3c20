#include "zlat/verify.hpp"

#include <gtest/gtest.h>

using namespace zlat;

namespace {

// Every quintuple realized by some sum of one hyperbolic atom and negative
// definite atoms of total rank <= 9. The atom list is wider than the witness
// catalog on purpose: A5 and D6 have non-split discriminants.
const std::set<THalfInvariants>& realizedBySums() {
    static const std::set<THalfInvariants> out = [] {
        const std::vector<std::string> hyp{"U", "U(2)", "U(3)", "U(6)", "<2>", "<6>"};
        const std::vector<std::string> neg{"A1", "A2",    "A2(2)", "<-6>",  "D4", "E6", "E7",
                                           "A2(3)", "D4(3)", "E6(2)", "A1(3)", "A5", "D6", "<-2>"};
        std::vector<Lattice> atoms;
        for (const auto& n : neg) atoms.push_back(parseLatticeExpr(n));
        std::set<THalfInvariants> s;
        std::function<void(const Lattice&, std::size_t)> rec = [&](const Lattice& L, std::size_t start) {
            if (auto h = analyzeHalf(L)) s.insert(h->inv);
            for (std::size_t i = start; i < atoms.size(); ++i)
                if (L.rank() + atoms[i].rank() <= 9) rec(directSum(L, atoms[i]), i);
        };
        for (const auto& h : hyp) rec(parseLatticeExpr(h), 0);
        return s;
    }();
    return out;
}

Int norm(const Lattice& L, const IntVec& v) {
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * L.gram(i, j) * v[j];
    return s;
}

std::vector<THalfInvariants> structurallyValid() {
    std::vector<THalfInvariants> out;
    for (int r = 1; r <= 9; ++r)
        for (int r2 = 0; r2 <= r; ++r2)
            for (int d = 0; d <= 1; ++d)
                for (int p = 0; p <= 1; ++p)
                    for (int q = 0; q <= 3; ++q) {
                        THalfInvariants t{r, r2, d, p, q};
                        if (structuralViolation(t).empty()) out.push_back(t);
                    }
    return out;
}

}  // namespace

TEST(Half, InvariantsOfSmallLattices) {
    auto h = analyzeHalf(parseLatticeExpr("<2>+E7"));
    ASSERT_TRUE(h);
    EXPECT_EQ(h->inv, (THalfInvariants{8, 2, 1, 0, 0}));
    EXPECT_EQ(h->sigma, -6);

    auto u3 = analyzeHalf(parseLatticeExpr("U(3)+A2"));
    ASSERT_TRUE(u3);
    EXPECT_EQ(u3->inv.r3(), 3);
    EXPECT_EQ(u3->inv.r2, 0);

    // not 2,3-elementary, or not hyperbolic
    EXPECT_FALSE(analyzeHalf(parseLatticeExpr("U+A3")));
    EXPECT_FALSE(analyzeHalf(parseLatticeExpr("U+<-10>")));
    EXPECT_FALSE(analyzeHalf(parseLatticeExpr("E8")));
    EXPECT_FALSE(analyzeHalf(parseLatticeExpr("2U")));
}

TEST(Half, BrownValuesMatchVanDerBlij) {
    for (const auto& e : census())
        for (const Lattice* L : {&e.pair.tPlus.lattice, &e.pair.tMinus.lattice}) {
            auto h = analyzeHalf(*L);
            ASSERT_TRUE(h);
            EXPECT_EQ(((h->br2 + h->br3 - h->sigma) % 8 + 8) % 8, 0) << L->expr;
        }
}

// The restrictions are exactly the existence conditions: a structurally valid
// quintuple passes them iff some lattice realizes it.
TEST(Restrictions, AgreeWithExistenceOracle) {
    const auto& real = realizedBySums();
    int checked = 0;
    for (const auto& t : structurallyValid()) {
        EXPECT_EQ(passesRestrictions(t), real.count(t) > 0) << t.text() << " rule " << restrictionViolated(t);
        ++checked;
    }
    EXPECT_GT(checked, 300);
}

TEST(Restrictions, BrownFormulationAgrees) {
    for (const auto& t : structurallyValid()) EXPECT_EQ(restrictionViolated(t), brownRestrictionViolated(t)) << t.text();
    CheckResult r = checkRestrictionForms();
    EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Restrictions, AllowedButNotAHalf) {
    THalfInvariants t{8, 2, 1, 0, 0};
    EXPECT_TRUE(passesRestrictions(t));
    EXPECT_FALSE(isTHalf(t));
    // its complement would need rank 1 with 2-rank 3
    EXPECT_FALSE(structuralViolation(complementOf(t)).empty());
}

TEST(Restrictions, StructuralRules) {
    EXPECT_EQ(structuralViolation({10, 0, 0, 0, 0}), "rank");
    EXPECT_EQ(structuralViolation({4, 1, 1, 0, 0}), "r2 parity");
    EXPECT_EQ(structuralViolation({4, 0, 1, 0, 0}), "r2=0 forces even");
    EXPECT_EQ(structuralViolation({5, 1, 0, 0, 0}), "odd r2 forces odd");
    EXPECT_EQ(structuralViolation({4, 2, 1, 0, 4}), "(p,q) range");
}

TEST(Admissible, Counts) {
    auto adm = admissibleInvariants();
    EXPECT_EQ(adm.size(), 68u);
    EXPECT_EQ(distinctRankPairs().size(), 14u);
    EXPECT_EQ(groupedAdmissible().size(), 20u);
    for (const auto& ip : adm) {
        EXPECT_EQ(ip.t2, complementOf(ip.t1));
        EXPECT_EQ(complementOf(ip.t2).r, ip.t1.r);
        EXPECT_LE(ip.t1.r2, std::min(ip.t1.r, 8 - ip.t1.r));
        EXPECT_TRUE(isAdmissiblePair(ip.t1, ip.t2));
    }
}

TEST(Admissible, GroupedRowsPartitionPairs) {
    std::size_t total = 0;
    for (const auto& row : groupedAdmissible()) total += row.deltas.size() * row.pq.size();
    EXPECT_EQ(total, 68u);
}

TEST(Witness, RecomputedInvariants) {
    for (const auto& ip : admissibleInvariants())
        for (const auto& t : {ip.t1, ip.t2}) {
            HalfWitness w = witnessLattice(t);
            EXPECT_EQ(tHalfInvariants(w.lattice), std::optional<THalfInvariants>(t)) << w.lattice.expr;
            EXPECT_TRUE(std::is_sorted(w.blocks.begin() + 1, w.blocks.end()));
        }
    EXPECT_THROW(witnessLattice({8, 2, 1, 0, 5}), std::runtime_error);
}

TEST(Census, Counts) {
    const auto& c = census();
    ASSERT_EQ(c.size(), 68u);
    long reversible = std::count_if(c.begin(), c.end(), [](const CensusEntry& e) { return e.reversible; });
    EXPECT_EQ(reversible, 62);
    EXPECT_EQ(censusRowsOf("8A").size(), 6u);
    EXPECT_EQ(censusRowsOf("8B").size(), 31u);
    EXPECT_EQ(censusRowsOf("8C").size(), 31u);
    for (const auto& e : c) EXPECT_TRUE(pairViolations(e.pair.tPlus.lattice, e.pair.tMinus.lattice).empty());
    EXPECT_FALSE(censusIndexByRef("8A:7"));
    EXPECT_TRUE(censusIndexByRef("8C:31"));
}

TEST(Census, PartnerRuleIsAnInvolution) {
    const auto& c = census();
    for (const auto& e : c) {
        if (!e.reversible) continue;
        const auto& f = c[*e.partnerIndex];
        EXPECT_TRUE(f.reversible);
        EXPECT_EQ(partnerInvariants(partnerInvariants(e.pair.tPlus.inv)), e.pair.tPlus.inv);
        EXPECT_EQ(f.pair.tPlus.inv, partnerInvariants(e.pair.tPlus.inv));
        ASSERT_TRUE(e.root);
        EXPECT_EQ(norm(e.pair.tMinus.lattice, *e.root), -2);
    }
    CheckResult r = checkPartnerInvolution();
    EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Census, ViolationsAreReported) {
    auto bad = pairViolations(parseLatticeExpr("U"), parseLatticeExpr("U+E6"));
    EXPECT_FALSE(bad.empty());
    EXPECT_EQ(pairViolations(parseLatticeExpr("U"), parseLatticeExpr("A2")).size(), 1u);
}

TEST(Census, BrownPairing) {
    CheckResult r = checkBrownPairing();
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_EQ(r.count, 68);
}

TEST(SPairs, RanksAndDefiniteness) {
    EXPECT_EQ(latticeS0().rank(), 12u);
    for (int nu = 0; nu <= 3; ++nu)
        for (Sign o : {Sign::Plus, Sign::Minus}) {
            SPair s = sPair(nu, o);
            EXPECT_EQ(s.sPlus.rank() + s.sMinus.rank(), 12u);
            for (const Lattice* L : {&s.sPlus, &s.sMinus}) {
                if (L->rank() == 0) continue;
                EXPECT_TRUE(L->isEven());
                EXPECT_EQ(signature(*L).nMinus, L->rank());
            }
        }
    EXPECT_THROW(sPair(4, Sign::Plus), std::invalid_argument);
}

TEST(Realization, EveryPairEmbeds) {
    CheckResult r = checkRealization();
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_EQ(r.count, 68);
    RealizationReport rep = realizePair(census().front().pair);
    EXPECT_EQ(rep.k3.rank(), 22u);
    EXPECT_EQ(abs(rep.k3.det()), 1);
    EXPECT_EQ(signature(rep.k3).nPlus, 3u);
}

TEST(FormG, CensusAndAutomorphisms) {
    auto cen = reducedGCensus();
    EXPECT_EQ(cen[0] + cen[1] + cen[2], 80);  // nonzero elements of a group of order 81
    EXPECT_EQ(autOrder(reducedG().form), 1440);
}

// Frozen from an exhaustive search; the signed permutations are a proper
// subgroup of index 162.
TEST(FormG, AutomorphismsFixingDelta) {
    AutGDeltaSummary s = autGDeltaSummary();
    EXPECT_EQ(s.total, 233280);
    EXPECT_EQ(s.signedPermutations, 1440);
    EXPECT_EQ(s.total, s.reductionKernel * s.reducedAut);
}
