#include "zlat/tables.hpp"
#include "zlat/verify.hpp"

#include <gtest/gtest.h>

using namespace zlat;

namespace {

CompleteCode ovals(std::vector<OvalGroup> outer, std::optional<int> ambient = std::nullopt,
                   std::vector<OvalGroup> inner = {}) {
    CompleteCode c;
    c.outer = std::move(outer);
    c.ambient = ambient;
    c.inner = std::move(inner);
    return c;
}

// Region Euler characteristics from the nesting tree: a region bounded
// outside by one oval (or the exterior) with c holes has chi 1 - c.
RegionChi chiFromTree(const CompleteCode& code) {
    if (code.kind == CompleteCode::Kind::Null) return {1, 0};
    // depth of every oval, and the children count of every region
    std::vector<int> depthOf;
    std::vector<int> parent;  // -1 for the exterior
    if (code.kind == CompleteCode::Kind::ThreeNest) {
        depthOf = {1, 2, 3};
        parent = {-1, 0, 1};
    } else {
        CompleteCode c = normalized(code);
        for (int i = 0; i < c.outerCount(); ++i) {
            depthOf.push_back(1);
            parent.push_back(-1);
        }
        if (c.ambient) {
            int a = static_cast<int>(depthOf.size());
            depthOf.push_back(1);
            parent.push_back(-1);
            for (int i = 0; i < c.innerCount(); ++i) {
                depthOf.push_back(2);
                parent.push_back(a);
            }
        }
    }
    RegionChi r{0, 0};
    int rootChildren = 0;
    for (int p : parent) rootChildren += p == -1;
    r.even += 1 - rootChildren;
    for (std::size_t i = 0; i < depthOf.size(); ++i) {
        int children = 0;
        for (int p : parent) children += p == static_cast<int>(i);
        (depthOf[i] % 2 == 0 ? r.even : r.odd) += 1 - children;
    }
    return r;
}

}  // namespace

TEST(Code, Rendering) {
    EXPECT_EQ(renderCode(ovals({{2, 1}}, 0, {{2, 0}}), true), "2_1+1<2>");
    EXPECT_EQ(renderCode(ovals({{2, 1}}, 0, {{2, 0}})), "2₁+1⟨2⟩");
    EXPECT_EQ(renderCode(ovals({}, -1, {{1, 1}, {1, -2}}), true), "1_{-1}<1_{-2}+1_1>");
    EXPECT_EQ(renderCode(CompleteCode::null()), "0");
    EXPECT_EQ(renderCode(CompleteCode::threeNest(), true), "1<1<1>>");
    EXPECT_EQ(renderSimpleCode(ovals({{2, 1}}, 0, {{2, 0}}), true), "2+1<2>");
    // an ambient oval with nothing inside is an empty oval
    EXPECT_EQ(normalized(ovals({{1, 0}}, 2)), ovals({{1, 2}, {1, 0}}));
}

TEST(Code, Reversion) {
    EXPECT_EQ(renderCode(reversionCode(ovals({{2, 1}}, 0, {{2, 0}})), true), "2+1<2_1>");
    EXPECT_EQ(reversionCode(CompleteCode::threeNest()).kind, CompleteCode::Kind::ThreeNest);
    EXPECT_THROW(reversionCode(CompleteCode::null()), std::invalid_argument);
    EXPECT_EQ(renderCode(reversionCode(ovals({}, 1, {{2, 0}})), true), "1_{-1}+2");
    for (int n = 2; n <= 5; ++n) {
        CompleteCode c = reversionCode(ovals({{n, 1}}));
        EXPECT_EQ(renderCode(c, true), "1_{-1}<" + std::to_string(n - 1) + "_1>") << n;
    }
}

// Reversion is an involution on codes with ovals on both sides of the
// ambient one; without outer ovals the image has no nest.
TEST(Code, ReversionOfNestedCodesIsInvolutive) {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int m = -2; m <= 2; ++m) {
                CompleteCode c = ovals({{a, 1}}, m, {{b, 0}});
                EXPECT_EQ(reversionCode(reversionCode(c)), normalized(c)) << renderCode(c, true);
            }
}

TEST(Topology, ShapeFromHalf) {
    THalfTopology t = topologyFromTHalf({8, 0, 0, 0, 3});
    EXPECT_EQ(t.ell, 5);
    EXPECT_EQ(t.shape.alpha, 0);
    EXPECT_EQ(t.shape.beta, 4);
    EXPECT_EQ(t.type, CurveType::I);
    EXPECT_EQ(t.o, Sign::Minus);
    EXPECT_EQ(t.nuR, 0);
    EXPECT_EQ(topologyFromTHalf({4, 4, 0, 1, 0}).shape.kind, CompleteCode::Kind::Null);
    EXPECT_THROW(topologyFromTHalf({8, 2, 1, 0, 0}), std::invalid_argument);
}

TEST(ID, FromInvariants) {
    SexticID id = idFromInvariants({8, 0, 0, 0, 3}, true);
    EXPECT_EQ(renderCode(id.code, true), "1<4>");
    EXPECT_EQ(id.type, CurveType::I);
    EXPECT_EQ(id.o, Sign::Minus);
    EXPECT_EQ(id.nuR, 0);
}

TEST(ID, EveryCensusPairResolves) {
    const auto& c = census();
    for (std::size_t i = 0; i < c.size(); ++i) {
        SexticID id = censusID(i);
        EXPECT_EQ(idFromTPair(c[i].pair), id) << c[i].tableRef;
        auto cands = candidateCodes(c[i].pair.tPlus.inv);
        EXPECT_NE(std::find(cands.begin(), cands.end(), id.code), cands.end()) << c[i].tableRef;
        EXPECT_EQ(id.code.cuspPairs(), id.nuR) << c[i].tableRef;
    }
}

TEST(ID, GoldenAndEngineChecks) {
    for (const CheckResult& r : {checkGoldenIDs(), checkEngineResolution(), checkReversionInvolution(), checkCodeTopology()})
        EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Cubic, Examples) {
    EXPECT_EQ(cubicTopology({CompleteCode::null(), CurveType::II, Sign::Minus, 0}).chi, 1);
    EXPECT_EQ(cubicTopology({CompleteCode::threeNest(), CurveType::I, Sign::Plus, 0}).chi, 1);
    SexticID id{ovals({{3, 1}}, 0, {{1, 0}}), CurveType::I, Sign::Minus, 3};
    CubicTopology t = cubicTopology(id);
    EXPECT_EQ(t.chi, 1);
    EXPECT_EQ(t.handles, 0);
}

TEST(Cubic, RegionChiMatchesNestingTree) {
    std::vector<CompleteCode> codes{CompleteCode::null(), CompleteCode::threeNest()};
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) codes.push_back(b ? ovals({{a, 0}}, 0, {{b, 0}}) : ovals({{a + 1, 0}}));
    for (std::size_t i = 0; i < census().size(); ++i) codes.push_back(censusID(i).code);
    for (const auto& c : codes) {
        RegionChi want = chiFromTree(c), got = regionChi(c);
        EXPECT_EQ(got.even, want.even) << renderCode(c, true);
        EXPECT_EQ(got.odd, want.odd) << renderCode(c, true);
        EXPECT_EQ(got.even + got.odd, 1) << renderCode(c, true);
    }
}

// Frozen distribution of the handle count over the census.
TEST(Cubic, HandleDistribution) {
    std::map<int, int> hist;
    for (std::size_t i = 0; i < census().size(); ++i) {
        CubicTopology t = cubicTopology(censusID(i));
        EXPECT_EQ(t.chi % 2 != 0, true);
        ++hist[t.handles];
    }
    EXPECT_EQ(hist, (std::map<int, int>{{-1, 8}, {0, 14}, {1, 17}, {2, 17}, {3, 12}}));
}
