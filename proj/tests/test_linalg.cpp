#include "zlat/linalg.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace zlat;

namespace {

IntMatrix randomMatrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -6, int hi = 6) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (auto& x : m.a) x = d(rng);
    return m;
}

// Leibniz expansion, independent of the elimination in det().
Int leibniz(const IntMatrix& m) {
    std::vector<std::size_t> perm(m.rows);
    std::iota(perm.begin(), perm.end(), 0);
    Int total = 0;
    do {
        Int term = 1;
        for (std::size_t i = 0; i < m.rows; ++i) term *= m(i, perm[i]);
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// gcd of all k x k minors.
Int determinantalDivisor(const IntMatrix& m, std::size_t k) {
    Int g = 0;
    std::vector<bool> rs(m.rows), cs(m.cols);
    std::fill(rs.begin(), rs.begin() + k, true);
    do {
        std::fill(cs.begin(), cs.end(), false);
        std::fill(cs.begin(), cs.begin() + k, true);
        do {
            IntMatrix sub(k, k);
            std::size_t i2 = 0;
            for (std::size_t i = 0; i < m.rows; ++i) {
                if (!rs[i]) continue;
                std::size_t j2 = 0;
                for (std::size_t j = 0; j < m.cols; ++j)
                    if (cs[j]) sub(i2, j2++) = m(i, j);
                ++i2;
            }
            g = gcd(g, leibniz(sub));
        } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    return g;
}

}  // namespace

TEST(Det, AgreesWithLeibnizExpansion) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = randomMatrix(rng, 1 + trial % 5, 1 + trial % 5);
        EXPECT_EQ(det(m), leibniz(m));
    }
}

TEST(Smith, TransformsAndDivisibilityChain) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = randomMatrix(rng, 2 + trial % 3, 2 + (trial / 3) % 3);
        SmithResult s = smithNormalForm(m);
        EXPECT_EQ(s.U * m * s.V, s.D);
        EXPECT_EQ(s.V * s.Vinv, IntMatrix::identity(m.cols));
        EXPECT_EQ(abs(det(s.U)), 1);
        auto d = s.diagonal();
        for (std::size_t i = 0; i < s.D.rows; ++i)
            for (std::size_t j = 0; j < s.D.cols; ++j)
                if (i != j) EXPECT_EQ(s.D(i, j), 0);
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            EXPECT_GE(d[i], 0);
            if (d[i] != 0) EXPECT_EQ(d[i + 1] % d[i], 0);
            else EXPECT_EQ(d[i + 1], 0);
        }
    }
}

TEST(Smith, InvariantFactorsMatchDeterminantalDivisors) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix m = randomMatrix(rng, 3, 3);
        auto d = smithNormalForm(m).diagonal();
        for (std::size_t k = 1; k <= 3; ++k) {
            Int dk = determinantalDivisor(m, k);
            Int prod = 1;
            for (std::size_t i = 0; i < k; ++i) prod *= d[i];
            EXPECT_EQ(prod, dk) << "k = " << k;
        }
    }
}

TEST(Smith, KnownExample) {
    // diag(2, 6, 12) hidden by unimodular mixing; invariant factors by hand.
    IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto d = smithNormalForm(m).diagonal();
    EXPECT_EQ(d, (std::vector<Int>{2, 6, 12}));
}

TEST(Hermite, RowSpaceAndShape) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = randomMatrix(rng, 2 + trial % 4, 3);
        HermiteResult h = hermiteWithTransform(m);
        EXPECT_EQ(h.U * m, h.H);
        EXPECT_EQ(abs(det(h.U)), 1);
        std::size_t lastPivot = 0;
        for (std::size_t i = 0; i < h.rank; ++i) {
            std::size_t p = 0;
            while (h.H(i, p) == 0) ++p;
            EXPECT_GT(h.H(i, p), 0);
            if (i) EXPECT_GT(p, lastPivot);
            for (std::size_t k = 0; k < i; ++k) {
                EXPECT_GE(h.H(k, p), 0);
                EXPECT_LT(h.H(k, p), h.H(i, p));
            }
            lastPivot = p;
        }
        for (std::size_t i = h.rank; i < h.H.rows; ++i)
            for (std::size_t j = 0; j < h.H.cols; ++j) EXPECT_EQ(h.H(i, j), 0);
    }
}

TEST(Kernel, AnnihilatesAndIsSaturated) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        // left kernel: rows x with x m = 0
        IntMatrix m = randomMatrix(rng, 4 + trial % 2, 2, -3, 3);
        IntMatrix k = integerKernel(m);
        EXPECT_EQ(k.rows + rankOf(m), m.rows);
        IntMatrix prod = k * m;
        for (const auto& x : prod.a) EXPECT_EQ(x, 0);
        EXPECT_EQ(hermiteNormalForm(saturate(k)), hermiteNormalForm(k));
    }
}

TEST(Saturate, DividesOutCommonIndex) {
    IntMatrix b{{2, 0, 0}, {0, 2, 2}};
    EXPECT_EQ(hermiteNormalForm(saturate(b)), hermiteNormalForm(IntMatrix{{1, 0, 0}, {0, 1, 1}}));
}

TEST(Inverse, RationalInverse) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m = randomMatrix(rng, 3, 3);
        if (det(m) == 0) continue;
        EXPECT_EQ(toRat(m) * inverse(m), RatMatrix::identity(3));
    }
}

TEST(Inertia, CongruentDiagonalMatrices) {
    // P D P^T has the inertia of D for any invertible P (Sylvester).
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 4;
        IntMatrix D(n, n);
        Inertia want;
        for (std::size_t i = 0; i < n; ++i) {
            int v = val(rng);
            D(i, i) = v;
            if (v > 0) ++want.nPlus;
            else if (v < 0) ++want.nMinus;
            else ++want.nZero;
        }
        IntMatrix P = randomMatrix(rng, n, n, -2, 2);
        if (det(P) == 0) continue;
        EXPECT_EQ(inertia(P * D * transpose(P)), want);
    }
}

TEST(Division, FloorAndModulo) {
    EXPECT_EQ(floorDiv(Int(-7), Int(2)), -4);
    EXPECT_EQ(floorDiv(Int(7), Int(-2)), -4);
    EXPECT_EQ(modPos(Int(-7), Int(3)), 2);
    EXPECT_EQ(fracPart(Rat(-1, 3)), Rat(2, 3));
    EXPECT_EQ(ratMod(Rat(-2, 3), 2), Rat(4, 3));
}
