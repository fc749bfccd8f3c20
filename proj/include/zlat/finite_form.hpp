#pragma once

// Finite quadratic forms (discriminant forms of even lattices): construction
// from a Gram matrix, subgroups and subquotients, p-parts, parity,
// characteristic elements, Brown invariant, elementary normal forms,
// isomorphism search and small automorphism counts.

#include "zlat/lattice.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace zlat {

using Elem = std::vector<long>;

// Values are stored scaled by N, the exponent of the group:
// q as an integer mod 2N, b as an integer mod N.
struct FiniteQuadraticForm {
    std::vector<long> orders;          // generator orders, each > 1, d1 | d2 | ...
    long N = 1;                        // exponent of the group
    std::vector<std::vector<long>> B;  // b(g_i, g_j) * N mod N
    std::vector<long> Q;               // q(g_i) * N mod 2N

    // Present when the form comes from a lattice (or a subquotient of one):
    // lifts[i] is a vector of L (x) Q representing generator i.
    std::vector<RatVec> lifts;
    // Present only for forms built directly from a Gram matrix.
    std::optional<IntMatrix> gram;
    std::optional<IntMatrix> classRows;

    std::size_t rank() const { return orders.size(); }
    long size() const {
        long s = 1;
        for (long d : orders) s *= d;
        return s;
    }
    bool hasLifts() const { return lifts.size() == orders.size() && !orders.empty(); }
};

using FQF = FiniteQuadraticForm;

inline long posMod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline Elem reduce(const FQF& F, Elem x) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = posMod(x[i], F.orders[i]);
    return x;
}

inline Elem zeroElem(const FQF& F) { return Elem(F.rank(), 0); }
inline Elem unitElem(const FQF& F, std::size_t i) {
    Elem e = zeroElem(F);
    e[i] = 1;
    return e;
}

inline Elem add(const FQF& F, const Elem& x, const Elem& y) {
    Elem z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = posMod(x[i] + y[i], F.orders[i]);
    return z;
}
inline Elem smul(const FQF& F, long k, const Elem& x) {
    Elem z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = posMod(k * x[i], F.orders[i]);
    return z;
}
inline bool isZero(const Elem& x) {
    return std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
}

// Scaled values: q(x)*N mod 2N and b(x,y)*N mod N.
inline long qScaled(const FQF& F, const Elem& x) {
    const long M = 2 * F.N;
    long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        s = posMod(s + posMod(x[i] * x[i], M) * F.Q[i], M);
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[j] != 0) s = posMod(s + 2 * posMod(x[i] * x[j], M) * F.B[i][j], M);
    }
    return s;
}
inline long bScaled(const FQF& F, const Elem& x, const Elem& y) {
    long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) s = posMod(s + posMod(x[i] * y[j], F.N) * F.B[i][j], F.N);
    }
    return s;
}
inline Rat qValue(const FQF& F, const Elem& x) { return Rat(qScaled(F, x), F.N); }
inline Rat bValue(const FQF& F, const Elem& x, const Elem& y) { return Rat(bScaled(F, x, y), F.N); }

inline long elementOrder(const FQF& F, const Elem& x) {
    long o = 1;
    for (std::size_t i = 0; i < x.size(); ++i) o = std::lcm(o, F.orders[i] / std::gcd(F.orders[i], x[i]));
    return o;
}

// Mixed-radix indexing of elements, first coordinate fastest.
inline long elemIndex(const FQF& F, const Elem& x) {
    long idx = 0, stride = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        idx += x[i] * stride;
        stride *= F.orders[i];
    }
    return idx;
}
inline Elem elemAt(const FQF& F, long idx) {
    Elem x(F.rank());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = idx % F.orders[i];
        idx /= F.orders[i];
    }
    return x;
}

inline std::vector<Elem> allElements(const FQF& F) {
    std::vector<Elem> out;
    const long n = F.size();
    out.reserve(n);
    for (long i = 0; i < n; ++i) out.push_back(elemAt(F, i));
    return out;
}

// Lift of an element to L (x) Q; requires lifts.
inline RatVec liftOf(const FQF& F, const Elem& x) {
    if (!F.hasLifts()) throw std::logic_error("form carries no lifts");
    RatVec v(F.lifts[0].size(), Rat(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += x[i] * F.lifts[i][j];
    return v;
}

namespace detail {

inline Rat ratFromScaled(long v, long N) {
    Rat r(v, N);
    r.canonicalize();
    return r;
}

// Builds the scaled tables from rational values.
inline void setValues(FQF& F, const std::vector<std::vector<Rat>>& b, const std::vector<Rat>& q) {
    F.N = 1;
    for (long d : F.orders) F.N = std::lcm(F.N, d);
    const std::size_t k = F.orders.size();
    F.B.assign(k, std::vector<long>(k, 0));
    F.Q.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Rat v = fracPart(b[i][j]) * F.N;
            if (v.get_den() != 1) throw std::logic_error("bilinear value outside (1/N)Z");
            F.B[i][j] = v.get_num().get_si();
        }
        Rat v = ratMod(q[i], 2) * F.N;
        if (v.get_den() != 1) throw std::logic_error("quadratic value outside (1/N)Z");
        F.Q[i] = v.get_num().get_si();
    }
}

}  // namespace detail

// L*/L with its quadratic refinement, generators from the Smith transform.
inline FQF discriminantForm(const Lattice& L) {
    if (!L.isEven()) throw std::domain_error("discriminant form requires an even lattice");
    const std::size_t n = L.rank();
    SmithResult s = smithNormalForm(L.gram);
    FQF F;
    std::vector<RatVec> lifts;
    IntMatrix rows(0, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Int& d = s.D(i, i);
        if (d == 0) throw std::domain_error("degenerate lattice");
        if (d == 1) continue;
        if (!d.fits_slong_p() || d > 100000000) throw std::domain_error("discriminant group too large");
        F.orders.push_back(d.get_si());
        RatVec x(n);
        for (std::size_t r = 0; r < n; ++r) x[r] = Rat(s.V(r, i), d);
        for (auto& e : x) e.canonicalize();
        lifts.push_back(x);
        rows.appendRow(s.U.row(i));
    }
    const std::size_t k = F.orders.size();
    RatMatrix G = toRat(L.gram);
    std::vector<std::vector<Rat>> b(k, std::vector<Rat>(k));
    std::vector<Rat> q(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) b[i][j] = bilinear(lifts[i], G, lifts[j]);
        q[i] = b[i][i];
    }
    detail::setValues(F, b, q);
    F.lifts = lifts;
    F.gram = L.gram;
    F.classRows = rows;
    return F;
}

// Class of y in L*/L, for y given in lattice coordinates.
inline Elem classOf(const FQF& F, const RatVec& y) {
    if (!F.gram || !F.classRows) throw std::logic_error("form has no class map");
    RatVec gy = mulVec(toRat(*F.gram), y);
    IntVec z(gy.size());
    for (std::size_t i = 0; i < gy.size(); ++i) {
        if (gy[i].get_den() != 1) throw std::domain_error("vector is not in the dual lattice");
        z[i] = gy[i].get_num();
    }
    IntVec c = mulVec(*F.classRows, z);
    Elem x(F.rank());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = modPos(c[i], Int(F.orders[i])).get_si();
    return x;
}

// Form given by generator orders and rational values; used for normal forms.
inline FQF makeForm(const std::vector<long>& orders, const std::vector<std::vector<Rat>>& b, const std::vector<Rat>& q) {
    FQF F;
    F.orders = orders;
    detail::setValues(F, b, q);
    return F;
}

// Orthogonal sum of cyclic forms <q_i> on Z/d_i, q_i = num/den.
inline FQF diagonalForm(const std::vector<std::pair<long, Rat>>& cyclic) {
    const std::size_t k = cyclic.size();
    std::vector<long> orders;
    std::vector<std::vector<Rat>> b(k, std::vector<Rat>(k, Rat(0)));
    std::vector<Rat> q;
    for (std::size_t i = 0; i < k; ++i) {
        orders.push_back(cyclic[i].first);
        q.push_back(cyclic[i].second);
        b[i][i] = cyclic[i].second;
    }
    return makeForm(orders, b, q);
}

// a copies of u2 (hyperbolic) and b copies of v2 on (Z/2)^2.
inline FQF evenTwoForm(int a, int bcount) {
    const std::size_t k = 2 * (a + bcount);
    std::vector<std::vector<Rat>> b(k, std::vector<Rat>(k, Rat(0)));
    std::vector<Rat> q(k, Rat(0));
    for (std::size_t i = 0; i < k; i += 2) {
        b[i][i + 1] = b[i + 1][i] = Rat(1, 2);
        if (static_cast<int>(i / 2) >= a) {
            q[i] = q[i + 1] = Rat(1);
            b[i][i] = b[i + 1][i + 1] = Rat(0);
        }
    }
    return makeForm(std::vector<long>(k, 2), b, q);
}

inline FQF negate(const FQF& F) {
    FQF G = F;
    for (auto& row : G.B)
        for (auto& v : row) v = posMod(-v, G.N);
    for (auto& v : G.Q) v = posMod(-v, 2 * G.N);
    G.gram.reset();
    G.classRows.reset();
    G.lifts.clear();
    return G;
}

// Subquotient A/H, where A and H are given by generators (H inside A).
// Subgroups are handled through lattices in Z^k containing D Z^k; the
// generators of the result are returned in F coordinates alongside it.
struct Subquotient {
    FQF form;
    std::vector<Elem> gens;
};

inline Subquotient subquotientWithGens(const FQF& F, const std::vector<Elem>& Agens, const std::vector<Elem>& Hgens) {
    const std::size_t k = F.rank();
    auto latticeOf = [&](const std::vector<Elem>& gens) {
        IntMatrix M(0, k);
        for (std::size_t i = 0; i < k; ++i) {
            IntVec r(k, Int(0));
            r[i] = F.orders[i];
            M.appendRow(r);
        }
        for (const auto& g : gens) {
            IntVec r(k);
            for (std::size_t i = 0; i < k; ++i) r[i] = g[i];
            M.appendRow(r);
        }
        return rowSpanBasis(M);
    };
    Subquotient res;
    FQF& out = res.form;
    if (k == 0) return res;
    IntMatrix BA = latticeOf(Agens);
    IntMatrix BH = latticeOf(Hgens);
    RatMatrix R = toRat(BH) * inverse(BA);
    IntMatrix Ri = toInt(R);  // fails if H is not inside A
    SmithResult s = smithNormalForm(Ri);
    // BH = U^{-1} D (V^{-1} BA): the rows of V^{-1} BA generate A/H with orders d_i.
    IntMatrix W = s.Vinv * BA;
    for (std::size_t i = 0; i < k; ++i) {
        Int d = s.D(i, i);
        if (d == 1) continue;
        if (d == 0) throw std::logic_error("subquotient: degenerate relation lattice");
        out.orders.push_back(d.get_si());
        Elem g(k);
        for (std::size_t j = 0; j < k; ++j) g[j] = modPos(W(i, j), Int(F.orders[j])).get_si();
        res.gens.push_back(g);
    }
    const auto& gens = res.gens;
    const std::size_t m = gens.size();
    std::vector<std::vector<Rat>> b(m, std::vector<Rat>(m));
    std::vector<Rat> q(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) b[i][j] = bValue(F, gens[i], gens[j]);
        q[i] = qValue(F, gens[i]);
    }
    detail::setValues(out, b, q);
    if (F.hasLifts())
        for (const auto& g : gens) out.lifts.push_back(liftOf(F, g));
    return res;
}

inline FQF subquotient(const FQF& F, const std::vector<Elem>& Agens, const std::vector<Elem>& Hgens) {
    return subquotientWithGens(F, Agens, Hgens).form;
}

// Maps an element of a subquotient back to F coordinates (a representative).
inline Elem toParent(const FQF& F, const Subquotient& sq, const Elem& x) {
    Elem z(F.rank(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j) z[j] = posMod(z[j] + x[i] * sq.gens[i][j], F.orders[j]);
    return z;
}

inline std::vector<Elem> unitGenerators(const FQF& F) {
    std::vector<Elem> g;
    for (std::size_t i = 0; i < F.rank(); ++i) g.push_back(unitElem(F, i));
    return g;
}

// Re-presents F with invariant-factor generators.
inline FQF normalizeGroup(const FQF& F) { return subquotient(F, unitGenerators(F), {}); }

inline FQF directSum(const FQF& F, const FQF& G) {
    FQF S;
    S.orders = F.orders;
    S.orders.insert(S.orders.end(), G.orders.begin(), G.orders.end());
    const std::size_t k = S.orders.size(), kf = F.rank();
    std::vector<std::vector<Rat>> b(k, std::vector<Rat>(k, Rat(0)));
    std::vector<Rat> q(k);
    for (std::size_t i = 0; i < k; ++i) {
        const FQF& X = i < kf ? F : G;
        std::size_t ii = i < kf ? i : i - kf;
        q[i] = detail::ratFromScaled(X.Q[ii], X.N);
        for (std::size_t j = 0; j < k; ++j) {
            bool same = (i < kf) == (j < kf);
            if (!same) continue;
            std::size_t jj = j < kf ? j : j - kf;
            b[i][j] = detail::ratFromScaled(X.B[ii][jj], X.N);
        }
    }
    detail::setValues(S, b, q);
    return normalizeGroup(S);
}

inline long pAdicCofactor(long d, long p) {
    while (d % p == 0) d /= p;
    return d;
}

inline FQF pPart(const FQF& F, long p) {
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < F.rank(); ++i) gens.push_back(smul(F, pAdicCofactor(F.orders[i], p), unitElem(F, i)));
    return subquotient(F, gens, {});
}

// Number of invariant factors divisible by p.
inline std::size_t pRank(const FQF& F, long p) {
    std::size_t r = 0;
    for (long d : F.orders)
        if (d % p == 0) ++r;
    return r;
}

inline std::vector<long> primesOf(const FQF& F) {
    std::set<long> ps;
    for (long d : F.orders) {
        long x = d;
        for (long p = 2; p * p <= x; ++p)
            while (x % p == 0) {
                ps.insert(p);
                x /= p;
            }
        if (x > 1) ps.insert(x);
    }
    return {ps.begin(), ps.end()};
}

inline bool isElementary(const FQF& F, long p) {
    return std::all_of(F.orders.begin(), F.orders.end(), [&](long d) { return d == p; });
}

// Generators of H^perp = {x : b(x,h) = 0 for all h}.
inline std::vector<Elem> orthogonalOfSubgroup(const FQF& F, const std::vector<Elem>& H) {
    const std::size_t k = F.rank();
    if (k == 0) return {};
    const std::size_t m = H.size();
    // c in Z^k with sum_i c_i b(g_i, h) = 0 mod 1 for each h: left kernel of [W ; N I].
    IntMatrix M(k + m, m);
    for (std::size_t t = 0; t < m; ++t) {
        for (std::size_t i = 0; i < k; ++i) M(i, t) = bScaled(F, unitElem(F, i), H[t]);
        M(k + t, t) = F.N;
    }
    IntMatrix K = integerKernel(M);
    std::vector<Elem> gens;
    for (std::size_t r = 0; r < K.rows; ++r) {
        Elem g(k);
        for (std::size_t i = 0; i < k; ++i) g[i] = modPos(K(r, i), Int(F.orders[i])).get_si();
        if (!isZero(g)) gens.push_back(g);
    }
    if (m == 0) return unitGenerators(F);
    return gens;
}

// Elements of the subgroup generated by gens, as sorted indices.
inline std::vector<long> subgroupElements(const FQF& F, const std::vector<Elem>& gens) {
    std::set<long> seen{elemIndex(F, zeroElem(F))};
    std::vector<Elem> frontier{zeroElem(F)};
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Elem y = add(F, x, g);
                if (seen.insert(elemIndex(F, y)).second) next.push_back(y);
            }
        frontier.swap(next);
    }
    return {seen.begin(), seen.end()};
}

inline bool isIsotropic(const FQF& F, const std::vector<Elem>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (qScaled(F, gens[i]) != 0) return false;
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (bScaled(F, gens[i], gens[j]) != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Parity, characteristic element, Brown invariant, normal forms.

inline void requireElementary2(const FQF& F) {
    if (!isElementary(F, 2)) throw std::domain_error("not an elementary 2-group");
}

inline int parity2(const FQF& F2) {
    requireElementary2(F2);
    for (std::size_t i = 0; i < F2.rank(); ++i)
        if (F2.B[i][i] != 0) return 1;
    return 0;
}

// The unique v with b(v,x) = b(x,x) for all x, by elimination over F_2.
inline Elem characteristicElement(const FQF& F2) {
    requireElementary2(F2);
    const std::size_t k = F2.rank();
    // Row i: sum_j v_j [2b(g_j,g_i)] = [2b(g_i,g_i)] mod 2.
    std::vector<std::vector<int>> A(k, std::vector<int>(k + 1, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) A[i][j] = static_cast<int>((2 * F2.B[j][i] / F2.N) % 2);
        A[i][k] = static_cast<int>((2 * F2.B[i][i] / F2.N) % 2);
    }
    std::vector<std::size_t> pivotCol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < k; ++c) {
        std::size_t p = r;
        while (p < k && A[p][c] == 0) ++p;
        if (p == k) continue;
        std::swap(A[p], A[r]);
        for (std::size_t i = 0; i < k; ++i)
            if (i != r && A[i][c])
                for (std::size_t j = c; j <= k; ++j) A[i][j] ^= A[r][j];
        pivotCol.push_back(c);
        ++r;
    }
    if (r != k) throw std::domain_error("degenerate 2-form");
    Elem v(k, 0);
    for (std::size_t i = 0; i < r; ++i) v[pivotCol[i]] = A[i][k];
    return v;
}

inline bool isCharacteristic(const FQF& F2, const Elem& v) { return characteristicElement(F2) == v; }

// Brown invariant by exact Gaussian-integer summation for elementary 2-groups,
// where every value exp(pi i q) lies in {1, i, -1, -i}.
inline int brownElementary2(const FQF& F2) {
    requireElementary2(F2);
    long re = 0, im = 0;
    const long n = F2.size();
    for (long idx = 0; idx < n; ++idx) {
        long s = qScaled(F2, elemAt(F2, idx));  // q*N with N = 2 (or 1 when trivial)
        long quarter = F2.N == 2 ? s : 2 * s;   // q in units of 1/2, mod 4
        switch (posMod(quarter, 4)) {
            case 0: ++re; break;
            case 1: ++im; break;
            case 2: --re; break;
            default: --im; break;
        }
    }
    // Phase k*pi/4 read off from the signs; |S|^2 = |G| for nondegenerate forms.
    if (re * re + im * im != n) throw std::domain_error("degenerate 2-form");
    auto s = [](long x) { return (x > 0) - (x < 0); };
    int sr = s(re), si = s(im);
    if (sr > 0 && si == 0) return 0;
    if (sr > 0 && si > 0) return 1;
    if (sr == 0 && si > 0) return 2;
    if (sr < 0 && si > 0) return 3;
    if (sr < 0 && si == 0) return 4;
    if (sr < 0 && si < 0) return 5;
    if (sr == 0 && si < 0) return 6;
    return 7;
}

struct NormalForm2 {
    bool even = true;  // even kind: a u2 + b v2; odd kind: a<1/2> + b<-1/2>
    int a = 0, b = 0;
    friend bool operator==(const NormalForm2& x, const NormalForm2& y) {
        return x.even == y.even && x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const NormalForm2& x, const NormalForm2& y) {
        return std::tie(x.even, x.a, x.b) < std::tie(y.even, y.a, y.b);
    }
};

inline NormalForm2 normalForm2(const FQF& F2) {
    const int n = static_cast<int>(F2.rank());
    const int br = brownElementary2(F2);
    NormalForm2 nf;
    if (parity2(F2) == 0) {
        if (br != 0 && br != 4) throw std::logic_error("even 2-form with Brown invariant not in {0,4}");
        nf.even = true;
        nf.b = br == 4 ? 1 : 0;
        nf.a = n / 2 - nf.b;
    } else {
        nf.even = false;
        // a - b = Br mod 8, a + b = n: a = (Br + n)/2 mod 4, smallest such a >= 0.
        int a = static_cast<int>(posMod((br + n) / 2, 4));
        if ((br + n) % 2 != 0) throw std::logic_error("odd 2-form with Br and rank of different parity");
        if (a > n) throw std::logic_error("odd 2-form normal form out of range");
        nf.a = a;
        nf.b = n - a;
    }
    return nf;
}

inline int brownOf(const NormalForm2& nf) {
    if (nf.even) return (4 * nf.b) % 8;
    return static_cast<int>(posMod(nf.a - nf.b, 8));
}

inline bool iso2(const FQF& F, const FQF& G) {
    return F.rank() == G.rank() && normalForm2(F) == normalForm2(G);
}

struct NormalForm3 {
    int a = 0;  // number of <2/3> summands in a diagonalization
    int b = 0;  // number of <-2/3> summands
    int rank() const { return a + b; }
    int p() const { return a % 2; }
    int q() const { return rank() - p(); }
    int brown() const { return static_cast<int>(posMod(2 * (a - b), 8)); }
};

// Diagonalizes by splitting off anisotropic elements one at a time.
inline NormalForm3 normalForm3(const FQF& F3) {
    if (!isElementary(F3, 3)) throw std::domain_error("not an elementary 3-group");
    NormalForm3 nf;
    FQF cur = F3;
    while (cur.rank() > 0) {
        std::optional<Elem> x;
        const long n = cur.size();
        for (long idx = 1; idx < n && !x; ++idx) {
            Elem e = elemAt(cur, idx);
            if (qScaled(cur, e) != 0) x = e;
        }
        if (!x) throw std::domain_error("degenerate 3-form");
        Rat qv = qValue(cur, *x);
        if (qv == Rat(2, 3)) ++nf.a;
        else if (qv == Rat(4, 3)) ++nf.b;
        else throw std::logic_error("unexpected value on an order-3 element");
        cur = subquotient(cur, orthogonalOfSubgroup(cur, {*x}), {});
    }
    return nf;
}

// Gauss-sum phase; tolerance breaches mean a bug, never legitimate input.
inline int brownNumeric(const FQF& F) {
    const long n = F.size();
    if (n > 1000000) throw std::domain_error("group too large for Gauss sum");
    const long double pi = std::acos(-1.0L);
    long double re = 0, im = 0;
    for (long idx = 0; idx < n; ++idx) {
        long double t = pi * static_cast<long double>(qScaled(F, elemAt(F, idx))) / static_cast<long double>(F.N);
        re += std::cos(t);
        im += std::sin(t);
    }
    long double mag = std::sqrt(re * re + im * im);
    long double expect = std::sqrt(static_cast<long double>(n));
    if (std::fabs(mag - expect) > 1e-6L * expect) throw std::domain_error("degenerate Gauss sum");
    long double phase = std::atan2(im, re) / (pi / 4);
    long double k = std::round(phase);
    if (std::fabs(phase - k) > 1e-6L) throw std::domain_error("degenerate Gauss sum");
    return static_cast<int>(posMod(static_cast<long>(k), 8));
}

// Additive over p-parts; exact on elementary 2- and 3-parts.
inline int brown(const FQF& F) {
    long total = 0;
    for (long p : primesOf(F)) {
        FQF Fp = pPart(F, p);
        if (p == 2 && isElementary(Fp, 2)) total += brownElementary2(Fp);
        else if (p == 3 && isElementary(Fp, 3)) total += normalForm3(Fp).brown();
        else total += brownNumeric(Fp);
    }
    return static_cast<int>(posMod(total, 8));
}

// ---------------------------------------------------------------------------
// Isometry search.

// Images of the generators of F in G.
using FormMap = std::vector<Elem>;

namespace detail {

struct ElementTable {
    std::vector<Elem> elems;
    std::vector<long> q;
    std::vector<long> order;
    explicit ElementTable(const FQF& G) : elems(allElements(G)) {
        for (const auto& e : elems) {
            q.push_back(qScaled(G, e));
            order.push_back(elementOrder(G, e));
        }
    }
};

// Rescales a value in units of 1/NF to units of 1/NG.
inline long rescaleValue(long v, long NF, long NG) {
    if ((v * NG) % NF != 0) return -1;
    return v * NG / NF;
}

// Backtracking over generator images matching orders, q and pairwise b.
// The callback returns false to stop the search.
inline void searchIsometries(const FQF& F, const FQF& G, const std::function<bool(const FormMap&)>& cb,
                             const std::function<bool(std::size_t, const Elem&)>& filter = {}) {
    if (F.size() != G.size()) return;
    const std::size_t k = F.rank();
    ElementTable T(G);
    std::vector<std::vector<std::size_t>> cand(k);
    for (std::size_t i = 0; i < k; ++i) {
        long qi = rescaleValue(F.Q[i], F.N, G.N);
        for (std::size_t e = 0; e < T.elems.size(); ++e)
            if (T.order[e] == F.orders[i] && T.q[e] == qi) cand[i].push_back(e);
    }
    FormMap img(k);
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (stop) return;
        if (i == k) {
            if (!cb(img)) stop = true;
            return;
        }
        for (std::size_t e : cand[i]) {
            const Elem& y = T.elems[e];
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = bScaled(G, y, img[j]) == rescaleValue(F.B[i][j], F.N, G.N);
            if (!ok) continue;
            if (filter && !filter(i, y)) continue;
            img[i] = y;
            rec(i + 1);
            if (stop) return;
        }
    };
    rec(0);
}

}  // namespace detail

inline std::map<std::pair<long, long>, long> qCensus(const FQF& F) {
    std::map<std::pair<long, long>, long> c;
    const long n = F.size();
    for (long i = 0; i < n; ++i) {
        Rat v = qValue(F, elemAt(F, i));
        c[{v.get_num().get_si(), v.get_den().get_si()}]++;
    }
    return c;
}

// Forms here are always presented as direct sums of cyclic groups, so any
// assignment of generator images with matching orders is a homomorphism;
// preserving the nondegenerate b makes it injective.
inline std::optional<FormMap> findIsomorphism(const FQF& F, const FQF& G) {
    if (F.size() != G.size()) return std::nullopt;
    if (qCensus(F) != qCensus(G)) return std::nullopt;
    std::optional<FormMap> found;
    detail::searchIsometries(F, G, [&](const FormMap& m) {
        found = m;
        return false;
    });
    return found;
}

inline bool isIsomorphic(const FQF& F, const FQF& G) { return findIsomorphism(F, G).has_value(); }

// An anti-isometry F -> G is an isometry F -> -G with the same generators.
inline std::optional<FormMap> findAntiIsomorphism(const FQF& F, const FQF& G) {
    return findIsomorphism(F, negate(G));
}

inline Elem applyMap(const FQF& target, const FormMap& m, const Elem& x) {
    Elem z = zeroElem(target);
    for (std::size_t i = 0; i < x.size(); ++i) z = add(target, z, smul(target, x[i], m[i]));
    return z;
}

// Exhaustive count of isometries F -> F; small groups only.
inline long autOrder(const FQF& F, long maxSize = 81) {
    if (F.size() > maxSize) throw std::domain_error("group too large for automorphism count");
    long count = 0;
    detail::searchIsometries(F, F, [&](const FormMap&) {
        ++count;
        return true;
    });
    return count;
}

// All isotropic subgroups (as sorted element-index sets), built p-part by p-part.
inline std::vector<std::vector<long>> isotropicSubgroups(const FQF& F) {
    const long n = F.size();
    if (n > 3 * 3 * 3 * 3 * 3 * 3 * 64) throw std::domain_error("group too large for subgroup enumeration");
    std::vector<long> qv(n);
    for (long i = 0; i < n; ++i) qv[i] = qScaled(F, elemAt(F, i));
    auto closure = [&](const std::vector<long>& H, long x) {
        std::set<long> S(H.begin(), H.end());
        Elem ex = elemAt(F, x);
        std::vector<long> base(H.begin(), H.end());
        Elem m = ex;
        while (!isZero(m)) {
            for (long h : base) S.insert(elemIndex(F, add(F, elemAt(F, h), m)));
            m = add(F, m, ex);
        }
        return std::vector<long>(S.begin(), S.end());
    };
    auto enumerateWithin = [&](const std::vector<long>& universe) {
        std::set<std::vector<long>> seen;
        std::vector<std::vector<long>> out, frontier{{elemIndex(F, zeroElem(F))}};
        seen.insert(frontier[0]);
        while (!frontier.empty()) {
            std::vector<std::vector<long>> next;
            for (const auto& H : frontier) {
                out.push_back(H);
                for (long x : universe) {
                    if (qv[x] != 0 || std::binary_search(H.begin(), H.end(), x)) continue;
                    Elem ex = elemAt(F, x);
                    bool orth = true;
                    for (long h : H)
                        if (bScaled(F, ex, elemAt(F, h)) != 0) {
                            orth = false;
                            break;
                        }
                    if (!orth) continue;
                    auto H2 = closure(H, x);
                    if (seen.insert(H2).second) next.push_back(H2);
                }
            }
            frontier.swap(next);
        }
        return out;
    };
    std::vector<std::vector<long>> result{{elemIndex(F, zeroElem(F))}};
    for (long p : primesOf(F)) {
        std::vector<long> universe;
        for (long i = 0; i < n; ++i) {
            long o = elementOrder(F, elemAt(F, i));
            if (pAdicCofactor(o, p) == 1) universe.push_back(i);
        }
        auto local = enumerateWithin(universe);
        std::vector<std::vector<long>> combined;
        for (const auto& H : result)
            for (const auto& K : local) {
                std::set<long> S;
                for (long h : H)
                    for (long kx : K) S.insert(elemIndex(F, add(F, elemAt(F, h), elemAt(F, kx))));
                combined.emplace_back(S.begin(), S.end());
            }
        result.swap(combined);
    }
    std::sort(result.begin(), result.end());
    return result;
}

// ---------------------------------------------------------------------------
// Rendering.

inline std::string ratText(const Rat& r) {
    Rat x = r;
    x.canonicalize();
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline std::string cyclicText(const std::string& value, bool ascii) {
    return ascii ? "q(" + value + ")" : "⟨" + value + "⟩";
}

inline std::string termText(int count, const std::string& t) {
    if (count == 0) return {};
    return (count > 1 ? std::to_string(count) : "") + t;
}

inline std::string joinTerms(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts)
        if (!p.empty()) s += (s.empty() ? "" : "+") + p;
    return s.empty() ? "0" : s;
}

inline std::string renderNormalForm2(const NormalForm2& nf, bool ascii) {
    if (nf.even) return joinTerms({termText(nf.a, "u2"), termText(nf.b, "v2")});
    return joinTerms({termText(nf.a, cyclicText("1/2", ascii)), termText(nf.b, cyclicText("-1/2", ascii))});
}

inline std::string renderNormalForm3(const NormalForm3& nf, bool ascii) {
    // a = p representative: a<2/3> + (rank - a)<-2/3> with a in {0,1}.
    return joinTerms({termText(nf.p(), cyclicText("2/3", ascii)), termText(nf.q(), cyclicText("-2/3", ascii))});
}

// Canonical text: elementary 2- and 3-parts in normal form, other parts raw.
inline std::string renderForm(const FQF& F, bool ascii = false) {
    std::vector<std::string> parts;
    for (long p : primesOf(F)) {
        FQF Fp = pPart(F, p);
        if (p == 2 && isElementary(Fp, 2)) parts.push_back(renderNormalForm2(normalForm2(Fp), ascii));
        else if (p == 3 && isElementary(Fp, 3)) parts.push_back(renderNormalForm3(normalForm3(Fp), ascii));
        else {
            std::string s = "[";
            for (std::size_t i = 0; i < Fp.rank(); ++i) {
                s += (i ? " " : "") + std::string("Z/") + std::to_string(Fp.orders[i]) + ":" +
                     ratText(detail::ratFromScaled(Fp.Q[i], Fp.N));
            }
            parts.push_back(s + "]");
        }
    }
    return joinTerms(parts);
}

}  // namespace zlat
