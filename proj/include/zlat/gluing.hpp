#pragma once

// Overlattices from isotropic subgroups, gluing along anti-isometries,
// involutions via gluing and eigenlattices.

#include "zlat/finite_form.hpp"

namespace zlat {

// Pairs (x in discr L1, y in discr L2) spanning the graph of an anti-isometry.
struct GlueMap {
    std::vector<std::pair<Elem, Elem>> pairs;
};

struct LatticeInvolution {
    Lattice lattice;
    IntMatrix action;  // row i is the image of basis vector i
};

// An overlattice together with its basis in the coordinates of the original
// lattice: basis / denom.
struct Overlattice {
    Lattice lattice;
    IntMatrix basis;
    Int denom = 1;
};

namespace detail {

inline Int commonDenominator(const std::vector<RatVec>& vs) {
    Int N = 1;
    for (const auto& v : vs)
        for (const auto& x : v) mpz_lcm(N.get_mpz_t(), N.get_mpz_t(), x.get_den().get_mpz_t());
    return N;
}

// L + span(extra), where extra are rational vectors in L (x) Q.
inline Overlattice overlattice(const IntMatrix& gram, const std::vector<RatVec>& extra, bool requireEven) {
    const std::size_t n = gram.rows;
    Int N = commonDenominator(extra);
    IntMatrix gens = scaled(IntMatrix::identity(n), N);
    for (const auto& v : extra) {
        IntVec r(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rat t = v[i] * N;
            r[i] = t.get_num();
        }
        gens.appendRow(r);
    }
    Overlattice o;
    o.basis = rowSpanBasis(gens);
    o.denom = N;
    IntMatrix g = o.basis * gram * transpose(o.basis);
    Int NN = N * N;
    for (auto& x : g.a) {
        if (x % NN != 0) throw std::domain_error("overlattice is not integral");
        x /= NN;
    }
    o.lattice = fromGram(g);
    if (requireEven && !o.lattice.isEven()) throw std::domain_error("overlattice is not even");
    return o;
}

// Order of the subgroup generated by gens: prod(d) / |det(Lambda)|.
inline Int subgroupOrder(const FQF& F, const std::vector<Elem>& gens) {
    const std::size_t k = F.rank();
    if (k == 0) return 1;
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
    Int prod = 1;
    for (long d : F.orders) prod *= d;
    Int dt = det(rowSpanBasis(M));
    return prod / abs(dt);
}

}  // namespace detail

inline Int subgroupOrder(const FQF& F, const std::vector<Elem>& gens) { return detail::subgroupOrder(F, gens); }

// L_H for an isotropic subgroup H of discr L (given by generators).
inline Overlattice extendWithBasis(const Lattice& L, const FQF& F, const std::vector<Elem>& H) {
    if (!isIsotropic(F, H)) throw std::domain_error("subgroup is not isotropic");
    if (H.empty()) return {L, IntMatrix::identity(L.rank()), 1};
    std::vector<RatVec> lifts;
    for (const auto& h : H) lifts.push_back(liftOf(F, h));
    Overlattice o = detail::overlattice(L.gram, lifts, true);
    o.lattice.expr = "[" + L.expr + "]_H";
    return o;
}

inline Lattice extend(const Lattice& L, const std::vector<Elem>& H) {
    FQF F = discriminantForm(L);
    return extendWithBasis(L, F, H).lattice;
}

// Checks that the pairs span the graph of an anti-isometry between subgroups.
inline void validateGlueMap(const FQF& F1, const FQF& F2, const GlueMap& phi) {
    const auto& P = phi.pairs;
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (ratMod(qValue(F1, P[i].first) + qValue(F2, P[i].second), 2) != 0)
            throw std::domain_error("glue map does not reverse the quadratic form");
        for (std::size_t j = i + 1; j < P.size(); ++j)
            if (fracPart(bValue(F1, P[i].first, P[j].first) + bValue(F2, P[i].second, P[j].second)) != 0)
                throw std::domain_error("glue map does not reverse the bilinear form");
    }
    std::vector<Elem> xs, ys;
    for (const auto& [x, y] : P) {
        xs.push_back(x);
        ys.push_back(y);
    }
    // Order of the graph subgroup, computed in the sum presentation.
    FQF sum;
    sum.orders = F1.orders;
    sum.orders.insert(sum.orders.end(), F2.orders.begin(), F2.orders.end());
    std::vector<Elem> gs;
    for (const auto& [x, y] : P) {
        Elem g = x;
        g.insert(g.end(), y.begin(), y.end());
        gs.push_back(g);
    }
    Int h = detail::subgroupOrder(sum, gs);
    if (h != detail::subgroupOrder(F1, xs) || h != detail::subgroupOrder(F2, ys))
        throw std::domain_error("glue map is not a bijection between subgroups");
}

inline Overlattice glueWithBasis(const Lattice& L1, const FQF& F1, const Lattice& L2, const FQF& F2,
                                 const GlueMap& phi) {
    validateGlueMap(F1, F2, phi);
    IntMatrix g = blockDiag(L1.gram, L2.gram);
    std::vector<RatVec> lifts;
    for (const auto& [x, y] : phi.pairs) {
        RatVec v = F1.rank() ? liftOf(F1, x) : RatVec(L1.rank(), Rat(0));
        RatVec w = F2.rank() ? liftOf(F2, y) : RatVec(L2.rank(), Rat(0));
        v.insert(v.end(), w.begin(), w.end());
        lifts.push_back(v);
    }
    Overlattice o = lifts.empty() ? Overlattice{fromGram(g), IntMatrix::identity(g.rows), 1}
                                  : detail::overlattice(g, lifts, true);
    o.lattice.expr = L1.expr + " +_phi " + L2.expr;
    return o;
}

inline Lattice glue(const Lattice& L1, const Lattice& L2, const GlueMap& phi) {
    return glueWithBasis(L1, discriminantForm(L1), L2, discriminantForm(L2), phi).lattice;
}

// Graph of an anti-isometry given as generator images: F1 generator i maps to img[i].
inline GlueMap graphOf(const FQF& F1, const FormMap& img) {
    GlueMap g;
    for (std::size_t i = 0; i < F1.rank(); ++i) g.pairs.emplace_back(unitElem(F1, i), img[i]);
    return g;
}

inline void checkInvolution(const LatticeInvolution& inv) {
    const IntMatrix& C = inv.action;
    const IntMatrix& G = inv.lattice.gram;
    if (C * C != IntMatrix::identity(C.rows)) throw std::logic_error("action is not an involution");
    if (C * G * transpose(C) != G) throw std::logic_error("action does not preserve the form");
}

// The involution acting as +1 on L1 and -1 on L2, on the glued lattice.
inline LatticeInvolution involutionOnOverlattice(const Overlattice& o, std::size_t n1, std::size_t n2) {
    IntMatrix J = IntMatrix::identity(n1 + n2);
    for (std::size_t i = n1; i < n1 + n2; ++i) J(i, i) = -1;
    RatMatrix B = toRat(o.basis);
    RatMatrix A = B * toRat(J) * inverse(B);
    LatticeInvolution inv{o.lattice, toInt(A)};
    checkInvolution(inv);
    return inv;
}

inline LatticeInvolution glueInvolution(const Lattice& L1, const Lattice& L2, const GlueMap& phi) {
    Overlattice o = glueWithBasis(L1, discriminantForm(L1), L2, discriminantForm(L2), phi);
    return involutionOnOverlattice(o, L1.rank(), L2.rank());
}

struct Eigenlattices {
    SublatticeRef plus, minus;
};

inline Eigenlattices eigenlattices(const LatticeInvolution& inv) {
    const std::size_t n = inv.action.rows;
    IntMatrix I = IntMatrix::identity(n);
    return {{inv.lattice, integerKernel(inv.action - I)}, {inv.lattice, integerKernel(inv.action + I)}};
}

enum class TwistType { I, II };

// Type I iff x.c(x) is even for all x; symmetric since c is an isometric involution.
inline TwistType twistParity(const LatticeInvolution& inv) {
    IntMatrix T = inv.lattice.gram * transpose(inv.action);
    for (std::size_t i = 0; i < T.rows; ++i)
        if (T(i, i) % 2 != 0) return TwistType::II;
    return TwistType::I;
}

// r2(L, c): the 2-rank of L / (L+ + L-).
inline std::size_t involutionDefect(const LatticeInvolution& inv) {
    Eigenlattices e = eigenlattices(inv);
    IntMatrix S = vstack(e.plus.basis, e.minus.basis);
    if (S.rows == 0) return 0;
    Int idx = abs(det(S));
    std::size_t r = 0;
    while (idx % 2 == 0 && idx > 1) {
        idx /= 2;
        ++r;
    }
    return r;
}

}  // namespace zlat
