#pragma once

// Integral lattices given by Gram matrices, the named-lattice catalog,
// the expression language and structural constructions.

#include "zlat/linalg.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace zlat {

struct Lattice {
    IntMatrix gram;
    std::vector<std::string> labels;  // optional, one per basis vector
    std::string expr;                 // presentation, informational only

    std::size_t rank() const { return gram.rows; }
    Int det() const { return zlat::det(gram); }
    bool isEven() const {
        for (std::size_t i = 0; i < gram.rows; ++i)
            if (gram(i, i) % 2 != 0) return false;
        return true;
    }
    bool isSymmetric() const { return gram == transpose(gram); }
    Int dot(const IntVec& x, const IntVec& y) const { return bilinear(x, gram, y); }
    Int norm(const IntVec& x) const { return dot(x, x); }
};

inline Lattice fromGram(IntMatrix g, std::string expr = {}) {
    if (!g.isSquare()) throw std::invalid_argument("Gram matrix must be square");
    Lattice l;
    l.gram = std::move(g);
    if (!l.isSymmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
    l.expr = std::move(expr);
    return l;
}

inline Lattice emptyLattice() { return fromGram(IntMatrix(0, 0), "0"); }

inline Lattice directSum(const Lattice& a, const Lattice& b) {
    Lattice s;
    s.gram = blockDiag(a.gram, b.gram);
    s.labels = a.labels;
    s.labels.insert(s.labels.end(), b.labels.begin(), b.labels.end());
    if (a.rank() == 0) s.expr = b.expr;
    else if (b.rank() == 0) s.expr = a.expr;
    else s.expr = a.expr + "+" + b.expr;
    return s;
}

inline Lattice rescale(const Lattice& l, long n) {
    if (n == 0) throw std::invalid_argument("rescale by zero");
    Lattice s = l;
    s.gram = scaled(l.gram, Int(n));
    s.expr = n == 1 ? l.expr : "(" + l.expr + ")(" + std::to_string(n) + ")";
    return s;
}

namespace detail {

inline Lattice dynkin(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                      const std::string& name) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
    for (auto [i, j] : edges) {
        g(i, j) = 1;
        g(j, i) = 1;
    }
    Lattice l = fromGram(g, name);
    for (std::size_t i = 0; i < n; ++i) l.labels.push_back(name + ".e" + std::to_string(i + 1));
    return l;
}

inline std::vector<std::pair<std::size_t, std::size_t>> chain(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return e;
}

}  // namespace detail

inline Lattice latticeU() {
    Lattice l = fromGram(IntMatrix{{0, 1}, {1, 0}}, "U");
    l.labels = {"U.e", "U.f"};
    return l;
}

inline Lattice latticeA(long n) {
    if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
    return detail::dynkin(n, detail::chain(n), "A" + std::to_string(n));
}

// Chain 1..n-1 with node n attached to node n-2.
inline Lattice latticeD(long n) {
    if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
    auto e = detail::chain(n - 1);
    e.emplace_back(n - 3, n - 1);
    return detail::dynkin(n, e, "D" + std::to_string(n));
}

// Chain 1..n-1 with node n attached to node 3.
inline Lattice latticeE(long n) {
    if (n < 6 || n > 8) throw std::invalid_argument("E_n requires n in {6,7,8}");
    auto e = detail::chain(n - 1);
    e.emplace_back(2, n - 1);
    return detail::dynkin(n, e, "E" + std::to_string(n));
}

inline Lattice latticeDiag(long n) {
    if (n == 0) throw std::invalid_argument("<0> is degenerate");
    Lattice l = fromGram(IntMatrix{{n}}, "<" + std::to_string(n) + ">");
    l.labels = {l.expr + ".e"};
    return l;
}

// ---------------------------------------------------------------------------
// Expression language:
//   expr := term ('+' term)* ; term := [UINT] atom ['(' INT ')']
//   atom := 'U' | 'A'UINT | 'D'UINT | 'E'UINT | '<' INT '>'
// Whitespace between tokens is ignored.

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
};

// One summand: multiplicity, atom, scale.
struct ExprTerm {
    long count = 1;
    char kind = 'U';  // 'U', 'A', 'D', 'E', '<'
    long index = 0;   // n for A/D/E, value for <n>
    long scale = 1;

    std::string atomText() const {
        switch (kind) {
            case 'U': return "U";
            case '<': return "<" + std::to_string(index) + ">";
            default: return std::string(1, kind) + std::to_string(index);
        }
    }
    std::string text() const {
        std::string s = (count > 1 ? std::to_string(count) : "") + atomText();
        if (scale != 1) s += "(" + std::to_string(scale) + ")";
        return s;
    }
    Lattice atomLattice() const {
        switch (kind) {
            case 'U': return latticeU();
            case 'A': return latticeA(index);
            case 'D': return latticeD(index);
            case 'E': return latticeE(index);
            default: return latticeDiag(index);
        }
    }
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    std::vector<ExprTerm> parse() {
        std::vector<ExprTerm> terms;
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
        terms.push_back(term());
        skip();
        while (pos_ < s_.size()) {
            if (s_[pos_] != '+') throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
            ++pos_;
            skip();
            terms.push_back(term());
            skip();
        }
        return terms;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool digitAt() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

    long uint() {
        std::size_t start = pos_;
        if (!digitAt()) throw ParseError("expected unsigned integer", pos_);
        long v = 0;
        while (digitAt()) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) throw ParseError("integer too large", start);
            ++pos_;
        }
        return v;
    }
    long sint() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        long v = uint();
        return neg ? -v : v;
    }
    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    ExprTerm term() {
        ExprTerm t;
        std::size_t start = pos_;
        if (digitAt()) {
            t.count = uint();
            if (t.count == 0) throw ParseError("multiplicity must be positive", start);
            skip();
        }
        if (pos_ >= s_.size()) throw ParseError("expected lattice atom", pos_);
        std::size_t atomPos = pos_;
        char c = s_[pos_];
        if (c == 'U') {
            t.kind = 'U';
            ++pos_;
        } else if (c == 'A' || c == 'D' || c == 'E') {
            t.kind = c;
            ++pos_;
            t.index = uint();
            if (c == 'A' && t.index < 1) throw ParseError("A_n requires n >= 1", atomPos);
            if (c == 'D' && t.index < 4) throw ParseError("D_n requires n >= 4", atomPos);
            if (c == 'E' && (t.index < 6 || t.index > 8)) throw ParseError("E_n requires n in {6,7,8}", atomPos);
        } else if (c == '<') {
            t.kind = '<';
            ++pos_;
            t.index = sint();
            if (t.index == 0) throw ParseError("<0> is degenerate", atomPos);
            expect('>');
        } else {
            throw ParseError(std::string("unknown lattice name starting with '") + c + "'", atomPos);
        }
        std::size_t save = pos_;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            std::size_t scalePos = pos_;
            ++pos_;
            t.scale = sint();
            if (t.scale == 0) throw ParseError("scale must be nonzero", scalePos);
            expect(')');
        } else {
            pos_ = save;
        }
        return t;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline std::vector<ExprTerm> parseTerms(const std::string& text) { return detail::ExprParser(text).parse(); }

inline std::string renderTerms(const std::vector<ExprTerm>& terms) {
    std::string s;
    for (const auto& t : terms) s += (s.empty() ? "" : "+") + t.text();
    return s;
}

// "nL" expands eagerly into n summands.
inline Lattice evaluateTerms(const std::vector<ExprTerm>& terms) {
    Lattice l = emptyLattice();
    for (const auto& t : terms) {
        Lattice atom = t.atomLattice();
        if (t.scale != 1) atom.gram = scaled(atom.gram, Int(t.scale));
        ExprTerm single = t;
        single.count = 1;
        atom.expr = single.text();
        for (long i = 0; i < t.count; ++i) l = directSum(l, atom);
    }
    l.expr = renderTerms(terms);
    return l;
}

inline Lattice parseLatticeExpr(const std::string& text) { return evaluateTerms(parseTerms(text)); }

inline Lattice named(const std::string& name) {
    std::vector<ExprTerm> t = parseTerms(name);
    if (t.size() != 1 || t[0].count != 1 || t[0].scale != 1) throw std::invalid_argument("not a catalog name: " + name);
    return evaluateTerms(t);
}

// ---------------------------------------------------------------------------
// Sublattices and constructions.

struct SublatticeRef {
    Lattice ambient;
    IntMatrix basis;  // rows: coordinates in the ambient basis

    Lattice induced() const {
        Lattice l;
        l.gram = basis * ambient.gram * transpose(basis);
        return l;
    }
};

// [L]_{v/d}: adjoin v/d, Gram recomputed on the HNF basis of L + Z v/d.
inline Lattice extensionByFraction(const Lattice& L, const IntVec& v, long d, bool requireEven = true) {
    if (d < 2) throw std::invalid_argument("extension requires d >= 2");
    const std::size_t n = L.rank();
    if (v.size() != n) throw std::invalid_argument("vector length mismatch");
    bool divisible = std::all_of(v.begin(), v.end(), [&](const Int& x) { return x % d == 0; });
    if (divisible) throw std::domain_error("v is divisible by d");
    IntVec gv = mulVec(L.gram, v);
    for (const auto& x : gv)
        if (x % d != 0) throw std::domain_error("v.x is not divisible by d for some x in L");
    Int vv = L.norm(v);
    Int dd = Int(d) * d;
    if (vv % dd != 0) throw std::domain_error("v^2 is not divisible by d^2");
    if (requireEven && vv % (2 * dd) != 0) throw std::domain_error("v^2 is not divisible by 2d^2");
    IntMatrix gens = scaled(IntMatrix::identity(n), Int(d));
    gens.appendRow(v);
    IntMatrix B = rowSpanBasis(gens);
    IntMatrix g = B * L.gram * transpose(B);
    for (auto& x : g.a) {
        if (x % dd != 0) throw std::logic_error("extension Gram not integral");
        x /= dd;
    }
    Lattice out = fromGram(g, "[" + L.expr + "]_{v/" + std::to_string(d) + "}");
    return out;
}

inline SublatticeRef primitiveClosure(const SublatticeRef& sub) { return {sub.ambient, saturate(sub.basis)}; }

inline SublatticeRef orthogonalComplement(const SublatticeRef& sub) {
    const std::size_t n = sub.ambient.rank();
    if (sub.basis.rows == 0) return {sub.ambient, IntMatrix::identity(n)};
    return {sub.ambient, integerKernel(sub.ambient.gram * transpose(sub.basis))};
}

inline bool isDivisibleBy(const Lattice& L, long p) {
    for (const auto& x : L.gram.a)
        if (x % p != 0) return false;
    return true;
}

// L(1/p); the result may be odd.
inline Lattice divide(const Lattice& L, long p) {
    if (!isDivisibleBy(L, p)) throw std::domain_error("lattice not divisible by " + std::to_string(p));
    Lattice s = L;
    for (auto& x : s.gram.a) x /= p;
    s.expr = "(" + L.expr + ")(1/" + std::to_string(p) + ")";
    return s;
}

struct Signature {
    std::size_t nPlus = 0, nMinus = 0;
};

inline Signature signature(const Lattice& L) {
    Inertia in = inertia(L.gram);
    if (in.nZero != 0) throw std::domain_error("degenerate lattice");
    return {in.nPlus, in.nMinus};
}

inline long signatureIndex(const Lattice& L) {
    Signature s = signature(L);
    return static_cast<long>(s.nPlus) - static_cast<long>(s.nMinus);
}

enum class HyperbolicBranch { None, Strict, DefiniteAbuse };

struct HyperbolicVerdict {
    bool hyperbolic = false;
    HyperbolicBranch branch = HyperbolicBranch::None;
};

// Positive inertia index 1. When the negative index is 0 as well the lattice
// is rank one positive; that reading is accepted and flagged.
inline HyperbolicVerdict hyperbolicVerdict(const Lattice& L) {
    Signature s = signature(L);
    if (s.nPlus != 1) return {};
    return {true, s.nMinus > 0 ? HyperbolicBranch::Strict : HyperbolicBranch::DefiniteAbuse};
}

inline bool isHyperbolic(const Lattice& L) { return hyperbolicVerdict(L).hyperbolic; }

}  // namespace zlat
