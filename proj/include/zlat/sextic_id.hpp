#pragma once

// From T-pairs to the topology of real Zariski sextics: oval codes with cusp
// indices, curve type, the sign o, code reversion and cubic-surface topology.

#include "zlat/classify.hpp"

namespace zlat {

enum class CurveType { I, II };

inline const char* curveTypeText(CurveType t) { return t == CurveType::I ? "I" : "II"; }

// A group of `count` ovals sharing the cusp index k: k > 0 counts outward
// cusp pairs per oval, k < 0 inward ones.
struct OvalGroup {
    int count = 0;
    int k = 0;
    friend bool operator==(const OvalGroup& a, const OvalGroup& b) { return a.count == b.count && a.k == b.k; }
};

struct CompleteCode {
    enum class Kind { Ovals, Null, ThreeNest };
    Kind kind = Kind::Ovals;
    std::vector<OvalGroup> outer;  // empty ovals outside everything
    std::optional<int> ambient;    // the non-empty oval, if any
    std::vector<OvalGroup> inner;  // empty ovals inside the ambient one

    static CompleteCode null() { return {Kind::Null, {}, {}, {}}; }
    static CompleteCode threeNest() { return {Kind::ThreeNest, {}, {}, {}}; }

    int outerCount() const {
        int n = 0;
        for (const auto& g : outer) n += g.count;
        return n;
    }
    int innerCount() const {
        int n = 0;
        for (const auto& g : inner) n += g.count;
        return n;
    }
    int ovalCount() const {
        if (kind == Kind::Null) return 0;
        if (kind == Kind::ThreeNest) return 3;
        return outerCount() + (ambient ? 1 : 0) + innerCount();
    }
    // Total number of cusp pairs, i.e. sum of |k| over ovals.
    int cuspPairs() const {
        int n = ambient ? std::abs(*ambient) : 0;
        for (const auto& g : outer) n += g.count * std::abs(g.k);
        for (const auto& g : inner) n += g.count * std::abs(g.k);
        return n;
    }
    friend bool operator==(const CompleteCode& a, const CompleteCode& b) {
        return a.kind == b.kind && a.outer == b.outer && a.ambient == b.ambient && a.inner == b.inner;
    }
    friend bool operator!=(const CompleteCode& a, const CompleteCode& b) { return !(a == b); }
};

namespace detail {

inline void normalizeGroups(std::vector<OvalGroup>& gs) {
    std::map<int, int> byK;
    for (const auto& g : gs)
        if (g.count > 0) byK[g.k] += g.count;
    gs.clear();
    for (const auto& [k, c] : byK) gs.push_back({c, k});
    std::sort(gs.begin(), gs.end(), [](const OvalGroup& a, const OvalGroup& b) {
        if (std::abs(a.k) != std::abs(b.k)) return std::abs(a.k) > std::abs(b.k);
        return a.k > b.k;
    });
}

}  // namespace detail

// Merges equal indices, orders groups by |k| descending, and turns an
// ambient oval without inner ovals into an ordinary empty oval.
inline CompleteCode normalized(CompleteCode c) {
    if (c.kind != CompleteCode::Kind::Ovals) return c;
    detail::normalizeGroups(c.inner);
    if (c.ambient && c.inner.empty()) {
        c.outer.push_back({1, *c.ambient});
        c.ambient.reset();
    }
    detail::normalizeGroups(c.outer);
    return c;
}

namespace detail {

inline std::string subscript(int k, bool ascii) {
    if (ascii) return k < 0 || k > 9 ? "_{" + std::to_string(k) + "}" : "_" + std::to_string(k);
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string s = k < 0 ? "₋" : "";
    for (char ch : std::to_string(std::abs(k))) s += digits[ch - '0'];
    return s;
}

inline std::string groupsText(const std::vector<OvalGroup>& gs, bool ascii) {
    std::string s;
    for (const auto& g : gs) {
        if (!s.empty()) s += "+";
        s += std::to_string(g.count);
        if (g.k != 0) s += subscript(g.k, ascii);
    }
    return s;
}

inline std::string nested(const std::string& inside, bool ascii) {
    return ascii ? "<" + inside + ">" : "⟨" + inside + "⟩";
}

}  // namespace detail

inline std::string renderCode(const CompleteCode& code, bool ascii = false) {
    if (code.kind == CompleteCode::Kind::Null) return "0";
    if (code.kind == CompleteCode::Kind::ThreeNest) return "1" + detail::nested("1" + detail::nested("1", ascii), ascii);
    CompleteCode c = normalized(code);
    std::string s = detail::groupsText(c.outer, ascii);
    if (c.ambient) {
        if (!s.empty()) s += "+";
        s += "1";
        if (*c.ambient != 0) s += detail::subscript(*c.ambient, ascii);
        s += detail::nested(detail::groupsText(c.inner, ascii), ascii);
    }
    return s;
}

// The code with all cusp indices erased.
inline std::string renderSimpleCode(const CompleteCode& code, bool ascii = false) {
    if (code.kind != CompleteCode::Kind::Ovals) return renderCode(code, ascii);
    CompleteCode c = normalized(code);
    if (!c.ambient) return std::to_string(c.outerCount());
    std::string s = c.outerCount() ? std::to_string(c.outerCount()) + "+" : "";
    return s + "1" + detail::nested(std::to_string(c.innerCount()), ascii);
}

// ---------------------------------------------------------------------------
// Shapes from T-halves.

struct SimpleShape {
    CompleteCode::Kind kind = CompleteCode::Kind::Ovals;
    int alpha = 0;  // empty ovals outside; all ovals but one when beta = 0
    int beta = 0;   // ovals inside the non-empty one

    bool allEmpty() const { return kind == CompleteCode::Kind::Ovals && beta == 0; }
    int ovalCount() const {
        if (kind == CompleteCode::Kind::Null) return 0;
        if (kind == CompleteCode::Kind::ThreeNest) return 3;
        return alpha + 1 + beta;
    }
};

struct THalfTopology {
    int ell = 0;
    SimpleShape shape;
    CurveType type = CurveType::II;
    Sign o = Sign::Minus;
    int nuR = 0;
};

inline bool isNullCodeHalf(const THalfInvariants& t) { return isNullPair(t); }

// p = 0 gives o = - with nu_r = 3 - q; p = 1 gives o = + with nu_r = q.
// The empty code follows the same rule, aligned with the ID tables.
inline THalfTopology topologyFromTHalf(const THalfInvariants& t) {
    if (!isTHalf(t) || t.r2 > std::min(t.r, 8 - t.r))
        throw std::invalid_argument("not the smaller half of a census pair: " + t.text());
    THalfTopology top;
    top.o = t.p == 0 ? Sign::Minus : Sign::Plus;
    top.nuR = t.p == 0 ? 3 - t.q : t.q;
    if (isNullCodeHalf(t)) {
        top.ell = 0;
        top.shape.kind = CompleteCode::Kind::Null;
        top.type = CurveType::II;
        return top;
    }
    top.ell = 5 - t.r2;
    top.shape.alpha = 4 - (t.r + t.r2) / 2;
    top.shape.beta = (t.r - t.r2) / 2;
    top.type = t.delta2 == 0 ? CurveType::I : CurveType::II;
    if (top.shape.alpha == 1 && top.shape.beta == 1 && top.type == CurveType::I && top.nuR == 0)
        top.shape.kind = CompleteCode::Kind::ThreeNest;
    return top;
}

// ---------------------------------------------------------------------------
// The cusp rule engine.

namespace detail {

struct Oval {
    int depth;     // 1 or 2
    bool ambient;  // the non-empty oval
};

}  // namespace detail

// All cusp assignments with sum |k| = nuR meeting the constraints below.
// The curve type does not enter the constraints.
inline std::vector<CompleteCode> cuspDistributions(const SimpleShape& shape, int nuR, Sign o,
                                                   [[maybe_unused]] CurveType type = CurveType::II) {
    if (shape.kind == CompleteCode::Kind::Null) return nuR == 0 ? std::vector{CompleteCode::null()} : std::vector<CompleteCode>{};
    if (shape.kind == CompleteCode::Kind::ThreeNest)
        return nuR == 0 ? std::vector{CompleteCode::threeNest()} : std::vector<CompleteCode>{};
    const bool minus = o == Sign::Minus;
    const int alpha = shape.alpha, beta = shape.beta;
    std::vector<detail::Oval> ovals;
    if (beta == 0) {
        for (int i = 0; i <= alpha; ++i) ovals.push_back({1, false});
    } else {
        for (int i = 0; i < alpha; ++i) ovals.push_back({1, false});
        ovals.push_back({1, true});
        for (int i = 0; i < beta; ++i) ovals.push_back({2, false});
    }
    const std::size_t n = ovals.size();
    // depth 1 carries outward cusps iff o = -, depth 2 the opposite direction
    auto signAt = [&](int depth) { return (depth == 1) == minus ? 1 : -1; };
    auto inside = [&](std::size_t a, std::size_t b) {  // a lies inside b
        return ovals[b].ambient && ovals[a].depth == 2;
    };
    const int h = minus ? nuR + beta - alpha - 1 : nuR + alpha - beta;
    const int lowDepth = minus ? 1 : 2;  // depth of the ovals bounding the minus half

    std::vector<CompleteCode> out;
    std::vector<int> k(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == n) {
            if (left != 0) return;
            int inward = 0;
            for (std::size_t a = 0; a < n; ++a) inward += k[a] < 0;
            if (inward > 1) return;
            for (std::size_t a = 0; a < n; ++a) {
                if (k[a] < 0)
                    for (std::size_t b = 0; b < n; ++b)
                        if (b != a && !inside(b, a) && !inside(a, b) && k[b] != 0) return;
                if (k[a] > 0)
                    for (std::size_t b = 0; b < n; ++b)
                        if (inside(b, a) && k[b] != 0) return;
                if (beta > 0 && !ovals[a].ambient && (k[a] < 0 || std::abs(k[a]) > 1)) return;
            }
            int smoothLow = 0;
            for (std::size_t a = 0; a < n; ++a) smoothLow += !ovals[a].ambient && ovals[a].depth == lowDepth && k[a] == 0;
            if (smoothLow > 1 || (smoothLow == 1 && h != -1)) return;
            if (beta == 0 && minus) {
                int smooth = 0, ones = 0;
                for (int x : k) {
                    smooth += x == 0;
                    ones += x == 1;
                }
                bool allCusped = smooth == 0;
                bool oneSmooth = smooth == 1 && ones == static_cast<int>(n) - 1;
                if (!allCusped && !oneSmooth) return;
            }
            CompleteCode c;
            for (std::size_t a = 0; a < n; ++a) {
                if (ovals[a].ambient) c.ambient = k[a];
                else if (ovals[a].depth == 1) c.outer.push_back({1, k[a]});
                else c.inner.push_back({1, k[a]});
            }
            c = normalized(c);
            if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
            return;
        }
        for (int j = 0; j <= std::min(3, left); ++j) {
            k[i] = j * signAt(ovals[i].depth);
            rec(i + 1, left - j);
        }
        k[i] = 0;
    };
    rec(0, nuR);
    return out;
}

// ---------------------------------------------------------------------------
// Reversion of codes.

// alpha_k + 1_m<beta_n> -> beta_n + 1_{-m}<alpha_k>; for codes of empty ovals
// the new ambient oval is a smooth one (or the most cusped one) when the
// cusps point outward, and the cusped one otherwise.
inline CompleteCode reversionCode(const CompleteCode& code) {
    if (code.kind == CompleteCode::Kind::Null) throw std::invalid_argument("the empty code has no reversion");
    if (code.kind == CompleteCode::Kind::ThreeNest) return code;
    CompleteCode c = normalized(code);
    CompleteCode r;
    if (c.ambient) {
        r.outer = c.inner;
        r.ambient = -*c.ambient;
        r.inner = c.outer;
        return normalized(r);
    }
    std::vector<int> ks;
    for (const auto& g : c.outer)
        for (int i = 0; i < g.count; ++i) ks.push_back(g.k);
    if (ks.empty()) throw std::invalid_argument("code without ovals");
    bool positive = std::any_of(ks.begin(), ks.end(), [](int x) { return x > 0; });
    std::size_t pick = 0;
    if (positive) {
        auto smooth = std::find(ks.begin(), ks.end(), 0);
        pick = smooth != ks.end() ? static_cast<std::size_t>(smooth - ks.begin())
                                  : static_cast<std::size_t>(std::max_element(ks.begin(), ks.end()) - ks.begin());
    } else {
        auto cusped = std::find_if(ks.begin(), ks.end(), [](int x) { return x != 0; });
        pick = cusped != ks.end() ? static_cast<std::size_t>(cusped - ks.begin()) : 0;
    }
    r.ambient = -ks[pick];
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (i != pick) r.inner.push_back({1, ks[i]});
    return normalized(r);
}

// ---------------------------------------------------------------------------
// IDs.

struct SexticID {
    CompleteCode code;
    CurveType type = CurveType::II;
    Sign o = Sign::Minus;
    int nuR = 0;
    friend bool operator==(const SexticID& a, const SexticID& b) {
        return a.code == b.code && a.type == b.type && a.o == b.o && a.nuR == b.nuR;
    }
};

struct AmbiguousID : std::runtime_error {
    std::vector<CompleteCode> candidates;
    AmbiguousID(const std::string& what, std::vector<CompleteCode> c) : std::runtime_error(what), candidates(std::move(c)) {}
};

inline std::vector<CompleteCode> candidateCodes(const THalfInvariants& tPlus) {
    THalfTopology top = topologyFromTHalf(tPlus);
    return cuspDistributions(top.shape, top.nuR, top.o, top.type);
}

// ID of the pair with smaller half tPlus. An ambiguous engine result is
// resolved through the reversion partner when that side is unambiguous.
inline SexticID idFromInvariants(const THalfInvariants& tPlus, bool reversible) {
    THalfTopology top = topologyFromTHalf(tPlus);
    auto cands = cuspDistributions(top.shape, top.nuR, top.o, top.type);
    SexticID id{{}, top.type, top.o, top.nuR};
    if (cands.size() == 1) {
        id.code = cands.front();
        return id;
    }
    std::string list;
    for (const auto& c : cands) list += (list.empty() ? "" : ", ") + renderCode(c, true);
    if (reversible) {
        auto other = candidateCodes(partnerInvariants(tPlus));
        if (other.size() == 1) {
            CompleteCode moved = reversionCode(other.front());
            if (std::find(cands.begin(), cands.end(), moved) != cands.end()) {
                id.code = moved;
                return id;
            }
        }
    }
    throw AmbiguousID("ambiguous complete code for " + tPlus.text() + ": {" + list + "}", cands);
}

inline SexticID idFromTPair(const TPair& pair) {
    bool reversible = findReversionRoot(pair.tMinus, pair.tPlus.inv.delta2 == 0).has_value();
    return idFromInvariants(pair.tPlus.inv, reversible);
}

// ---------------------------------------------------------------------------
// Cubic surfaces.

// Euler characteristics of the union of even-depth regions (exterior
// included) and of odd-depth regions of the projective plane.
struct RegionChi {
    int even = 1, odd = 0;
};

inline RegionChi regionChi(const CompleteCode& code) {
    switch (code.kind) {
        case CompleteCode::Kind::Null: return {1, 0};
        case CompleteCode::Kind::ThreeNest: return {0, 1};
        default: break;
    }
    CompleteCode c = normalized(code);
    if (!c.ambient) return {1 - c.outerCount(), c.outerCount()};
    const int alpha = c.outerCount(), beta = c.innerCount();
    return {1 - (alpha + 1) + beta, alpha + 1 - beta};
}

struct CubicTopology {
    int chi = 1;
    int handles = 0;  // chi = 1 - 2 handles
};

inline CubicTopology cubicTopology(const SexticID& id, int nuR) {
    RegionChi r = regionChi(id.code);
    int chi = id.o == Sign::Plus ? 3 * r.even + r.odd - 2 * nuR : 3 * r.odd + r.even - 2 * nuR;
    return {chi, (1 - chi) / 2};
}

inline CubicTopology cubicTopology(const SexticID& id) { return cubicTopology(id, id.nuR); }

}  // namespace zlat
