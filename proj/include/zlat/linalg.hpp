#pragma once

// Exact integer and rational matrices: Smith and Hermite normal forms,
// integer kernels, saturation, determinants and inertia.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zlat {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <class T>
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<long>> init) {
        rows = init.size();
        cols = rows ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols) throw std::invalid_argument("ragged matrix literal");
            for (long x : row) a.emplace_back(x);
        }
    }

    T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
    }
    void setRow(std::size_t i, const std::vector<T>& v) {
        for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = v[j];
    }
    void appendRow(const std::vector<T>& v) {
        if (rows == 0 && cols == 0) cols = v.size();
        if (v.size() != cols) throw std::invalid_argument("row length mismatch");
        a.insert(a.end(), v.begin(), v.end());
        ++rows;
    }
    void swapRows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swapCols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row_i += f * row_j
    void addRow(std::size_t i, std::size_t j, const T& f) {
        if (f == 0) return;
        for (std::size_t k = 0; k < cols; ++k) (*this)(i, k) += f * (*this)(j, k);
    }
    void addCol(std::size_t i, std::size_t j, const T& f) {
        if (f == 0) return;
        for (std::size_t k = 0; k < rows; ++k) (*this)(k, i) += f * (*this)(k, j);
    }
    void negateRow(std::size_t i) {
        for (std::size_t k = 0; k < cols; ++k) (*this)(i, k) = -(*this)(i, k);
    }
    void negateCol(std::size_t j) {
        for (std::size_t k = 0; k < rows; ++k) (*this)(k, j) = -(*this)(k, j);
    }

    bool isZero() const {
        return std::all_of(a.begin(), a.end(), [](const T& x) { return x == 0; });
    }
    bool isSquare() const { return rows == cols; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> operator*(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix<T> z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const T& xik = x(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix sum: dimension mismatch");
    Matrix<T> z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix difference: dimension mismatch");
    Matrix<T> z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

template <class T>
Matrix<T> scaled(const Matrix<T>& x, const T& s) {
    Matrix<T> z = x;
    for (auto& e : z.a) e *= s;
    return z;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& x) {
    Matrix<T> z(x.cols, x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) z(j, i) = x(i, j);
    return z;
}

template <class T>
std::vector<T> mulVec(const Matrix<T>& m, const std::vector<T>& v) {
    if (m.cols != v.size()) throw std::invalid_argument("matrix-vector: dimension mismatch");
    std::vector<T> out(m.rows, T(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
    return out;
}

// v^T * m
template <class T>
std::vector<T> vecMul(const std::vector<T>& v, const Matrix<T>& m) {
    if (m.rows != v.size()) throw std::invalid_argument("vector-matrix: dimension mismatch");
    std::vector<T> out(m.cols, T(0));
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols; ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

// x^T G y
template <class T>
T bilinear(const std::vector<T>& x, const Matrix<T>& g, const std::vector<T>& y) {
    T s = 0;
    for (std::size_t i = 0; i < g.rows; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < g.cols; ++j) s += x[i] * g(i, j) * y[j];
    }
    return s;
}

// Block diagonal sum; either block may be 0x0.
template <class T>
Matrix<T> blockDiag(const Matrix<T>& x, const Matrix<T>& y) {
    Matrix<T> z(x.rows + y.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) z(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows; ++i)
        for (std::size_t j = 0; j < y.cols; ++j) z(x.rows + i, x.cols + j) = y(i, j);
    return z;
}

// Rows of x followed by rows of y.
template <class T>
Matrix<T> vstack(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.rows == 0) return y;
    if (y.rows == 0) return x;
    if (x.cols != y.cols) throw std::invalid_argument("vstack: column mismatch");
    Matrix<T> z = x;
    z.a.insert(z.a.end(), y.a.begin(), y.a.end());
    z.rows += y.rows;
    return z;
}

inline RatMatrix toRat(const IntMatrix& m) {
    RatMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
}

// Throws unless every entry is an integer.
inline IntMatrix toInt(const RatMatrix& m) {
    IntMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        if (m.a[i].get_den() != 1) throw std::domain_error("non-integral entry");
        r.a[i] = m.a[i].get_num();
    }
    return r;
}

template <class T>
std::string toString(const Matrix<T>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols; ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    return os << toString(m);
}

inline Int floorDiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int modPos(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Fractional part in [0,1).
inline Rat fracPart(const Rat& x) {
    Int fl = floorDiv(x.get_num(), x.get_den());
    Rat r = x - Rat(fl);
    r.canonicalize();
    return r;
}

// Residue of x in [0, m) for a positive integer modulus m.
inline Rat ratMod(const Rat& x, long m) {
    Rat y = x / m;
    return fracPart(y) * m;
}

// Determinant by fraction-free (Bareiss) elimination.
inline Int det(const IntMatrix& m) {
    if (!m.isSquare()) throw std::invalid_argument("det: non-square matrix");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swapRows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// Inverse over Q by Gauss-Jordan; throws on singular input.
inline RatMatrix inverse(const RatMatrix& m) {
    if (!m.isSquare()) throw std::invalid_argument("inverse: non-square matrix");
    std::size_t n = m.rows;
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw std::domain_error("inverse: singular matrix");
        a.swapRows(c, p);
        inv.swapRows(c, p);
        Rat piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = -a(i, c);
            a.addRow(i, c, f);
            inv.addRow(i, c, f);
        }
    }
    return inv;
}

inline RatMatrix inverse(const IntMatrix& m) { return inverse(toRat(m)); }

struct SmithResult {
    IntMatrix U, D, V;  // U*M*V = D
    IntMatrix Vinv;     // V^{-1}, tracked alongside V
    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        for (std::size_t i = 0; i < std::min(D.rows, D.cols); ++i) d.push_back(D(i, i));
        return d;
    }
};

inline SmithResult smithNormalForm(const IntMatrix& M) {
    SmithResult s;
    s.D = M;
    s.U = IntMatrix::identity(M.rows);
    s.V = IntMatrix::identity(M.cols);
    s.Vinv = IntMatrix::identity(M.cols);
    IntMatrix& D = s.D;
    const std::size_t n = std::min(M.rows, M.cols);

    // Column op col_i += f*col_j on D and V is row op row_j -= f*row_i on V^{-1}.
    auto colAdd = [&](std::size_t i, std::size_t j, const Int& f) {
        D.addCol(i, j, f);
        s.V.addCol(i, j, f);
        s.Vinv.addRow(j, i, -f);
    };
    auto colSwap = [&](std::size_t i, std::size_t j) {
        D.swapCols(i, j);
        s.V.swapCols(i, j);
        s.Vinv.swapRows(i, j);
    };
    auto rowAdd = [&](std::size_t i, std::size_t j, const Int& f) {
        D.addRow(i, j, f);
        s.U.addRow(i, j, f);
    };
    auto rowSwap = [&](std::size_t i, std::size_t j) {
        D.swapRows(i, j);
        s.U.swapRows(i, j);
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = D.rows, pj = D.cols;
            for (std::size_t i = t; i < D.rows; ++i)
                for (std::size_t j = t; j < D.cols; ++j)
                    if (D(i, j) != 0 && (pi == D.rows || abs(D(i, j)) < abs(D(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == D.rows) return s;  // trailing block is zero
            rowSwap(t, pi);
            colSwap(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < D.rows; ++i) {
                if (D(i, t) == 0) continue;
                Int q = floorDiv(D(i, t), D(t, t));
                rowAdd(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < D.cols; ++j) {
                if (D(t, j) == 0) continue;
                Int q = floorDiv(D(t, j), D(t, t));
                colAdd(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility chain: fold an offending row into the pivot row.
            std::size_t bad = D.rows;
            for (std::size_t i = t + 1; i < D.rows && bad == D.rows; ++i)
                for (std::size_t j = t + 1; j < D.cols; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == D.rows) break;
            rowAdd(t, bad, Int(1));
        }
        if (D(t, t) < 0) {
            D.negateRow(t);
            s.U.negateRow(t);
        }
    }
    return s;
}

struct HermiteResult {
    IntMatrix H;  // U*M = H
    IntMatrix U;
    std::size_t rank = 0;
};

// Row-style HNF: pivots positive, entries above a pivot reduced into [0, pivot),
// zero rows at the bottom.
inline HermiteResult hermiteWithTransform(const IntMatrix& M) {
    HermiteResult h;
    h.H = M;
    h.U = IntMatrix::identity(M.rows);
    IntMatrix& H = h.H;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < H.cols && pr < H.rows; ++c) {
        for (;;) {
            std::size_t best = H.rows;
            for (std::size_t i = pr; i < H.rows; ++i)
                if (H(i, c) != 0 && (best == H.rows || abs(H(i, c)) < abs(H(best, c)))) best = i;
            if (best == H.rows) break;
            H.swapRows(pr, best);
            h.U.swapRows(pr, best);
            bool done = true;
            for (std::size_t i = pr + 1; i < H.rows; ++i) {
                if (H(i, c) == 0) continue;
                Int q = floorDiv(H(i, c), H(pr, c));
                H.addRow(i, pr, -q);
                h.U.addRow(i, pr, -q);
                if (H(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (H(pr, c) == 0) continue;
        if (H(pr, c) < 0) {
            H.negateRow(pr);
            h.U.negateRow(pr);
        }
        for (std::size_t i = 0; i < pr; ++i) {
            Int q = floorDiv(H(i, c), H(pr, c));
            H.addRow(i, pr, -q);
            h.U.addRow(i, pr, -q);
        }
        ++pr;
    }
    h.rank = pr;
    return h;
}

inline IntMatrix hermiteNormalForm(const IntMatrix& M) { return hermiteWithTransform(M).H; }

// Nonzero rows of the HNF: a canonical basis of the row span.
inline IntMatrix rowSpanBasis(const IntMatrix& M) {
    HermiteResult h = hermiteWithTransform(M);
    IntMatrix B(h.rank, M.cols);
    for (std::size_t i = 0; i < h.rank; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) B(i, j) = h.H(i, j);
    return B;
}

// Saturation of the row span; rows must be independent.
inline IntMatrix saturate(const IntMatrix& B) {
    if (B.rows == 0) return B;
    SmithResult s = smithNormalForm(B);
    for (std::size_t i = 0; i < B.rows; ++i)
        if (i >= s.D.cols || s.D(i, i) == 0) throw std::domain_error("rank deficient");
    // B = U^{-1} D V^{-1}: the first k rows of V^{-1} span the saturation.
    IntMatrix W(B.rows, B.cols);
    for (std::size_t i = 0; i < B.rows; ++i)
        for (std::size_t j = 0; j < B.cols; ++j) W(i, j) = s.Vinv(i, j);
    return rowSpanBasis(W);
}

// Basis of {x in Z^n : x M = 0}, in HNF; saturated by construction.
inline IntMatrix integerKernel(const IntMatrix& M) {
    HermiteResult h = hermiteWithTransform(M);
    IntMatrix K(M.rows - h.rank, M.rows);
    for (std::size_t i = h.rank; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.rows; ++j) K(i - h.rank, j) = h.U(i, j);
    return rowSpanBasis(K);
}

inline std::size_t rankOf(const IntMatrix& M) { return hermiteWithTransform(M).rank; }

// Characteristic polynomial det(xI - G), coefficients c[0..n] with c[n] = 1.
inline std::vector<Int> charPoly(const IntMatrix& G) {
    if (!G.isSquare()) throw std::invalid_argument("charPoly: non-square matrix");
    const std::size_t n = G.rows;
    std::vector<Int> c(n + 1);
    c[n] = 1;
    // Faddeev-LeVerrier; every division below is exact over Z.
    IntMatrix Mk = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix AM = G * Mk;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
        Int ck = -tr;
        mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = ck;
        Mk = AM;
        for (std::size_t i = 0; i < n; ++i) Mk(i, i) += ck;
    }
    return c;
}

struct Inertia {
    std::size_t nPlus = 0, nZero = 0, nMinus = 0;
    friend bool operator==(const Inertia& a, const Inertia& b) {
        return a.nPlus == b.nPlus && a.nZero == b.nZero && a.nMinus == b.nMinus;
    }
};

// Exact for symmetric input: all roots are real, so Descartes' rule is sharp.
inline Inertia inertia(const IntMatrix& G) {
    std::vector<Int> c = charPoly(G);
    Inertia r;
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    r.nZero = low;
    auto signChanges = [&](bool negate) {
        std::size_t changes = 0;
        int last = 0;
        for (std::size_t i = low; i < c.size(); ++i) {
            int s = sgn(c[i]);
            if (s == 0) continue;
            if (negate && (i % 2 == 1)) s = -s;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    };
    r.nPlus = signChanges(false);
    r.nMinus = signChanges(true);
    return r;
}

}  // namespace zlat
