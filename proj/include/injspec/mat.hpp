#ifndef INJSPEC_MAT_HPP
#define INJSPEC_MAT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "injspec/common.hpp"
#include "injspec/field.hpp"

namespace injspec {

using Vec = std::vector<std::uint32_t>;

// Dense matrix over GF(p), row-major, canonical entries 0..p-1.
// Zero-dimensional shapes (0xn, nx0, 0x0) are legal everywhere.
struct Mat {
    std::uint32_t p = 2;
    int rows = 0, cols = 0;
    std::vector<std::uint32_t> a;

    Mat() = default;
    Mat(std::uint32_t p_, int r, int c) : p(p_), rows(r), cols(c), a(std::size_t(r) * c, 0) {
        check_prime_field(p_);
        if (r < 0 || c < 0) throw invariant_violation("negative matrix dimension");
    }

    static Mat zero(std::uint32_t p, int r, int c) { return Mat(p, r, c); }

    static Mat identity(std::uint32_t p, int n) {
        Mat m(p, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
        return m;
    }

    static Mat from_rows(std::uint32_t p, const std::vector<Vec>& rows_in, int c) {
        Mat m(p, int(rows_in.size()), c);
        for (int i = 0; i < m.rows; ++i) {
            if (int(rows_in[i].size()) != c) throw invariant_violation("row length mismatch");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows_in[i][j] % p;
        }
        return m;
    }

    std::uint32_t& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
    std::uint32_t at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

    Vec row(int i) const { return Vec(a.begin() + std::size_t(i) * cols, a.begin() + std::size_t(i + 1) * cols); }
    Vec col(int j) const {
        Vec v(rows);
        for (int i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }

    bool is_zero() const {
        return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
    }

    bool operator==(const Mat& o) const { return p == o.p && rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool operator<(const Mat& o) const {
        if (rows != o.rows) return rows < o.rows;
        if (cols != o.cols) return cols < o.cols;
        return a < o.a;
    }
};

inline void check_same_field(const Mat& x, const Mat& y) {
    if (x.p != y.p) throw invariant_violation("matrix field mismatch");
}

inline Mat operator+(const Mat& x, const Mat& y) {
    check_same_field(x, y);
    if (x.rows != y.rows || x.cols != y.cols) throw invariant_violation("matrix shape mismatch in +");
    Mat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = fadd(r.a[i], y.a[i], r.p);
    return r;
}

inline Mat operator-(const Mat& x, const Mat& y) {
    check_same_field(x, y);
    if (x.rows != y.rows || x.cols != y.cols) throw invariant_violation("matrix shape mismatch in -");
    Mat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = fsub(r.a[i], y.a[i], r.p);
    return r;
}

inline Mat operator*(const Mat& x, const Mat& y) {
    check_same_field(x, y);
    if (x.cols != y.rows) throw invariant_violation("matrix shape mismatch in *");
    Mat r(x.p, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            std::uint32_t xv = x.at(i, k);
            if (!xv) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = fadd(r.at(i, j), fmul(xv, y.at(k, j), r.p), r.p);
        }
    return r;
}

inline Mat scale(const Mat& x, std::uint32_t c) {
    Mat r = x;
    for (auto& v : r.a) v = fmul(v, c, r.p);
    return r;
}

inline Vec operator*(const Mat& m, const Vec& v) {
    if (int(v.size()) != m.cols) throw invariant_violation("vector length mismatch in apply");
    Vec r(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r[i] = fadd(r[i], fmul(m.at(i, j), v[j], m.p), m.p);
    return r;
}

inline Mat transpose(const Mat& m) {
    Mat r(m.p, m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

inline Mat hstack(const Mat& x, const Mat& y) {
    check_same_field(x, y);
    if (x.rows != y.rows) throw invariant_violation("hstack row mismatch");
    Mat r(x.p, x.rows, x.cols + y.cols);
    for (int i = 0; i < r.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

inline Mat vstack(const Mat& x, const Mat& y) {
    check_same_field(x, y);
    if (x.cols != y.cols) throw invariant_violation("vstack col mismatch");
    Mat r(x.p, x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

// Block-diagonal direct sum.
inline Mat diag_sum(const Mat& x, const Mat& y) {
    check_same_field(x, y);
    Mat r(x.p, x.rows + y.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
    return r;
}

// Reduced row-echelon form: pivot entries 1, pivot columns cleared,
// zero rows pushed to the bottom. Returns the RREF and the pivot columns.
inline std::pair<Mat, std::vector<int>> rref(Mat m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        std::uint32_t inv = finv(m.at(r, c), m.p);
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = fmul(m.at(r, j), inv, m.p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            std::uint32_t f = m.at(i, c);
            if (!f) continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = fsub(m.at(i, j), fmul(f, m.at(r, j), m.p), m.p);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline int rank(const Mat& m) { return int(rref(m).second.size()); }

// Basis of the right null space {v : m v = 0}, one vector per free column,
// in pivot-first canonical order.
inline std::vector<Vec> kernel_basis(const Mat& m) {
    auto [r, piv] = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols, 0);
        v[c] = 1 % m.p;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = fneg(r.at(int(i), c), m.p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One particular solution of m x = b, or nullopt if inconsistent.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (int(b.size()) != m.rows) throw invariant_violation("rhs length mismatch in solve");
    Mat aug(m.p, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i] % m.p;
    }
    auto [r, piv] = rref(std::move(aug));
    for (int c : piv)
        if (c == m.cols) return std::nullopt;
    Vec x(m.cols, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(int(i), m.cols);
    return x;
}

// Inverse of a square matrix; throws if singular.
inline Mat inverse(const Mat& m) {
    if (m.rows != m.cols) throw invariant_violation("inverse of non-square matrix");
    auto [r, piv] = rref(hstack(m, Mat::identity(m.p, m.rows)));
    if (int(piv.size()) != m.rows || (m.rows > 0 && piv.back() >= m.rows))
        throw invariant_violation("inverse of singular matrix");
    Mat inv(m.p, m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = r.at(i, m.cols + j);
    return inv;
}

inline bool is_invertible(const Mat& m) {
    return m.rows == m.cols && rank(m) == m.rows;
}

// ---- Row-space subspaces -------------------------------------------------
//
// A subspace of GF(p)^n is stored as a matrix whose rows form its canonical
// (RREF, zero rows dropped) basis. Two subspaces are equal iff the canonical
// matrices are equal, which keeps them usable as map keys.

inline Mat row_space(const Mat& spanning) {
    auto [r, piv] = rref(spanning);
    Mat out(r.p, int(piv.size()), r.cols);
    for (int i = 0; i < out.rows; ++i)
        for (int j = 0; j < out.cols; ++j) out.at(i, j) = r.at(i, j);
    return out;
}

inline Mat row_space_from_vectors(std::uint32_t p, const std::vector<Vec>& vs, int n) {
    return row_space(Mat::from_rows(p, vs, n));
}

// Reduce v against a canonical basis; the residual is zero iff v lies in the span.
inline Vec reduce_against(const Mat& canon, Vec v) {
    for (int i = 0; i < canon.rows; ++i) {
        int lead = -1;
        for (int j = 0; j < canon.cols; ++j)
            if (canon.at(i, j) != 0) { lead = j; break; }
        if (lead < 0) continue;
        std::uint32_t f = v[lead];
        if (!f) continue;
        for (int j = 0; j < canon.cols; ++j)
            v[j] = fsub(v[j], fmul(f, canon.at(i, j), canon.p), canon.p);
    }
    return v;
}

inline bool in_row_space(const Mat& canon, const Vec& v) {
    Vec r = reduce_against(canon, v);
    return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

inline Mat subspace_sum(const Mat& x, const Mat& y) { return row_space(vstack(x, y)); }

// Intersection of two row spaces inside GF(p)^n.
inline Mat subspace_intersect(const Mat& x, const Mat& y) {
    // v in X iff reduce_against(X, v) == 0; build the linear map v -> residual
    // for both spaces and take the joint kernel.
    int n = x.cols;
    if (y.cols != n) throw invariant_violation("subspace ambient mismatch");
    Mat cx = row_space(x), cy = row_space(y);
    Mat sys(x.p, 2 * n, n);
    for (int j = 0; j < n; ++j) {
        Vec e(n, 0);
        e[j] = 1 % x.p;
        Vec rx = reduce_against(cx, e), ry = reduce_against(cy, e);
        for (int i = 0; i < n; ++i) {
            sys.at(i, j) = rx[i];
            sys.at(n + i, j) = ry[i];
        }
    }
    auto ker = kernel_basis(sys);
    return row_space_from_vectors(x.p, ker, n);
}

// Coordinates of ambient vectors in the quotient by a canonical subspace:
// returns a (n - dim) x n matrix Q with ker Q = the subspace, built from the
// non-pivot coordinates of the reduction residual.
inline Mat quotient_map(const Mat& canon, int n) {
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < canon.rows; ++i)
        for (int j = 0; j < n; ++j)
            if (canon.at(i, j) != 0) { is_pivot[j] = true; break; }
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat q(canon.p, int(free_cols.size()), n);
    for (int j = 0; j < n; ++j) {
        Vec e(n, 0);
        e[j] = 1 % canon.p;
        Vec r = reduce_against(canon, e);
        for (std::size_t i = 0; i < free_cols.size(); ++i) q.at(int(i), j) = r[free_cols[i]];
    }
    return q;
}

// A right inverse of quotient_map: quotient basis vector i lifts to the
// standard vector at the i-th free column.
inline Mat quotient_section(const Mat& canon, int n) {
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < canon.rows; ++i)
        for (int j = 0; j < n; ++j)
            if (canon.at(i, j) != 0) { is_pivot[j] = true; break; }
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat s(canon.p, n, int(free_cols.size()));
    for (std::size_t i = 0; i < free_cols.size(); ++i) s.at(free_cols[i], int(i)) = 1 % canon.p;
    return s;
}

// Coordinates of v with respect to the rows of a canonical basis (throws if
// v is outside the span).
inline Vec coords_in_row_space(const Mat& canon, const Vec& v) {
    auto x = solve(transpose(canon), v);
    if (!x) throw invariant_violation("vector not in row space");
    return *x;
}

inline Vec unit_vec(std::size_t len, std::size_t pos, std::uint32_t p) {
    Vec v(len, 0);
    v[pos] = 1 % p;
    return v;
}

inline std::string to_string(const Mat& m) {
    std::string s = "[";
    for (int i = 0; i < m.rows; ++i) {
        s += (i ? "; " : "");
        for (int j = 0; j < m.cols; ++j) s += (j ? "," : "") + std::to_string(m.at(i, j));
    }
    return s + "]";
}

} // namespace injspec

#endif
