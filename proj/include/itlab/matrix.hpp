#pragma once

// Dense exact matrices + deterministic Gaussian elimination.
// Pivot rule everywhere: scan columns left to right, take the smallest row
// index with a nonzero entry.  This makes rref (and everything built on it)
// reproducible across runs and platforms.

#include <cassert>
#include <optional>
#include <vector>

#include "field.hpp"

namespace itlab {

template <class F>
struct Matrix {
    using Elt = typename F::Elt;
    F f{};
    int rows = 0, cols = 0;
    std::vector<Elt> a;

    Matrix() = default;
    Matrix(F f_, int r, int c) : f(f_), rows(r), cols(c), a((size_t)r * c, f_.zero()) {}

    Elt& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Elt& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static Matrix identity(F f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    bool is_zero() const {
        for (auto& x : a)
            if (!f.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!f.eq(a[i], o.a[i])) return false;
        return true;
    }

    Matrix mul(const Matrix& o) const {
        assert(cols == o.rows);
        Matrix r(f, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Elt& x = at(i, k);
                if (f.is_zero(x)) continue;
                for (int j = 0; j < o.cols; ++j) {
                    const Elt& y = o.at(k, j);
                    if (!f.is_zero(y)) r.at(i, j) = f.add(r.at(i, j), f.mul(x, y));
                }
            }
        return r;
    }

    Matrix add(const Matrix& o) const {
        assert(rows == o.rows && cols == o.cols);
        Matrix r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = f.add(r.a[i], o.a[i]);
        return r;
    }

    Matrix sub(const Matrix& o) const {
        assert(rows == o.rows && cols == o.cols);
        Matrix r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = f.sub(r.a[i], o.a[i]);
        return r;
    }

    Matrix scale(const Elt& c) const {
        Matrix r = *this;
        for (auto& x : r.a) x = f.mul(x, c);
        return r;
    }

    Matrix transpose() const {
        Matrix r(f, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix col(int j) const {
        Matrix r(f, rows, 1);
        for (int i = 0; i < rows; ++i) r.at(i, 0) = at(i, j);
        return r;
    }

    Matrix cols_slice(const std::vector<int>& idx) const {
        Matrix r(f, rows, (int)idx.size());
        for (int j = 0; j < (int)idx.size(); ++j)
            for (int i = 0; i < rows; ++i) r.at(i, j) = at(i, idx[j]);
        return r;
    }

    static Matrix hstack(const Matrix& l, const Matrix& r) {
        assert(l.rows == r.rows);
        Matrix m(l.f, l.rows, l.cols + r.cols);
        for (int i = 0; i < l.rows; ++i) {
            for (int j = 0; j < l.cols; ++j) m.at(i, j) = l.at(i, j);
            for (int j = 0; j < r.cols; ++j) m.at(i, l.cols + j) = r.at(i, j);
        }
        return m;
    }

    static Matrix vstack(const Matrix& t, const Matrix& b) {
        assert(t.cols == b.cols);
        Matrix m(t.f, t.rows + b.rows, t.cols);
        for (int i = 0; i < t.rows; ++i)
            for (int j = 0; j < t.cols; ++j) m.at(i, j) = t.at(i, j);
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) m.at(t.rows + i, j) = b.at(i, j);
        return m;
    }
};

template <class F>
struct RrefResult {
    Matrix<F> m;              // reduced row echelon form
    std::vector<int> pivots;  // pivot column per pivot row, ascending
    int rank = 0;
};

template <class F>
RrefResult<F> rref(Matrix<F> m) {
    const F f = m.f;
    RrefResult<F> res;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        typename F::Elt ipv = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), ipv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            typename F::Elt x = m.at(i, c);
            if (f.is_zero(x)) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(x, m.at(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.m = std::move(m);
    return res;
}

template <class F>
int rank(const Matrix<F>& m) {
    return rref(m).rank;
}

// Columns of the result form a basis of { x : m x = 0 }.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    const F f = m.f;
    auto rr = rref(m);
    std::vector<char> is_piv(m.cols, 0);
    for (int c : rr.pivots) is_piv[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Matrix<F> k(f, m.cols, (int)free_cols.size());
    for (int j = 0; j < (int)free_cols.size(); ++j) {
        int fc = free_cols[j];
        k.at(fc, j) = f.one();
        for (int pr = 0; pr < rr.rank; ++pr)
            k.at(rr.pivots[pr], j) = f.neg(rr.m.at(pr, fc));
    }
    return k;
}

// Solves A X = B; returns std::nullopt when inconsistent.  The solution is the
// one with zeros at the free coordinates, hence deterministic.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
    assert(a.rows == b.rows);
    const F f = a.f;
    auto rr = rref(Matrix<F>::hstack(a, b));
    // any pivot beyond A's columns means some column of B is not in col(A)
    for (int c : rr.pivots)
        if (c >= a.cols) return std::nullopt;
    Matrix<F> x(f, a.cols, b.cols);
    for (int pr = 0; pr < rr.rank; ++pr)
        for (int j = 0; j < b.cols; ++j) x.at(rr.pivots[pr], j) = rr.m.at(pr, a.cols + j);
    return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows != m.cols) return std::nullopt;
    auto rr = rref(Matrix<F>::hstack(m, Matrix<F>::identity(m.f, m.rows)));
    // [m | I] always has full row rank; m is invertible exactly when no pivot
    // escapes into the identity block
    for (int c : rr.pivots)
        if (c >= m.cols) return std::nullopt;
    Matrix<F> inv(m.f, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = rr.m.at(i, m.cols + j);
    return inv;
}

// Basis of the column space: the columns of m at the pivot positions of m^T's
// row reduction — returned as column indices for determinism.
template <class F>
std::vector<int> column_space_pivots(const Matrix<F>& m) {
    return rref(m).pivots;
}

// --- subspace helpers: a subspace of F^n is a matrix whose columns span it ---

// Canonical basis of the column space: unique per subspace, so equality of
// spans is equality of these matrices.
template <class F>
Matrix<F> span_canonical(const Matrix<F>& m) {
    auto rr = rref(m.transpose());
    Matrix<F> out(m.f, m.rows, rr.rank);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < m.rows; ++j) out.at(j, i) = rr.m.at(i, j);
    return out;
}

template <class F>
Matrix<F> span_union(const Matrix<F>& a, const Matrix<F>& b) {
    return span_canonical(Matrix<F>::hstack(a, b));
}

template <class F>
Matrix<F> span_intersect(const Matrix<F>& a, const Matrix<F>& b) {
    assert(a.rows == b.rows);
    // a x + b y = 0  =>  a x runs over the intersection
    Matrix<F> k = kernel_basis(Matrix<F>::hstack(a, b));
    Matrix<F> xs(a.f, a.cols, k.cols);
    for (int j = 0; j < k.cols; ++j)
        for (int i = 0; i < a.cols; ++i) xs.at(i, j) = k.at(i, j);
    return span_canonical(a.mul(xs));
}

// Does span(a) contain every column of v?
template <class F>
bool span_contains(const Matrix<F>& a, const Matrix<F>& v) {
    assert(a.rows == v.rows);
    return rank(Matrix<F>::hstack(a, v)) == rank(a);
}

// Column indices of m extending span(a) to span(a) + span(m), greedily.
template <class F>
std::vector<int> extend_basis(const Matrix<F>& a, const Matrix<F>& m) {
    Matrix<F> cur = a;
    int cur_rank = rank(a);
    std::vector<int> picked;
    for (int j = 0; j < m.cols; ++j) {
        Matrix<F> cand = Matrix<F>::hstack(cur, m.col(j));
        int r = rank(cand);
        if (r > cur_rank) {
            picked.push_back(j);
            cur = std::move(cand);
            cur_rank = r;
        }
    }
    return picked;
}

// Rank over Q of an integer matrix (rows = generating vectors).  This is the
// rank of the subgroup of Z^cols the rows generate, as a free abelian group.
inline int int_rank(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return 0;
    RationalField f;
    size_t cols = 0;
    for (auto& r : rows) cols = std::max(cols, r.size());
    Matrix<RationalField> m(f, (int)rows.size(), (int)cols);
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < (int)rows[i].size(); ++j) m.at(i, j) = bigrat(rows[i][j]);
    return rank(m);
}

}  // namespace itlab
