#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace starring::linalg {

/**
 * Dense row-major matrix over an arbitrary field.
 *
 * The field is supplied as an operations object F with:
 *   value_type, zero(), one(), add, sub, mul, neg, inv, is_zero, conj.
 * Exact coefficient types make ordinary Gaussian elimination safe here; no
 * pivoting strategy beyond "first nonzero" is needed, and that choice keeps
 * every routine deterministic.
 */
template <class T>
struct Mat {
    std::uint32_t rows = 0, cols = 0;
    std::vector<T> a; // rows * cols entries

    Mat() = default;
    Mat(std::uint32_t r, std::uint32_t c, const T& fill) : rows(r), cols(c), a(std::size_t(r) * c, fill) {}

    T& at(std::uint32_t r, std::uint32_t c) { return a[std::size_t(r) * cols + c]; }
    const T& at(std::uint32_t r, std::uint32_t c) const { return a[std::size_t(r) * cols + c]; }
};

template <class F, class T = typename F::value_type>
Mat<T> identity(const F& f, std::uint32_t k) {
    Mat<T> m(k, k, f.zero());
    for (std::uint32_t i = 0; i < k; ++i) m.at(i, i) = f.one();
    return m;
}

template <class F, class T = typename F::value_type>
Mat<T> mat_mul(const F& f, const Mat<T>& x, const Mat<T>& y) {
    Mat<T> out(x.rows, y.cols, f.zero());
    for (std::uint32_t i = 0; i < x.rows; ++i)
        for (std::uint32_t l = 0; l < x.cols; ++l) {
            if (f.is_zero(x.at(i, l))) continue;
            for (std::uint32_t j = 0; j < y.cols; ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(x.at(i, l), y.at(l, j)));
        }
    return out;
}

template <class T>
Mat<T> transpose(const Mat<T>& x) {
    Mat<T> out;
    out.rows = x.cols;
    out.cols = x.rows;
    out.a.resize(x.a.size(), x.a.empty() ? T() : x.a.front());
    for (std::uint32_t i = 0; i < x.rows; ++i)
        for (std::uint32_t j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
    return out;
}

template <class F, class T = typename F::value_type>
Mat<T> conj_transpose(const F& f, const Mat<T>& x) {
    Mat<T> out = transpose(x);
    for (auto& v : out.a) v = f.conj(v);
    return out;
}

/** Reduces m to reduced row echelon form in place; returns the pivot columns. */
template <class F, class T = typename F::value_type>
std::vector<std::uint32_t> rref_in_place(const F& f, Mat<T>& m) {
    std::vector<std::uint32_t> pivots;
    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::uint32_t sel = row;
        while (sel < m.rows && f.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::uint32_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        T scale = f.inv(m.at(row, col));
        for (std::uint32_t j = col; j < m.cols; ++j) m.at(row, j) = f.mul(scale, m.at(row, j));
        for (std::uint32_t i = 0; i < m.rows; ++i) {
            if (i == row || f.is_zero(m.at(i, col))) continue;
            T factor = m.at(i, col);
            for (std::uint32_t j = col; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F, class T = typename F::value_type>
std::uint32_t rank(const F& f, Mat<T> m) {
    return std::uint32_t(rref_in_place(f, m).size());
}

/**
 * Solves C * X = B for X (C: r x c, B: r x t, X: c x t), one right-hand
 * column at a time; free variables are set to zero, so the solution is the
 * canonical one for the elimination order. Returns nullopt when inconsistent.
 */
template <class F, class T = typename F::value_type>
std::optional<Mat<T>> solve_right(const F& f, const Mat<T>& c, const Mat<T>& b) {
    Mat<T> aug(c.rows, c.cols + b.cols, f.zero());
    for (std::uint32_t i = 0; i < c.rows; ++i) {
        for (std::uint32_t j = 0; j < c.cols; ++j) aug.at(i, j) = c.at(i, j);
        for (std::uint32_t j = 0; j < b.cols; ++j) aug.at(i, c.cols + j) = b.at(i, j);
    }
    auto pivots = rref_in_place(f, aug);
    // any pivot in the augmented block means some column is inconsistent
    for (auto p : pivots)
        if (p >= c.cols) return std::nullopt;
    Mat<T> x(c.cols, b.cols, f.zero());
    for (std::uint32_t r = 0; r < pivots.size(); ++r)
        for (std::uint32_t j = 0; j < b.cols; ++j) x.at(pivots[r], j) = aug.at(r, c.cols + j);
    // rows of the echelon form below the pivot count must have zero rhs
    for (std::uint32_t i = std::uint32_t(pivots.size()); i < aug.rows; ++i)
        for (std::uint32_t j = 0; j < b.cols; ++j)
            if (!f.is_zero(aug.at(i, c.cols + j))) return std::nullopt;
    return x;
}

/** Solves X * C = B by transposing both sides (no conjugation involved). */
template <class F, class T = typename F::value_type>
std::optional<Mat<T>> solve_left(const F& f, const Mat<T>& c, const Mat<T>& b) {
    auto xt = solve_right(f, transpose(c), transpose(b));
    if (!xt) return std::nullopt;
    return transpose(*xt);
}

template <class F, class T = typename F::value_type>
std::optional<Mat<T>> inverse(const F& f, const Mat<T>& m) {
    if (m.rows != m.cols) return std::nullopt;
    auto x = solve_right(f, m, identity(f, m.rows));
    if (!x) return std::nullopt;
    // a one-sided solution of a square system is automatically two-sided
    return x;
}

/**
 * Full-rank factorization m = F * G extracted from the echelon form: G is the
 * nonzero rows of rref(m), F the pivot columns of m. Returns rank r with
 * F: rows x r and G: r x cols.
 */
template <class F, class T = typename F::value_type>
struct RankFactorization {
    std::uint32_t rank = 0;
    Mat<T> left;  // rows x rank
    Mat<T> right; // rank x cols
};

template <class F, class T = typename F::value_type>
RankFactorization<F, T> rank_factorize(const F& f, const Mat<T>& m) {
    Mat<T> r = m;
    auto pivots = rref_in_place(f, r);
    RankFactorization<F, T> out;
    out.rank = std::uint32_t(pivots.size());
    out.left = Mat<T>(m.rows, out.rank, f.zero());
    out.right = Mat<T>(out.rank, m.cols, f.zero());
    for (std::uint32_t j = 0; j < out.rank; ++j)
        for (std::uint32_t i = 0; i < m.rows; ++i) out.left.at(i, j) = m.at(i, pivots[j]);
    for (std::uint32_t i = 0; i < out.rank; ++i)
        for (std::uint32_t j = 0; j < m.cols; ++j) out.right.at(i, j) = r.at(i, j);
    return out;
}

} // namespace starring::linalg
