#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace dhloc {

// Dense row-major rational matrix.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows) {
        Mat m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw Error(Errc::DimensionMismatch, "column size");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }
    static Mat from_rows(const std::vector<Vec>& rs, std::size_t cols) {
        Mat m(rs.size(), cols);
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs[i].size() != cols) throw Error(Errc::DimensionMismatch, "row size");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rs[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const {
        Vec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    Vec col(std::size_t j) const {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Vec operator*(const Mat& m, const Vec& v) {
        if (v.size() != m.cols_) throw Error(Errc::DimensionMismatch, "matrix-vector size");
        Vec out(m.rows_);
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) out[i] += m(i, j) * v[j];
        return out;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product size");
        Mat out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a(i, k) != 0)
                    for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
        return out;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator<(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            return std::pair(a.rows_, a.cols_) < std::pair(b.rows_, b.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) {
            if (a.a_[k] < b.a_[k]) return true;
            if (b.a_[k] < a.a_[k]) return false;
        }
        return false;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct Rref {
    Mat m;
    std::vector<std::size_t> pivots;
};

inline Rref rref(Mat m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const std::vector<Vec>& vs, std::size_t dim) {
    if (vs.empty()) return 0;
    return rref(Mat::from_rows(vs, dim)).pivots.size();
}

inline Rational det(Mat m) {
    if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "det of non-square matrix");
    const std::size_t n = m.rows();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

inline std::optional<Mat> inverse(const Mat& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto [red, piv] = rref(std::move(aug));
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
    return inv;
}

// Unique solution of A t = b, if A is square and invertible.
inline std::optional<Vec> solve_square(const Mat& a, const Vec& b) {
    auto inv = inverse(a);
    if (!inv) return std::nullopt;
    return *inv * b;
}

// Indices of the greedy (lexicographically first) maximal independent subset.
inline std::vector<std::size_t> independent_subset(const std::vector<Vec>& vs, std::size_t dim) {
    std::vector<std::size_t> chosen;
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        basis.push_back(vs[i]);
        if (rank(basis, dim) == basis.size())
            chosen.push_back(i);
        else
            basis.pop_back();
        if (basis.size() == dim) break;
    }
    return chosen;
}

// Coefficients c with sum c_i basis_i = v, for an independent basis; nullopt if v is outside the span.
inline std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v) {
    const std::size_t n = v.size(), k = basis.size();
    Mat aug(n, k + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
    for (std::size_t i = 0; i < n; ++i) aug(i, k) = v[i];
    auto [red, piv] = rref(std::move(aug));
    if (!piv.empty() && piv.back() == k) return std::nullopt;
    if (piv.size() != k) throw Error(Errc::DependentBasis, "coordinates in a dependent basis");
    Vec c(k);
    for (std::size_t r = 0; r < k; ++r) c[piv[r]] = red(r, k);
    return c;
}

// Basis of {x : m x = 0}.
inline std::vector<Vec> nullspace(const Mat& m) {
    auto [red, piv] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red(r, f);
        out.push_back(std::move(v));
    }
    return out;
}

inline Rational bilinear(const Mat& g, const Vec& a, const Vec& b) { return dot(a, g * b); }

// g-orthogonal projection of x onto span(basis); basis independent, possibly empty.
inline Vec project_onto(const Mat& g, const std::vector<Vec>& basis, const Vec& x) {
    const std::size_t k = basis.size();
    Vec out(x.size());
    if (k == 0) return out;
    Mat gram(k, k);
    Vec rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = bilinear(g, basis[i], basis[j]);
        rhs[i] = bilinear(g, basis[i], x);
    }
    auto c = solve_square(gram, rhs);
    if (!c) throw Error(Errc::DependentBasis, "projection onto a dependent basis");
    for (std::size_t i = 0; i < k; ++i) out += (*c)[i] * basis[i];
    return out;
}

} // namespace dhloc
