#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "linalg.hpp"
#include "polyhedra.hpp"

namespace dhloc {

// Multiset of nonzero vectors; the distribution H_{a_1} * ... * H_{a_m}.
struct VectorConfig {
    std::size_t ambient_dim = 0;
    std::vector<Vec> vectors;

    VectorConfig() = default;
    VectorConfig(std::size_t dim, std::vector<Vec> vs) : ambient_dim(dim), vectors(std::move(vs)) {
        for (const auto& v : vectors) {
            if (v.size() != ambient_dim) throw Error(Errc::DimensionMismatch, "config vector size");
            if (v.is_zero()) throw Error(Errc::ZeroVector, "zero vector in configuration");
        }
    }

    std::size_t size() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }
    bool spans() const { return rank(vectors, ambient_dim) == ambient_dim; }
};

namespace detail {

inline Vec scale_primitive(Vec v) {
    for (const auto& x : v)
        if (x != 0) {
            Rational s = 1 / abs(x);
            v *= s;
            break;
        }
    return v;
}

// Normals of the hyperplanes spanned by the dim-1 element subsets (deduplicated up to scale).
inline std::vector<Vec> hyperplane_normals(std::size_t dim, const std::vector<Vec>& vs) {
    std::vector<Vec> out;
    if (dim == 0) return out;
    const std::size_t k = dim - 1;
    if (k == 0) {
        Vec e(dim);
        e[0] = 1;
        return {e};
    }
    if (vs.size() < k) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<Vec> rows;
        for (auto i : idx) rows.push_back(vs[i]);
        Mat m = Mat::from_rows(rows, dim);
        auto ns = nullspace(m);
        if (ns.size() == 1) {
            Vec nu = scale_primitive(ns[0]);
            if (std::find(out.begin(), out.end(), nu) == out.end()) out.push_back(nu);
        }
        std::size_t p = k;
        while (p > 0 && idx[p - 1] == vs.size() - k + p - 1) --p;
        if (p == 0) break;
        ++idx[p - 1];
        for (std::size_t i = p; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_pointed(std::size_t dim, const std::vector<Vec>& vs) {
    // Pointed iff no convex combination of the vectors vanishes.
    const std::size_t m = vs.size();
    std::vector<LinCon> eqs, ineqs;
    for (std::size_t i = 0; i < dim; ++i) {
        Vec row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = vs[j][i];
        eqs.push_back({row, 0});
    }
    Vec ones(m);
    for (std::size_t j = 0; j < m; ++j) {
        ones[j] = 1;
        Vec row(m);
        row[j] = -1;
        ineqs.push_back({row, 0});
    }
    eqs.push_back({ones, 1});
    return !feasible(m, ineqs, eqs);
}

// Weights of the open Newton-Cotes rule with d+1 nodes (k+1)/(d+2) on [0,1], exact to degree d.
inline std::vector<Rational> build_open_newton_cotes(std::size_t d) {
    const std::size_t n = d + 1;
    Mat v(n, n);
    Vec rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational s = frac(static_cast<long>(j) + 1, static_cast<long>(d) + 2);
        Rational p = 1;
        for (std::size_t i = 0; i < n; ++i) {
            v(i, j) = p;
            p *= s;
        }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] = frac(1, static_cast<long>(i) + 1);
    return solve_square(v, rhs)->coords();
}

inline const std::vector<Rational>& open_newton_cotes(std::size_t d) {
    static const std::vector<std::vector<Rational>> table = [] {
        std::vector<std::vector<Rational>> t;
        for (std::size_t k = 0; k <= 24; ++k) t.push_back(build_open_newton_cotes(k));
        return t;
    }();
    if (d >= table.size()) throw Error(Errc::DimensionMismatch, "truncated power degree above 24");
    return table[d];
}

// T_A(x) = int_0^inf T_{A \ a}(x - t a) dt, integrated piecewise between wall crossings.
inline Rational eval_recursive(std::size_t dim, const std::vector<Vec>& vs, const Vec& x) {
    const std::size_t m = vs.size();
    if (m == dim) {
        Mat a = Mat::from_columns(vs, dim);
        auto t = solve_square(a, x);
        for (const auto& ti : *t)
            if (ti <= 0) return 0;
        return 1 / abs(det(a));
    }
    std::size_t peel = m;
    for (std::size_t j = m; j-- > 0;) {
        std::vector<Vec> rest(vs);
        rest.erase(rest.begin() + static_cast<long>(j));
        if (rank(rest, dim) == dim) {
            peel = j;
            break;
        }
    }
    std::vector<Vec> rest(vs);
    const Vec a = rest[peel];
    rest.erase(rest.begin() + static_cast<long>(peel));

    std::vector<Rational> cuts{Rational(0)};
    for (const auto& nu : hyperplane_normals(dim, rest)) {
        Rational na = dot(nu, a);
        if (na == 0) continue;
        Rational t = dot(nu, x) / na;
        if (t > 0) cuts.push_back(t);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Beyond the last crossing the ray has left the pointed cone for good.
    const std::size_t deg = m - 1 - dim;
    const auto& w = open_newton_cotes(deg);
    Rational total = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational lo = cuts[i], len = cuts[i + 1] - cuts[i];
        Rational piece = 0;
        for (std::size_t k = 0; k <= deg; ++k) {
            Rational t = lo + len * frac(static_cast<long>(k) + 1, static_cast<long>(deg) + 2);
            piece += w[k] * eval_recursive(dim, rest, x - t * a);
        }
        total += len * piece;
    }
    return total;
}

} // namespace detail

inline std::vector<Vec> wall_normals(const VectorConfig& cfg) {
    return detail::hyperplane_normals(cfg.ambient_dim, cfg.vectors);
}

inline bool is_generic(const VectorConfig& cfg, const Vec& x) {
    for (const auto& nu : wall_normals(cfg))
        if (dot(nu, x) == 0) return false;
    return true;
}

inline bool cone_contains(const VectorConfig& cfg, const Vec& x) {
    if (x.size() != cfg.ambient_dim) throw Error(Errc::DimensionMismatch, "point size");
    const std::size_t m = cfg.size();
    std::vector<LinCon> eqs, ineqs;
    for (std::size_t i = 0; i < cfg.ambient_dim; ++i) {
        Vec row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = cfg.vectors[j][i];
        eqs.push_back({row, x[i]});
    }
    for (std::size_t j = 0; j < m; ++j) {
        Vec row(m);
        row[j] = -1;
        ineqs.push_back({row, 0});
    }
    return feasible(m, ineqs, eqs);
}

namespace detail {

inline void require_evaluable(const VectorConfig& cfg, const Vec& x) {
    if (x.size() != cfg.ambient_dim) throw Error(Errc::DimensionMismatch, "point size");
    if (!cfg.spans())
        throw Error(Errc::NotAbsolutelyContinuous, "vectors do not span the ambient space");
    if (!is_pointed(cfg.ambient_dim, cfg.vectors))
        throw Error(Errc::NotPointed, "support cone contains a line; the convolution diverges");
    for (const auto& nu : wall_normals(cfg))
        if (dot(nu, x) == 0)
            throw Error(Errc::NonGenericPoint, to_string(x) + " lies on the wall with normal " + to_string(nu));
}

} // namespace detail

// Density of H_{a_1} * ... * H_{a_m} at a generic point.
inline Rational trunc_power_eval(const VectorConfig& cfg, const Vec& x) {
    detail::require_evaluable(cfg, x);
    return detail::eval_recursive(cfg.ambient_dim, cfg.vectors, x);
}

struct DerivTerm {
    Rational coefficient;
    VectorConfig config;  // empty config stands for delta_0
};

// d_v T_A = sum_i c_i T_{A \ a_i}, with v = sum_i c_i a_i over the first independent subset.
inline std::vector<DerivTerm> trunc_power_derivative(const VectorConfig& cfg, const Vec& v) {
    if (v.size() != cfg.ambient_dim) throw Error(Errc::DimensionMismatch, "direction size");
    auto basis_idx = independent_subset(cfg.vectors, cfg.ambient_dim);
    std::vector<Vec> basis;
    for (auto i : basis_idx) basis.push_back(cfg.vectors[i]);
    auto c = coordinates_in(basis, v);
    if (!c) throw Error(Errc::DirectionOutsideSpan, to_string(v) + " is outside the span of the configuration");
    std::vector<DerivTerm> out;
    for (std::size_t i = 0; i < basis_idx.size(); ++i) {
        if ((*c)[i] == 0) continue;
        std::vector<Vec> rest = cfg.vectors;
        rest.erase(rest.begin() + static_cast<long>(basis_idx[i]));
        out.push_back({(*c)[i], VectorConfig(cfg.ambient_dim, std::move(rest))});
    }
    return out;
}

// Monte Carlo estimate of the fiber volume vol{t >= 0 : A t = x} / |det A_B| (test oracle).
inline double mc_fiber_volume(const VectorConfig& cfg, const Vec& x, std::size_t n_samples, std::uint64_t seed) {
    detail::require_evaluable(cfg, x);
    if (!cone_contains(cfg, x)) return 0.0;
    const std::size_t n = cfg.ambient_dim, m = cfg.size(), k = m - n;
    auto basic = independent_subset(cfg.vectors, n);
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < m; ++j)
        if (std::find(basic.begin(), basic.end(), j) == basic.end()) free.push_back(j);
    std::vector<Vec> bcols;
    for (auto j : basic) bcols.push_back(cfg.vectors[j]);
    Mat ab = Mat::from_columns(bcols, n);
    Mat abinv = *inverse(ab);
    const double scale = 1.0 / to_double(abs(det(ab)));
    if (k == 0) return scale;

    // t_B = c - M t_N >= 0 with c = A_B^{-1} x and M = A_B^{-1} A_N.
    std::vector<double> c = to_doubles(abinv * x);
    std::vector<std::vector<double>> mm(n, std::vector<double>(k));
    for (std::size_t j = 0; j < k; ++j) {
        auto col = to_doubles(abinv * cfg.vectors[free[j]]);
        for (std::size_t i = 0; i < n; ++i) mm[i][j] = col[i];
    }

    // Tight box for t_N from the vertices of the fiber polytope.
    std::vector<double> lo(k, INFINITY), hi(k, -INFINITY);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        std::vector<Vec> cols;
        for (auto i : idx) cols.push_back(cfg.vectors[i]);
        if (auto t = solve_square(Mat::from_columns(cols, n), x)) {
            if (std::all_of(t->begin(), t->end(), [](const Rational& q) { return q >= 0; })) {
                std::vector<double> full(m, 0.0);
                for (std::size_t i = 0; i < n; ++i) full[idx[i]] = to_double((*t)[i]);
                for (std::size_t j = 0; j < k; ++j) {
                    lo[j] = std::min(lo[j], full[free[j]]);
                    hi[j] = std::max(hi[j], full[free[j]]);
                }
            }
        }
        std::size_t p = n;
        while (p > 0 && idx[p - 1] == m - n + p - 1) --p;
        if (p == 0) break;
        ++idx[p - 1];
        for (std::size_t i = p; i < n; ++i) idx[i] = idx[i - 1] + 1;
    }

    // The last free coordinate is integrated exactly; the others are sampled on a jittered grid.
    auto slice = [&](const std::vector<double>& t) {
        double a = lo[k - 1], b = hi[k - 1];
        for (std::size_t i = 0; i < n; ++i) {
            double rhs = c[i];
            for (std::size_t j = 0; j + 1 < k; ++j) rhs -= mm[i][j] * t[j];
            double coef = mm[i][k - 1];
            if (coef > 0)
                b = std::min(b, rhs / coef);
            else if (coef < 0)
                a = std::max(a, rhs / coef);
            else if (rhs < 0)
                return 0.0;
        }
        return std::max(0.0, b - a);
    };
    if (k == 1) return scale * slice({});

    const std::size_t sdim = k - 1;
    std::size_t per_axis = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n_samples), 1.0 / sdim))));
    std::size_t cells = 1;
    for (std::size_t i = 0; i < sdim; ++i) cells *= per_axis;
    const std::size_t reps = std::max<std::size_t>(1, n_samples / cells);
    double box_vol = 1.0;
    for (std::size_t j = 0; j < sdim; ++j) box_vol *= hi[j] - lo[j];

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double acc = 0.0;
    std::vector<double> t(sdim);
    for (std::size_t cell = 0; cell < cells; ++cell)
        for (std::size_t r = 0; r < reps; ++r) {
            std::size_t code = cell;
            for (std::size_t j = 0; j < sdim; ++j) {
                double s = (static_cast<double>(code % per_axis) + u(rng)) / static_cast<double>(per_axis);
                code /= per_axis;
                t[j] = lo[j] + s * (hi[j] - lo[j]);
            }
            acc += slice(t);
        }
    return scale * box_vol * acc / static_cast<double>(cells * reps);
}

} // namespace dhloc
