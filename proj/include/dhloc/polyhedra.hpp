#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "linalg.hpp"

namespace dhloc {

// a . v <= b (or == b for equality rows).
struct LinCon {
    Vec a;
    Rational b;
};

namespace detail {

// Scale so the first nonzero coefficient has absolute value 1; keeps duplicates detectable.
inline LinCon normalized(LinCon c) {
    for (const auto& x : c.a) {
        if (x == 0) continue;
        Rational s = 1 / abs(x);
        c.a *= s;
        c.b *= s;
        break;
    }
    return c;
}

struct ConLess {
    bool operator()(const LinCon& x, const LinCon& y) const {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

} // namespace detail

// Exact feasibility of a closed polyhedron by Gaussian elimination of the equalities
// followed by Fourier-Motzkin elimination.
inline bool feasible(std::size_t nvars, std::vector<LinCon> ineqs, std::vector<LinCon> eqs = {}) {
    for (auto& e : eqs) {
        std::size_t p = 0;
        while (p < nvars && e.a[p] == 0) ++p;
        if (p == nvars) {
            if (e.b != 0) return false;
            continue;
        }
        // v_p = (b - sum_{j != p} a_j v_j) / a_p, substituted everywhere else.
        auto eliminate = [&](LinCon& c) {
            if (c.a[p] == 0) return;
            Rational f = c.a[p] / e.a[p];
            for (std::size_t j = 0; j < nvars; ++j) c.a[j] -= f * e.a[j];
            c.b -= f * e.b;
        };
        for (auto& other : eqs)
            if (&other != &e) eliminate(other);
        for (auto& c : ineqs) eliminate(c);
    }
    for (std::size_t v = 0; v < nvars; ++v) {
        std::vector<LinCon> pos, neg, rest;
        for (auto& c : ineqs) {
            if (c.a[v] > 0)
                pos.push_back(c);
            else if (c.a[v] < 0)
                neg.push_back(c);
            else
                rest.push_back(c);
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                Rational fp = -n.a[v], fn = p.a[v];
                LinCon comb{fp * p.a + fn * n.a, fp * p.b + fn * n.b};
                comb.a[v] = 0;
                rest.push_back(comb);
            }
        std::set<LinCon, detail::ConLess> uniq;
        for (auto& c : rest) {
            if (c.a.is_zero()) {
                if (c.b < 0) return false;
                continue;
            }
            uniq.insert(detail::normalized(std::move(c)));
        }
        ineqs.assign(uniq.begin(), uniq.end());
    }
    return std::all_of(ineqs.begin(), ineqs.end(), [](const LinCon& c) { return c.b >= 0; });
}

// Axis-aligned closed box.
struct Box {
    Vec lo, hi;

    std::size_t dim() const { return lo.size(); }
    bool empty() const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (hi[i] < lo[i]) return true;
        return false;
    }
    bool contains(const Vec& x) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (x[i] < lo[i] || x[i] > hi[i]) return false;
        return true;
    }
    std::vector<Vec> corners() const {
        std::vector<Vec> out{Vec(dim())};
        for (std::size_t i = 0; i < dim(); ++i) {
            std::vector<Vec> next;
            for (const auto& c : out) {
                Vec a = c, b = c;
                a[i] = lo[i];
                b[i] = hi[i];
                next.push_back(a);
                if (hi[i] != lo[i]) next.push_back(b);
            }
            out = std::move(next);
        }
        return out;
    }
};

// Does {base + sum_j s_j free_j + sum_i t_i cone_i : t >= 0} meet the box?
inline bool affine_cone_meets_box(const Vec& base, const std::vector<Vec>& free_dirs,
                                  const std::vector<Vec>& cone_dirs, const Box& box) {
    const std::size_t n = base.size();
    const std::size_t k = free_dirs.size(), m = cone_dirs.size();
    std::vector<LinCon> ineqs;
    for (std::size_t i = 0; i < n; ++i) {
        Vec row(k + m);
        for (std::size_t j = 0; j < k; ++j) row[j] = free_dirs[j][i];
        for (std::size_t j = 0; j < m; ++j) row[k + j] = cone_dirs[j][i];
        ineqs.push_back({row, box.hi[i] - base[i]});
        ineqs.push_back({-row, base[i] - box.lo[i]});
    }
    for (std::size_t j = 0; j < m; ++j) {
        Vec row(k + m);
        row[k + j] = -1;
        ineqs.push_back({row, 0});
    }
    return feasible(k + m, std::move(ineqs));
}

} // namespace dhloc
