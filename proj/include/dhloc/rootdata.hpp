#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "linalg.hpp"

namespace dhloc {

enum class RootType { A1, A2 };

struct WeylElement {
    Mat matrix;
    int length = 0;
};

// Root system of the ambient group in t*-coordinates, with t and t* identified via dual_gram.
struct RootDatum {
    RootType type = RootType::A1;
    std::size_t rank = 0;
    std::vector<Vec> roots;
    std::vector<Vec> positive_roots;
    std::vector<Vec> simple_roots;
    Mat dual_gram;
    std::vector<Vec> weight_lattice_basis;
    std::vector<Vec> integral_lattice_basis;
    std::vector<WeylElement> weyl_elements;

    Rational pairing(const Vec& lambda, const Vec& x) const {
        if (lambda.size() != rank || x.size() != rank)
            throw Error(Errc::DimensionMismatch, "pairing expects rank-" + std::to_string(rank) + " vectors");
        return bilinear(dual_gram, lambda, x);
    }
    Rational norm2(const Vec& x) const { return pairing(x, x); }

    const WeylElement& weyl(std::size_t w) const {
        if (w >= weyl_elements.size())
            throw Error(Errc::IndexOutOfRange, "Weyl index " + std::to_string(w));
        return weyl_elements[w];
    }

    bool is_root(const Vec& v) const { return std::find(roots.begin(), roots.end(), v) != roots.end(); }
    bool is_positive(const Vec& v) const {
        return std::find(positive_roots.begin(), positive_roots.end(), v) != positive_roots.end();
    }
};

inline std::string_view type_tag(RootType t) { return t == RootType::A1 ? "A1" : "A2"; }

inline RootType parse_root_type(std::string_view tag) {
    if (tag == "A1") return RootType::A1;
    if (tag == "A2") return RootType::A2;
    throw Error(Errc::UnsupportedType, "root datum type '" + std::string(tag) + "'");
}

namespace detail {

inline Mat reflection(const Mat& gram, const Vec& alpha) {
    const std::size_t n = alpha.size();
    Mat s(n, n);
    Rational a2 = bilinear(gram, alpha, alpha);
    for (std::size_t j = 0; j < n; ++j) {
        Vec e(n);
        e[j] = 1;
        Vec img = e - (2 * bilinear(gram, alpha, e) / a2) * alpha;
        for (std::size_t i = 0; i < n; ++i) s(i, j) = img[i];
    }
    return s;
}

} // namespace detail

inline RootDatum build_root_datum(RootType type) {
    RootDatum rd;
    rd.type = type;
    if (type == RootType::A1) {
        // Weight lattice Z, root 2, B*(x, y) = xy/2: alcove [0,1] and Lambda = 2Z.
        rd.rank = 1;
        rd.simple_roots = {Vec{2}};
        rd.dual_gram = Mat{{frac(1, 2)}};
        rd.weight_lattice_basis = {Vec{1}};
        rd.integral_lattice_basis = {Vec{2}};
    } else {
        // Fundamental-weight coordinates; B* is the inverse Cartan matrix, Lambda the root lattice.
        rd.rank = 2;
        rd.simple_roots = {Vec{2, -1}, Vec{-1, 2}};
        rd.dual_gram = Mat{{frac(2, 3), frac(1, 3)}, {frac(1, 3), frac(2, 3)}};
        rd.weight_lattice_basis = {Vec{1, 0}, Vec{0, 1}};
        rd.integral_lattice_basis = rd.simple_roots;
    }

    std::vector<Mat> gens;
    for (const auto& a : rd.simple_roots) gens.push_back(detail::reflection(rd.dual_gram, a));

    std::vector<Mat> group{Mat::identity(rd.rank)};
    for (std::size_t i = 0; i < group.size(); ++i)
        for (const auto& s : gens) {
            Mat g = s * group[i];
            if (std::find(group.begin(), group.end(), g) == group.end()) group.push_back(g);
        }

    for (const auto& g : group)
        for (const auto& a : rd.simple_roots) {
            Vec r = g * a;
            if (std::find(rd.roots.begin(), rd.roots.end(), r) == rd.roots.end()) rd.roots.push_back(r);
        }
    std::sort(rd.roots.begin(), rd.roots.end());
    for (const auto& r : rd.roots) {
        auto c = coordinates_in(rd.simple_roots, r);
        if (std::all_of(c->begin(), c->end(), [](const Rational& x) { return x >= 0; }))
            rd.positive_roots.push_back(r);
    }

    for (const auto& g : group) {
        int len = 0;
        for (const auto& p : rd.positive_roots)
            if (!rd.is_positive(g * p)) ++len;
        rd.weyl_elements.push_back({g, len});
    }
    std::stable_sort(rd.weyl_elements.begin(), rd.weyl_elements.end(),
                     [](const WeylElement& x, const WeylElement& y) {
                         if (x.length != y.length) return x.length < y.length;
                         return x.matrix < y.matrix;
                     });
    return rd;
}

inline RootDatum build_root_datum(std::string_view tag) { return build_root_datum(parse_root_type(tag)); }

inline Rational pairing(const RootDatum& rd, const Vec& lambda, const Vec& x) { return rd.pairing(lambda, x); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// R_g for g = exp(beta).
inline std::vector<Vec> stabilizer_roots(const RootDatum& rd, const Vec& beta) {
    std::vector<Vec> out;
    for (const auto& a : rd.roots)
        if (is_integer(rd.pairing(a, beta))) out.push_back(a);
    return out;
}

// Constant-coefficient operator coefficient * prod_d d/d(direction).
struct DiffOp {
    Rational coefficient = 1;
    std::vector<Vec> directions;

    bool is_identity() const { return coefficient == 1 && directions.empty(); }
};

// Eul(g_g/t, d) = sgn(g) (-1)^{|R_{g,+}|} prod_{alpha in R_{g,+}} d_alpha.
inline DiffOp euler_operator(const RootDatum& rd, const Vec& beta, int sgn_g) {
    if (sgn_g != 1 && sgn_g != -1) throw Error(Errc::InvalidModel, "sgn_g must be +1 or -1");
    DiffOp op;
    for (const auto& a : stabilizer_roots(rd, beta))
        if (rd.is_positive(a)) op.directions.push_back(a);
    op.coefficient = (op.directions.size() % 2 ? -sgn_g : sgn_g);
    return op;
}

inline Vec weyl_apply(const RootDatum& rd, std::size_t w, const Vec& x) {
    if (x.size() != rd.rank) throw Error(Errc::DimensionMismatch, "weyl_apply point size");
    return rd.weyl(w).matrix * x;
}

struct StiefelHyperplane {
    Vec root;
    Rational level;
};

inline std::vector<StiefelHyperplane> stiefel_face_hyperplanes(const RootDatum& rd, const Vec& beta) {
    std::vector<StiefelHyperplane> out;
    for (const auto& a : rd.roots) {
        Rational n = rd.pairing(a, beta);
        if (is_integer(n)) out.push_back({a, n});
    }
    return out;
}

} // namespace dhloc
