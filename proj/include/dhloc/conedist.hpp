#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "polyhedra.hpp"
#include "polynomial.hpp"
#include "rootdata.hpp"
#include "truncpow.hpp"

namespace dhloc {

using RootDatumPtr = std::shared_ptr<const RootDatum>;

// coef * xi_poly(xi) * delta_base * prod_g H_g * Leb_S, with x - base = S xi + (cone part).
struct ConeTerm {
    Rational coef = 1;
    Vec base;
    std::vector<Vec> gens;  // sorted multiset
    std::vector<Vec> leb;   // ordered basis of S
    Polynomial xi_poly;

    std::size_t dim() const { return base.size(); }
    bool is_full_dimensional() const { return leb.size() + rank(gens, dim()) == dim(); }
};

inline bool same_signature(const ConeTerm& a, const ConeTerm& b) {
    return a.base == b.base && a.gens == b.gens && a.leb == b.leb;
}

inline bool signature_less(const ConeTerm& a, const ConeTerm& b) {
    if (a.base != b.base) return a.base < b.base;
    if (a.gens != b.gens) return std::lexicographical_compare(a.gens.begin(), a.gens.end(), b.gens.begin(), b.gens.end());
    return std::lexicographical_compare(a.leb.begin(), a.leb.end(), b.leb.begin(), b.leb.end());
}

inline std::string to_string(const ConeTerm& t) {
    std::string out = (t.coef > 0 ? "+" : "-") + to_string(abs(t.coef)) + " · ";
    if (!t.xi_poly.is_constant()) out += "(" + t.xi_poly.to_string() + ") · ";
    out += "δ_" + to_string(t.base);
    for (std::size_t i = 0; i < t.gens.size();) {
        std::size_t j = i;
        while (j < t.gens.size() && t.gens[j] == t.gens[i]) ++j;
        out += " ⋆ H_" + to_string(t.gens[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    if (!t.leb.empty()) {
        out += " ⊗ Leb[";
        for (std::size_t i = 0; i < t.leb.size(); ++i) out += (i ? "," : "") + to_string(t.leb[i]);
        out += "]";
    }
    return out;
}

class ConeDistribution {
public:
    explicit ConeDistribution(RootDatumPtr rd) : rd_(std::move(rd)) {
        if (!rd_) throw Error(Errc::InvalidModel, "distribution without root datum");
    }

    const RootDatum& ambient() const { return *rd_; }
    const RootDatumPtr& ambient_ptr() const { return rd_; }
    std::size_t dim() const { return rd_->rank; }
    const std::vector<ConeTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Inserts a term (validating it) and renormalizes.
    void add_term(ConeTerm t) {
        validate(t);
        std::sort(t.gens.begin(), t.gens.end());
        if (t.xi_poly.nvars() != t.leb.size()) {
            if (!t.xi_poly.is_constant())
                throw Error(Errc::DimensionMismatch, "xi polynomial arity differs from Lebesgue dimension");
            t.xi_poly = Polynomial::constant(t.leb.size(), t.xi_poly.is_zero() ? Rational(0) : t.xi_poly.constant_term());
        }
        t.xi_poly *= t.coef;
        t.coef = 1;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), t, signature_less);
        if (it != terms_.end() && same_signature(*it, t)) {
            Polynomial p = it->xi_poly * it->coef;
            p += t.xi_poly;
            set_normalized(*it, std::move(p));
            if (it->coef == 0) terms_.erase(it);
        } else {
            Polynomial p = std::move(t.xi_poly);
            set_normalized(t, std::move(p));
            if (t.coef != 0) terms_.insert(it, std::move(t));
        }
    }

private:
    static void set_normalized(ConeTerm& t, Polynomial p) {
        t.coef = p.leading_coefficient();
        if (t.coef != 0) p *= Rational(1 / t.coef);
        t.xi_poly = std::move(p);
    }

    void validate(const ConeTerm& t) const {
        const std::size_t n = dim();
        if (t.base.size() != n) throw Error(Errc::DimensionMismatch, "term base size");
        for (const auto& g : t.gens) {
            if (g.size() != n) throw Error(Errc::DimensionMismatch, "generator size");
            if (g.is_zero()) throw Error(Errc::ZeroVector, "zero Heaviside generator");
        }
        for (const auto& s : t.leb)
            if (s.size() != n) throw Error(Errc::DimensionMismatch, "Lebesgue basis vector size");
        if (rank(t.leb, n) != t.leb.size()) throw Error(Errc::DependentBasis, "dependent Lebesgue basis");
        for (const auto& g : t.gens)
            for (const auto& s : t.leb)
                if (rd_->pairing(g, s) != 0)
                    throw Error(Errc::IncompatibleSubspaces,
                                "generator " + to_string(g) + " not orthogonal to Lebesgue direction " + to_string(s));
    }

    RootDatumPtr rd_;
    std::vector<ConeTerm> terms_;
};

inline ConeDistribution zero_distribution(const RootDatumPtr& rd) { return ConeDistribution(rd); }

inline ConeDistribution delta(const RootDatumPtr& rd, const Vec& beta) {
    ConeDistribution d(rd);
    d.add_term({1, beta, {}, {}, Polynomial::constant(0, 1)});
    return d;
}

inline ConeDistribution heaviside(const RootDatumPtr& rd, const Vec& alpha, int multiplicity = 1) {
    if (alpha.is_zero()) throw Error(Errc::ZeroVector, "Heaviside along the zero vector");
    if (multiplicity < 1) throw Error(Errc::DimensionMismatch, "Heaviside multiplicity must be positive");
    ConeDistribution d(rd);
    d.add_term({1, Vec(rd->rank), std::vector<Vec>(static_cast<std::size_t>(multiplicity), alpha), {},
                Polynomial::constant(0, 1)});
    return d;
}

inline ConeDistribution lebesgue(const RootDatumPtr& rd, const std::vector<Vec>& basis, const Rational& normalization) {
    ConeDistribution d(rd);
    d.add_term({1, Vec(rd->rank), {}, basis, Polynomial::constant(basis.size(), normalization)});
    return d;
}

inline ConeDistribution lebesgue_poly(const RootDatumPtr& rd, const std::vector<Vec>& basis, Polynomial p) {
    ConeDistribution d(rd);
    d.add_term({1, Vec(rd->rank), {}, basis, std::move(p)});
    return d;
}

inline ConeDistribution add(const ConeDistribution& a, const ConeDistribution& b) {
    ConeDistribution out = a;
    for (const auto& t : b.terms()) out.add_term(t);
    return out;
}

inline ConeDistribution scale(const Rational& s, const ConeDistribution& d) {
    ConeDistribution out(d.ambient_ptr());
    if (s == 0) return out;
    for (auto t : d.terms()) {
        t.coef *= s;
        out.add_term(std::move(t));
    }
    return out;
}

inline ConeDistribution translate(const Vec& v, const ConeDistribution& d) {
    ConeDistribution out(d.ambient_ptr());
    for (auto t : d.terms()) {
        t.base += v;
        out.add_term(std::move(t));
    }
    return out;
}

inline ConeDistribution convolve(const ConeDistribution& a, const ConeDistribution& b) {
    ConeDistribution out(a.ambient_ptr());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            // Leb_S * Leb_S' diverges on S cap S' and is not representable; one side must be empty.
            if (!ta.leb.empty() && !tb.leb.empty())
                throw Error(Errc::IncompatibleSubspaces, "convolution of two Lebesgue factors");
            ConeTerm t;
            t.coef = ta.coef * tb.coef;
            t.base = ta.base + tb.base;
            t.gens = ta.gens;
            t.gens.insert(t.gens.end(), tb.gens.begin(), tb.gens.end());
            t.leb = ta.leb.empty() ? tb.leb : ta.leb;
            t.xi_poly = ta.xi_poly * tb.xi_poly;
            out.add_term(std::move(t));
        }
    return out;
}

namespace detail {

inline std::vector<Vec> gens_basis(const ConeTerm& t) {
    std::vector<Vec> out;
    for (auto i : independent_subset(t.gens, t.dim())) out.push_back(t.gens[i]);
    return out;
}

inline void derive_term(const ConeTerm& t, const Vec& v, ConeDistribution& out) {
    std::vector<Vec> bg = gens_basis(t);
    std::vector<Vec> frame = t.leb;
    frame.insert(frame.end(), bg.begin(), bg.end());
    auto c = coordinates_in(frame, v);
    if (!c)
        throw Error(Errc::DirectionOutsideSpan,
                    "derivative direction " + to_string(v) + " outside the span of term " + to_string(t));
    const std::size_t d = t.leb.size();
    Vec sigma(d), vg(v.size());
    for (std::size_t j = 0; j < d; ++j) sigma[j] = (*c)[j];
    for (std::size_t i = 0; i < bg.size(); ++i) vg += (*c)[d + i] * bg[i];
    if (!sigma.is_zero()) {
        ConeTerm s = t;
        s.xi_poly = t.xi_poly.directional(sigma);
        out.add_term(std::move(s));
    }
    if (!vg.is_zero())
        for (auto& [coef, cfg] : trunc_power_derivative(VectorConfig(t.dim(), t.gens), vg)) {
            ConeTerm s = t;
            s.coef = t.coef * coef;
            s.gens = cfg.vectors;
            out.add_term(std::move(s));
        }
}

} // namespace detail

inline ConeDistribution apply_diff_op(const DiffOp& op, const ConeDistribution& d) {
    ConeDistribution cur = d;
    for (const auto& v : op.directions) {
        ConeDistribution next(d.ambient_ptr());
        for (const auto& t : cur.terms()) detail::derive_term(t, v, next);
        cur = std::move(next);
    }
    return scale(op.coefficient, cur);
}

inline Rational term_density_at(const ConeTerm& t, const Vec& x) {
    const std::size_t n = t.dim();
    if (x.size() != n) throw Error(Errc::DimensionMismatch, "evaluation point size");
    std::vector<Vec> bg = detail::gens_basis(t);
    if (t.leb.size() + bg.size() != n)
        throw Error(Errc::LowerDimensionalTerm, "term " + to_string(t) + " has no density");
    std::vector<Vec> frame = t.leb;
    frame.insert(frame.end(), bg.begin(), bg.end());
    Mat f = Mat::from_columns(frame, n);
    Vec c = *solve_square(f, x - t.base);
    const std::size_t d = t.leb.size();
    Vec xi(d), y(bg.size());
    for (std::size_t j = 0; j < d; ++j) xi[j] = c[j];
    for (std::size_t i = 0; i < bg.size(); ++i) y[i] = c[d + i];
    Rational cone = 1;
    if (!bg.empty()) {
        std::vector<Vec> coords;
        for (const auto& g : t.gens) coords.push_back(*coordinates_in(bg, g));
        try {
            cone = trunc_power_eval(VectorConfig(bg.size(), coords), y);
        } catch (const Error& e) {
            if (e.code() != Errc::NonGenericPoint) throw;
            throw Error(Errc::NonGenericPoint, to_string(x) + " lies on a wall of term " + to_string(t));
        }
    }
    if (cone == 0) return 0;
    return t.coef * t.xi_poly.eval(xi) * cone / abs(det(f));
}

inline Rational density_at(const ConeDistribution& d, const Vec& x) {
    Rational s = 0;
    for (const auto& t : d.terms()) s += term_density_at(t, x);
    return s;
}

inline ConeDistribution weyl_pushforward(const RootDatum& rd, std::size_t w, const ConeDistribution& d) {
    const Mat& m = rd.weyl(w).matrix;
    ConeDistribution out(d.ambient_ptr());
    for (auto t : d.terms()) {
        t.base = m * t.base;
        for (auto& g : t.gens) g = m * g;
        for (auto& s : t.leb) s = m * s;
        out.add_term(std::move(t));
    }
    return out;
}

inline bool term_meets_box(const ConeTerm& t, const Box& box) {
    return affine_cone_meets_box(t.base, t.leb, t.gens, box);
}

inline bool support_meets_box(const ConeDistribution& d, const Box& box) {
    for (const auto& t : d.terms())
        if (term_meets_box(t, box)) return true;
    return false;
}

inline bool support_contains(const ConeDistribution& d, const Vec& x) { return support_meets_box(d, Box{x, x}); }

inline bool equal_on_samples(const ConeDistribution& a, const ConeDistribution& b, const std::vector<Vec>& points) {
    for (const auto& x : points)
        if (density_at(a, x) != density_at(b, x)) return false;
    return true;
}

} // namespace dhloc
