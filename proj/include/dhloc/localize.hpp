#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conedist.hpp"

namespace dhloc {

// Affine subspace basepoint + span(directions); normals span its B*-orthogonal complement t_Delta.
struct Wall {
    Vec basepoint;
    std::vector<Vec> directions;
    std::vector<Vec> normals;

    std::size_t dim() const { return basepoint.size(); }
    bool is_full() const { return normals.empty(); }
};

inline Vec wall_project(const RootDatum& rd, const Wall& w, const Vec& x) {
    return w.basepoint + project_onto(rd.dual_gram, w.directions, x - w.basepoint);
}

inline bool wall_contains(const RootDatum& rd, const Wall& w, const Vec& x) { return wall_project(rd, w, x) == x; }

inline Wall translate_wall(const Wall& w, const Vec& v) { return {w.basepoint + v, w.directions, w.normals}; }

inline Wall weyl_image(const RootDatum& rd, std::size_t wi, const Wall& w) {
    const Mat& m = rd.weyl(wi).matrix;
    Wall out{m * w.basepoint, {}, {}};
    for (const auto& d : w.directions) out.directions.push_back(m * d);
    for (const auto& n : w.normals) out.normals.push_back(m * n);
    return out;
}

// Canonical description: reduced direction space and the point of the wall nearest 0.
struct WallKey {
    Mat dirs;
    Vec foot;

    friend bool operator<(const WallKey& a, const WallKey& b) {
        if (!(a.dirs == b.dirs)) return a.dirs < b.dirs;
        return a.foot < b.foot;
    }
    friend bool operator==(const WallKey& a, const WallKey& b) { return a.dirs == b.dirs && a.foot == b.foot; }
};

inline WallKey wall_key(const RootDatum& rd, const Wall& w) {
    Mat d = w.directions.empty() ? Mat(0, w.dim()) : rref(Mat::from_rows(w.directions, w.dim())).m;
    return {d, wall_project(rd, w, Vec(w.dim()))};
}

inline bool wall_meets_box(const Wall& w, const Box& box) {
    return affine_cone_meets_box(w.basepoint, w.directions, {}, box);
}

// Does w2 = w1 + lambda for some lambda in the integral lattice?
inline bool lattice_translate(const RootDatum& rd, const Wall& w1, const Wall& w2) {
    if (!(wall_key(rd, w1).dirs == wall_key(rd, w2).dirs)) return false;
    const std::size_t n = rd.rank, c = w1.normals.size();
    if (c == 0) return true;
    Vec delta = w2.basepoint - w1.basepoint;
    const auto& lat = rd.integral_lattice_basis;
    if (c == n) {
        auto coeffs = coordinates_in(lat, delta);
        return coeffs && std::all_of(coeffs->begin(), coeffs->end(), [](const Rational& q) { return is_integer(q); });
    }
    if (c != 1) throw Error(Errc::UnsupportedType, "lattice reachability for walls of codimension > 1");
    // One linear Diophantine equation: sum_j a_j n_j = rhs.
    std::vector<Rational> a;
    for (const auto& l : lat) a.push_back(rd.pairing(w1.normals[0], l));
    Rational rhs = rd.pairing(w1.normals[0], delta);
    mpz_class den = rhs.get_den();
    for (const auto& x : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class g = 0;
    for (const auto& x : a) {
        Rational s = x * den;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num().get_mpz_t());
    }
    Rational r = rhs * den;
    if (g == 0) return r == 0;
    return mpz_divisible_p(r.get_num().get_mpz_t(), g.get_mpz_t()) != 0;
}

struct Weight {
    Vec vector;
    int rank = 1;
};

// Sorted multiset of Chern indices (k, m): c_m(V_k).
using ChernMonomial = std::vector<std::pair<int, int>>;

struct ChernEntry {
    ChernMonomial chern;
    std::vector<int> xi;
    Rational value;
};

struct FixedPointDatum {
    std::string wall_id;
    Wall wall;
    Vec beta;
    std::vector<Weight> weights;
    std::vector<ChernEntry> chern_table;
    int base_orientation = 1;
    int sgn_g = 1;
    int chern_degree_cap = 0;
};

struct Model {
    std::string name;
    RootDatumPtr rd;
    Vec gamma;
    bool allow_nongeneric_gamma = false;
    bool generate_lattice = true;
    bool generate_weyl = true;
    std::vector<std::string> wall_ids;
    std::vector<Wall> walls;
    std::vector<FixedPointDatum> data;
    Box window_default;
    std::map<std::string, std::string> metadata;
};

// ---------------------------------------------------------------- polarization

struct Polarization {
    std::vector<Vec> minus;  // alpha_k^-, negative on beta_bar
    std::vector<bool> flipped;
    int epsilon = 1;
};

inline Polarization polarize(const RootDatum& rd, const std::vector<Weight>& weights, const Vec& beta_bar,
                             int base_orientation = 1) {
    Polarization p;
    int parity = 0;
    for (const auto& w : weights) {
        Rational s = rd.pairing(w.vector, beta_bar);
        if (s == 0)
            throw Error(Errc::ZeroPairing, "weight " + to_string(w.vector) + " pairs to zero with " + to_string(beta_bar));
        bool flip = s > 0;
        p.minus.push_back(flip ? Vec(-w.vector) : w.vector);
        p.flipped.push_back(flip);
        if (flip) parity += w.rank;
    }
    p.epsilon = (parity % 2 ? -base_orientation : base_orientation);
    return p;
}

// ---------------------------------------------------------------- inverse Euler series

// Elements of Q[c_{k,m}, z_k^{+-1}] truncated above total Chern degree cap.
class ChernSeries {
public:
    using Key = std::pair<ChernMonomial, std::vector<int>>;

    ChernSeries(std::size_t nweights, int cap) : n_(nweights), cap_(cap) {}

    static ChernSeries one(std::size_t n, int cap) {
        ChernSeries s(n, cap);
        s.add({{}, std::vector<int>(n, 0)}, 1);
        return s;
    }

    static int degree(const ChernMonomial& mu) {
        int d = 0;
        for (const auto& [k, m] : mu) d += m;
        return d;
    }

    void add(const Key& key, const Rational& c) {
        if (c == 0 || degree(key.first) > cap_) return;
        auto& slot = terms_[key];
        slot += c;
        if (slot == 0) terms_.erase(key);
    }

    const std::map<Key, Rational>& terms() const { return terms_; }
    std::size_t nweights() const { return n_; }
    int cap() const { return cap_; }

    friend ChernSeries operator*(const ChernSeries& a, const ChernSeries& b) {
        ChernSeries out(a.n_, a.cap_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                if (degree(ka.first) + degree(kb.first) > a.cap_) continue;
                ChernMonomial mu = ka.first;
                mu.insert(mu.end(), kb.first.begin(), kb.first.end());
                std::sort(mu.begin(), mu.end());
                std::vector<int> z(a.n_);
                for (std::size_t k = 0; k < a.n_; ++k) z[k] = ka.second[k] + kb.second[k];
                out.add({mu, z}, ca * cb);
            }
        return out;
    }
    ChernSeries& operator+=(const ChernSeries& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    friend bool operator==(const ChernSeries& a, const ChernSeries& b) { return a.terms_ == b.terms_; }

private:
    std::size_t n_;
    int cap_;
    std::map<Key, Rational> terms_;
};

// prod_k z_k^{r_k} (1 + sum_m c_{k,m} z_k^{-m})
inline ChernSeries euler_class_series(const std::vector<int>& ranks, int cap) {
    const std::size_t n = ranks.size();
    ChernSeries total = ChernSeries::one(n, cap);
    for (std::size_t k = 0; k < n; ++k) {
        ChernSeries f(n, cap);
        std::vector<int> z(n, 0);
        z[k] = ranks[k];
        f.add({{}, z}, 1);
        for (int m = 1; m <= ranks[k]; ++m) {
            z[k] = ranks[k] - m;
            f.add({{{static_cast<int>(k), m}}, z}, 1);
        }
        total = total * f;
    }
    return total;
}

// prod_k z_k^{-r_k} sum_l (-sum_m c_{k,m} z_k^{-m})^l; omit_ell drops one order (for negative tests).
inline ChernSeries inverse_euler_series(const std::vector<int>& ranks, int cap, std::optional<int> omit_ell = {}) {
    const std::size_t n = ranks.size();
    ChernSeries total = ChernSeries::one(n, cap);
    for (std::size_t k = 0; k < n; ++k) {
        ChernSeries base(n, cap), pre(n, cap);
        std::vector<int> z(n, 0);
        for (int m = 1; m <= ranks[k]; ++m) {
            z[k] = -m;
            base.add({{{static_cast<int>(k), m}}, z}, -1);
        }
        z[k] = -ranks[k];
        pre.add({{}, z}, 1);
        ChernSeries sum = ChernSeries::one(n, cap), power = ChernSeries::one(n, cap);
        for (int l = 1; l <= cap; ++l) {
            power = power * base;
            if (omit_ell && *omit_ell == l) continue;
            sum += power;
        }
        total = total * pre * sum;
    }
    return total;
}

inline std::vector<int> weight_ranks(const FixedPointDatum& d) {
    std::vector<int> r;
    for (const auto& w : d.weights) r.push_back(w.rank);
    return r;
}

inline bool eul_series_check(const FixedPointDatum& d, const ChernSeries& candidate) {
    ChernSeries prod = euler_class_series(weight_ranks(d), d.chern_degree_cap) * candidate;
    return prod == ChernSeries::one(d.weights.size(), d.chern_degree_cap);
}

inline bool eul_series_check(const FixedPointDatum& d) {
    return eul_series_check(d, inverse_euler_series(weight_ranks(d), d.chern_degree_cap));
}

namespace detail {

inline std::string chern_text(const ChernMonomial& mu) {
    if (mu.empty()) return "1";
    std::string s;
    for (const auto& [k, m] : mu) s += "c" + std::to_string(m) + "(V" + std::to_string(k) + ")";
    return s;
}

// xi-polynomial attached to a Chern monomial: sum over table entries of value * xi^e.
inline std::optional<Polynomial> table_polynomial(const FixedPointDatum& d, const ChernMonomial& mu) {
    std::optional<Polynomial> p;
    for (const auto& e : d.chern_table) {
        if (e.chern != mu) continue;
        if (!p) p = Polynomial(d.wall.directions.size());
        p->add_term(e.xi, e.value);
    }
    return p;
}

} // namespace detail

// epsilon * sum_mu n_mu T(mu, xi^0) prod_k H_{alpha_k^+}^{N_k(mu)}, based at 0.
inline ConeDistribution euler_inverse_fourier(const RootDatumPtr& rd, const FixedPointDatum& d, const Vec& beta_bar) {
    Polarization pol = polarize(*rd, d.weights, beta_bar, d.base_orientation);
    ConeDistribution out(rd);
    const ChernSeries series = inverse_euler_series(weight_ranks(d), d.chern_degree_cap);
    for (const auto& [key, n] : series.terms()) {
        auto p = detail::table_polynomial(d, key.first);
        if (!p) throw Error(Errc::MissingChernEntry, "no chern_table entry for " + detail::chern_text(key.first));
        ConeTerm t;
        t.coef = pol.epsilon * n * p->constant_term();
        t.base = Vec(rd->rank);
        for (std::size_t k = 0; k < d.weights.size(); ++k)
            for (int i = 0; i < -key.second[k]; ++i) t.gens.push_back(-pol.minus[k]);
        t.xi_poly = Polynomial::constant(0, 1);
        if (t.coef != 0) out.add_term(std::move(t));
    }
    return out;
}

// Eul(g_g/t, d) applied to the term sum for delta_beta * Eul^{-1} * (xi-moments) Leb_{Delta}.
inline ConeDistribution contribution(const Model& model, const FixedPointDatum& d) {
    const RootDatumPtr& rd = model.rd;
    Vec beta_bar = d.beta - model.gamma;
    Polarization pol = polarize(*rd, d.weights, beta_bar, d.base_orientation);
    ConeDistribution raw(rd);
    const ChernSeries series = inverse_euler_series(weight_ranks(d), d.chern_degree_cap);
    for (const auto& [key, n] : series.terms()) {
        auto p = detail::table_polynomial(d, key.first);
        if (!p) throw Error(Errc::MissingChernEntry, "no chern_table entry for " + detail::chern_text(key.first));
        if (p->is_zero()) continue;
        ConeTerm t;
        t.coef = pol.epsilon * n;
        t.base = d.beta;
        for (std::size_t k = 0; k < d.weights.size(); ++k)
            for (int i = 0; i < -key.second[k]; ++i) t.gens.push_back(-pol.minus[k]);
        t.leb = d.wall.directions;
        t.xi_poly = *p;
        raw.add_term(std::move(t));
    }
    return apply_diff_op(euler_operator(*rd, d.beta, d.sgn_g), raw);
}

// ---------------------------------------------------------------- wall generation

struct Instance {
    Wall wall;
    Vec beta;                           // pr_Delta(gamma), or w(beta_source) for Weyl-routed walls
    Rational dist2;                     // |beta - gamma|^2
    std::optional<std::size_t> datum;   // fundamental datum index, if the wall carries one
    std::size_t fundamental_wall = 0;
    Vec lambda;                         // lattice translation of the fundamental wall
    std::size_t weyl = 0;               // 0 for directly translated walls
    Wall source_wall;
    Vec source_beta;
};

namespace detail {

inline double norm(const RootDatum& rd, const Vec& x) { return std::sqrt(std::max(0.0, to_double(rd.norm2(x)))); }

inline std::optional<std::size_t> datum_for_wall(const Model& m, std::size_t wall_index) {
    for (std::size_t i = 0; i < m.data.size(); ++i)
        if (m.data[i].wall_id == m.wall_ids[wall_index]) return i;
    return std::nullopt;
}

// Primitive lattice vectors spanning Lambda cap dir(wall), as far as needed for the search bound.
inline std::vector<Vec> wall_periods(const RootDatum& rd, const Wall& w) {
    const auto& lat = rd.integral_lattice_basis;
    if (w.directions.empty()) return {};
    if (w.normals.empty()) return lat;
    std::vector<Vec> out;
    for (const auto& d : w.directions) {
        Vec n = *coordinates_in(lat, d);
        mpz_class l = 1, g = 0;
        for (const auto& q : n) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        for (const auto& q : n) {
            Rational s = q * l;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num().get_mpz_t());
        }
        Vec p(rd.rank);
        for (std::size_t j = 0; j < lat.size(); ++j) p += Rational(Rational(n[j] * l) / g) * lat[j];
        out.push_back(p);
    }
    return out;
}

inline bool gamma_weyl_invariant(const Model& m) {
    for (std::size_t w = 0; w < m.rd->weyl_elements.size(); ++w)
        if (weyl_apply(*m.rd, w, m.gamma) != m.gamma) return false;
    return true;
}

} // namespace detail

// Every wall (and its critical value) within distance radius of gamma.
inline std::vector<Instance> enumerate_instances(const Model& m, double radius) {
    const RootDatum& rd = *m.rd;
    const double eps = 1e-9 * (1.0 + radius);
    std::map<WallKey, Instance> found;
    const auto& lat = rd.integral_lattice_basis;
    Mat lgram(lat.size(), lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i)
        for (std::size_t j = 0; j < lat.size(); ++j) lgram(i, j) = rd.pairing(lat[i], lat[j]);
    Mat linv = *inverse(lgram);

    for (std::size_t wi = 0; wi < m.walls.size(); ++wi) {
        const Wall& fw = m.walls[wi];
        auto datum = detail::datum_for_wall(m, wi);
        auto make = [&](const Vec& lambda) {
            Wall w = translate_wall(fw, lambda);
            WallKey key = wall_key(rd, w);
            if (found.count(key)) return;
            Vec beta = wall_project(rd, w, m.gamma);
            Rational d2 = rd.norm2(beta - m.gamma);
            if (std::sqrt(to_double(d2)) > radius + eps) return;
            found.emplace(key, Instance{w, beta, d2, datum, wi, lambda, 0, w, beta});
        };
        if (fw.is_full() || !m.generate_lattice) {
            make(Vec(rd.rank));
            continue;
        }
        double bound = detail::norm(rd, m.gamma) + radius + detail::norm(rd, wall_project(rd, fw, Vec(rd.rank)));
        for (const auto& p : detail::wall_periods(rd, fw)) bound += detail::norm(rd, p);
        std::vector<long> reach(lat.size());
        for (std::size_t i = 0; i < lat.size(); ++i)
            reach[i] = static_cast<long>(std::ceil(bound * std::sqrt(to_double(linv(i, i))))) + 1;
        std::vector<long> idx(lat.size());
        for (std::size_t i = 0; i < lat.size(); ++i) idx[i] = -reach[i];
        while (true) {
            Vec lambda(rd.rank);
            for (std::size_t i = 0; i < lat.size(); ++i) lambda += Rational(idx[i]) * lat[i];
            if (detail::norm(rd, lambda) <= bound + eps) make(lambda);
            std::size_t p = 0;
            while (p < idx.size() && idx[p] == reach[p]) {
                idx[p] = -reach[p];
                ++p;
            }
            if (p == idx.size()) break;
            ++idx[p];
        }
    }

    if (m.generate_weyl) {
        std::vector<Instance> direct;
        for (const auto& [k, inst] : found) direct.push_back(inst);
        for (const auto& inst : direct)
            for (std::size_t w = 1; w < rd.weyl_elements.size(); ++w) {
                Wall img = weyl_image(rd, w, inst.wall);
                WallKey key = wall_key(rd, img);
                if (found.count(key)) continue;
                bool reachable = false;
                for (const auto& fw : m.walls)
                    if (m.generate_lattice && lattice_translate(rd, fw, img)) reachable = true;
                // A lattice translate missing here lies beyond the radius; it is not a Weyl image.
                if (reachable) continue;
                if (!detail::gamma_weyl_invariant(m))
                    throw Error(Errc::InvalidModel, "wall through " + to_string(img.basepoint) +
                                                        " is only reachable through W, which requires W-invariant gamma");
                Vec beta = weyl_apply(rd, w, inst.beta);
                Instance wi{img, beta, rd.norm2(beta - m.gamma), inst.datum, inst.fundamental_wall,
                            inst.lambda, w, inst.wall, inst.beta};
                found.emplace(key, std::move(wi));
            }
    }

    std::vector<Instance> out;
    for (auto& [k, inst] : found) out.push_back(std::move(inst));
    std::stable_sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) {
        if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
        return a.beta < b.beta;
    });
    return out;
}

inline double window_radius(const Model& m, const Box& box) {
    Rational best = 0;
    for (const auto& c : box.corners()) best = std::max(best, m.rd->norm2(c));
    return std::sqrt(to_double(best)) + detail::norm(*m.rd, m.gamma);
}

// ---------------------------------------------------------------- genericity

struct GenericityReport {
    bool generic = true;
    bool allowed = false;
    std::vector<std::string> diagnostics;

    bool ok() const { return generic || allowed; }
};

inline GenericityReport genericity_check(const Model& m) {
    const RootDatum& rd = *m.rd;
    GenericityReport rep;
    rep.allowed = m.allow_nongeneric_gamma;
    auto walls = enumerate_instances(m, window_radius(m, m.window_default));
    for (const auto& big : walls) {
        Vec pb = wall_project(rd, big.wall, m.gamma);
        for (const auto& small : walls) {
            if (small.wall.directions.size() >= big.wall.directions.size()) continue;
            bool nested = wall_contains(rd, big.wall, small.wall.basepoint);
            for (const auto& d : small.wall.directions)
                if (!wall_contains(rd, big.wall, small.wall.basepoint + d)) nested = false;
            if (nested && wall_project(rd, small.wall, m.gamma) == pb) {
                rep.generic = false;
                rep.diagnostics.push_back("nested walls project gamma to the same point " + to_string(pb));
            }
        }
        for (const auto& h : stiefel_face_hyperplanes(rd, pb)) {
            bool inside = std::all_of(big.wall.directions.begin(), big.wall.directions.end(),
                                      [&](const Vec& d) { return rd.pairing(h.root, d) == 0; });
            if (inside) continue;
            rep.generic = false;
            rep.diagnostics.push_back("projection " + to_string(pb) + " lies on the Stiefel hyperplane <" +
                                      to_string(h.root) + ",x> = " + to_string(h.level) +
                                      " which does not contain the wall through " + to_string(big.wall.basepoint));
            break;
        }
    }
    return rep;
}

inline void require_generic(const Model& m) {
    auto rep = genericity_check(m);
    if (!rep.ok())
        throw Error(Errc::NonGenericGamma, rep.diagnostics.empty() ? std::string("gamma") : rep.diagnostics.front());
}

// ---------------------------------------------------------------- contributions and sums

struct CriticalValue {
    Wall wall;
    Vec beta;
};

inline std::vector<CriticalValue> critical_values(const Model& m, const Box& box) {
    require_generic(m);
    std::vector<CriticalValue> out;
    for (auto& inst : enumerate_instances(m, window_radius(m, box)))
        if (wall_meets_box(inst.wall, box)) out.push_back({inst.wall, inst.beta});
    return out;
}

inline FixedPointDatum transported_datum(const Model& m, const Instance& inst) {
    FixedPointDatum d = m.data.at(*inst.datum);
    d.wall = inst.source_wall;
    d.beta = inst.source_beta;
    return d;
}

inline ConeDistribution instance_contribution(const Model& m, const Instance& inst) {
    ConeDistribution c = contribution(m, transported_datum(m, inst));
    if (inst.weyl == 0) return c;
    const auto& we = m.rd->weyl(inst.weyl);
    return scale(we.length % 2 ? -1 : 1, weyl_pushforward(*m.rd, inst.weyl, c));
}

struct LocatedContribution {
    Instance instance;
    ConeDistribution dist;
};

// All contributions whose support meets the box, ordered by |beta - gamma|.
inline std::vector<LocatedContribution> contributions_in(const Model& m, const Box& box) {
    if (box.dim() != m.rd->rank || box.hi.size() != m.rd->rank)
        throw Error(Errc::InvalidWindow, "window dimension differs from the rank");
    std::vector<LocatedContribution> out;
    if (box.empty()) return out;
    require_generic(m);
    for (auto& inst : enumerate_instances(m, window_radius(m, box))) {
        if (!inst.datum) continue;
        ConeDistribution c = instance_contribution(m, inst);
        if (support_meets_box(c, box)) out.push_back({std::move(inst), std::move(c)});
    }
    return out;
}

inline ConeDistribution partial_sum(const Model& m, const Box& box) {
    ConeDistribution total(m.rd);
    for (const auto& lc : contributions_in(m, box)) total = add(total, lc.dist);
    return total;
}

// The count contributions nearest to gamma; errors if the cut splits equidistant values.
inline std::vector<LocatedContribution> nearest_contributions(const Model& m, std::size_t count) {
    require_generic(m);
    double radius = 1.0;
    for (int round = 0; round < 40; ++round, radius *= 2) {
        std::vector<Instance> within;
        for (auto& inst : enumerate_instances(m, radius))
            if (inst.datum && std::sqrt(to_double(inst.dist2)) <= radius) within.push_back(std::move(inst));
        if (within.size() < count && m.generate_lattice) continue;
        if (within.size() > count && count > 0 && within[count].dist2 == within[count - 1].dist2)
            throw Error(Errc::AmbiguousCount, "the first " + std::to_string(count) +
                                                  " contributions are not determined by distance");
        std::vector<LocatedContribution> out;
        for (std::size_t i = 0; i < std::min(count, within.size()); ++i)
            out.push_back({within[i], instance_contribution(m, within[i])});
        return out;
    }
    throw Error(Errc::InvalidModel, "fewer contribution-carrying walls than requested");
}

inline ConeDistribution nearest_sum(const Model& m, std::size_t count) {
    ConeDistribution total(m.rd);
    for (const auto& lc : nearest_contributions(m, count)) total = add(total, lc.dist);
    return total;
}

struct OrbitContribution {
    std::size_t weyl;
    Vec beta;
    ConeDistribution dist;
};

// m_{w beta} = (-1)^{l(w)} w_* m_beta over coset representatives of the stabilizer of beta.
inline std::vector<OrbitContribution> weyl_orbit_contributions(const Model& m, const FixedPointDatum& d) {
    ConeDistribution base = contribution(m, d);
    std::vector<OrbitContribution> out;
    for (std::size_t w = 0; w < m.rd->weyl_elements.size(); ++w) {
        Vec b = weyl_apply(*m.rd, w, d.beta);
        bool seen = std::any_of(out.begin(), out.end(), [&](const OrbitContribution& o) { return o.beta == b; });
        if (seen) continue;
        int s = m.rd->weyl(w).length % 2 ? -1 : 1;
        out.push_back({w, b, scale(s, weyl_pushforward(*m.rd, w, base))});
    }
    return out;
}

} // namespace dhloc
