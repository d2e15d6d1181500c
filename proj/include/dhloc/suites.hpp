#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "models.hpp"

namespace dhloc {

// Random rationals and configurations for property checks.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long num_bound, long den_bound) {
        return frac(integer(-num_bound, num_bound), integer(1, den_bound));
    }

    Vec vec(std::size_t n, long num_bound, long den_bound) {
        Vec v(n);
        for (auto& x : v) x = rational(num_bound, den_bound);
        return v;
    }

    Vec nonzero_vec(std::size_t n, long num_bound, long den_bound) {
        while (true) {
            Vec v = vec(n, num_bound, den_bound);
            if (!v.is_zero()) return v;
        }
    }

    // Vectors with positive Euclidean pairing against u, so every cone they generate is pointed.
    Vec vec_in_halfspace(const Vec& u, long num_bound, long den_bound) {
        while (true) {
            Vec v = vec(u.size(), num_bound, den_bound);
            if (dot(u, v) > 0) return v;
        }
    }

    // Points with large prime denominators, which avoid walls through small rationals almost surely.
    Vec sample_point(std::size_t n, long half_width) {
        Vec v(n);
        for (auto& x : v) x = frac(integer(-half_width * 7919, half_width * 7919), 7919);
        return v;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// A spanning, pointed configuration of m vectors in the plane.
inline VectorConfig random_spanning_config(Gen& g, std::size_t m) {
    Vec u = g.nonzero_vec(2, 3, 1);
    while (true) {
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < m; ++i) vs.push_back(g.vec_in_halfspace(u, 4, 3));
        VectorConfig c(2, vs);
        if (c.spans()) return c;
    }
}

// Evaluates f at a random point, redrawing on walls; gives up after many tries.
template <class F>
inline bool at_generic_point(Gen& g, std::size_t n, long half_width, F&& f) {
    for (int tries = 0; tries < 100; ++tries) {
        Vec x = g.sample_point(n, half_width);
        try {
            return f(x);
        } catch (const Error& e) {
            if (e.code() != Errc::NonGenericPoint) throw;
        }
    }
    return false;
}

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

inline std::string check_json_line(const CheckResult& r) {
    json j{{"suite", r.suite}, {"check", r.name}, {"pass", r.pass}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j.dump();
}

namespace suites {

using Results = std::vector<CheckResult>;

inline void record(Results& out, const std::string& suite, const std::string& name, const std::function<bool()>& f) {
    try {
        out.push_back({suite, name, f(), ""});
    } catch (const std::exception& e) {
        out.push_back({suite, name, false, e.what()});
    }
}

inline Results algebra(std::uint64_t seed) {
    Results out;
    auto rd = std::make_shared<const RootDatum>(build_root_datum(RootType::A2));
    Gen g(seed);
    auto cone = [&](const Vec& u, std::size_t m) {
        ConeDistribution d = delta(rd, g.vec(2, 3, 2));
        while (true) {
            std::vector<Vec> gens;
            for (std::size_t i = 0; i < m; ++i) gens.push_back(g.vec_in_halfspace(u, 3, 2));
            if (rank(gens, 2) < 2) continue;
            for (const auto& v : gens) d = convolve(d, heaviside(rd, v));
            return d;
        }
    };
    auto law = [&](const std::string& name, auto&& make_pair) {
        record(out, "algebra", name, [&] {
            for (int i = 0; i < 10; ++i) {
                Vec u = g.nonzero_vec(2, 2, 1);
                auto [lhs, rhs] = make_pair(u);
                if (!at_generic_point(g, 2, 6, [&](const Vec& x) { return density_at(lhs, x) == density_at(rhs, x); }))
                    return false;
            }
            return true;
        });
    };
    law("commutativity", [&](const Vec& u) {
        auto a = cone(u, 2), b = heaviside(rd, g.vec_in_halfspace(u, 3, 2));
        return std::pair(convolve(a, b), convolve(b, a));
    });
    law("associativity", [&](const Vec& u) {
        auto a = cone(u, 2), b = heaviside(rd, g.vec_in_halfspace(u, 3, 2));
        auto c = add(delta(rd, g.vec(2, 2, 3)), scale(g.rational(3, 2), heaviside(rd, g.vec_in_halfspace(u, 3, 2))));
        return std::pair(convolve(convolve(a, b), c), convolve(a, convolve(b, c)));
    });
    law("delta-identity", [&](const Vec& u) {
        auto a = cone(u, 3);
        return std::pair(convolve(delta(rd, Vec(2)), a), convolve(a, delta(rd, Vec(2))));
    });
    law("translate-is-convolve", [&](const Vec& u) {
        auto a = cone(u, 2);
        Vec v = g.vec(2, 3, 2);
        return std::pair(translate(v, a), convolve(delta(rd, v), a));
    });
    law("pushforward-multiplicative", [&](const Vec& u) {
        auto a = cone(u, 2), b = heaviside(rd, g.vec_in_halfspace(u, 3, 2));
        auto w = static_cast<std::size_t>(g.integer(0, 5));
        return std::pair(weyl_pushforward(*rd, w, convolve(a, b)),
                         convolve(weyl_pushforward(*rd, w, a), weyl_pushforward(*rd, w, b)));
    });
    return out;
}

inline Results truncpow(std::uint64_t seed) {
    Results out;
    record(out, "truncpow", "examples", [] {
        return trunc_power_eval(VectorConfig(1, {Vec{1}, Vec{1}}), Vec{3}) == 3 &&
               trunc_power_eval(VectorConfig(1, {Vec{-1}, Vec{-1}}), Vec{frac(-1, 2)}) == frac(1, 2) &&
               trunc_power_eval(VectorConfig(2, {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}}), Vec{2, 1}) == 1;
    });
    record(out, "truncpow", "mc-oracle", [seed] {
        Gen g(seed);
        for (int c = 0; c < 20; ++c) {
            auto cfg = random_spanning_config(g, static_cast<std::size_t>(g.integer(2, 5)));
            for (int p = 0; p < 10; ++p) {
                bool ok = at_generic_point(g, 2, 4, [&](const Vec& x) {
                    double exact = to_double(trunc_power_eval(cfg, x));
                    double mc = mc_fiber_volume(cfg, x, 100000, g.engine()());
                    return std::abs(exact - mc) / std::max(std::abs(exact), 1.0) <= 0.01;
                });
                if (!ok) return false;
            }
        }
        return true;
    });
    record(out, "truncpow", "homogeneity", [seed] {
        Gen g(seed + 1);
        for (int c = 0; c < 10; ++c) {
            auto cfg = random_spanning_config(g, static_cast<std::size_t>(g.integer(2, 5)));
            Rational lam = frac(g.integer(1, 40), g.integer(1, 9));
            bool ok = at_generic_point(g, 2, 4, [&](const Vec& x) {
                Rational f = trunc_power_eval(cfg, x), fl = trunc_power_eval(cfg, lam * x);
                Rational p = 1;
                for (std::size_t i = 2; i < cfg.size(); ++i) p *= lam;
                return fl == p * f;
            });
            if (!ok) return false;
        }
        return true;
    });
    record(out, "truncpow", "derivative-fd", [seed] {
        Gen g(seed + 2);
        const Rational h = frac(1, 1000000);
        int done = 0;
        while (done < 10) {
            auto cfg = random_spanning_config(g, static_cast<std::size_t>(g.integer(4, 5)));
            Vec v = g.nonzero_vec(2, 3, 2);
            auto terms = trunc_power_derivative(cfg, v);
            bool spanning = true;
            for (const auto& t : terms) spanning = spanning && t.config.spans();
            if (!spanning) continue;
            bool ok = at_generic_point(g, 2, 4, [&](const Vec& x) {
                Rational d = 0;
                for (const auto& t : terms) d += t.coefficient * trunc_power_eval(t.config, x);
                Rational fd = (trunc_power_eval(cfg, x + h * v) - trunc_power_eval(cfg, x - h * v)) / (2 * h);
                return std::abs(to_double(fd - d)) <= 1e-6 * std::max(std::abs(to_double(d)), 1.0);
            });
            if (!ok) return false;
            ++done;
        }
        return true;
    });
    return out;
}

inline Results s4_golden() {
    Results out;
    Model m = builtin_s4();
    auto sum = partial_sum(m, Box{Vec{frac(-13, 5)}, Vec{frac(18, 5)}});
    record(out, "s4-golden", "alternating-series", [&] {
        const long xs[] = {-5, -3, -1, 1, 3, 5, 7};
        int expect = -1;
        for (long x : xs) {
            if (density_at(sum, Vec{frac(x, 2)}) != expect) return false;
            expect = -expect;
        }
        return true;
    });
    record(out, "s4-golden", "contribution-at-0", [&] {
        auto c = contribution(m, m.data[1]);
        return density_at(c, Vec{frac(-1, 3)}) == -2 && density_at(c, Vec{frac(5, 7)}) == 0;
    });
    record(out, "s4-golden", "central", [&] {
        auto c = contribution(m, m.data[0]);
        return density_at(c, Vec{frac(-9, 4)}) == 1 && density_at(c, Vec{frac(13, 3)}) == 1;
    });
    return out;
}

inline Results woodward() {
    Results out;
    Model m = builtin_woodward_su3();
    record(out, "woodward", "a-b-c", [&] {
        auto orbit = weyl_orbit_contributions(m, m.data[0]);
        ConeDistribution abc(m.rd);
        for (const auto& o : orbit)
            if (o.beta == Vec{frac(1, 4), frac(1, 4)} || o.beta == Vec{frac(1, 2), frac(-1, 4)} ||
                o.beta == Vec{frac(-1, 4), frac(1, 2)})
                abc = add(abc, o.dist);
        return density_at(abc, Vec{frac(1, 3), frac(1, 3)}) == 1 &&
               density_at(abc, Vec{frac(15, 14), frac(15, 14)}) == -1 &&
               density_at(abc, Vec{frac(26, 21), frac(-23, 14)}) == -1 &&
               density_at(abc, Vec{frac(-23, 14), frac(26, 21)}) == -1 &&
               density_at(abc, Vec{frac(-3, 10), frac(1, 10)}) == 0;
    });
    record(out, "woodward", "six", [&] {
        auto six = nearest_sum(m, 6);
        return density_at(six, Vec{frac(1, 3), frac(1, 3)}) == 1 &&
               density_at(six, Vec{frac(-1, 3), frac(2, 3)}) == -1 &&
               density_at(six, Vec{frac(4, 5), frac(4, 5)}) == -1;
    });
    record(out, "woodward", "twelve", [&] {
        auto twelve = nearest_sum(m, 12);
        return density_at(twelve, Vec{frac(2, 3), frac(2, 3)}) == -1 &&
               density_at(twelve, Vec{frac(4, 3), frac(1, 3)}) == 1 &&
               density_at(twelve, Vec{frac(4, 5), frac(4, 5)}) == 0;
    });
    return out;
}

inline bool weyl_antisymmetric(const Model& m, const ConeDistribution& d, const Box& window, const std::vector<Vec>& pts) {
    const RootDatum& rd = *m.rd;
    for (const auto& x : pts) {
        Rational v = density_at(d, x);
        for (std::size_t w = 0; w < rd.weyl_elements.size(); ++w) {
            Vec wx = weyl_apply(rd, w, x);
            if (!window.contains(wx)) continue;
            int s = rd.weyl(w).length % 2 ? -1 : 1;
            if (density_at(d, wx) != s * v) return false;
        }
    }
    return true;
}

inline Results antisymmetry(std::uint64_t seed) {
    Results out;
    Gen g(seed);
    Model s4 = builtin_s4();
    Box w1{Vec{-4}, Vec{4}};
    auto d1 = partial_sum(s4, w1);
    record(out, "antisymmetry", "s4-flip", [&] {
        for (int i = 0; i < 20; ++i)
            if (!at_generic_point(g, 1, 3, [&](const Vec& x) { return density_at(d1, -x) == -density_at(d1, x); }))
                return false;
        return true;
    });
    record(out, "antisymmetry", "s4-period", [&] {
        for (int i = 0; i < 20; ++i)
            if (!at_generic_point(g, 1, 1, [&](const Vec& x) {
                    return density_at(d1, x + Vec{2}) == density_at(d1, x);
                }))
                return false;
        return true;
    });
    Model su3 = builtin_woodward_su3();
    Box w2{Vec{-2, -2}, Vec{2, 2}};
    auto d2 = partial_sum(su3, w2);
    record(out, "antisymmetry", "su3-weyl", [&] {
        std::vector<Vec> pts;
        for (int i = 0; i < 20; ++i) pts.push_back(g.sample_point(2, 1));
        return weyl_antisymmetric(su3, d2, w2, pts);
    });
    return out;
}

inline Results series(std::uint64_t seed) {
    Results out;
    record(out, "series", "builtin-data", [] {
        for (const Model& m : {builtin_s4(), builtin_woodward_su3()})
            for (const auto& d : m.data)
                if (!eul_series_check(d)) return false;
        return true;
    });
    record(out, "series", "random-tables", [seed] {
        Gen g(seed);
        for (int i = 0; i < 10; ++i) {
            FixedPointDatum d;
            d.chern_degree_cap = static_cast<int>(g.integer(0, 3));
            for (long k = g.integer(1, 3); k > 0; --k) d.weights.push_back({Vec{1}, static_cast<int>(g.integer(1, 3))});
            if (!eul_series_check(d)) return false;
        }
        return true;
    });
    record(out, "series", "corrupted-rejected", [] {
        FixedPointDatum d;
        d.weights = {{Vec{1}, 1}};
        d.chern_degree_cap = 2;
        return !eul_series_check(d, inverse_euler_series({1}, 2, 2));
    });
    return out;
}

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> n{"algebra", "truncpow", "s4-golden", "woodward", "antisymmetry", "series"};
    return n;
}

// Throws std::out_of_range for an unknown tag.
inline Results run(const std::string& tag, std::uint64_t seed) {
    if (tag == "algebra") return algebra(seed);
    if (tag == "truncpow") return truncpow(seed);
    if (tag == "s4-golden") return s4_golden();
    if (tag == "woodward") return woodward();
    if (tag == "antisymmetry") return antisymmetry(seed);
    if (tag == "series") return series(seed);
    if (tag == "all") {
        Results all;
        for (const auto& n : names()) {
            auto r = run(n, seed);
            all.insert(all.end(), r.begin(), r.end());
        }
        return all;
    }
    throw std::out_of_range("unknown suite '" + tag + "'");
}

} // namespace suites

} // namespace dhloc
