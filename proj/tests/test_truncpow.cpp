#include "catch_amalgamated.hpp"

#include <random>

#include "dhloc/truncpow.hpp"

using namespace dhloc;

namespace {

VectorConfig cfg1(std::initializer_list<long> xs) {
    std::vector<Vec> vs;
    for (long x : xs) vs.push_back(Vec{x});
    return VectorConfig(1, vs);
}

VectorConfig random_config(std::mt19937_64& rng, std::size_t m) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    while (true) {
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < m; ++i) {
            Vec v{frac(num(rng), den(rng)), frac(num(rng) + 5, den(rng))};
            if (!v.is_zero()) vs.push_back(v);
        }
        VectorConfig c(2, vs);
        if (c.size() == m && c.spans()) return c;
    }
}

Vec random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-30000, 30000);
    return Vec{frac(num(rng), 7919), frac(num(rng), 7919)};
}

} // namespace

TEST_CASE("truncated power values") {
    CHECK(trunc_power_eval(cfg1({1, 1}), Vec{3}) == 3);
    CHECK(trunc_power_eval(cfg1({-1, -1}), Vec{frac(-1, 2)}) == frac(1, 2));
    CHECK(trunc_power_eval(cfg1({1}), Vec{2}) == 1);
    CHECK(trunc_power_eval(cfg1({1}), Vec{-1}) == 0);
    CHECK(trunc_power_eval(cfg1({2, 1, 1}), Vec{4}) == 4);
    VectorConfig tri(2, {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}});
    CHECK(trunc_power_eval(tri, Vec{2, 1}) == 1);
    CHECK(trunc_power_eval(tri, Vec{frac(1, 3), frac(5, 2)}) == frac(1, 3));
    CHECK(trunc_power_eval(tri, Vec{-1, frac(1, 2)}) == 0);
    VectorConfig quad(2, {Vec{1, 0}, Vec{0, 1}});
    CHECK(trunc_power_eval(quad, Vec{frac(1, 3), frac(2, 5)}) == 1);
}

TEST_CASE("truncated power errors") {
    VectorConfig tri(2, {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}});
    CHECK_THROWS_AS(trunc_power_eval(tri, Vec{1, 1}), Error);
    try {
        trunc_power_eval(tri, Vec{1, 1});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonGenericPoint);
    }
    try {
        trunc_power_eval(VectorConfig(2, {Vec{1, 0}}), Vec{1, 1});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotAbsolutelyContinuous);
    }
    try {
        trunc_power_eval(cfg1({1, -1}), Vec{1});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPointed);
    }
    CHECK_THROWS_AS(VectorConfig(2, {Vec{0, 0}}), Error);
    CHECK_THROWS_AS(VectorConfig(2, {Vec{1}}), Error);
}

TEST_CASE("cone membership") {
    CHECK(cone_contains(cfg1({1}), Vec{2}));
    CHECK_FALSE(cone_contains(cfg1({1}), Vec{-2}));
    VectorConfig c(2, {Vec{1, 0}, Vec{1, 1}});
    CHECK_FALSE(cone_contains(c, Vec{1, 2}));
    CHECK(cone_contains(c, Vec{2, 1}));
    CHECK(cone_contains(c, Vec{1, 1}));
}

TEST_CASE("derivative rule") {
    auto d = trunc_power_derivative(cfg1({-1, -1}), Vec{1});
    REQUIRE(d.size() == 1);
    CHECK(d[0].coefficient == -1);
    CHECK(d[0].config.vectors == std::vector<Vec>{Vec{-1}});

    auto h = trunc_power_derivative(cfg1({1}), Vec{1});
    REQUIRE(h.size() == 1);
    CHECK(h[0].coefficient == 1);
    CHECK(h[0].config.empty());

    auto q = trunc_power_derivative(VectorConfig(2, {Vec{1, 0}, Vec{0, 1}}), Vec{1, 1});
    REQUIRE(q.size() == 2);
    CHECK(q[0].coefficient == 1);
    CHECK(q[1].coefficient == 1);
    CHECK(q[0].config.vectors == std::vector<Vec>{Vec{0, 1}});
    CHECK(q[1].config.vectors == std::vector<Vec>{Vec{1, 0}});

    CHECK_THROWS_AS(trunc_power_derivative(VectorConfig(2, {Vec{1, 0}}), Vec{0, 1}), Error);
}

TEST_CASE("derivative matches finite differences") {
    std::mt19937_64 rng(11);
    const Rational h = frac(1, 1000000);
    int checked = 0;
    while (checked < 20) {
        auto cfg = random_config(rng, 4);
        Vec v = random_point(rng);
        auto terms = trunc_power_derivative(cfg, v);
        bool spanning = true;
        for (const auto& t : terms) spanning = spanning && t.config.spans();
        Vec x = random_point(rng);
        if (!spanning || !is_generic(cfg, x)) continue;
        Rational d = 0;
        for (const auto& t : terms) d += t.coefficient * trunc_power_eval(t.config, x);
        Rational fd = (trunc_power_eval(cfg, x + h * v) - trunc_power_eval(cfg, x - h * v)) / (2 * h);
        CHECK(std::abs(to_double(fd - d)) <= 1e-6 * std::max(1.0, std::abs(to_double(d))));
        ++checked;
    }
}

TEST_CASE("homogeneity") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 15; ++i) {
        auto cfg = random_config(rng, 2 + i % 4);
        Vec x = random_point(rng);
        if (!is_generic(cfg, x)) continue;
        Rational lam = frac(static_cast<long>(rng() % 17) + 1, static_cast<long>(rng() % 5) + 1);
        Rational p = 1;
        for (std::size_t k = 2; k < cfg.size(); ++k) p *= lam;
        CHECK(trunc_power_eval(cfg, lam * x) == p * trunc_power_eval(cfg, x));
    }
}

TEST_CASE("Monte Carlo fiber volume") {
    CHECK(mc_fiber_volume(cfg1({1, 1}), Vec{3}, 100000, 1) == Catch::Approx(3).epsilon(0.01));
    VectorConfig tri(2, {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}});
    CHECK(mc_fiber_volume(tri, Vec{2, 1}, 100000, 2) == Catch::Approx(1).epsilon(0.01));
    CHECK(mc_fiber_volume(tri, Vec{-1, 2}, 1000, 3) == 0.0);
    CHECK(mc_fiber_volume(tri, Vec{2, 1}, 1000, 9) == mc_fiber_volume(tri, Vec{2, 1}, 1000, 9));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) {
        auto cfg = random_config(rng, 3 + i % 3);
        Vec x = random_point(rng);
        if (!is_generic(cfg, x)) continue;
        double exact = to_double(trunc_power_eval(cfg, x));
        CHECK(std::abs(mc_fiber_volume(cfg, x, 100000, rng()) - exact) <= 0.01 * std::max(1.0, std::abs(exact)));
    }
}
