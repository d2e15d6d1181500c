#include "catch_amalgamated.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "dhloc/models.hpp"

using namespace dhloc;

namespace {

const Vec a{frac(1, 4), frac(1, 4)};
const Vec b{frac(1, 2), frac(-1, 4)};
const Vec c{frac(-1, 4), frac(1, 2)};

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::Parse;
}

std::vector<Vec> s4_samples() {
    std::vector<Vec> out;
    for (long n = -9; n <= 9; ++n) out.push_back(Vec{frac(4 * n + 1, 8)});
    return out;
}

} // namespace

TEST_CASE("polarization") {
    auto rd = build_root_datum(RootType::A1);
    auto p = polarize(rd, {{Vec{1}, 1}, {Vec{-1}, 1}}, Vec{frac(-1, 4)});
    CHECK(p.minus == std::vector<Vec>{Vec{1}, Vec{1}});
    CHECK(p.flipped == std::vector<bool>{false, true});
    CHECK(p.epsilon == -1);
    auto q = polarize(rd, {{Vec{1}, 1}}, Vec{-1}, -1);
    CHECK(q.flipped == std::vector<bool>{false});
    CHECK(q.epsilon == -1);
    CHECK(polarize(rd, {{Vec{-1}, 2}}, Vec{-1}).epsilon == 1);
    CHECK(code_of([&] { polarize(rd, {{Vec{1}, 1}}, Vec{0}); }) == Errc::ZeroPairing);
}

TEST_CASE("inverse Fourier transform of the inverse Euler class") {
    auto rd = std::make_shared<const RootDatum>(build_root_datum(RootType::A1));
    Model s4 = builtin_s4();
    auto e = euler_inverse_fourier(rd, s4.data[1], Vec{frac(-1, 4)});
    REQUIRE(e.terms().size() == 1);
    CHECK(to_string(e.terms()[0]) == "-1 · δ_(0) ⋆ H_(-1)^2");
    CHECK(density_at(e, Vec{frac(-1, 2)}) == frac(-1, 2));

    Model su3 = builtin_woodward_su3();
    auto f = euler_inverse_fourier(su3.rd, su3.data[0], su3.data[0].beta - su3.gamma);
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms()[0].gens == std::vector<Vec>{Vec{frac(1, 2), frac(1, 2)}});

    FixedPointDatum line;
    line.wall = Wall{Vec{0}, {}, {Vec{1}}};
    line.beta = Vec{0};
    line.weights = {{Vec{1}, 1}};
    line.chern_degree_cap = 1;
    line.chern_table = {{{}, {}, 1}, {{{0, 1}}, {}, frac(2, 3)}};
    auto g = euler_inverse_fourier(rd, line, Vec{-1});
    auto expect = add(heaviside(rd, Vec{-1}), scale(frac(-2, 3), heaviside(rd, Vec{-1}, 2)));
    CHECK(equal_on_samples(g, expect, {Vec{frac(-1, 3)}, Vec{frac(-7, 2)}, Vec{frac(5, 2)}}));
    CHECK(eul_series_check(line));

    line.chern_table.pop_back();
    CHECK(code_of([&] { euler_inverse_fourier(rd, line, Vec{-1}); }) == Errc::MissingChernEntry);
}

TEST_CASE("series identity") {
    FixedPointDatum d;
    d.weights = {{Vec{1}, 1}};
    CHECK(eul_series_check(d));
    d.chern_degree_cap = 2;
    CHECK(eul_series_check(d));
    CHECK_FALSE(eul_series_check(d, inverse_euler_series({1}, 2, 2)));
    d.weights = {{Vec{1}, 2}, {Vec{1, 1}, 3}};
    d.chern_degree_cap = 3;
    CHECK(eul_series_check(d));
    CHECK_FALSE(eul_series_check(d, inverse_euler_series({2, 3}, 3, 1)));

    std::mt19937_64 rng(8);
    for (int i = 0; i < 10; ++i) {
        FixedPointDatum r;
        std::size_t n = 1 + rng() % 3;
        for (std::size_t k = 0; k < n; ++k) r.weights.push_back({Vec{1}, 1 + static_cast<int>(rng() % 3)});
        r.chern_degree_cap = static_cast<int>(rng() % 4);
        CHECK(eul_series_check(r));
    }
}

TEST_CASE("S4 contributions") {
    Model m = builtin_s4();
    auto m0 = contribution(m, m.data[1]);
    REQUIRE(m0.terms().size() == 1);
    CHECK(to_string(m0.terms()[0]) == "-2 · δ_(0) ⋆ H_(-1)");
    CHECK(density_at(m0, Vec{frac(-1, 3)}) == -2);
    CHECK(density_at(m0, Vec{frac(1, 3)}) == 0);

    auto central = contribution(m, m.data[0]);
    for (const auto& x : s4_samples()) CHECK(density_at(central, x) == 1);

    auto m1 = contribution(m, m.data[2]);
    CHECK(density_at(m1, Vec{frac(3, 2)}) == -2);
    CHECK(density_at(m1, Vec{frac(1, 2)}) == 0);
}

TEST_CASE("SU(3) contribution at a") {
    Model m = builtin_woodward_su3();
    auto ma = contribution(m, m.data[0]);
    REQUIRE(ma.terms().size() == 1);
    CHECK(to_string(ma.terms()[0]) == "+1 · δ_(1/4,1/4) ⋆ H_(1/2,1/2) ⊗ Leb[(1,-1)]");
    CHECK(density_at(ma, Vec{frac(1, 3), frac(1, 3)}) == 1);
    CHECK(density_at(ma, Vec{frac(1, 10), frac(1, 10)}) == 0);
}

TEST_CASE("critical values") {
    Model s4 = builtin_s4();
    std::set<Vec> got;
    for (const auto& cv : critical_values(s4, Box{Vec{-3}, Vec{4}})) got.insert(cv.beta);
    std::set<Vec> expect{Vec{frac(1, 4)}};
    for (long n = -3; n <= 4; ++n) expect.insert(Vec{n});
    CHECK(got == expect);

    auto inner = critical_values(s4, Box{Vec{frac(1, 3)}, Vec{frac(2, 3)}});
    REQUIRE(inner.size() == 1);
    CHECK(inner[0].beta == Vec{frac(1, 4)});

    Model su3 = builtin_woodward_su3();
    std::set<Vec> near;
    for (const auto& cv : critical_values(su3, Box{Vec{frac(-1, 2), frac(-1, 2)}, Vec{frac(1, 2), frac(1, 2)}}))
        near.insert(cv.beta);
    CHECK(near == std::set<Vec>{Vec{0, 0}, a, b, c, Vec(-a), Vec(-b), Vec(-c)});
}

TEST_CASE("genericity") {
    CHECK(genericity_check(builtin_s4()).generic);
    auto zero = genericity_check(builtin_s4(0));
    CHECK_FALSE(zero.generic);
    CHECK(zero.ok());

    Model nested = builtin_s4(0);
    nested.allow_nongeneric_gamma = false;
    auto rep = genericity_check(nested);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.diagnostics.empty());
    CHECK(code_of([&] { partial_sum(nested, Box{Vec{frac(1, 2)}, Vec{1}}); }) == Errc::NonGenericGamma);

    CHECK(genericity_check(builtin_woodward_su3()).ok());
}

TEST_CASE("Weyl orbits") {
    Model s4 = builtin_s4();
    auto orbit = weyl_orbit_contributions(s4, s4.data[2]);
    REQUIRE(orbit.size() == 2);
    CHECK(orbit[0].beta == Vec{1});
    CHECK(orbit[1].beta == Vec{-1});
    CHECK(density_at(orbit[1].dist, Vec{frac(-3, 2)}) == 2);
    CHECK(density_at(orbit[1].dist, Vec{frac(-1, 2)}) == 0);
    CHECK(density_at(orbit[0].dist, Vec{frac(3, 2)}) == -2);

    Model su3 = builtin_woodward_su3();
    auto ma = contribution(su3, su3.data[0]);
    auto su3_orbit = weyl_orbit_contributions(su3, su3.data[0]);
    CHECK(su3_orbit.size() == 6);
    REQUIRE(su3_orbit[0].weyl == 0);
    CHECK(equal_on_samples(su3_orbit[0].dist, ma, {Vec{frac(1, 3), frac(1, 3)}, Vec{frac(2, 7), frac(-5, 9)}}));
    for (const auto& o : su3_orbit) {
        if (o.beta != b && o.beta != c) continue;
        CHECK(su3.rd->weyl(o.weyl).length == 1);
        REQUIRE(o.dist.terms().size() == 1);
        CHECK(o.dist.terms()[0].coef == -1);
    }
}

TEST_CASE("lattice route and Weyl route agree") {
    Model s4 = builtin_s4();
    auto direct = enumerate_instances(s4, 3);
    auto at = [&](const Vec& beta) {
        for (const auto& inst : direct)
            if (inst.beta == beta) return inst;
        FAIL("missing instance");
        return direct.front();
    };
    auto minus1 = at(Vec{-1});
    CHECK(minus1.weyl == 0);
    auto orbit = weyl_orbit_contributions(s4, s4.data[2]);
    CHECK(equal_on_samples(instance_contribution(s4, minus1), orbit[1].dist, s4_samples()));
    auto orbit0 = weyl_orbit_contributions(s4, s4.data[1]);
    REQUIRE(orbit0.size() == 1);

    Model su3 = builtin_woodward_su3();
    std::vector<Vec> pts;
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> num(-20000, 20000);
    for (int i = 0; i < 12; ++i) pts.push_back(Vec{frac(num(rng), 7919), frac(num(rng), 7919)});
    auto inst = enumerate_instances(su3, 1);
    for (const auto& o : weyl_orbit_contributions(su3, su3.data[0])) {
        auto it = std::find_if(inst.begin(), inst.end(), [&](const Instance& i) { return i.beta == o.beta; });
        REQUIRE(it != inst.end());
        CHECK(equal_on_samples(instance_contribution(su3, *it), o.dist, pts));
    }
}

TEST_CASE("Weyl route needs invariant gamma") {
    Model m = builtin_woodward_su3();
    m.gamma = Vec{frac(1, 50), frac(1, 70)};
    CHECK(code_of([&] { enumerate_instances(m, 1); }) == Errc::InvalidModel);
}

TEST_CASE("partial sums") {
    Model s4 = builtin_s4();
    auto sum = partial_sum(s4, Box{Vec{frac(-13, 5)}, Vec{frac(18, 5)}});
    CHECK(sum.terms().size() == 7);
    int expect = -1;
    for (long x = -5; x <= 7; x += 2) {
        CHECK(density_at(sum, Vec{frac(x, 2)}) == expect);
        expect = -expect;
    }
    CHECK(density_at(partial_sum(s4, Box{Vec{-3}, Vec{4}}), Vec{frac(3, 2)}) == -1);

    CHECK(contributions_in(s4, Box{Vec{1}, Vec{0}}).empty());
    CHECK(code_of([&] { partial_sum(s4, Box{Vec{0, 0}, Vec{1, 1}}); }) == Errc::InvalidWindow);

    Model empty = builtin_s4();
    empty.data.clear();
    CHECK(partial_sum(empty, Box{Vec{-2}, Vec{2}}).is_zero());
}

TEST_CASE("locally finite sums are stable under window growth") {
    Model s4 = builtin_s4();
    auto small = partial_sum(s4, Box{Vec{-1}, Vec{2}});
    auto big = partial_sum(s4, Box{Vec{-6}, Vec{7}});
    std::vector<Vec> pts;
    for (long n = -4; n <= 7; ++n) pts.push_back(Vec{frac(2 * n + 1, 8)});
    CHECK(equal_on_samples(small, big, pts));
}

TEST_CASE("nearest contributions") {
    Model su3 = builtin_woodward_su3();
    CHECK(nearest_contributions(su3, 6).size() == 6);
    CHECK(nearest_contributions(su3, 12).size() == 12);
    CHECK(code_of([&] { nearest_contributions(su3, 5); }) == Errc::AmbiguousCount);
    std::set<Vec> six;
    for (const auto& lc : nearest_contributions(su3, 6)) six.insert(lc.instance.beta);
    CHECK(six == std::set<Vec>{a, b, c, Vec(-a), Vec(-b), Vec(-c)});
}

TEST_CASE("wall geometry") {
    auto rd = build_root_datum(RootType::A2);
    Wall w{a, {Vec{1, -1}}, {Vec{1, 1}}};
    CHECK(wall_contains(rd, w, Vec{frac(1, 2), 0}));
    CHECK_FALSE(wall_contains(rd, w, Vec{0, 0}));
    CHECK(wall_project(rd, w, Vec{0, 0}) == a);
    CHECK(lattice_translate(rd, w, translate_wall(w, Vec{2, -1})));
    CHECK(lattice_translate(rd, w, translate_wall(w, Vec{frac(-1, 2), frac(-3, 2)})));
    CHECK_FALSE(lattice_translate(rd, w, translate_wall(w, a)));
    CHECK(wall_key(rd, w) == wall_key(rd, translate_wall(w, Vec{1, -1})));
}
