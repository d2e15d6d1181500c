#include "catch_amalgamated.hpp"

#include <random>

#include "dhloc/conedist.hpp"

using namespace dhloc;

namespace {

RootDatumPtr a1() {
    static auto rd = std::make_shared<const RootDatum>(build_root_datum(RootType::A1));
    return rd;
}
RootDatumPtr a2() {
    static auto rd = std::make_shared<const RootDatum>(build_root_datum(RootType::A2));
    return rd;
}

std::vector<Vec> sample_points(std::uint64_t seed, std::size_t n, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-25000, 25000);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < count; ++i) {
        Vec x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = frac(num(rng), 7919);
        out.push_back(x);
    }
    return out;
}

} // namespace

TEST_CASE("delta and its convolutions") {
    auto d = convolve(delta(a2(), Vec{1, 2}), delta(a2(), Vec{-3, 1}));
    REQUIRE(d.terms().size() == 1);
    CHECK(d.terms()[0].base == Vec{-2, 3});
    CHECK(translate(Vec{1}, delta(a1(), Vec{0})).terms()[0].base == Vec{1});
    auto s = convolve(scale(2, delta(a1(), Vec{1})), scale(3, delta(a1(), Vec{2})));
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].coef == 6);
    CHECK(s.terms()[0].base == Vec{3});
    CHECK_THROWS_AS(delta(a1(), Vec{1, 2}), Error);
}

TEST_CASE("Heaviside densities") {
    CHECK(density_at(heaviside(a1(), Vec{-1}, 2), Vec{frac(-1, 2)}) == frac(1, 2));
    CHECK(density_at(heaviside(a1(), Vec{1}), Vec{2}) == 1);
    CHECK(density_at(heaviside(a1(), Vec{1}), Vec{-1}) == 0);
    CHECK(density_at(convolve(heaviside(a1(), Vec{1}), heaviside(a1(), Vec{1})), Vec{3}) == 3);
    CHECK_THROWS_AS(heaviside(a1(), Vec{0}), Error);
    CHECK_THROWS_AS(density_at(heaviside(a1(), Vec{1}), Vec{0}), Error);
    CHECK_THROWS_AS(density_at(heaviside(a2(), Vec{1, 0}), Vec{1, 1}), Error);
}

TEST_CASE("Lebesgue factors") {
    auto full = lebesgue(a2(), {Vec{1, 0}, Vec{0, 1}}, 1);
    CHECK(density_at(full, Vec{frac(3, 7), frac(-9, 2)}) == 1);
    auto point = lebesgue(a2(), {}, 5);
    REQUIRE(point.terms().size() == 1);
    CHECK(point.terms()[0].leb.empty());
    CHECK(point.terms()[0].coef == 5);
    CHECK_THROWS_AS(lebesgue(a2(), {Vec{1, 1}, Vec{2, 2}}, 1), Error);

    auto line = convolve(lebesgue(a2(), {Vec{1, -1}}, 1), delta(a2(), Vec{frac(1, 4), frac(1, 4)}));
    CHECK(support_contains(line, Vec{frac(5, 4), frac(-3, 4)}));
    CHECK_FALSE(support_contains(line, Vec{0, 0}));
}

TEST_CASE("convolution rejects two Lebesgue factors and non-orthogonal generators") {
    auto line = lebesgue(a2(), {Vec{1, -1}}, 1);
    CHECK_THROWS_AS(convolve(line, line), Error);
    CHECK_THROWS_AS(convolve(line, heaviside(a2(), Vec{1, 0})), Error);
    auto shape = convolve(convolve(delta(a2(), Vec{frac(1, 4), frac(1, 4)}), heaviside(a2(), Vec{frac(1, 2), frac(1, 2)})), line);
    REQUIRE(shape.terms().size() == 1);
    CHECK(to_string(shape.terms()[0]) == "+1 · δ_(1/4,1/4) ⋆ H_(1/2,1/2) ⊗ Leb[(1,-1)]");
    CHECK(density_at(shape, Vec{frac(2, 3), frac(2, 3)}) == 1);
    CHECK(density_at(shape, Vec{frac(1, 8), frac(1, 8)}) == 0);
}

TEST_CASE("differential operators") {
    auto sq = scale(-1, convolve(heaviside(a1(), Vec{-1}), heaviside(a1(), Vec{-1})));
    auto m0 = apply_diff_op(DiffOp{-1, {Vec{2}}}, sq);
    REQUIRE(m0.terms().size() == 1);
    CHECK(to_string(m0.terms()[0]) == "-2 · δ_(0) ⋆ H_(-1)");
    CHECK(density_at(m0, Vec{frac(-1, 3)}) == -2);
    CHECK(density_at(m0, Vec{frac(1, 3)}) == 0);

    CHECK(apply_diff_op(DiffOp{}, sq).terms().size() == sq.terms().size());

    auto q = convolve(heaviside(a2(), Vec{1, 0}), heaviside(a2(), Vec{0, 1}));
    auto dq = apply_diff_op(DiffOp{1, {Vec{1, 1}}}, q);
    auto expect = add(heaviside(a2(), Vec{1, 0}), heaviside(a2(), Vec{0, 1}));
    CHECK(dq.terms().size() == expect.terms().size());
    for (std::size_t i = 0; i < dq.terms().size(); ++i) CHECK(same_signature(dq.terms()[i], expect.terms()[i]));

    CHECK_THROWS_AS(apply_diff_op(DiffOp{1, {Vec{1, 0}}}, heaviside(a2(), Vec{0, 1})), Error);
}

TEST_CASE("diff op commutes with translation") {
    auto d = convolve(convolve(heaviside(a2(), Vec{1, 0}), heaviside(a2(), Vec{1, 2})), heaviside(a2(), Vec{0, 1}));
    DiffOp op{-2, {Vec{2, -1}}};
    Vec v{frac(1, 3), frac(-5, 7)};
    auto lhs = apply_diff_op(op, translate(v, d));
    auto rhs = translate(v, apply_diff_op(op, d));
    CHECK(equal_on_samples(lhs, rhs, sample_points(3, 2, 12)));
}

TEST_CASE("Weyl pushforward") {
    auto flipped = weyl_pushforward(*a1(), 1, heaviside(a1(), Vec{-1}));
    REQUIRE(flipped.terms().size() == 1);
    CHECK(flipped.terms()[0].gens == std::vector<Vec>{Vec{1}});
    auto d = convolve(delta(a2(), Vec{frac(1, 5), frac(-2, 3)}),
                      convolve(heaviside(a2(), Vec{1, 0}), heaviside(a2(), Vec{1, 1})));
    CHECK(equal_on_samples(weyl_pushforward(*a2(), 0, d), d, sample_points(1, 2, 5)));
    for (std::size_t w = 0; w < 6; ++w) {
        auto wd = weyl_pushforward(*a2(), w, d);
        for (const auto& x : sample_points(w + 10, 2, 5))
            CHECK(density_at(wd, weyl_apply(*a2(), w, x)) == density_at(d, x));
    }
}

TEST_CASE("linear plumbing") {
    auto h = heaviside(a1(), Vec{1});
    CHECK(scale(0, h).is_zero());
    CHECK(add(h, scale(-1, h)).is_zero());
    CHECK(density_at(translate(Vec{2}, h), Vec{frac(5, 2)}) == 1);
    CHECK(density_at(translate(Vec{2}, h), Vec{frac(3, 2)}) == 0);
    auto cone = convolve(delta(a2(), Vec{1, 1}), heaviside(a2(), Vec{1, -1}, 3));
    CHECK(support_contains(cone, Vec{3, -1}));
    CHECK_FALSE(support_contains(cone, Vec{0, 2}));
    CHECK(support_meets_box(cone, Box{Vec{2, -2}, Vec{3, 3}}));
    CHECK_FALSE(support_meets_box(cone, Box{Vec{-5, -5}, Vec{0, 0}}));
}

TEST_CASE("equality on samples") {
    auto a = heaviside(a2(), Vec{1, 0});
    auto b = heaviside(a2(), Vec{0, 1});
    auto ab = convolve(a, b);
    auto pts = sample_points(7, 2, 10);
    CHECK(equal_on_samples(ab, ab, pts));
    CHECK(equal_on_samples(ab, convolve(b, a), pts));
    auto extra = add(ab, scale(frac(1, 100), convolve(delta(a2(), Vec{1, 1}), ab)));
    CHECK_FALSE(equal_on_samples(ab, extra, {Vec{frac(3, 2), frac(7, 5)}}));
}

TEST_CASE("algebra laws on random cones") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> num(0, 6), den(1, 3);
    auto gen = [&] { return Vec{frac(num(rng) + 1, den(rng)), frac(num(rng) - 2, den(rng))}; };
    auto pts = sample_points(99, 2, 10);
    for (int i = 0; i < 5; ++i) {
        auto a = convolve(convolve(delta(a2(), gen()), heaviside(a2(), gen())), heaviside(a2(), gen()));
        auto b = heaviside(a2(), gen());
        auto c = add(delta(a2(), gen()), heaviside(a2(), gen()));
        if (!a.terms()[0].is_full_dimensional()) continue;
        CHECK(equal_on_samples(convolve(a, b), convolve(b, a), pts));
        CHECK(equal_on_samples(convolve(convolve(a, b), c), convolve(a, convolve(b, c)), pts));
        CHECK(equal_on_samples(convolve(delta(a2(), Vec(2)), a), a, pts));
        Vec v = gen();
        CHECK(equal_on_samples(translate(v, a), convolve(delta(a2(), v), a), pts));
        for (std::size_t w = 0; w < 6; ++w)
            CHECK(equal_on_samples(weyl_pushforward(*a2(), w, convolve(a, b)),
                                   convolve(weyl_pushforward(*a2(), w, a), weyl_pushforward(*a2(), w, b)), pts));
    }
}
