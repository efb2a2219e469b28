#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "amalgam/corpus.hpp"
#include "amalgam/function_model.hpp"

using namespace amalgam;

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(FunctionModel({1.0, 0.5}, {0.0, 0.0}), validation_error);
    CHECK_THROWS_AS(FunctionModel({-1.0, 1.0}, {0.0, 0.0}), validation_error);
    CHECK_THROWS_AS(FunctionModel({0.0}, {1.0}), validation_error);
    CHECK_THROWS_AS(FunctionModel({0.0, 1.0}, {1.0}), validation_error);
    CHECK_NOTHROW(FunctionModel({0.0, 1.0}, {1.0, 0.0}));
}

TEST_CASE("evaluation is linear between breakpoints, zero outside") {
    FunctionModel hat({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0});
    CHECK(hat(0.5) == doctest::Approx(0.5));
    CHECK(hat(1.0) == doctest::Approx(1.0));
    CHECK(hat(1.75) == doctest::Approx(0.25));
    CHECK(hat(2.5) == 0.0);
    CHECK(hat(-0.5) == 0.0);
}

TEST_CASE("edge jumps and half-line continuity") {
    FunctionModel chi({0.0, 1.0}, {1.0, 1.0});
    CHECK(chi.jump_at_support_start() == 0.0);  // value at t=0 is not a jump
    CHECK(chi.jump_at_support_end() == 1.0);
    CHECK_FALSE(chi.continuous_on_half_line());

    FunctionModel hat({0.0, 1.0}, {1.0, 0.0});
    CHECK(hat.continuous_on_half_line());

    FunctionModel shifted({1.0, 2.0}, {1.0, 0.0});
    CHECK(shifted.jump_at_support_start() == 1.0);
    CHECK_FALSE(shifted.continuous_on_half_line());
}

TEST_CASE("derivative of the hat is the step pair") {
    FunctionModel hat({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0});
    PiecewiseConstant d = derivative(hat);
    CHECK(d.evaluate(0.5) == doctest::Approx(1.0));
    CHECK(d.evaluate(1.5) == doctest::Approx(-1.0));
    CHECK(d.evaluate(2.5) == 0.0);
}

TEST_CASE("total variation counts slopes and edge jumps") {
    FunctionModel hat({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0});
    CHECK(total_variation(hat) == doctest::Approx(2.0));
    FunctionModel chi({0.0, 1.0}, {1.0, 1.0});
    CHECK(total_variation(chi) == doctest::Approx(2.0));  // |v0| + |vK|
}

TEST_CASE("abs_integral splits at sign changes") {
    // f = t - 1 on [0, 2]: |f| integrates to 1/2 + 1/2
    FunctionModel f({0.0, 2.0}, {-1.0, 1.0});
    CHECK(abs_integral(f, 0.0, 2.0) == doctest::Approx(1.0));
    CHECK(abs_integral(f, 0.0, 1.0) == doctest::Approx(0.5));
    CHECK(abs_integral(f, 0.5, 1.5) == doctest::Approx(0.25));
}

TEST_CASE("abs_integral is additive over subintervals") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 25; ++k) {
        auto f = random_model(rng, false);
        double a = f.support_lo(), b = f.support_hi(), mid = 0.5 * (a + b);
        double whole = abs_integral(f, a, b);
        double split = abs_integral(f, a, mid) + abs_integral(f, mid, b);
        CHECK(whole == doctest::Approx(split).epsilon(1e-12));
    }
}

TEST_CASE("signed integral and l1 norm on a simple model") {
    FunctionModel f({0.0, 2.0}, {-1.0, 1.0});
    auto ps = f.pieces();
    CHECK(integral(std::span<const LinearPiece>(ps)) == doctest::Approx(0.0));
    CHECK(l1_norm(std::span<const LinearPiece>(ps)) == doctest::Approx(1.0));
    CHECK(sup_abs(std::span<const LinearPiece>(ps)) == doctest::Approx(1.0));
}

TEST_CASE("dyadic dilate preserves mass") {
    FunctionModel hat({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0});
    for (int m : {-3, -1, 0, 2, 5}) {
        FunctionModel g = dyadic_dilate(hat, m);
        CHECK(abs_integral(g, 0.0, g.support_hi()) == doctest::Approx(1.0));
        CHECK(g.support_hi() == doctest::Approx(std::ldexp(2.0, -m)));
    }
}

TEST_CASE("abs_segments cover the support and are nonnegative") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 25; ++k) {
        auto f = random_model(rng, false);
        auto ps = f.pieces();
        auto segs = abs_segments(std::span<const LinearPiece>(ps));
        REQUIRE(!segs.empty());
        CHECK(segs.front().lo == doctest::Approx(f.support_lo()));
        CHECK(segs.back().hi == doctest::Approx(f.support_hi()));
        for (size_t i = 0; i < segs.size(); ++i) {
            CHECK(segs[i].at(segs[i].lo) >= -1e-12);
            CHECK(segs[i].at(segs[i].hi) >= -1e-12);
            if (i) CHECK(segs[i].lo == doctest::Approx(segs[i - 1].hi));
            double mid = 0.5 * (segs[i].lo + segs[i].hi);
            CHECK(segs[i].at(mid) ==
                  doctest::Approx(std::abs(f(mid))).epsilon(1e-12));
        }
    }
}
