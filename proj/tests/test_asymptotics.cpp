#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "amalgam/asymptotics.hpp"
#include "amalgam/corpus.hpp"

using namespace amalgam;
using std::numbers::pi;

TEST_CASE("admissibility: edge jumps are rejected, interior t0=0 value is not") {
    CHECK(admissible_for_decomposition(FunctionModel({0.0, 1.0}, {1.0, 0.0})));
    CHECK_FALSE(admissible_for_decomposition(FunctionModel({0.0, 1.0}, {1.0, 1.0})));
    CHECK_FALSE(admissible_for_decomposition(FunctionModel({1.0, 2.0}, {1.0, 0.0})));
    CHECK(admissible_for_decomposition(
        FunctionModel({1.0, 2.0, 3.0}, {0.0, 1.0, 0.0})));
}

TEST_CASE("main term samples f at pi/(2x)") {
    FunctionModel hat({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0});
    double x = 2.0;  // pi/(2x) = pi/4 -> f = pi/4
    CHECK(main_term(hat, 1, x) == doctest::Approx((pi / 4) / x));
    CHECK(main_term(hat, 0, x) == 0.0);  // sin(0) factor
}

TEST_CASE("decomposition identity is exact by construction") {
    FunctionModel hat({0.0, 1.0}, {1.0, 0.0});
    for (int gamma : {0, 1})
        for (double x : {0.3, 2.0, 50.0}) {
            auto s = decompose(hat, gamma, x);
            CHECK(s.transform_value == s.main_term + s.remainder);
            CHECK(s.gamma == gamma);
        }
    CHECK_THROWS_AS(decompose(FunctionModel({0.0, 1.0}, {1.0, 1.0}), 1, 1.0),
                    std::domain_error);
}

TEST_CASE("remainder L1 is controlled by the derivative amalgam norm") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 3; ++k) {
        auto f = random_model(rng, true);
        for (int gamma : {0, 1}) {
            auto est = remainder_l1(f, gamma, 0.05, 200.0, 1e-6);
            CHECK(est.f_prime_norm > 0.0);
            CHECK(est.ratio == doctest::Approx(est.l1_value / est.f_prime_norm));
            CHECK(std::isfinite(est.ratio));
        }
    }
}

TEST_CASE("remainder ratio is stable as the window widens") {
    FunctionModel hat({0.0, 1.0}, {1.0, 0.0});
    auto narrow = remainder_l1(hat, 1, 0.05, 100.0, 1e-7);
    auto wide = remainder_l1(hat, 1, 0.01, 1000.0, 1e-7);
    CHECK(wide.l1_value >= narrow.l1_value - 1e-9);
    CHECK(wide.ratio < 1.2 * narrow.ratio + 0.5);
}

TEST_CASE("fubini identity holds in closed form") {
    FunctionModel hat({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0});
    CHECK(fubini_identity_defect(hat) < 1e-10);
    std::mt19937_64 rng(6);
    for (int k = 0; k < 10; ++k)
        CHECK(fubini_identity_defect(random_model(rng, true)) < 1e-9);
}

TEST_CASE("per-scale band value is dominated by a fixed multiple of the block sum") {
    std::mt19937_64 rng(14);
    auto g = random_model(rng, true);
    for (int m : {-2, 0, 2}) {
        auto [lhs, rhs] = bale_check(g, m, 1e-6);
        CHECK(lhs >= 0.0);
        CHECK(rhs >= 0.0);
        if (rhs > 1e-9) CHECK(lhs / rhs < 100.0);
    }
}

TEST_CASE("tail reduction bound is non-positive up to slack") {
    std::mt19937_64 rng(18);
    for (int k = 0; k < 3; ++k) {
        auto f = random_model(rng, true);
        for (int gamma : {0, 1})
            CHECK(tail_reduction_defect(f, gamma) < 1e-4);
    }
}
