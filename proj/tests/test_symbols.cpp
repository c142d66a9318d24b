#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "symbols.hpp"

using namespace mixedlap;

TEST_CASE("symbol m spot values and monotonicity") {
    CHECK(symbol_m(0.0, 0.3) == 0.0);
    CHECK(symbol_m(1.0, 0.77) == doctest::Approx(2.0));
    CHECK(symbol_m(4.0, 0.5) == doctest::Approx(20.0)); // 16 + 4
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(0.0, 50.0), us(0.05, 0.95);
    for (int i = 0; i < 500; ++i) {
        const double s = us(rng);
        double a = ux(rng), b = ux(rng);
        if (a > b) std::swap(a, b);
        if (a == b) continue;
        CHECK(symbol_m(a, s) < symbol_m(b, s));
    }
}

TEST_CASE("multiplier M pole and tail") {
    CHECK(multiplier_M(1.0, 0.4) == doctest::Approx(0.5));
    CHECK_THROWS_AS((void)multiplier_M(0.0, 0.5), Error);
    // M(xi) |xi|^2 -> 1: relative deviation below 1e-3 at |xi| = 1e3
    const double tail = multiplier_M(1e3, 0.5) * 1e6;
    CHECK(std::abs(tail - 1.0) < 1e-3);
}

TEST_CASE("cutoff phi meets its three constraints and is monotone on (1,2)") {
    CHECK(cutoff_phi(0.5) == 1.0);
    CHECK(cutoff_phi(1.0) == 1.0);
    CHECK(cutoff_phi(2.0) == 0.0);
    CHECK(cutoff_phi(3.0) == 0.0);
    const double mid = cutoff_phi(1.5);
    CHECK(mid > 0.0);
    CHECK(mid < 1.0);
    double prev = 1.0;
    for (double r = 1.0; r <= 2.0; r += 0.01) {
        const double v = cutoff_phi(r);
        CHECK(v <= prev + 1e-15);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("split multipliers: hand values and exact recomposition") {
    {
        const auto [m1, m2] = split_multipliers(0.5, 0.5);
        CHECK(m1 == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
        CHECK(m2 == 0.0);
    }
    {
        const auto [m1, m2] = split_multipliers(3.0, 0.5);
        CHECK(m1 == 0.0);
        CHECK(m2 == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    }
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(1e-6, 1e4), us(0.05, 0.95);
    for (int i = 0; i < 10000; ++i) {
        const double xi = ux(rng), s = us(rng);
        const auto [m1, m2] = split_multipliers(xi, s);
        const double M = multiplier_M(xi, s);
        CHECK(m1 + m2 == M); // exact: complement construction
        CHECK(m2 <= 0.5 + 1e-16); // M2 <= 1/m(1) = 1/2
        // M1 * m = phi and A * |xi|^{-2s} = M1
        CHECK(m1 * symbol_m(xi, s) == doctest::Approx(cutoff_phi(xi)).epsilon(2e-15));
        const double a = low_symbol_A(xi, s) * std::pow(xi, -2.0 * s);
        CHECK(a == doctest::Approx(m1).epsilon(1e-12));
    }
}

TEST_CASE("low symbol A") {
    CHECK(low_symbol_A(0.0, 0.3) == 1.0);
    CHECK(low_symbol_A(1.0, 0.5) == doctest::Approx(0.5));
    CHECK(low_symbol_A(2.5, 0.9) == 0.0);
}

TEST_CASE("M2 high-frequency bound |M2| <= psi / |xi|^2") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(1.0, 1e3), us(0.05, 0.95);
    for (int i = 0; i < 2000; ++i) {
        const double xi = ux(rng), s = us(rng);
        const auto [m1, m2] = split_multipliers(xi, s);
        (void)m1;
        const double psi = 1.0 - cutoff_phi(xi);
        CHECK(m2 <= psi / (xi * xi) + 1e-16);
    }
}

TEST_CASE("symbol params validation") {
    SymbolParams ok;
    ok.validate();
    SymbolParams bad;
    bad.s = 1.2;
    CHECK_THROWS_AS(bad.validate(), Error);
}
