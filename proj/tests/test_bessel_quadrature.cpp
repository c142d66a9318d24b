#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bessel.hpp"
#include "quadrature.hpp"

using namespace mixedlap;

TEST_CASE("bessel_j against the standard library on a broad sample") {
    // std::cyl_bessel_j is an independent implementation; agreement at
    // 1e-11 absolute over both branches pins the series/asymptotic split.
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ux(0.0, 60.0);
    for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        for (int i = 0; i < 400; ++i) {
            const double x = ux(rng);
            const double ours = bessel_j(nu, x);
            const double ref = std::cyl_bessel_j(nu, x);
            CHECK(std::abs(ours - ref) < 1e-11);
        }
    }
}

TEST_CASE("bessel_j half-integer closed forms") {
    for (double x : {0.3, 1.7, 5.0, 11.9, 12.1, 37.5}) {
        const double j_half = std::sqrt(2.0 / (M_PI * x)) * std::sin(x);
        CHECK(bessel_j(0.5, x) == doctest::Approx(j_half).epsilon(1e-12));
        const double j_3half =
            std::sqrt(2.0 / (M_PI * x)) * (std::sin(x) / x - std::cos(x));
        CHECK(std::abs(bessel_j(1.5, x) - j_3half) < 1e-12);
    }
}

TEST_CASE("bessel_j known zeros and small-argument limits") {
    CHECK(std::abs(bessel_j(0.0, 2.404825557695773)) < 1e-12);
    CHECK(std::abs(bessel_j(1.0, 3.831705970207512)) < 1e-12);
    CHECK(bessel_j(0.0, 0.0) == doctest::Approx(1.0));
    CHECK(bessel_j(1.0, 0.0) == doctest::Approx(0.0));
    CHECK(bessel_j(1.0, 1e-8) == doctest::Approx(0.5e-8).epsilon(1e-10));
}

TEST_CASE("McMahon zeros bracket sign changes") {
    for (double nu : {0.0, 1.0, 1.5}) {
        for (int m = 1; m <= 8; ++m) {
            const double z = bessel_j_zero(nu, m);
            CHECK(bessel_j(nu, z - 0.05) * bessel_j(nu, z + 0.05) < 0.0);
        }
    }
}

TEST_CASE("Gauss-Legendre exactness on polynomials") {
    // order-p rule integrates degree 2p-1 exactly
    for (int p : {4, 8, 12}) {
        const int deg = 2 * p - 1;
        auto f = [deg](double x) { return std::pow(x, deg) + 3.0 * x * x; };
        const double got = integrate_panels({-1.0, 1.0}, p, f);
        CHECK(got == doctest::Approx(2.0).epsilon(1e-13)); // odd term drops
    }
}

TEST_CASE("graded panels integrate an endpoint-singular integrand") {
    // integral_0^1 r^{-1/2} dr = 2; the first-panel width sets the error
    auto breaks = graded_breaks(0.0, 1.0, 1e-12, 1.7, 0.1);
    const double got =
        integrate_panels(breaks, 8, [](double r) { return 1.0 / std::sqrt(r); });
    CHECK(got == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("exp-sinh handles algebraic tails") {
    // integral_1^inf t^{-5/3} dt = 3/2
    const double got = integrate_exp_sinh(
        [](double t) { return std::pow(t, -5.0 / 3.0); }, 1.0, 1.0);
    CHECK(got == doctest::Approx(1.5).epsilon(1e-10));
    // integral_2^inf e^{-t} dt
    const double got2 =
        integrate_exp_sinh([](double t) { return std::exp(-t); }, 2.0, 1.0);
    CHECK(got2 == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
}

TEST_CASE("oscillatory tail reproduces closed-form Hankel integrals") {
    // integral_0^inf J_1(a rho) drho = 1/a ; split at B and accelerate the tail
    const double a = 3.0;
    const double B = 10.0 / a;
    auto f = [a](double rho) { return bessel_j(1.0, a * rho); };
    const double head =
        integrate_panels(graded_breaks(0.0, B, 1e-4, 1.7, 0.5 / a), 8, f);
    const double tail = oscillatory_tail(f, 1.0, a, B);
    CHECK(head + tail == doctest::Approx(1.0 / a).epsilon(1e-9));

    // Basset formula: integral_0^inf rho J_0(rho) / (1 + rho^2) drho = K_0(1)
    auto g = [](double rho) {
        return rho * bessel_j(0.0, rho) / (1.0 + rho * rho);
    };
    const double headg =
        integrate_panels(graded_breaks(0.0, 20.0, 1e-4, 1.7, 0.25), 8, g);
    const double tailg = oscillatory_tail(g, 0.0, 1.0, 20.0);
    const double k0_1 = 0.42102443824070834; // K_0(1)
    CHECK(headg + tailg == doctest::Approx(k0_1).epsilon(1e-8));
}

TEST_CASE("log-log slope fit is exact on pure power laws") {
    std::vector<double> r, v;
    for (int i = 0; i < 40; ++i) {
        const double x = 1.0 + 0.5 * i;
        r.push_back(x);
        v.push_back(7.3 * std::pow(x, -3.0));
    }
    const auto fit = fit_loglog_slope(r, v);
    CHECK(fit.slope == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(fit.residual < 1e-12);
}
