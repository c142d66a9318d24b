#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "field.hpp"
#include "grid.hpp"

using namespace mixedlap;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TEST_CASE("grid construction contracts") {
    auto g = Grid::cartesian(2, 8, 10.0);
    CHECK(g->size() == 64);
    CHECK(g->wavevector(1) == doctest::Approx(M_PI / 10.0));
    CHECK(g->wavevector(7) == doctest::Approx(-M_PI / 10.0));

    auto r = Grid::radial(4, 512, 40.0);
    CHECK(r->radial_nodes().size() == 512);
    CHECK(r->radial_nodes().front() > 0.0);
    CHECK(r->radial_nodes().back() <= 40.0);
    for (std::size_t i = 1; i < r->radial_nodes().size(); ++i)
        CHECK(r->radial_nodes()[i] > r->radial_nodes()[i - 1]);
    for (double w : r->radial_weights()) CHECK(w > 0.0);
    for (double rho : r->spectral_nodes()) CHECK(rho > 0.0);

    CHECK_THROWS_AS((void)Grid::cartesian(3, 7, 5.0), Error);   // not a power of two
    CHECK_THROWS_AS((void)Grid::cartesian(4, 8, 5.0), Error);   // n too large
    CHECK_THROWS_AS((void)Grid::radial(1, 128, 10.0), Error);   // n too small
    CHECK_THROWS_AS((void)Grid::radial(4, 128, -1.0), Error);   // bad extent
}

TEST_CASE("radial Gaussian transform matches the closed form in n = 2, 3, 4") {
    for (int n : {2, 3, 4}) {
        auto g = Grid::radial(n, 1024, 40.0);
        auto u = Field::from_radius_fn(
            g, [](double r) { return std::exp(-0.5 * r * r); });
        const auto& spec = u.radial_spectrum();
        const auto& rho = g->spectral_nodes();
        const double peak = std::pow(kTwoPi, 0.5 * n);
        double worst = 0.0;
        for (std::size_t j = 0; j < rho.size(); ++j) {
            if (rho[j] > 10.0) continue;
            const double exact = peak * std::exp(-0.5 * rho[j] * rho[j]);
            worst = std::max(worst, std::abs(spec[j] - exact) / peak);
        }
        INFO("n = ", n, " sup-relative error ", worst);
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("radial round trip on a band-limited field") {
    auto g = Grid::radial(4, 512, 40.0);
    // smooth even spectrum, dead well inside rho_max (an odd power of rho
    // would put an r^-(n+1) tail on the field and spoil the truncation)
    const double w = 0.14 * g->rho_max();
    std::vector<double> spec0(g->spectral_nodes().size());
    for (std::size_t j = 0; j < spec0.size(); ++j) {
        const double rho = g->spectral_nodes()[j];
        spec0[j] = (1.0 + rho * rho) * std::exp(-rho * rho / (2.0 * w * w));
    }
    auto u = Field::from_radial_spectrum(g, spec0);
    auto back = g->radial_forward(u.values());
    double num = 0.0, den = 0.0;
    const auto& rho = g->spectral_nodes();
    const auto& vw = g->spectral_weights();
    for (std::size_t j = 0; j < spec0.size(); ++j) {
        const double m = vw[j] * std::pow(rho[j], 3);
        num += m * (back[j] - spec0[j]) * (back[j] - spec0[j]);
        den += m * spec0[j] * spec0[j];
    }
    CHECK(std::sqrt(num / den) < 1e-6);
}

TEST_CASE("zero field transforms to zero") {
    auto g = Grid::radial(3, 128, 20.0);
    auto z = Field::zeros(g);
    for (double v : z.radial_spectrum()) CHECK(v == 0.0);
}

TEST_CASE("cartesian plane wave concentrates on its lattice mode") {
    auto g = Grid::cartesian(2, 16, 5.0);
    const int mode[2] = {3, -2};
    auto u = Field::plane_wave(g, mode);
    const auto& spec = u.cartesian_spectrum();
    const double box = std::pow(2.0 * g->half_length(), 2);
    // cos splits into two conjugate modes of weight box/2
    const int N = g->pts_per_dim();
    auto wrap = [N](int m) { return (m % N + N) % N; };
    const std::size_t plus = static_cast<std::size_t>(wrap(3)) * N + wrap(-2);
    const std::size_t minus = static_cast<std::size_t>(wrap(-3)) * N + wrap(2);
    CHECK(std::abs(spec[plus] - 0.5 * box) < 1e-9 * box);
    CHECK(std::abs(spec[minus] - 0.5 * box) < 1e-9 * box);
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (i == plus || i == minus) continue;
        CHECK(std::abs(spec[i]) < 1e-12 * box);
    }
}

TEST_CASE("cartesian round trip and Plancherel") {
    auto g = Grid::cartesian(3, 16, 6.0);
    std::mt19937_64 rng(7);
    std::normal_distribution<double> dist;
    std::vector<double> v(g->size());
    for (double& x : v) x = dist(rng);
    auto spec = g->cartesian_forward(v);
    auto back = g->cartesian_inverse(spec);
    double worst = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        worst = std::max(worst, std::abs(back[i] - v[i]));
    CHECK(worst < 1e-10);

    // Plancherel: h^n sum |u|^2 = (2 pi)^{-n} (dk)^n sum |u_hat|^2
    const double hn = std::pow(g->spacing(), 3);
    const double dkn = std::pow(M_PI / g->half_length(), 3);
    double phys = 0.0, specsum = 0.0;
    for (double x : v) phys += x * x;
    for (auto& c : spec) specsum += std::norm(c);
    phys *= hn;
    specsum *= dkn / std::pow(kTwoPi, 3);
    CHECK(phys == doctest::Approx(specsum).epsilon(1e-8));
}

TEST_CASE("gaussian mass and field reductions") {
    auto g = Grid::radial(4, 512, 40.0);
    const double w = 1.3;
    auto u = Field::gaussian(g, w);
    const double mass = u.volume_integral();
    CHECK(mass == doctest::Approx(std::pow(kTwoPi * w * w, 2)).epsilon(1e-10));
    CHECK(u.sup_norm() <= 1.0);
    CHECK(u.min_value() > 0.0);

    auto h = Field::weight_h(g, "gaussian", 1.0);
    CHECK(h.volume_integral() == doctest::Approx(1.0).epsilon(1e-10));
    auto q = Field::weight_h(g, "rational", 3.0);
    CHECK(q.max_value() == doctest::Approx(std::pow(1.0 + std::pow(g->radial_nodes()[0], 2), -3.0)));
}

TEST_CASE("non-finite input is rejected") {
    auto g = Grid::cartesian(2, 8, 3.0);
    std::vector<double> v(g->size(), 0.0);
    v[3] = std::nan("");
    CHECK_THROWS_AS((void)g->cartesian_forward(v), Error);
}

TEST_CASE("spectral cache round-trips within transform tolerance") {
    // width 2 keeps the spectrum dead at this grid's rho_max
    auto g = Grid::radial(4, 512, 40.0);
    auto u = Field::gaussian(g, 2.0);
    const auto& spec = u.radial_spectrum(); // fills the cache
    auto values2 = g->radial_inverse(spec);
    double worst = 0.0;
    for (std::size_t i = 0; i < values2.size(); ++i)
        worst = std::max(worst, std::abs(values2[i] - u[i]));
    CHECK(worst < 1e-6);
}
