#include "operators.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>

#include "bessel.hpp"
#include "quadrature.hpp"
#include "symbols.hpp"

namespace mixedlap {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kTailGuard = 1e-8; // top-octave energy bound for order-2 symbols

// spherical mean of cos(k . omega z): Gamma(n/2) (2/z)^{n/2-1} J_{n/2-1}(z)
double cos_sphere_mean(int n, double z) {
    if (z < 1e-8) return 1.0 - z * z / (2.0 * n);
    const double nu = 0.5 * n - 1.0;
    return std::tgamma(0.5 * n) * std::pow(2.0 / z, nu) * bessel_j(nu, z);
}

// 1 - cos_sphere_mean without cancellation: the calibration integrand
// multiplies it by tau^{-1-2s}, so relative accuracy at tiny z matters
double one_minus_cos_sphere_mean(int n, double z) {
    if (z > 0.5) return 1.0 - cos_sphere_mean(n, z);
    // 1 - Lambda = sum_{k>=1} (-1)^{k+1} (z^2/4)^k / (k! (n/2)_k)
    const double q = 0.25 * z * z;
    double term = q / (0.5 * n);
    double sum = term;
    for (int k = 2; k <= 30; ++k) {
        term *= -q / (k * (0.5 * n + k - 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

} // namespace

Field apply_operator(const Field& u, const OperatorKind& kind,
                     ApplyReport* report) {
    switch (kind.tag) {
        case OperatorTag::laplacian:
        case OperatorTag::mixed: {
            require(u.spectral_tail_fraction() < kTailGuard,
                    ErrorCode::numeric_failure,
                    "spectral-tail-too-large: field is not band-limited "
                    "enough for an order-2 symbol");
            if (kind.tag == OperatorTag::laplacian)
                return u.apply_multiplier([](double k) { return k * k; });
            const double s = kind.s;
            return u.apply_multiplier(
                [s](double k) { return symbol_m(k, s); });
        }
        case OperatorTag::fractional: {
            const double s = kind.s;
            require_arg(s > 0.0 && s < 1.0, "s out of (0,1)");
            return u.apply_multiplier(
                [s](double k) { return std::pow(k, 2.0 * s); });
        }
        case OperatorTag::riesz_potential: {
            const double alpha = kind.alpha;
            require_arg(alpha > 0.0 && alpha < u.grid()->dim(),
                        "alpha-out-of-range: riesz potential needs 0 < alpha < n");
            if (report) report->dropped_zero_mode = u.volume_integral();
            return u.apply_multiplier([alpha](double k) {
                return k == 0.0 ? 0.0 : std::pow(k, -alpha);
            });
        }
    }
    throw Error(ErrorCode::invalid_argument, "apply_operator: unknown kind");
}

Field solve_linear(const Field& f, const Params& params, double* dropped_mass) {
    params.validate();
    const double s = params.s;
    if (dropped_mass)
        *dropped_mass =
            f.grid()->kind() == GridKind::cartesian ? f.volume_integral() : 0.0;
    return f.apply_multiplier([s](double k) {
        return k == 0.0 ? 0.0 : multiplier_M(k, s);
    });
}

// ---------------------------------------------------------------------------
// pointwise singular integral
// ---------------------------------------------------------------------------

double calibrated_frac_constant(int n, double s) {
    require_arg(n >= 2, "calibrated_frac_constant: n >= 2");
    require_arg(s > 0.0 && s < 1.0, "s out of (0,1)");
    static std::map<std::pair<int, long>, double> cache;
    static std::mutex mtx;
    const auto key = std::make_pair(n, std::lround(s * 1e12));
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    // D = integral over R^n of (1 - cos(k . y)) |y|^{-n-2s} dy at |k| = 1;
    // then c = |k|^{2s} / D.  Reduced to the radial line by the spherical
    // cosine mean.
    const double area = sphere_area(n);
    const double A = 40.0;
    auto head_f = [&](double tau) {
        return one_minus_cos_sphere_mean(n, tau) * std::pow(tau, -1.0 - 2.0 * s);
    };
    const double head =
        integrate_panels(graded_breaks(0.0, A, 1e-13, 1.7, 1.0), 10, head_f);
    // tail: the constant part analytically, the oscillatory mean accelerated
    const double const_tail = std::pow(A, -2.0 * s) / (2.0 * s);
    auto osc_f = [&](double tau) {
        return cos_sphere_mean(n, tau) * std::pow(tau, -1.0 - 2.0 * s);
    };
    const double osc_tail =
        oscillatory_tail(osc_f, 0.5 * n - 1.0, 1.0, A);
    const double d = area * (head + const_tail - osc_tail);
    const double c = 1.0 / d;
    std::lock_guard<std::mutex> lock(mtx);
    cache[key] = c;
    return c;
}

namespace {

// exact value of the band-limited field at an arbitrary point
double point_eval_spectral(const Field& u, std::array<double, 3> x) {
    const auto& grid = *u.grid();
    const auto& spec = u.cartesian_spectrum();
    const int n = grid.dim();
    const int N = grid.pts_per_dim();
    const double dk = M_PI / grid.half_length();
    // 1-d phase tables per axis, then a separable product sum
    std::vector<std::complex<double>> ph[3];
    for (int d = 0; d < n; ++d) {
        ph[d].resize(N);
        for (int m = 0; m < N; ++m) {
            const double k = dk * (m < N / 2 ? m : m - N);
            ph[d][m] = std::polar(1.0, k * x[d]);
        }
    }
    std::complex<double> acc = 0.0;
    if (n == 2) {
        for (int m0 = 0; m0 < N; ++m0) {
            std::complex<double> row = 0.0;
            const std::complex<double>* base = &spec[std::size_t(m0) * N];
            for (int m1 = 0; m1 < N; ++m1) row += base[m1] * ph[1][m1];
            acc += row * ph[0][m0];
        }
    } else {
        for (int m0 = 0; m0 < N; ++m0) {
            std::complex<double> plane = 0.0;
            for (int m1 = 0; m1 < N; ++m1) {
                std::complex<double> row = 0.0;
                const std::complex<double>* base =
                    &spec[(std::size_t(m0) * N + m1) * N];
                for (int m2 = 0; m2 < N; ++m2) row += base[m2] * ph[2][m2];
                plane += row * ph[1][m1];
            }
            acc += plane * ph[0][m0];
        }
    }
    const double dkn = std::pow(dk, n);
    return acc.real() * dkn / std::pow(kTwoPi, n);
}

} // namespace

double fractional_pointwise(const Field& u, std::span<const int> index,
                            const Params& params) {
    const auto& grid = *u.grid();
    require_arg(grid.kind() == GridKind::cartesian,
                "fractional_pointwise: cartesian fields only");
    const int n = grid.dim();
    require_arg(n == 2 || n == 3, "fractional_pointwise: n in {2, 3}");
    const double s = params.s;
    const std::size_t flat = grid.flat_index(index);
    const auto x0 = grid.coords(flat);
    const double L = grid.half_length();
    for (int d = 0; d < n; ++d)
        require_arg(std::abs(x0[d]) <= 0.55 * L,
                    "interpolation-failure: node too close to the boundary "
                    "for the outer-tail treatment");

    const double u0 = u[flat];
    const double mean = u.volume_integral() / std::pow(2.0 * L, n);
    const double R_out = 0.85 * L;

    // angular rule: trapezoid ring in 2-d, Gauss-Legendre x trapezoid in 3-d
    std::vector<std::array<double, 3>> dirs;
    std::vector<double> wts; // normalized spherical mean weights
    if (n == 2) {
        const int M = 48;
        for (int i = 0; i < M; ++i) {
            const double a = M_PI * (i + 0.5) / M; // half circle: pm built in
            dirs.push_back({std::cos(a), std::sin(a), 0.0});
            wts.push_back(1.0 / M);
        }
    } else {
        const auto& gl = gauss_legendre(12);
        const int M = 12;
        for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
            const double mu = gl.nodes[q]; // cos(theta)
            const double st = std::sqrt(1.0 - mu * mu);
            for (int i = 0; i < M; ++i) {
                const double a = kTwoPi * (i + 0.5) / M;
                dirs.push_back({mu, st * std::cos(a), st * std::sin(a)});
                wts.push_back(gl.weights[q] / (2.0 * M));
            }
        }
    }

    auto sphere_second_diff = [&](double tau) {
        double acc = 0.0;
        for (std::size_t q = 0; q < dirs.size(); ++q) {
            std::array<double, 3> xp = x0, xm = x0;
            for (int d = 0; d < n; ++d) {
                xp[d] += tau * dirs[q][d];
                xm[d] -= tau * dirs[q][d];
            }
            acc += wts[q] *
                   (point_eval_spectral(u, xp) + point_eval_spectral(u, xm) -
                    2.0 * u0);
        }
        return acc;
    };

    const double area = sphere_area(n);
    auto integrand = [&](double tau) {
        return sphere_second_diff(tau) * std::pow(tau, n - 1.0) *
               std::pow(tau, -double(n) - 2.0 * s);
    };
    const double h = grid.spacing();
    const double inner = integrate_panels(
        graded_breaks(0.0, R_out, 1e-3 * h, 1.7, 0.12 * R_out), 8, integrand);
    const double tail =
        2.0 * (mean - u0) * std::pow(R_out, -2.0 * s) / (2.0 * s);
    const double c = calibrated_frac_constant(n, s);
    return -0.5 * c * area * (inner + tail);
}

} // namespace mixedlap
