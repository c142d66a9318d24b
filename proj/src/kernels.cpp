#include "kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "bessel.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "symbols.hpp"

namespace mixedlap {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kDecayLog = 40.0; // exp(-40) ~ 4e-18 relative truncation

// radius where t * m(rho) = kDecayLog, bisected (m is increasing)
double decay_radius(double t, double s) {
    double hi = 1.0;
    while (t * symbol_m(hi, s) < kDecayLog) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        (t * symbol_m(mid, s) < kDecayLog ? lo : hi) = mid;
    }
    return hi;
}

// shared prefactor of the radial inverse transform at radius r
double inverse_prefactor(int n, double r) {
    return std::pow(kTwoPi, -0.5 * n) * std::pow(r, 1.0 - 0.5 * n);
}

// analytic integral of the leading |xi|^{-2s} singularity over the excluded
// ball |xi| < rho_exc, times the integrand's value g0 at xi -> 0
double pole_ball_correction(int n, double s, double rho_exc, double g0) {
    return std::pow(kTwoPi, -n) * sphere_area(n) * g0 *
           std::pow(rho_exc, n - 2.0 * s) / (n - 2.0 * s);
}

} // namespace

std::string kernel_kind_name(KernelKind kind) {
    switch (kind) {
        case KernelKind::heat: return "heat";
        case KernelKind::fundamental: return "fundamental";
        case KernelKind::riesz: return "riesz";
        case KernelKind::z1: return "z1";
        case KernelKind::z2: return "z2";
        case KernelKind::barrier_omega: return "barrier_omega";
        case KernelKind::barrier_v: return "barrier_v";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// heat kernel
// ---------------------------------------------------------------------------

double heat_kernel_value(double r, double t, int n, double s, long* evals) {
    require_arg(t > 0.0, "nonpositive-time: heat kernel needs t > 0");
    require_arg(r > 0.0, "heat_kernel_value: r must be > 0");
    const double nu = 0.5 * n - 1.0;
    const double rho_dec = decay_radius(t, s);
    // panels resolve both the exponential shape and the Bessel oscillation
    const double osc_cap = 4.5 / r;
    const double cap = std::max(std::min(rho_dec / 10.0, osc_cap),
                                rho_dec * 2e-4);
    const auto breaks = graded_breaks(0.0, rho_dec, rho_dec * 1e-4, 1.8, cap);
    long count = 0;
    auto f = [&](double rho) {
        ++count;
        return std::exp(-t * symbol_m(rho, s)) * bessel_j(nu, r * rho) *
               std::pow(rho, 0.5 * n);
    };
    const double integral = integrate_panels(breaks, 8, f);
    if (evals) *evals += count;
    return inverse_prefactor(n, r) * integral;
}

KernelProfile heat_kernel(const GridPtr& grid, double t, const Params& params) {
    require_arg(grid && grid->kind() == GridKind::radial,
                "heat_kernel: radial grid required");
    require_arg(t > 0.0, "nonpositive-time: heat kernel needs t > 0");
    params.validate();

    KernelProfile prof;
    prof.grid = grid;
    prof.kind = KernelKind::heat;
    prof.time = t;
    prof.s = params.s;
    const auto& r = grid->radial_nodes();
    prof.values.assign(r.size(), 0.0);
    std::vector<long> evals(r.size(), 0);
    parallel_for(r.size(), [&](std::size_t i) {
        prof.values[i] =
            heat_kernel_value(r[i], t, grid->dim(), params.s, &evals[i]);
    });
    for (long e : evals) prof.quadrature.integrand_evals += e;
    prof.quadrature.est_truncation = std::exp(-kDecayLog);

    // clamp sub-threshold negative noise, fail on anything larger
    const double peak = *std::max_element(prof.values.begin(), prof.values.end());
    require(peak > 0.0, ErrorCode::numeric_failure,
            "quadrature-failure: heat kernel profile has no positive part");
    for (double& v : prof.values) {
        if (v < 0.0) {
            require(v > -1e-10 * peak, ErrorCode::numeric_failure,
                    "quadrature-failure: heat kernel negativity beyond noise");
            prof.quadrature.max_negative = std::min(prof.quadrature.max_negative, v);
            v = 0.0;
            ++prof.quadrature.clamped_negative;
        }
    }
    return prof;
}

namespace {

// Mass of the heat kernel beyond R2 from the small-symbol expansion
//   H ~ sum_k (-t)^k / k!  F^{-1}[(|xi|^2 + |xi|^{2s})^k](r),
// keeping the non-analytic powers beta = 2j + 2s(k-j) whose inverse
// transforms carry the r^{-(n+beta)} far-field tails.  Valid (and rapidly
// convergent) once t * R2^{-2s} is comfortably below one.
double heat_tail_mass_series(int n, double s, double t, double R2) {
    const double area = sphere_area(n);
    double total = 0.0;
    double tk = 1.0; // (-t)^k / k!
    for (int k = 1; k <= 24; ++k) {
        tk *= -t / k;
        double binom = 1.0;
        double kmax = 0.0;
        for (int j = 0; j <= k; ++j) {
            const double beta = 2.0 * j + 2.0 * s * (k - j);
            // even beta means an analytic power: derivative of delta, no tail
            const bool even = std::abs(beta / 2.0 - std::round(beta / 2.0)) < 1e-9;
            if (!even && beta < 600.0) {
                const double c = std::pow(M_PI, -0.5 * n) * std::pow(2.0, beta) *
                                 std::tgamma(0.5 * (n + beta)) /
                                 std::tgamma(-0.5 * beta);
                const double term =
                    tk * binom * c * std::pow(R2, -beta) / beta;
                total += term;
                kmax = std::max(kmax, std::abs(term));
            }
            binom *= double(k - j) / double(j + 1);
        }
        if (k >= 4 && kmax < 1e-16 * (std::abs(total) + 1e-300)) break;
    }
    return area * total;
}

} // namespace

double heat_kernel_mass(const KernelProfile& profile) {
    require_arg(profile.kind == KernelKind::heat,
                "heat_kernel_mass: heat profiles only");
    const GridPtr& grid = profile.grid;
    const int n = grid->dim();
    const double s = profile.s, t = profile.time;
    double mass = grid->radial_volume_integral(profile.values);

    // hand over to the expansion where it converges fast
    const double R = grid->r_max();
    const double R2 = std::max(
        {4.0 * R, 1000.0, std::pow(5.0 * std::max(t, 1.0), 0.5 / s)});
    const double area = sphere_area(n);
    auto shell = [&](double v) {
        const double r = std::exp(v);
        return heat_kernel_value(r, t, n, s) * std::pow(r, n); // extra r: dv
    };
    const auto breaks =
        graded_breaks(std::log(R), std::log(R2), 0.2, 1.3, 0.6);
    mass += area * integrate_panels(breaks, 8, shell);
    mass += heat_tail_mass_series(n, s, t, R2);
    return mass;
}

Field heat_field(const GridPtr& grid, double t, const Params& params) {
    require_arg(grid && grid->kind() == GridKind::cartesian,
                "heat_field: cartesian grid required");
    require_arg(t > 0.0, "nonpositive-time: heat kernel needs t > 0");
    auto delta = Field::zeros(grid);
    // spectrum of the kernel is exp(-t m(|k|)) itself; build via multiplier
    // applied to the discrete delta of unit mass
    const double hn = std::pow(grid->spacing(), grid->dim());
    delta.mutate()[0] = 1.0 / hn;
    const double s = params.s;
    return delta.apply_multiplier(
        [t, s](double k) { return std::exp(-t * symbol_m(k, s)); });
}

// ---------------------------------------------------------------------------
// fundamental solution
// ---------------------------------------------------------------------------

namespace {

// Z(r) by outer time quadrature of heat kernel values.
//
// The small-t end is cut at t_switch(r), below which the heat kernel is in
// its first-order jump regime H ~ t c_{n,s} / r^{n+2s}; the cut is placed so
// that the whole (0, t_switch) strip contributes under 1e-7 of a safe
// underestimate of Z(r), and the strip itself is added analytically.
// Without the cut the oscillation-resolved quadrature cost blows up as
// sqrt(1/t) at large r for values that cannot matter.
double z_time_value(double r, int n, double s, long* evals, int* tnodes) {
    int count = 0;
    auto h = [&](double t) {
        ++count;
        return heat_kernel_value(r, t, n, s, evals);
    };

    // [1, inf): exp-sinh; the integrand decays like t^{-n/(2s)}
    double total = integrate_exp_sinh(h, 1.0, std::max(1.0, std::pow(r, 2.0 * s)));

    const double cns = frac_lap_constant(n, s);
    const double z_floor =
        1e-4 * (std::pow(r, 2.0 - n) + std::pow(r, 2.0 * s - n));
    const double jump = cns * std::pow(r, -double(n) - 2.0 * s);
    const double t_switch =
        std::min(0.5, std::sqrt(2e-7 * z_floor / jump));

    // (t_switch, 1]: Gauss-Legendre on log t in decade blocks
    const double ln10 = std::log(10.0);
    double t_hi = 1.0;
    while (t_hi > t_switch) {
        const double t_lo = std::max(t_hi / 10.0, t_switch);
        const double v_lo = std::log(t_lo), v_hi = std::log(t_hi);
        total += integrate_panels(
            std::vector<double>{v_lo, 0.5 * (v_lo + v_hi), v_hi}, 8,
            [&](double v) {
                const double t = std::exp(v);
                return t * h(t);
            });
        t_hi = t_lo;
    }
    // analytic first-order remainder of the skipped strip
    total += 0.5 * t_switch * t_switch * jump;

    if (tnodes) *tnodes += count;
    return total;
}

// Direct multiplier quadrature: integrand g(rho) = mult(rho) J_nu(r rho)
// rho^{n/2} from the excluded ball outward, with an Euler-accelerated
// oscillatory tail.  `mult` must behave like g0 * rho^{-2s} near zero.
struct DirectSpec {
    std::function<double(double)> mult; // multiplier sample
    double g0 = 1.0;                    // limit of mult * rho^{2s} at zero
    double support_end = -1.0;          // if > 0, integrand vanishes beyond
    std::vector<double> forced_breaks;  // e.g. the cutoff radii 1 and 2
};

double z_direct_value(double r, int n, double s, double rho_exc,
                      const DirectSpec& spec, long* evals) {
    const double nu = 0.5 * n - 1.0;
    long count = 0;
    auto g = [&](double rho) {
        ++count;
        return spec.mult(rho) * bessel_j(nu, r * rho) * std::pow(rho, 0.5 * n);
    };

    double integral = 0.0;
    const bool compact = spec.support_end > 0.0;
    // head: graded panels from the exclusion radius to B
    const double first_zero = bessel_j_zero(nu, 1) / r;
    const double B = compact ? spec.support_end
                             : std::max({3.0, 12.0 / r, 1.05 * first_zero});
    const double osc_cap = 4.5 / r;
    auto breaks = graded_breaks(rho_exc, B, rho_exc, 1.6,
                                std::max(std::min(osc_cap, B / 6.0), rho_exc));
    for (double b : spec.forced_breaks)
        if (b > rho_exc && b < B) breaks.push_back(b);
    std::sort(breaks.begin(), breaks.end());
    integral += integrate_panels(breaks, 8, g);

    if (!compact)
        integral += oscillatory_tail(g, nu, r, B);

    if (evals) *evals += count;
    return inverse_prefactor(n, r) * integral +
           pole_ball_correction(n, s, rho_exc, spec.g0);
}

double grid_exclusion_radius(const GridPtr& grid) {
    return grid->spectral_nodes().front();
}

KernelProfile z_profile_direct(const GridPtr& grid, const Params& params,
                               const DirectSpec& spec, KernelKind kind) {
    KernelProfile prof;
    prof.grid = grid;
    prof.kind = kind;
    prof.s = params.s;
    const auto& r = grid->radial_nodes();
    prof.values.assign(r.size(), 0.0);
    const double rho_exc = grid_exclusion_radius(grid);
    std::vector<long> evals(r.size(), 0);
    parallel_for(r.size(), [&](std::size_t i) {
        prof.values[i] = z_direct_value(r[i], grid->dim(), params.s, rho_exc,
                                        spec, &evals[i]);
    });
    for (long e : evals) prof.quadrature.integrand_evals += e;
    prof.quadrature.est_truncation = 1e-9;
    return prof;
}

} // namespace

KernelProfile fundamental_solution(const GridPtr& grid, const Params& params,
                                   FundamentalMethod method) {
    require_arg(grid && grid->kind() == GridKind::radial,
                "fundamental_solution: radial grid required");
    params.validate();
    const int n = grid->dim();
    require_arg(n >= 3,
                "fundamental_solution requires n >= 3 (n = 2 has a "
                "logarithmic near field and only smoke-test support)");

    if (method == FundamentalMethod::cross_validated) {
        auto a = fundamental_solution(grid, params, FundamentalMethod::time_quadrature);
        auto b = fundamental_solution(grid, params, FundamentalMethod::direct_multiplier);
        const auto& r = grid->radial_nodes();
        double worst = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] < 0.1 || r[i] > 0.5 * grid->r_max()) continue;
            worst = std::max(worst, std::abs(a.values[i] - b.values[i]) /
                                        std::abs(b.values[i]));
        }
        require(worst < 1e-4, ErrorCode::numeric_failure,
                "method-disagreement: Z time-quadrature vs direct multiplier "
                "differ by " + std::to_string(worst));
        a.quadrature.integrand_evals += b.quadrature.integrand_evals;
        a.quadrature.est_truncation =
            std::max(a.quadrature.est_truncation, worst);
        return a;
    }

    KernelProfile prof;
    if (method == FundamentalMethod::time_quadrature) {
        prof.grid = grid;
        prof.kind = KernelKind::fundamental;
        prof.s = params.s;
        const auto& r = grid->radial_nodes();
        prof.values.assign(r.size(), 0.0);
        std::vector<long> evals(r.size(), 0);
        std::vector<int> tnodes(r.size(), 0);
        parallel_for(r.size(), [&](std::size_t i) {
            prof.values[i] = z_time_value(r[i], n, params.s, &evals[i], &tnodes[i]);
        });
        for (long e : evals) prof.quadrature.integrand_evals += e;
        for (int tn : tnodes) prof.quadrature.time_nodes += tn;
        prof.quadrature.est_truncation = 1e-9;
    } else {
        DirectSpec spec;
        const double s = params.s;
        spec.mult = [s](double rho) { return multiplier_M(rho, s); };
        spec.g0 = 1.0;
        prof = z_profile_direct(grid, params, spec, KernelKind::fundamental);
    }

    for (double v : prof.values)
        require(v > 0.0, ErrorCode::numeric_failure,
                "quadrature-failure: fundamental solution must be positive");
    return prof;
}

// ---------------------------------------------------------------------------
// Riesz kernels
// ---------------------------------------------------------------------------

double gamma_alpha(int n, double alpha) {
    require_arg(n >= 1, "gamma_alpha: n must be >= 1");
    require_arg(alpha > 0.0 && alpha < n,
                "alpha-out-of-range: gamma(alpha) needs 0 < alpha < n");
    return std::pow(M_PI, 0.5 * n) * std::pow(2.0, alpha) *
           std::tgamma(0.5 * alpha) / std::tgamma(0.5 * (n - alpha));
}

KernelProfile riesz_kernel(const GridPtr& grid, double alpha) {
    require_arg(grid && grid->kind() == GridKind::radial,
                "riesz_kernel: radial grid required");
    const int n = grid->dim();
    const double gamma = gamma_alpha(n, alpha);
    KernelProfile prof;
    prof.grid = grid;
    prof.kind = KernelKind::riesz;
    prof.alpha = alpha;
    const auto& r = grid->radial_nodes();
    prof.values.resize(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        prof.values[i] = std::pow(r[i], alpha - n) / gamma;
    return prof;
}

// ---------------------------------------------------------------------------
// split kernels and barriers
// ---------------------------------------------------------------------------

SplitKernels split_kernels(const GridPtr& grid, const Params& params) {
    require_arg(grid && grid->kind() == GridKind::radial,
                "split_kernels: radial grid required");
    require_arg(grid->dim() >= 3, "split_kernels requires n >= 3");
    params.validate();
    const double s = params.s;

    DirectSpec low;
    low.mult = [s](double rho) { return split_multipliers(rho, s).m1; };
    low.g0 = 1.0; // A(0) = 1
    low.support_end = 2.0;
    low.forced_breaks = {1.0};

    DirectSpec high;
    high.mult = [s](double rho) {
        return rho <= 1.0 ? 0.0 : split_multipliers(rho, s).m2;
    };
    high.g0 = 0.0; // no pole: support excludes the origin
    high.forced_breaks = {1.0, 2.0};

    SplitKernels out;
    out.z1 = z_profile_direct(grid, params, low, KernelKind::z1);
    out.z2 = z_profile_direct(grid, params, high, KernelKind::z2);
    return out;
}

KernelProfile barrier_profile(const GridPtr& grid, const Params& params,
                              BarrierKind kind) {
    require_arg(grid && grid->kind() == GridKind::radial,
                "barrier_profile: radial grid required");
    params.validate();
    const int n = grid->dim();
    require_arg(n >= 3, "barrier_profile requires n >= 3");
    const double s = params.s;

    std::string warning;
    if (kind == BarrierKind::omega && !(n > 4.0 * s))
        warning = "hypothesis-violation: omega bound assumes n > 4s";
    if (kind == BarrierKind::v && !(n > 4))
        warning = "hypothesis-violation: v bound assumes n > 4";

    // chi_hat of the ball B_{1/2} in closed Bessel form
    const double R = 0.5;
    const double ball_mass =
        std::pow(M_PI, 0.5 * n) * std::pow(R, n) / std::tgamma(0.5 * n + 1.0);
    auto chi_hat = [n, R](double rho) {
        return std::pow(kTwoPi * R, 0.5 * n) * std::pow(rho, -0.5 * n) *
               bessel_j(0.5 * n, R * rho);
    };

    const double nu = 0.5 * n - 1.0;
    const auto& r = grid->radial_nodes();
    KernelProfile prof;
    prof.grid = grid;
    prof.kind = kind == BarrierKind::omega ? KernelKind::barrier_omega
                                           : KernelKind::barrier_v;
    prof.s = params.s;
    prof.quadrature.warning = warning;
    prof.values.assign(r.size(), 0.0);
    const double rho_exc = grid_exclusion_radius(grid);
    std::vector<long> evals(r.size(), 0);
    parallel_for(r.size(), [&](std::size_t i) {
        const double rr = r[i];
        long count = 0;
        auto g = [&](double rho) {
            ++count;
            return multiplier_M(rho, s) * chi_hat(rho) *
                   bessel_j(nu, rr * rho) * std::pow(rho, 0.5 * n);
        };
        // combined oscillation rate of J_nu(r rho) J_{n/2}(rho/2)
        const double rate = rr + R;
        const double B = std::max(6.0, 3.0 * bessel_j_zero(nu, 1) / rate);
        auto breaks = graded_breaks(rho_exc, B, rho_exc, 1.6,
                                    std::max(4.5 / rate, rho_exc));
        double integral = integrate_panels(breaks, 8, g);
        integral += oscillatory_tail(g, nu, rate, B);
        prof.values[i] = inverse_prefactor(n, rr) * integral +
                         pole_ball_correction(n, s, rho_exc, ball_mass);
        evals[i] = count;
    });
    for (long e : evals) prof.quadrature.integrand_evals += e;
    prof.quadrature.est_truncation = 1e-8;

    for (double v : prof.values)
        require(v > 0.0, ErrorCode::numeric_failure,
                "quadrature-failure: barrier must be positive");
    return prof;
}

BoundReport verify_kernel_bounds(const KernelProfile& profile,
                                 double expected_lo, double expected_hi,
                                 double window_lo, double window_hi,
                                 double tol) {
    require_arg(profile.grid != nullptr, "verify_kernel_bounds: empty profile");
    require_arg(window_lo > 0.0 && window_hi > window_lo,
                "verify_kernel_bounds: bad window");
    require_arg(window_hi <= profile.grid->r_max(),
                "verify_kernel_bounds: window outside grid support");
    require_arg(expected_lo <= expected_hi,
                "verify_kernel_bounds: expected exponents out of order");

    const auto& r = profile.grid->radial_nodes();
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < window_lo || r[i] > window_hi) continue;
        require(profile.values[i] > 0.0, ErrorCode::invalid_argument,
                "nonpositive-values-in-window");
        xs.push_back(r[i]);
        ys.push_back(profile.values[i]);
    }
    const auto fit = fit_loglog_slope(xs, ys);
    BoundReport rep;
    rep.fitted_slope = fit.slope;
    rep.slope_residual = fit.residual;
    rep.window_lo = window_lo;
    rep.window_hi = window_hi;
    rep.expected_lo = expected_lo;
    rep.expected_hi = expected_hi;
    rep.tol = tol;
    rep.points = fit.points;
    rep.pass = fit.slope >= expected_lo - tol && fit.slope <= expected_hi + tol;
    return rep;
}

} // namespace mixedlap
