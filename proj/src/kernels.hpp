#pragma once

#include <string>
#include <vector>

#include "field.hpp"
#include "grid.hpp"
#include "params.hpp"

namespace mixedlap {

enum class KernelKind {
    heat,
    fundamental,
    riesz,
    z1,
    z2,
    barrier_omega,
    barrier_v
};

std::string kernel_kind_name(KernelKind kind);

struct QuadratureReport {
    long integrand_evals = 0;   ///< pointwise integrand evaluations
    int time_nodes = 0;         ///< time-quadrature nodes (Z time route)
    double est_truncation = 0.0;///< estimated relative truncation error
    int clamped_negative = 0;   ///< sub-threshold negative samples clamped
    double max_negative = 0.0;  ///< worst pre-clamp negative excursion
    std::string warning;        ///< e.g. barrier hypothesis violations
};

/// Radial samples of one of the physical-space kernels.
struct KernelProfile {
    GridPtr grid;
    std::vector<double> values;
    KernelKind kind = KernelKind::heat;
    double time = 0.0;  ///< heat kernel time
    double alpha = 0.0; ///< Riesz order
    double s = 0.0;     ///< fractional order used to build the profile
    QuadratureReport quadrature;
};

/// Result of a log-log power-law window check.
struct BoundReport {
    double fitted_slope = 0.0;
    double slope_residual = 0.0;
    double window_lo = 0.0, window_hi = 0.0;
    double expected_lo = 0.0, expected_hi = 0.0;
    double tol = 0.0;
    int points = 0;
    bool pass = false;
};

/// Pointwise heat kernel H(r, t) of exp(-t (|xi|^2 + |xi|^{2s})) in n
/// dimensions, by adaptive radial Fourier quadrature.
double heat_kernel_value(double r, double t, int n, double s,
                         long* evals = nullptr);

/// Heat kernel profile on a radial grid.  Negative quadrature noise below
/// 1e-10 of the peak is clamped to zero and reported; anything worse is a
/// quadrature failure.
KernelProfile heat_kernel(const GridPtr& grid, double t, const Params& params);

/// Total mass integral over R^n of a heat-kernel profile: the grid part plus
/// a log-panel quadrature of pointwise kernel values out to where the
/// first-order jump asymptote t c_{n,s} / r^{n+2s} is valid, plus that
/// asymptote's analytic tail.  The kernel's heavy tail carries mass far past
/// any practical grid extent, so a truncated integral would be meaningless.
double heat_kernel_mass(const KernelProfile& profile);

/// Heat kernel as a cartesian field (spectral construction on the lattice).
Field heat_field(const GridPtr& grid, double t, const Params& params);

enum class FundamentalMethod { time_quadrature, direct_multiplier, cross_validated };

/// Fundamental solution Z = integral_0^inf H(.,t) dt = F^{-1}[1/m].
/// time_quadrature integrates heat kernel values over a split time axis
/// (log-panel Gauss-Legendre on (0,1], exp-sinh on [1,inf)); the direct
/// multiplier route integrates M against the radial Fourier kernel with the
/// zero-frequency ball handled analytically.  cross_validated computes both
/// and fails if they disagree beyond 1e-4 sup-relative on the trusted window
/// [0.1, r_max/2].
KernelProfile fundamental_solution(const GridPtr& grid, const Params& params,
                                   FundamentalMethod method);

/// gamma(alpha) = pi^{n/2} 2^alpha Gamma(alpha/2) / Gamma((n-alpha)/2),
/// the Riesz normalization; 0 < alpha < n.
double gamma_alpha(int n, double alpha);

/// R_alpha(x) = |x|^{alpha-n} / gamma(alpha); exact power-law samples.
KernelProfile riesz_kernel(const GridPtr& grid, double alpha);

/// Z1 = F^{-1}[phi M], Z2 = F^{-1}[(1-phi) M].
struct SplitKernels {
    KernelProfile z1;
    KernelProfile z2;
};
SplitKernels split_kernels(const GridPtr& grid, const Params& params);

enum class BarrierKind { omega, v };

/// Barrier Z * chi_{B_{1/2}} via the closed-form ball transform in Fourier
/// space.  kind selects which comparison hypothesis is checked (omega wants
/// n > 4s, v wants n > 4); violations warn and still compute.
KernelProfile barrier_profile(const GridPtr& grid, const Params& params,
                              BarrierKind kind);

/// Least-squares log-log slope of the profile over [window_lo, window_hi],
/// passing when the slope lands in [expected_lo - tol, expected_hi + tol].
BoundReport verify_kernel_bounds(const KernelProfile& profile,
                                 double expected_lo, double expected_hi,
                                 double window_lo, double window_hi,
                                 double tol);

} // namespace mixedlap
