#include "symbols.hpp"

#include <cmath>

namespace mixedlap {

namespace {
double bump_g(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
} // namespace

double symbol_m(double xi_norm, double s) {
    require_arg(xi_norm >= 0.0, "symbol_m: |xi| must be >= 0");
    if (xi_norm == 0.0) return 0.0;
    return xi_norm * xi_norm + std::pow(xi_norm, 2.0 * s);
}

double multiplier_M(double xi_norm, double s) {
    require_arg(xi_norm >= 0.0, "multiplier_M: |xi| must be >= 0");
    require(xi_norm > 0.0, ErrorCode::invalid_argument,
            "zero-frequency: M has a pole at xi = 0; route the zero mode "
            "through the solver's zero-mode policy");
    return 1.0 / symbol_m(xi_norm, s);
}

double cutoff_phi(double xi_norm) {
    require_arg(xi_norm >= 0.0, "cutoff_phi: |xi| must be >= 0");
    if (xi_norm <= 1.0) return 1.0;
    if (xi_norm >= 2.0) return 0.0;
    const double a = bump_g(2.0 - xi_norm);
    const double b = bump_g(xi_norm - 1.0);
    return a / (a + b);
}

SplitMultipliers split_multipliers(double xi_norm, double s) {
    require(xi_norm > 0.0, ErrorCode::invalid_argument,
            "zero-frequency: split multipliers undefined at xi = 0");
    const double inv_m = 1.0 / symbol_m(xi_norm, s);
    const double phi = cutoff_phi(xi_norm);
    const double m1 = phi * inv_m;
    // complement against the shared M so that m1 + m2 == M exactly
    return {m1, inv_m - m1};
}

double low_symbol_A(double xi_norm, double s) {
    require_arg(xi_norm >= 0.0, "low_symbol_A: |xi| must be >= 0");
    const double phi = cutoff_phi(xi_norm);
    if (phi == 0.0) return 0.0;
    return phi / (1.0 + std::pow(xi_norm, 2.0 - 2.0 * s));
}

double frac_lap_constant(int n, double s) {
    require_arg(n >= 1 && s > 0.0 && s < 1.0, "frac_lap_constant: bad (n, s)");
    return std::pow(4.0, s) * std::tgamma(0.5 * n + s) /
           (std::pow(M_PI, 0.5 * n) * std::abs(std::tgamma(-s)));
}

} // namespace mixedlap
