#pragma once

#include "errors.hpp"

namespace mixedlap {

/// Scalar Fourier-side functions of the mixed operator: the symbol m, its
/// inverse M, the smooth radial cutoff phi (identically 1 inside |xi| <= 1,
/// 0 outside |xi| >= 2), the low/high split M1/M2 and the compactly
/// supported low-frequency factor A with M1 = A |xi|^{-2s}.
struct SymbolParams {
    double s = 0.5;
    double cutoff_inner = 1.0;
    double cutoff_outer = 2.0;
    double epsilon_zero = 0.0; ///< zero-mode guard; 0 = excluded, not regularized

    void validate() const {
        require_arg(s > 0.0 && s < 1.0, "s out of (0,1)");
        require_arg(cutoff_inner < cutoff_outer, "cutoff radii out of order");
        require_arg(epsilon_zero >= 0.0, "epsilon_zero must be >= 0");
    }
};

/// m(xi) = |xi|^2 + |xi|^{2s}; strictly increasing, m(0) = 0.
double symbol_m(double xi_norm, double s);

/// M(xi) = 1 / m(xi); throws zero-frequency for |xi| = 0.
double multiplier_M(double xi_norm, double s);

/// Smooth cutoff: exponential-bump mollification of the indicator,
/// phi(r) = g(2-r) / (g(2-r) + g(r-1)) with g(t) = exp(-1/t) for t > 0.
double cutoff_phi(double xi_norm);

struct SplitMultipliers {
    double m1;
    double m2;
};

/// M1 = phi/m and M2 = (1-phi)/m sharing one evaluation of m, so that
/// M1 + M2 == M exactly in floating point.
SplitMultipliers split_multipliers(double xi_norm, double s);

/// A(xi) = phi(xi) / (1 + |xi|^{2-2s}); compact support in |xi| <= 2, A(0)=1.
double low_symbol_A(double xi_norm, double s);

/// Normalization of the singular-integral fractional Laplacian that matches
/// the multiplier |xi|^{2s}:  c_{n,s} = 4^s Gamma(n/2+s) / (pi^{n/2} |Gamma(-s)|).
double frac_lap_constant(int n, double s);

} // namespace mixedlap
