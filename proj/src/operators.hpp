#pragma once

#include <span>

#include "field.hpp"
#include "params.hpp"

namespace mixedlap {

enum class OperatorTag { laplacian, fractional, mixed, riesz_potential };

/// One of -laplace, (-laplace)^s, L = -laplace + (-laplace)^s, or the Riesz
/// potential I_alpha (symbol |xi|^{-alpha}, zero mode dropped).
struct OperatorKind {
    OperatorTag tag = OperatorTag::mixed;
    double s = 0.5;
    double alpha = 1.0;

    static OperatorKind laplacian() { return {OperatorTag::laplacian, 0, 0}; }
    static OperatorKind fractional(double s) {
        return {OperatorTag::fractional, s, 0};
    }
    static OperatorKind mixed(double s) { return {OperatorTag::mixed, s, 0}; }
    static OperatorKind riesz(double alpha) {
        return {OperatorTag::riesz_potential, 0, alpha};
    }
};

struct ApplyReport {
    double dropped_zero_mode = 0.0; ///< integral of the input lost to the pole
};

/// Spectral application of the operator.  Growth-order-2 symbols demand a
/// clean spectral tail (top-octave energy below 1e-8 of the total) so grid
/// noise is not amplified past 1e-6.
Field apply_operator(const Field& u, const OperatorKind& kind,
                     ApplyReport* report = nullptr);

/// u = Z * f through the multiplier: u_hat = f_hat / m on nonzero modes,
/// zero mode set to zero (its mass is reported, not regularized).
Field solve_linear(const Field& f, const Params& params,
                   double* dropped_mass = nullptr);

/// (-Delta)^s u at a grid node by the symmetrized singular integral
///   -c_{n,s}/2 integral (u(x+y) + u(x-y) - 2u(x)) / |y|^{n+2s} dy,
/// with the second difference removing the principal value.  Field samples
/// are evaluated off-lattice through the exact band-limited interpolant.
/// Cartesian grids, n in {2, 3}; the node must sit away from the box edge.
double fractional_pointwise(const Field& u, std::span<const int> index,
                            const Params& params);

/// The constant of the singular integral calibrated from the plane-wave
/// eigenvalue relation (quadrature of 1 - the spherical cosine mean), to be
/// checked against frac_lap_constant's closed form.
double calibrated_frac_constant(int n, double s);

} // namespace mixedlap
