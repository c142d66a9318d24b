#pragma once

#include <array>
#include <complex>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "errors.hpp"

namespace mixedlap {

enum class GridKind { radial, cartesian };

/// Surface area of the unit sphere S^{n-1}.
double sphere_area(int n);

/// Discretization of R^n.
///
/// Radial grids carry composite Gauss-Legendre quadrature nodes on (0, r_max]
/// whose panels are graded geometrically near r = 0 (the fundamental solution
/// has an |x|^-(n-2) near-field singularity that uniform nodes under-resolve)
/// together with a paired spectral grid on (0, rho_max] of the same design.
/// The pair is balanced so that 8-point panels resolve the oscillation
/// exp(i rho r) over the full product range.
///
/// Cartesian grids are periodic boxes [-L, L)^n, N points per dimension
/// (power of two), wavevectors k = (pi/L) * {-N/2, ..., N/2-1}^n.
///
/// Grids are immutable and shared through shared_ptr; transforms are lazily
/// backed by a cached Bessel kernel matrix (radial) or FFT plans (cartesian).
class Grid {
public:
    static std::shared_ptr<const Grid> radial(int n, int node_count,
                                              double r_max,
                                              double rho_max = 0.0);
    static std::shared_ptr<const Grid> cartesian(int n, int pts_per_dim,
                                                 double half_length);

    GridKind kind() const { return kind_; }
    int dim() const { return n_; }
    std::size_t size() const; ///< total sample count (N_r or N^n)

    // --- radial accessors ------------------------------------------------
    const std::vector<double>& radial_nodes() const;
    const std::vector<double>& radial_weights() const;  ///< for integral dr
    const std::vector<double>& spectral_nodes() const;  ///< rho_j > 0
    const std::vector<double>& spectral_weights() const;
    double r_max() const { return r_max_; }
    double rho_max() const { return rho_max_; }

    /// Hankel-type forward transform of a radial function,
    ///   u_hat(rho) = (2 pi)^{n/2} rho^{1-n/2} integral u(r) J_{n/2-1}(r rho) r^{n/2} dr,
    /// evaluated on the spectral nodes.  Real-valued by radial symmetry.
    std::vector<double> radial_forward(std::span<const double> values) const;

    /// Inverse of radial_forward; carries the (2 pi)^{-n} of the inversion.
    std::vector<double> radial_inverse(std::span<const double> spectral) const;

    // --- cartesian accessors ----------------------------------------------
    int pts_per_dim() const { return pts_; }
    double half_length() const { return half_length_; }
    double spacing() const { return 2.0 * half_length_ / pts_; }
    /// Signed lattice frequency index for a 1-d position index.
    int freq_index(int m) const { return m < pts_ / 2 ? m : m - pts_; }
    /// Wavevector component for a 1-d position index.
    double wavevector(int m) const;
    /// |k| of the flattened spectral index.
    double wavevector_norm(std::size_t flat) const;
    /// physical coordinates of a flattened index
    std::array<double, 3> coords(std::size_t flat) const;
    std::size_t flat_index(std::span<const int> idx) const;

    /// u_hat(k) = h^n sum u(x) exp(-i k x), lattice approximation of the
    /// angular-convention Fourier transform.
    std::vector<std::complex<double>> cartesian_forward(
        std::span<const double> values) const;
    std::vector<double> cartesian_inverse(
        std::span<const std::complex<double>> spectral) const;

    /// Weighted integral over R^n of radial samples (radial grids).
    double radial_volume_integral(std::span<const double> values) const;

private:
    Grid() = default;

    struct RadialKernel; // Bessel matrix, built lazily
    const RadialKernel& kernel() const;

    GridKind kind_ = GridKind::radial;
    int n_ = 0;

    // radial data
    std::vector<double> r_nodes_, r_weights_;
    std::vector<double> rho_nodes_, rho_weights_;
    double r_max_ = 0.0, rho_max_ = 0.0;
    mutable std::unique_ptr<RadialKernel> kernel_;
    mutable std::mutex kernel_mutex_;

    // cartesian data
    int pts_ = 0;
    double half_length_ = 0.0;
};

using GridPtr = std::shared_ptr<const Grid>;

} // namespace mixedlap
