#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "grid.hpp"

namespace mixedlap {

/// Real-valued samples of a function on a Grid, with a lazily computed and
/// cached spectral representation.  The cache is kept consistent with the
/// values: any mutation invalidates it, and fields built from a spectrum get
/// values from the inverse transform so the pair round-trips by construction.
class Field {
public:
    Field() = default;
    Field(GridPtr grid, std::vector<double> values);

    static Field zeros(GridPtr grid);
    static Field constant(GridPtr grid, double c);

    /// Samples f(|x|) (works on both grid kinds).
    static Field from_radius_fn(GridPtr grid,
                                const std::function<double(double)>& f);
    /// Samples f(x) on a cartesian grid.
    static Field from_point_fn(
        GridPtr grid, const std::function<double(std::array<double, 3>)>& f);

    /// amplitude * exp(-|x - center|^2 / (2 width^2)); center applies to
    /// cartesian grids only.
    static Field gaussian(GridPtr grid, double width, double amplitude = 1.0,
                          std::array<double, 3> center = {0, 0, 0});

    /// Band-limited representation of the indicator of B_radius on a radial
    /// grid: the spectrum is the closed-form ball transform
    /// (2 pi)^{n/2} R^{n/2} rho^{-n/2} J_{n/2}(R rho), values its inverse.
    static Field ball_indicator(GridPtr grid, double radius);

    /// cos(k . x) for a lattice mode (cartesian); an exact eigenfunction of
    /// every radial Fourier multiplier on the grid.
    static Field plane_wave(GridPtr grid, std::span<const int> mode);

    /// Field with the given radial spectrum samples; values via inverse.
    static Field from_radial_spectrum(GridPtr grid,
                                      std::vector<double> spectrum);

    /// Built-in weights for the nonlinear problem: "gaussian" is the mass-one
    /// Gaussian of the given width, "rational" is (1 + |x|^2)^{-q}.
    static Field weight_h(GridPtr grid, const std::string& kind, double param);

    const GridPtr& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    /// Mutable access; drops the spectral cache.
    std::vector<double>& mutate();

    bool spectral_valid() const;
    const std::vector<double>& radial_spectrum() const;
    const std::vector<std::complex<double>>& cartesian_spectrum() const;

    /// New field with spectrum sym(|k|) * u_hat.  sym is invoked with 0 for
    /// the cartesian zero mode; radial spectral nodes are strictly positive.
    Field apply_multiplier(const std::function<double(double)>& sym) const;

    /// Fraction of spectral energy in the top octave (|k| >= k_max / 2); the
    /// guard used before applying growth-order-2 symbols.
    double spectral_tail_fraction() const;

    // --- reductions -------------------------------------------------------
    double sup_norm() const;
    double min_value() const;
    double max_value() const;
    double volume_integral() const;        ///< integral u dx
    double inner(const Field& other) const; ///< integral u v dx
    double l2_norm() const;

    // --- arithmetic (value semantics) --------------------------------------
    Field& operator+=(const Field& other);
    Field& operator-=(const Field& other);
    Field& operator*=(double a);
    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }
    friend Field operator*(double a, Field b) { return b *= a; }

    /// max_i |a_i - b_i|
    static double sup_distance(const Field& a, const Field& b);

private:
    void check_same_grid(const Field& other) const;

    GridPtr grid_;
    std::vector<double> values_;
    mutable std::optional<std::vector<double>> rad_spec_;
    mutable std::optional<std::vector<std::complex<double>>> cart_spec_;
};

} // namespace mixedlap
