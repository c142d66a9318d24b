#pragma once

#include <functional>
#include <vector>

namespace mixedlap {

/// Gauss-Legendre rule on [-1, 1].  Nodes are cached per order.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendre& gauss_legendre(int order);

/// Append the scaled nodes/weights of an `order`-point rule on [a, b].
void panel_rule(double a, double b, int order,
                std::vector<double>& nodes, std::vector<double>& weights);

/// Breakpoints on [a, b]: panel widths grow geometrically from `first_width`
/// by `growth` until `max_width`, then stay uniform.  Used everywhere a
/// radial integrand has an endpoint singularity or kink at `a`.
std::vector<double> graded_breaks(double a, double b, double first_width,
                                  double growth, double max_width);

template <class F>
double integrate_panels(const std::vector<double>& breaks, int order, F&& f) {
    const GaussLegendre& gl = gauss_legendre(order);
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double a = breaks[p], b = breaks[p + 1];
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        double acc = 0.0;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i)
            acc += gl.weights[i] * f(c + h * gl.nodes[i]);
        total += acc * h;
    }
    return total;
}

/// integral_a^infinity f(t) dt by the exp-sinh substitution
/// t = a + scale * exp(sinh(w) * pi/2), trapezoid in w with automatic
/// truncation.  Requires f to decay at least algebraically with power > 1.
double integrate_exp_sinh(const std::function<double(double)>& f, double a,
                          double scale, double step = 0.12,
                          double rel_tol = 1e-12);

/// Tail integral_a^infinity g(rho) J-oscillatory drho where the integrand
/// oscillates with the sign pattern of J_nu(rate * rho).  Integrates between
/// consecutive Bessel zeros and accelerates the alternating partial sums by
/// repeated averaging (Euler transformation).  `a` should be past the first
/// few oscillations (rate * a >= a couple of cycles).
double oscillatory_tail(const std::function<double(double)>& g, double nu,
                        double rate, double a, int max_cycles = 120,
                        double rel_tol = 1e-11);

/// Least-squares fit of log(values) vs log(abscissae); returns {slope, rms
/// residual}.  Values must be positive.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0; // rms of log-space residuals
    int points = 0;
};

SlopeFit fit_loglog_slope(const std::vector<double>& r,
                          const std::vector<double>& v);

} // namespace mixedlap
