#include "bessel.hpp"

#include <cmath>
#include <limits>

namespace mixedlap {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Ascending series sum_k (-1)^k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)).
// At x = 12 the largest term is ~4e3, so the rounding floor is ~1e-12.
double bessel_j_series(double nu, double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (k * (nu + k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    // prefactor (x/2)^nu / Gamma(nu+1) via logs to avoid overflow for large nu
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double logpre = nu * std::log(0.5 * x) - std::lgamma(nu + 1.0);
    return sum * std::exp(logpre);
}

// Hankel asymptotic expansion: J_nu(x) ~ sqrt(2/(pi x)) (P cos chi - Q sin chi),
// chi = x - (nu/2 + 1/4) pi.  Terms a_k = prod_j (mu - (2j-1)^2) / (k! (8x)^k),
// mu = 4 nu^2; truncated once terms stop decreasing.
double bessel_j_asymptotic(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 40; ++k) {
        const double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= num / (k * 8.0 * x);
        if (std::abs(term) >= prev) break; // smallest-term truncation
        prev = std::abs(term);
        switch (k % 4) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            case 0: p += term; break;
        }
        if (std::abs(term) < 1e-17) break;
    }
    const double chi = x - (0.5 * nu + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

} // namespace

double bessel_j(double nu, double x) {
    if (x <= 12.0) return bessel_j_series(nu, x);
    return bessel_j_asymptotic(nu, x);
}

double bessel_j_zero(double nu, int m) {
    const double mu = 4.0 * nu * nu;
    const double b = (m + 0.5 * nu - 0.25) * kPi;
    const double eb = 8.0 * b;
    // McMahon: b - (mu-1)/(8b) - 4(mu-1)(7mu-31)/(3 (8b)^3) - ...
    double z = b - (mu - 1.0) / eb
             - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * eb * eb * eb);
    return z;
}

} // namespace mixedlap
