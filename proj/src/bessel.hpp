#pragma once

namespace mixedlap {

/// Bessel function of the first kind J_nu(x) for nu >= 0, x >= 0.
///
/// Power series for x <= 12, Hankel asymptotic expansion beyond, with the
/// asymptotic series truncated at its smallest term.  Absolute accuracy is
/// about 1e-12 near the split and better elsewhere, which bounds the
/// accuracy of every radial transform in the library.
double bessel_j(double nu, double x);

/// m-th positive zero of J_nu (m >= 1), McMahon expansion.  Used to place
/// half-cycle panels in oscillatory tail integration; a few 1e-4 of relative
/// error is harmless there.
double bessel_j_zero(double nu, int m);

} // namespace mixedlap
