#pragma once

#include "errors.hpp"

namespace mixedlap {

/// Problem parameters for L = -laplace + (-laplace)^s and the critical
/// equation  L u = lambda h u^p + u^(2*-1).
struct Params {
    int n = 4;            ///< ambient dimension, n >= 2
    double s = 0.5;       ///< fractional order, 0 < s < 1
    double p = 1.0;       ///< subcritical exponent; p in (0,1) is extended mode
    double lambda = 0.05; ///< coupling, > 0

    /// Critical exponent 2n/(n-2); defined for n >= 3 only.
    double two_star() const {
        require_arg(n >= 3, "two_star requires n >= 3");
        return 2.0 * n / (n - 2.0);
    }

    /// p below 1 runs outside the classical-regularity regime.
    bool extended_mode() const { return p < 1.0; }

    /// Theorem regime for the nonlinear solver: n >= 4 and p in [1, 2*-1).
    bool solver_regime() const {
        return n >= 4 && p >= 1.0 && p < two_star() - 1.0;
    }

    void validate() const {
        require_arg(n >= 2, "dimension-out-of-range: n must be >= 2");
        require_arg(s > 0.0 && s < 1.0, "s out of (0,1)");
        require_arg(lambda > 0.0, "lambda must be > 0");
        require_arg(p > 0.0, "p must be > 0");
        if (n >= 3)
            require_arg(p < two_star() - 1.0,
                        "constraint-violation: p must be < 2* - 1");
    }
};

} // namespace mixedlap
