#include "quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "bessel.hpp"
#include "errors.hpp"

namespace mixedlap {

namespace {

GaussLegendre compute_gauss_legendre(int order) {
    GaussLegendre rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton on P_order with the Chebyshev-like initial guess
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GaussLegendre& gauss_legendre(int order) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

void panel_rule(double a, double b, int order,
                std::vector<double>& nodes, std::vector<double>& weights) {
    const GaussLegendre& gl = gauss_legendre(order);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int i = 0; i < order; ++i) {
        nodes.push_back(c + h * gl.nodes[i]);
        weights.push_back(h * gl.weights[i]);
    }
}

std::vector<double> graded_breaks(double a, double b, double first_width,
                                  double growth, double max_width) {
    require_arg(b > a, "graded_breaks: empty interval");
    require_arg(first_width > 0 && growth > 1.0 && max_width >= first_width,
                "graded_breaks: bad grading parameters");
    std::vector<double> breaks{a};
    double w = first_width;
    double x = a;
    while (x < b) {
        x = std::min(x + w, b);
        // avoid a sliver final panel
        if (b - x < 0.25 * w) x = b;
        breaks.push_back(x);
        w = std::min(w * growth, max_width);
    }
    return breaks;
}

double integrate_exp_sinh(const std::function<double(double)>& f, double a,
                          double scale, double step, double rel_tol) {
    require_arg(scale > 0 && step > 0, "integrate_exp_sinh: bad parameters");
    const double half_pi = 0.5 * M_PI;
    auto term = [&](double w) {
        const double sh = std::sinh(w);
        const double tau = scale * std::exp(half_pi * sh);
        const double jac = tau * half_pi * std::cosh(w);
        return f(a + tau) * jac;
    };
    double sum = term(0.0);
    // march outward in both directions until terms are negligible
    for (int dir : {+1, -1}) {
        int idle = 0;
        for (int k = 1; k <= 700; ++k) {
            const double w = dir * k * step;
            if (half_pi * std::sinh(std::abs(w)) > 690.0) break; // exp range
            const double t = term(w);
            sum += t;
            if (std::abs(t) < rel_tol * std::abs(sum) + 1e-300) {
                if (++idle >= 3) break;
            } else {
                idle = 0;
            }
        }
    }
    return sum * step;
}

double oscillatory_tail(const std::function<double(double)>& g, double nu,
                        double rate, double a, int max_cycles, double rel_tol) {
    require(rate > 0, ErrorCode::numeric_failure, "oscillatory_tail: rate <= 0");
    // first Bessel zero past `a`
    int m = 1;
    while (bessel_j_zero(nu, m) / rate <= a && m < 100000) ++m;

    std::vector<double> partial; // partial sums of cycle integrals
    partial.reserve(max_cycles + 1);
    double acc = 0.0;
    double lo = a;
    std::vector<double> diag_prev;
    double best = 0.0, best_err = HUGE_VAL;
    for (int c = 0; c < max_cycles; ++c) {
        const double hi = bessel_j_zero(nu, m + c) / rate;
        if (hi <= lo) continue;
        acc += integrate_panels(std::vector<double>{lo, hi}, 12, g);
        lo = hi;
        partial.push_back(acc);
        if (partial.size() >= 4) {
            // Euler transformation: repeated averaging of partial sums
            std::vector<double> row = partial;
            while (row.size() > 1) {
                for (std::size_t i = 0; i + 1 < row.size(); ++i)
                    row[i] = 0.5 * (row[i] + row[i + 1]);
                row.pop_back();
            }
            const double est = row[0];
            if (!diag_prev.empty()) {
                const double err = std::abs(est - diag_prev[0]);
                if (err < best_err) { best = est; best_err = err; }
                if (err < rel_tol * (std::abs(est) + 1e-300) || err < 1e-305)
                    return est;
            }
            diag_prev = {est};
        }
    }
    if (best_err < HUGE_VAL) return best;
    return acc;
}

SlopeFit fit_loglog_slope(const std::vector<double>& r,
                          const std::vector<double>& v) {
    require_arg(r.size() == v.size(), "fit_loglog_slope: size mismatch");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int np = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > 0.0) || !(v[i] > 0.0)) continue;
        const double x = std::log(r[i]), y = std::log(v[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++np;
    }
    require(np >= 2, ErrorCode::invalid_argument,
            "fit_loglog_slope: fewer than two positive samples");
    SlopeFit fit;
    fit.points = np;
    const double det = np * sxx - sx * sx;
    fit.slope = (np * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / np;
    double ss = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > 0.0) || !(v[i] > 0.0)) continue;
        const double e = std::log(v[i]) - (fit.intercept + fit.slope * std::log(r[i]));
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / np);
    return fit;
}

} // namespace mixedlap
