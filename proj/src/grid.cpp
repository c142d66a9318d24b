#include "grid.hpp"

#include <algorithm>
#include <cmath>

#include "bessel.hpp"
#include "fft.hpp"
#include "quadrature.hpp"

namespace mixedlap {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Panel widths w_k = min(first * growth^k, cap) on P panels summing to span:
// solve for cap by bisection.  Falls back to proportional scaling when even
// the uncapped geometric sum cannot fill the span.
std::vector<double> solve_panel_breaks(double span, int panels, double first,
                                       double growth) {
    auto total = [&](double cap) {
        double sum = 0.0, w = first;
        for (int k = 0; k < panels; ++k) {
            sum += std::min(w, cap);
            w *= growth;
        }
        return sum;
    };
    std::vector<double> widths(panels);
    if (total(span) < span) {
        // too few panels for this grading; keep pure geometric, rescale
        double w = first, sum = 0.0;
        for (int k = 0; k < panels; ++k) { widths[k] = w; sum += w; w *= growth; }
        for (double& x : widths) x *= span / sum;
    } else {
        double lo = first, hi = span;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (total(mid) < span ? lo : hi) = mid;
        }
        const double cap = 0.5 * (lo + hi);
        double w = first;
        for (int k = 0; k < panels; ++k) { widths[k] = std::min(w, cap); w *= growth; }
        // distribute the residual over the capped panels
        double sum = 0.0;
        for (double x : widths) sum += x;
        const double excess = span - sum;
        int capped = 0;
        for (double x : widths)
            if (x >= cap * (1.0 - 1e-12)) ++capped;
        if (capped > 0)
            for (double& x : widths)
                if (x >= cap * (1.0 - 1e-12)) x += excess / capped;
    }
    std::vector<double> breaks{0.0};
    double x = 0.0;
    for (double w : widths) { x += w; breaks.push_back(x); }
    breaks.back() = span;
    return breaks;
}

void fill_panel_nodes(const std::vector<double>& breaks, int total_nodes,
                      std::vector<double>& nodes, std::vector<double>& weights) {
    const int panels = static_cast<int>(breaks.size()) - 1;
    const int base = total_nodes / panels;
    const int rem = total_nodes % panels;
    for (int p = 0; p < panels; ++p) {
        const int order = base + (p >= panels - rem ? 1 : 0);
        panel_rule(breaks[p], breaks[p + 1], order, nodes, weights);
    }
}

} // namespace

double sphere_area(int n) {
    require_arg(n >= 1, "sphere_area: n must be >= 1");
    return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

std::shared_ptr<const Grid> Grid::radial(int n, int node_count, double r_max,
                                         double rho_max) {
    require_arg(n >= 2, "dimension-out-of-range: radial grid needs n >= 2");
    require_arg(node_count >= 16, "invalid-size: radial grid needs >= 16 nodes");
    require_arg(r_max > 0.0, "invalid-size: r_max must be > 0");

    auto g = std::shared_ptr<Grid>(new Grid());
    g->kind_ = GridKind::radial;
    g->n_ = n;
    g->r_max_ = r_max;

    const int panels = std::max(2, node_count / 8);
    const double first = r_max * 2.5e-5;
    const auto breaks = solve_panel_breaks(r_max, panels, first, 1.6);
    fill_panel_nodes(breaks, node_count, g->r_nodes_, g->r_weights_);

    // the largest physical panel limits the resolvable oscillation rate;
    // 8-point Gauss-Legendre stays clean up to (panel width * rho) ~ 4
    double cap = 0.0;
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p)
        cap = std::max(cap, breaks[p + 1] - breaks[p]);
    const double auto_rho = 0.9 * 4.0 / cap;
    g->rho_max_ = rho_max > 0.0 ? rho_max : auto_rho;

    const double rho_cap = 0.9 * 4.0 / r_max;
    const auto rho_breaks =
        graded_breaks(0.0, g->rho_max_, g->rho_max_ * 1e-4, 1.6,
                      std::max(rho_cap, g->rho_max_ * 1e-3));
    for (std::size_t p = 0; p + 1 < rho_breaks.size(); ++p)
        panel_rule(rho_breaks[p], rho_breaks[p + 1], 8, g->rho_nodes_,
                   g->rho_weights_);
    return g;
}

std::shared_ptr<const Grid> Grid::cartesian(int n, int pts_per_dim,
                                            double half_length) {
    require_arg(n >= 2, "dimension-out-of-range: cartesian grid needs n >= 2");
    require_arg(n <= 3, "dimension-out-of-range: cartesian path is limited to n <= 3");
    require_arg(is_power_of_two(pts_per_dim),
                "invalid-size: points per dimension must be a power of two");
    require_arg(pts_per_dim >= 4, "invalid-size: need at least 4 points per dimension");
    require_arg(half_length > 0.0, "invalid-size: box half-length must be > 0");

    auto g = std::shared_ptr<Grid>(new Grid());
    g->kind_ = GridKind::cartesian;
    g->n_ = n;
    g->pts_ = pts_per_dim;
    g->half_length_ = half_length;
    return g;
}

std::size_t Grid::size() const {
    if (kind_ == GridKind::radial) return r_nodes_.size();
    std::size_t s = 1;
    for (int d = 0; d < n_; ++d) s *= static_cast<std::size_t>(pts_);
    return s;
}

const std::vector<double>& Grid::radial_nodes() const {
    require_arg(kind_ == GridKind::radial, "radial_nodes: not a radial grid");
    return r_nodes_;
}
const std::vector<double>& Grid::radial_weights() const {
    require_arg(kind_ == GridKind::radial, "radial_weights: not a radial grid");
    return r_weights_;
}
const std::vector<double>& Grid::spectral_nodes() const {
    require_arg(kind_ == GridKind::radial, "spectral_nodes: not a radial grid");
    return rho_nodes_;
}
const std::vector<double>& Grid::spectral_weights() const {
    require_arg(kind_ == GridKind::radial, "spectral_weights: not a radial grid");
    return rho_weights_;
}

// ---------------------------------------------------------------------------
// radial transforms
// ---------------------------------------------------------------------------

struct Grid::RadialKernel {
    std::vector<double> bessel;     // J_nu(r_i rho_j), row-major in i
    std::vector<double> fwd_row;    // w_i r_i^{n/2}
    std::vector<double> fwd_col;    // (2 pi)^{n/2} rho_j^{1-n/2}
    std::vector<double> inv_row;    // (2 pi)^{-n/2} r_i^{1-n/2}
    std::vector<double> inv_col;    // v_j rho_j^{n/2}
};

const Grid::RadialKernel& Grid::kernel() const {
    std::lock_guard<std::mutex> lock(kernel_mutex_);
    if (!kernel_) {
        auto k = std::make_unique<RadialKernel>();
        const double nu = 0.5 * n_ - 1.0;
        const std::size_t nr = r_nodes_.size(), np = rho_nodes_.size();
        k->bessel.resize(nr * np);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < np; ++j)
                k->bessel[i * np + j] = bessel_j(nu, r_nodes_[i] * rho_nodes_[j]);
        k->fwd_row.resize(nr);
        k->inv_row.resize(nr);
        const double c_fwd = std::pow(kTwoPi, 0.5 * n_);
        for (std::size_t i = 0; i < nr; ++i) {
            k->fwd_row[i] = r_weights_[i] * std::pow(r_nodes_[i], 0.5 * n_);
            k->inv_row[i] = std::pow(r_nodes_[i], 1.0 - 0.5 * n_) / c_fwd;
        }
        k->fwd_col.resize(np);
        k->inv_col.resize(np);
        for (std::size_t j = 0; j < np; ++j) {
            k->fwd_col[j] = c_fwd * std::pow(rho_nodes_[j], 1.0 - 0.5 * n_);
            k->inv_col[j] = rho_weights_[j] * std::pow(rho_nodes_[j], 0.5 * n_);
        }
        kernel_ = std::move(k);
    }
    return *kernel_;
}

std::vector<double> Grid::radial_forward(std::span<const double> values) const {
    require_arg(kind_ == GridKind::radial, "radial_forward: not a radial grid");
    require_arg(values.size() == r_nodes_.size(),
                "shape-mismatch: value count != node count");
    for (double v : values)
        require(std::isfinite(v), ErrorCode::numeric_failure,
                "non-finite-input to forward transform");
    const RadialKernel& k = kernel();
    const std::size_t nr = r_nodes_.size(), np = rho_nodes_.size();
    std::vector<double> out(np, 0.0);
    for (std::size_t i = 0; i < nr; ++i) {
        const double a = k.fwd_row[i] * values[i];
        if (a == 0.0) continue;
        const double* row = &k.bessel[i * np];
        for (std::size_t j = 0; j < np; ++j) out[j] += a * row[j];
    }
    for (std::size_t j = 0; j < np; ++j) out[j] *= k.fwd_col[j];
    return out;
}

std::vector<double> Grid::radial_inverse(std::span<const double> spectral) const {
    require_arg(kind_ == GridKind::radial, "radial_inverse: not a radial grid");
    require_arg(spectral.size() == rho_nodes_.size(),
                "shape-mismatch: coefficient count != spectral node count");
    const RadialKernel& k = kernel();
    const std::size_t nr = r_nodes_.size(), np = rho_nodes_.size();
    std::vector<double> out(nr, 0.0);
    std::vector<double> a(np);
    for (std::size_t j = 0; j < np; ++j) a[j] = k.inv_col[j] * spectral[j];
    for (std::size_t i = 0; i < nr; ++i) {
        const double* row = &k.bessel[i * np];
        double acc = 0.0;
        for (std::size_t j = 0; j < np; ++j) acc += a[j] * row[j];
        out[i] = acc * k.inv_row[i];
    }
    return out;
}

double Grid::radial_volume_integral(std::span<const double> values) const {
    require_arg(kind_ == GridKind::radial,
                "radial_volume_integral: not a radial grid");
    require_arg(values.size() == r_nodes_.size(), "shape-mismatch");
    const double area = sphere_area(n_);
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        acc += r_weights_[i] * std::pow(r_nodes_[i], n_ - 1) * values[i];
    return area * acc;
}

// ---------------------------------------------------------------------------
// cartesian transforms
// ---------------------------------------------------------------------------

double Grid::wavevector(int m) const {
    return (M_PI / half_length_) * freq_index(m);
}

double Grid::wavevector_norm(std::size_t flat) const {
    double sum = 0.0;
    std::size_t rest = flat;
    for (int d = n_ - 1; d >= 0; --d) {
        const int m = static_cast<int>(rest % pts_);
        rest /= pts_;
        const double k = wavevector(m);
        sum += k * k;
    }
    return std::sqrt(sum);
}

std::array<double, 3> Grid::coords(std::size_t flat) const {
    std::array<double, 3> x{0.0, 0.0, 0.0};
    const double h = spacing();
    std::size_t rest = flat;
    for (int d = n_ - 1; d >= 0; --d) {
        const int m = static_cast<int>(rest % pts_);
        rest /= pts_;
        x[d] = -half_length_ + m * h;
    }
    return x;
}

std::size_t Grid::flat_index(std::span<const int> idx) const {
    require_arg(static_cast<int>(idx.size()) == n_, "flat_index: rank mismatch");
    std::size_t flat = 0;
    for (int d = 0; d < n_; ++d) {
        require_arg(idx[d] >= 0 && idx[d] < pts_, "flat_index: out of range");
        flat = flat * pts_ + static_cast<std::size_t>(idx[d]);
    }
    return flat;
}

namespace {
int index_parity(std::size_t flat, int n, int pts) {
    int parity = 0;
    std::size_t rest = flat;
    for (int d = 0; d < n; ++d) {
        parity ^= static_cast<int>(rest % pts) & 1;
        rest /= pts;
    }
    return parity;
}
} // namespace

std::vector<std::complex<double>> Grid::cartesian_forward(
    std::span<const double> values) const {
    require_arg(kind_ == GridKind::cartesian, "cartesian_forward: wrong grid");
    require_arg(values.size() == size(), "shape-mismatch");
    for (double v : values)
        require(std::isfinite(v), ErrorCode::numeric_failure,
                "non-finite-input to forward transform");
    std::vector<std::complex<double>> buf(values.begin(), values.end());
    std::vector<int> dims(n_, pts_);
    fft_nd(buf.data(), dims, /*forward=*/true);
    const double hn = std::pow(spacing(), n_);
    for (std::size_t i = 0; i < buf.size(); ++i) {
        // exp(-i k x) on x = -L + j h picks up (-1)^{sum m_d} vs the plain DFT
        const double sign = index_parity(i, n_, pts_) ? -1.0 : 1.0;
        buf[i] *= sign * hn;
    }
    return buf;
}

std::vector<double> Grid::cartesian_inverse(
    std::span<const std::complex<double>> spectral) const {
    require_arg(kind_ == GridKind::cartesian, "cartesian_inverse: wrong grid");
    require_arg(spectral.size() == size(), "shape-mismatch");
    std::vector<std::complex<double>> buf(spectral.begin(), spectral.end());
    for (std::size_t i = 0; i < buf.size(); ++i)
        if (index_parity(i, n_, pts_)) buf[i] = -buf[i];
    std::vector<int> dims(n_, pts_);
    fft_nd(buf.data(), dims, /*forward=*/false);
    const double c = std::pow(0.5 / half_length_, n_);
    std::vector<double> out(buf.size());
    for (std::size_t i = 0; i < buf.size(); ++i) out[i] = c * buf[i].real();
    return out;
}

} // namespace mixedlap
