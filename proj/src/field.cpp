#include "field.hpp"

#include <algorithm>
#include <cmath>

#include "bessel.hpp"

namespace mixedlap {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Field::Field(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    require_arg(grid_ != nullptr, "field: null grid");
    require_arg(values_.size() == grid_->size(),
                "shape-mismatch: values do not match grid size");
    for (double v : values_)
        require(std::isfinite(v), ErrorCode::numeric_failure,
                "field values must be finite");
}

Field Field::zeros(GridPtr grid) {
    auto n = grid->size();
    return Field(std::move(grid), std::vector<double>(n, 0.0));
}

Field Field::constant(GridPtr grid, double c) {
    auto n = grid->size();
    return Field(std::move(grid), std::vector<double>(n, c));
}

Field Field::from_radius_fn(GridPtr grid,
                            const std::function<double(double)>& f) {
    std::vector<double> v(grid->size());
    if (grid->kind() == GridKind::radial) {
        const auto& r = grid->radial_nodes();
        for (std::size_t i = 0; i < r.size(); ++i) v[i] = f(r[i]);
    } else {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto x = grid->coords(i);
            double rr = 0.0;
            for (int d = 0; d < grid->dim(); ++d) rr += x[d] * x[d];
            v[i] = f(std::sqrt(rr));
        }
    }
    return Field(std::move(grid), std::move(v));
}

Field Field::from_point_fn(
    GridPtr grid, const std::function<double(std::array<double, 3>)>& f) {
    require_arg(grid->kind() == GridKind::cartesian,
                "from_point_fn: cartesian grids only");
    std::vector<double> v(grid->size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid->coords(i));
    return Field(std::move(grid), std::move(v));
}

Field Field::gaussian(GridPtr grid, double width, double amplitude,
                      std::array<double, 3> center) {
    require_arg(width > 0.0, "gaussian: width must be > 0");
    const double inv2w2 = 1.0 / (2.0 * width * width);
    if (grid->kind() == GridKind::radial) {
        return from_radius_fn(std::move(grid), [=](double r) {
            return amplitude * std::exp(-r * r * inv2w2);
        });
    }
    return from_point_fn(std::move(grid), [=](std::array<double, 3> x) {
        double rr = 0.0;
        for (int d = 0; d < 3; ++d) rr += (x[d] - center[d]) * (x[d] - center[d]);
        return amplitude * std::exp(-rr * inv2w2);
    });
}

Field Field::ball_indicator(GridPtr grid, double radius) {
    require_arg(grid->kind() == GridKind::radial,
                "ball_indicator: radial grids only");
    require_arg(radius > 0.0 && radius < grid->r_max(),
                "ball_indicator: radius out of range");
    const int n = grid->dim();
    const double nu = 0.5 * n;
    const auto& rho = grid->spectral_nodes();
    std::vector<double> spec(rho.size());
    const double c = std::pow(kTwoPi * radius, 0.5 * n);
    for (std::size_t j = 0; j < rho.size(); ++j)
        spec[j] = c * std::pow(rho[j], -0.5 * n) * bessel_j(nu, radius * rho[j]);
    return from_radial_spectrum(std::move(grid), std::move(spec));
}

Field Field::plane_wave(GridPtr grid, std::span<const int> mode) {
    require_arg(grid->kind() == GridKind::cartesian,
                "plane_wave: cartesian grids only");
    require_arg(static_cast<int>(mode.size()) == grid->dim(),
                "plane_wave: mode rank mismatch");
    std::array<double, 3> k{0, 0, 0};
    for (int d = 0; d < grid->dim(); ++d)
        k[d] = (M_PI / grid->half_length()) * mode[d];
    return from_point_fn(std::move(grid), [k](std::array<double, 3> x) {
        return std::cos(k[0] * x[0] + k[1] * x[1] + k[2] * x[2]);
    });
}

Field Field::from_radial_spectrum(GridPtr grid, std::vector<double> spectrum) {
    require_arg(grid->kind() == GridKind::radial,
                "from_radial_spectrum: radial grids only");
    auto values = grid->radial_inverse(spectrum);
    Field f(std::move(grid), std::move(values));
    f.rad_spec_ = std::move(spectrum);
    return f;
}

Field Field::weight_h(GridPtr grid, const std::string& kind, double param) {
    const int n = grid->dim();
    if (kind == "gaussian") {
        const double w = param > 0.0 ? param : 1.0;
        const double amp = std::pow(kTwoPi * w * w, -0.5 * n); // unit mass
        return gaussian(std::move(grid), w, amp);
    }
    if (kind == "rational") {
        const double q = param > 0.0 ? param : 0.5 * n + 1.0;
        require_arg(q > 0.5 * n, "weight_h: rational q must exceed n/2");
        return from_radius_fn(std::move(grid), [q](double r) {
            return std::pow(1.0 + r * r, -q);
        });
    }
    throw Error(ErrorCode::invalid_argument,
                "weight_h: unknown kind '" + kind + "' (gaussian|rational)");
}

std::vector<double>& Field::mutate() {
    rad_spec_.reset();
    cart_spec_.reset();
    return values_;
}

bool Field::spectral_valid() const {
    return rad_spec_.has_value() || cart_spec_.has_value();
}

const std::vector<double>& Field::radial_spectrum() const {
    require_arg(grid_->kind() == GridKind::radial,
                "radial_spectrum: not a radial field");
    if (!rad_spec_) rad_spec_ = grid_->radial_forward(values_);
    return *rad_spec_;
}

const std::vector<std::complex<double>>& Field::cartesian_spectrum() const {
    require_arg(grid_->kind() == GridKind::cartesian,
                "cartesian_spectrum: not a cartesian field");
    if (!cart_spec_) cart_spec_ = grid_->cartesian_forward(values_);
    return *cart_spec_;
}

Field Field::apply_multiplier(const std::function<double(double)>& sym) const {
    if (grid_->kind() == GridKind::radial) {
        const auto& spec = radial_spectrum();
        const auto& rho = grid_->spectral_nodes();
        std::vector<double> out(spec.size());
        for (std::size_t j = 0; j < spec.size(); ++j)
            out[j] = sym(rho[j]) * spec[j];
        return from_radial_spectrum(grid_, std::move(out));
    }
    const auto& spec = cartesian_spectrum();
    std::vector<std::complex<double>> out(spec.size());
    for (std::size_t i = 0; i < spec.size(); ++i)
        out[i] = sym(grid_->wavevector_norm(i)) * spec[i];
    auto values = grid_->cartesian_inverse(out);
    Field f(grid_, std::move(values));
    f.cart_spec_ = std::move(out);
    return f;
}

double Field::spectral_tail_fraction() const {
    if (grid_->kind() == GridKind::radial) {
        const auto& spec = radial_spectrum();
        const auto& rho = grid_->spectral_nodes();
        const auto& w = grid_->spectral_weights();
        const double cut = 0.5 * grid_->rho_max();
        double tail = 0.0, total = 0.0;
        for (std::size_t j = 0; j < spec.size(); ++j) {
            const double e =
                w[j] * std::pow(rho[j], grid_->dim() - 1) * spec[j] * spec[j];
            total += e;
            if (rho[j] >= cut) tail += e;
        }
        return total > 0.0 ? tail / total : 0.0;
    }
    const auto& spec = cartesian_spectrum();
    const int quarter = grid_->pts_per_dim() / 4;
    double tail = 0.0, total = 0.0;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const double e = std::norm(spec[i]);
        total += e;
        // top octave: any axis frequency in its upper half
        std::size_t rest = i;
        bool top = false;
        for (int d = 0; d < grid_->dim(); ++d) {
            const int m = static_cast<int>(rest % grid_->pts_per_dim());
            rest /= grid_->pts_per_dim();
            if (std::abs(grid_->freq_index(m)) >= quarter) top = true;
        }
        if (top) tail += e;
    }
    return total > 0.0 ? tail / total : 0.0;
}

double Field::sup_norm() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double Field::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double Field::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

double Field::volume_integral() const {
    if (grid_->kind() == GridKind::radial)
        return grid_->radial_volume_integral(values_);
    const double hn = std::pow(grid_->spacing(), grid_->dim());
    double acc = 0.0;
    for (double v : values_) acc += v;
    return hn * acc;
}

double Field::inner(const Field& other) const {
    check_same_grid(other);
    if (grid_->kind() == GridKind::radial) {
        const auto& r = grid_->radial_nodes();
        const auto& w = grid_->radial_weights();
        double acc = 0.0;
        for (std::size_t i = 0; i < values_.size(); ++i)
            acc += w[i] * std::pow(r[i], grid_->dim() - 1) * values_[i] *
                   other.values_[i];
        return sphere_area(grid_->dim()) * acc;
    }
    const double hn = std::pow(grid_->spacing(), grid_->dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        acc += values_[i] * other.values_[i];
    return hn * acc;
}

double Field::l2_norm() const { return std::sqrt(std::max(0.0, inner(*this))); }

Field& Field::operator+=(const Field& other) {
    check_same_grid(other);
    auto& v = mutate();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_[i];
    return *this;
}

Field& Field::operator-=(const Field& other) {
    check_same_grid(other);
    auto& v = mutate();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= other.values_[i];
    return *this;
}

Field& Field::operator*=(double a) {
    auto& v = mutate();
    for (double& x : v) x *= a;
    return *this;
}

double Field::sup_distance(const Field& a, const Field& b) {
    a.check_same_grid(b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.values_.size(); ++i)
        m = std::max(m, std::abs(a.values_[i] - b.values_[i]));
    return m;
}

void Field::check_same_grid(const Field& other) const {
    require_arg(grid_ == other.grid_,
                "shape-mismatch: fields live on different grids");
}

} // namespace mixedlap
