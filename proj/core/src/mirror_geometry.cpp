#include "tdual/mirror_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tdual::geometry {

namespace {

double sum_of(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0);
}

// e^{-2 pi}, the Kahler parameter in the superpotential.
const double kQ = std::exp(-kTwoPi);

}  // namespace

ProjectivePoint::ProjectivePoint(std::vector<Complex> homogeneous)
    : coords_(std::move(homogeneous)) {
    if (coords_.size() < 2) {
        throw std::invalid_argument("projective point needs at least two homogeneous coordinates");
    }
    auto lead = std::find_if(coords_.begin(), coords_.end(),
                             [](const Complex& c) { return c != Complex{}; });
    if (lead == coords_.end()) {
        throw std::invalid_argument("projective point with all coordinates zero");
    }
    const Complex scale = *lead;
    for (auto& c : coords_) c /= scale;
}

bool ProjectivePoint::same_point(const ProjectivePoint& other, double rel_tol) const {
    if (other.coords_.size() != coords_.size()) return false;
    double norm = 0.0;
    double diff = 0.0;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        norm = std::max({norm, std::abs(coords_[i]), std::abs(other.coords_[i])});
        diff = std::max(diff, std::abs(coords_[i] - other.coords_[i]));
    }
    return diff <= rel_tol * norm;
}

MomentImage::MomentImage(std::vector<double> x) : x_(std::move(x)) {
    if (x_.empty()) throw std::invalid_argument("moment image of dimension 0");
    for (double xi : x_) {
        if (!(xi >= 0.0)) throw std::invalid_argument("moment coordinate must be nonnegative");
    }
    // Tolerate rounding on the slanted face.
    if (sum_of(x_) > 1.0 + 1e-14) throw std::invalid_argument("moment coordinates sum above 1");
}

bool MomentImage::strictly_interior() const {
    return std::all_of(x_.begin(), x_.end(), [](double v) { return v > 0.0; }) &&
           sum_of(x_) < 1.0;
}

TorusFiber::TorusFiber(std::vector<double> r) : r_(std::move(r)) {
    if (r_.empty()) throw std::invalid_argument("torus fiber of dimension 0");
    for (double ri : r_) {
        if (!(ri > 0.0) || !std::isfinite(ri)) {
            throw std::invalid_argument("torus fiber radii must be finite and positive");
        }
    }
}

double TorusFiber::weight() const {
    double w = 1.0;
    for (double ri : r_) w += ri * ri;
    return w;
}

MirrorPoint::MirrorPoint(TorusFiber fiber, std::vector<double> gamma)
    : fiber_(std::move(fiber)), gamma_(std::move(gamma)) {
    if (gamma_.size() != fiber_.dimension()) {
        throw std::invalid_argument("connection angles and fiber radii differ in dimension");
    }
    for (double& g : gamma_) {
        g -= std::floor(g);
        if (g >= 1.0) g = 0.0;
    }
}

std::vector<double> MirrorPoint::y() const {
    std::vector<double> out(dimension());
    std::transform(fiber_.radii().begin(), fiber_.radii().end(), out.begin(),
                   [](double r) { return std::log(r); });
    return out;
}

std::vector<Complex> MirrorPoint::z() const { return mirror_coordinates(*this); }

MomentImage moment_map(const ProjectivePoint& p) {
    const auto& z = p.homogeneous();
    double total = 0.0;
    for (const auto& c : z) total += std::norm(c);
    std::vector<double> x(z.size() - 1);
    for (std::size_t i = 1; i < z.size(); ++i) x[i - 1] = std::norm(z[i]) / total;
    return MomentImage(std::move(x));
}

MomentImage moment_of_fiber(const TorusFiber& r) {
    const double w = r.weight();
    std::vector<double> x(r.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = r[i] * r[i] / w;
    return MomentImage(std::move(x));
}

TorusFiber fiber_radii_from_moment(const MomentImage& x) {
    if (!x.strictly_interior()) {
        throw std::invalid_argument("fiber radii need a moment point strictly inside the simplex");
    }
    const double rest = 1.0 - sum_of(x.coords());
    std::vector<double> r(x.dimension());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::sqrt(x[i] / rest);
    return TorusFiber(std::move(r));
}

std::vector<Complex> mirror_coordinates(const MirrorPoint& m) {
    const auto phi = moment_of_fiber(m.fiber());
    std::vector<Complex> z(m.dimension());
    for (std::size_t j = 0; j < z.size(); ++j) {
        z[j] = std::polar(std::exp(-kTwoPi * phi[j]), kTwoPi * m.gamma()[j]);
    }
    return z;
}

Complex superpotential(std::span<const Complex> z) {
    if (z.empty()) throw std::invalid_argument("superpotential needs n >= 1 coordinates");
    Complex sum{};
    Complex product{1.0, 0.0};
    for (const auto& zj : z) {
        if (zj == Complex{}) throw std::invalid_argument("superpotential undefined at a zero coordinate");
        sum += zj;
        product *= zj;
    }
    return sum + kQ / product;
}

std::vector<Complex> superpotential_gradient(std::span<const Complex> z) {
    Complex product{1.0, 0.0};
    for (const auto& zj : z) {
        if (zj == Complex{}) throw std::invalid_argument("superpotential undefined at a zero coordinate");
        product *= zj;
    }
    std::vector<Complex> grad(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) grad[j] = 1.0 - kQ / (z[j] * product);
    return grad;
}

std::vector<CriticalPoint> superpotential_critical_points(std::size_t n) {
    if (n == 0) throw std::invalid_argument("superpotential needs n >= 1");
    const double m = static_cast<double>(n + 1);
    const double modulus = std::exp(-kTwoPi / m);
    std::vector<CriticalPoint> out;
    out.reserve(n + 1);
    for (std::size_t s = 0; s <= n; ++s) {
        const Complex zeta = std::polar(1.0, kTwoPi * static_cast<double>(s) / m);
        CriticalPoint cp;
        cp.point.assign(n, zeta * modulus);
        cp.value = superpotential(cp.point);
        cp.residual = 0.0;
        for (const auto& g : superpotential_gradient(cp.point)) {
            cp.residual = std::max(cp.residual, std::abs(g));
        }
        out.push_back(std::move(cp));
    }
    return out;
}

double symplectic_form_eval(const MirrorPoint& base, const TangentVector& u,
                            const TangentVector& v) {
    const std::size_t n = base.dimension();
    if (u.dy.size() != n || u.dgamma.size() != n || v.dy.size() != n || v.dgamma.size() != n) {
        throw std::invalid_argument("tangent vector dimension " + std::to_string(u.dy.size()) +
                                    " does not match base dimension " + std::to_string(n));
    }
    double pairing = 0.0;
    for (std::size_t i = 0; i < n; ++i) pairing += u.dy[i] * v.dgamma[i] - u.dgamma[i] * v.dy[i];
    return std::pow(kTwoPi, static_cast<double>(n)) * pairing;
}

}  // namespace tdual::geometry
