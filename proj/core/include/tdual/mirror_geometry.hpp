#pragma once

// Moment-map geometry of projective space and its Landau-Ginzburg mirror.
//
// Three coordinate systems live on the mirror moduli space M:
//   (r, gamma)  torus-fiber radii and flat-connection holonomy angles,
//   (y, gamma)  with y = log r, the cotangent-bundle coordinates,
//   z           the complex coordinates z_j = exp(-2 pi phi_j + 2 pi i gamma_j).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tdual::geometry {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Homogeneous point (z_0 : ... : z_n), normalized so the first nonzero
/// coordinate is 1.
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<Complex> homogeneous);

    std::size_t dimension() const { return coords_.size() - 1; }
    const std::vector<Complex>& homogeneous() const { return coords_; }

    /// Equality up to a nonzero scalar, compared after normalization with a
    /// relative tolerance.
    bool same_point(const ProjectivePoint& other, double rel_tol = 1e-12) const;

private:
    std::vector<Complex> coords_;
};

/// Point of the closed simplex {x_i >= 0, sum x_i <= 1}.
class MomentImage {
public:
    explicit MomentImage(std::vector<double> x);

    std::size_t dimension() const { return x_.size(); }
    const std::vector<double>& coords() const { return x_; }
    double operator[](std::size_t i) const { return x_[i]; }

    /// True when every x_i > 0 and sum x_i < 1.
    bool strictly_interior() const;

private:
    std::vector<double> x_;
};

/// Radii of the Lagrangian torus L(r) = S^1(r_1) x ... x S^1(r_n).
class TorusFiber {
public:
    explicit TorusFiber(std::vector<double> r);

    std::size_t dimension() const { return r_.size(); }
    const std::vector<double>& radii() const { return r_; }
    double operator[](std::size_t i) const { return r_[i]; }

    /// 1 + sum r_i^2, the inverse of the hermitian weight h_1 on the fiber.
    double weight() const;

private:
    std::vector<double> r_;
};

/// A point of M: a fiber together with a flat connection on it.
class MirrorPoint {
public:
    /// gamma components are reduced to [0, 1).
    MirrorPoint(TorusFiber fiber, std::vector<double> gamma);

    std::size_t dimension() const { return fiber_.dimension(); }
    const TorusFiber& fiber() const { return fiber_; }
    const std::vector<double>& gamma() const { return gamma_; }
    /// y_i = log r_i.
    std::vector<double> y() const;
    std::vector<Complex> z() const;

private:
    TorusFiber fiber_;
    std::vector<double> gamma_;
};

/// Tangent vector at a point of M in (y, gamma) components.
struct TangentVector {
    std::vector<double> dy;
    std::vector<double> dgamma;
};

MomentImage moment_map(const ProjectivePoint& p);

/// Moment image of the fiber L(r), i.e. of the point (1 : r_1 : ... : r_n).
MomentImage moment_of_fiber(const TorusFiber& r);

/// Inverse of the moment map on the open simplex: r_j = sqrt(x_j / (1 - sum x)).
TorusFiber fiber_radii_from_moment(const MomentImage& x);

std::vector<Complex> mirror_coordinates(const MirrorPoint& m);

/// W = z_1 + ... + z_n + e^{-2 pi} / (z_1 ... z_n).
Complex superpotential(std::span<const Complex> z);

/// dW/dz_j = 1 - e^{-2 pi} / (z_j z_1 ... z_n).
std::vector<Complex> superpotential_gradient(std::span<const Complex> z);

struct CriticalPoint {
    std::vector<Complex> point;
    Complex value;
    double residual;  // max_j |dW/dz_j|
};

/// The n+1 critical points of W: z_1 = ... = z_n = zeta e^{-2 pi/(n+1)},
/// zeta^{n+1} = 1, ordered by the root-of-unity index.
std::vector<CriticalPoint> superpotential_critical_points(std::size_t n);

/// omega(u, v) = (2 pi)^n sum_i (u_{y,i} v_{gamma,i} - u_{gamma,i} v_{y,i}).
double symplectic_form_eval(const MirrorPoint& base, const TangentVector& u,
                            const TangentVector& v);

}  // namespace tdual::geometry
