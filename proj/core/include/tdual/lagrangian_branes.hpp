#pragma once

// T-dual Lagrangian branes L(k) in the mirror M = T^*(S^1)^n.
//
// Restricting the Chern connection of O(k) with metric h_k = h_1^k to each
// torus fiber gives the flat connection sum_j k r_j^2/(1 + |r|^2) dtheta_j, so
// L(k) is the graph of gamma^(k) = k gamma^(1) over the fiber radii.  For
// k < 0 the graph lifts to the covering torus (R/(n+1)Z)^n, where each lift
// L^a(k) is the graph of d f^a_k over the open simplex
// U^a(k) = {g_i < a_i, sum g > k + sum a}.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tdual/mirror_geometry.hpp"
#include "tdual/report.hpp"

namespace tdual::branes {

using geometry::MirrorPoint;
using geometry::TangentVector;
using geometry::TorusFiber;

/// h_k(r) = (1 + sum r_i^2)^{-k}.
struct HermitianWeight {
    int k;
    double operator()(const TorusFiber& r) const;
};

/// L(k) as a parametrized graph over the fiber radii.
class LagrangianGraph {
public:
    explicit LagrangianGraph(int k) : k_(k) {}

    int level() const { return k_; }

    /// k r_j^2 / (1 + |r|^2), not reduced mod 1.
    std::vector<double> section(const TorusFiber& r) const;
    MirrorPoint point(const TorusFiber& r) const;
    /// Columns d/dr_i of r -> (log r, gamma^(k)(r)), in (y, gamma) components.
    std::vector<TangentVector> tangent_frame(const TorusFiber& r) const;

private:
    int k_;
};

/// gamma^(k)(r) reduced to [0, 1)^n.
std::vector<double> section_gamma(int k, const TorusFiber& r);

/// Coefficients of dtheta_j in the connection form of (O(k), h_k) on L(r).
/// Equal to section_gamma before the mod-1 reduction.
std::vector<double> connection_angular_part(int k, const TorusFiber& r);

/// The open simplex U^a(k) on the covering torus (R/(n+1)Z)^n.
class LiftedCell {
public:
    /// k in {-n-1, ..., -1}; each a_i in {-n, ..., 0}.
    LiftedCell(std::size_t n, int k, std::vector<int> a);

    std::size_t dimension() const { return a_.size(); }
    int level() const { return k_; }
    const std::vector<int>& offset() const { return a_; }
    int period() const { return static_cast<int>(a_.size()) + 1; }

    /// Representative of gamma mod (n+1) in the chart a_i - (n+1) < g_i <= a_i.
    std::vector<double> to_chart(std::span<const double> gamma) const;
    bool contains(std::span<const double> gamma) const;
    /// Euclidean distance from a chart point to the nearest facet hyperplane
    /// (negative outside).
    double boundary_distance(std::span<const double> gamma) const;
    std::vector<double> barycenter() const;
    /// Chart point a + k x over the moment point x, i.e. the lift of the
    /// section value gamma^(k) = k x.
    std::vector<double> lift_of_moment(std::span<const double> x) const;

private:
    int k_;
    std::vector<int> a_;
};

/// Which generating function to use on a lifted cell.
///   Corrected: f^a_k(g) = (-k) f((g - a)/(-k)), whose differential is L^a(k).
///   Literal:   f((g - a)/(-k)), whose differential is L^a(k) scaled by 1/(-k).
enum class PotentialScale { Corrected, Literal };

/// f(g) = 1/2 sum g_i log(-g_i) - 1/2 (1 + sum g) log(1 + sum g) on the base
/// cell T = {g_i < 0, sum g > -1}.
double base_potential(std::span<const double> gamma);
/// df = (1/2 log(-g_i / (1 + sum g)))_i.
std::vector<double> base_potential_gradient(std::span<const double> gamma);

double potential_value(const LiftedCell& cell, std::span<const double> gamma,
                       PotentialScale scale = PotentialScale::Corrected);
std::vector<double> potential_gradient(const LiftedCell& cell, std::span<const double> gamma,
                                       PotentialScale scale = PotentialScale::Corrected);

/// Interior sample points of the moment simplex: a regular lattice with
/// `per_axis` points per axis, kept at distance >= margin from each facet
/// in the coordinates x_i and 1 - sum x.
std::vector<std::vector<double>> simplex_grid(std::size_t n, std::size_t per_axis, double margin);

struct GraphCheckConfig {
    int k = -1;
    std::vector<int> a;          // empty means the zero offset
    std::size_t per_axis = 100;  // samples per axis of the moment simplex
    double margin = 0.05;
    double fd_step = 1e-5;
    double tol = 1e-7;
    PotentialScale scale = PotentialScale::Corrected;
};

/// Central finite differences of potential_value against the parametric
/// brane y = log r at g = a + k gamma^(1)(r).
CheckReport check_graph(std::size_t n, const GraphCheckConfig& config);

struct ExactnessCheckConfig {
    int k = -1;
    std::size_t per_axis = 20;
    double log_r_min = -3.0;  // radii log-spaced in [e^min, e^max]
    double log_r_max = 3.0;
    double tol = 1e-9;
};

/// All pairwise symplectic pairings of the tangent frame of L(k) on a grid.
CheckReport check_exactness(std::size_t n, const ExactnessCheckConfig& config);

struct PhasePoint {
    std::vector<double> y;
    std::vector<double> gamma;
};

/// phi_t(y, g) = (y, g + t y^* / |y|) for the flat metric sum dg_i^2.
PhasePoint geodesic_flow(const PhasePoint& p, double t);

/// Barycenters of all proper faces of the closed base cell T, i.e. one
/// representative boundary point per stratum of its boundary.
std::vector<std::vector<double>> boundary_strata_points(std::size_t n);

struct SeparationProbeConfig {
    std::vector<double> s;  // point of the boundary of T
    double delta = 0.05;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
};

struct SeparationProbeResult {
    double min_defect = 0.0;
    std::vector<double> witness_gamma;
    std::vector<double> witness_y;
    double witness_dt = 0.0;
    std::size_t samples = 0;
};

/// Minimum over sampled points (y, g) of L(-1) and all 0 <= t1 <= t2 <= delta
/// of the g-norm of (s - g) - (t2 - t1) y^*/|y|, with s - g taken as the
/// shortest torus displacement among lattice translates.  Only t2 - t1
/// matters, so the inner minimum is solved in closed form.
SeparationProbeResult separation_probe(std::size_t n, const SeparationProbeConfig& config);

}  // namespace tdual::branes
