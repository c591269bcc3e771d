#include "tdual/lagrangian_branes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace tdual::branes {

namespace {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

Json to_json_vec(std::span<const double> v) { return Json(std::vector<double>(v.begin(), v.end())); }

const char* scale_name(PotentialScale s) {
    return s == PotentialScale::Corrected ? "corrected" : "literal";
}

// Odometer over {0..m-1}^n.
bool next_index(std::vector<std::size_t>& idx, std::size_t m) {
    for (std::size_t d = 0; d < idx.size(); ++d) {
        if (++idx[d] < m) return true;
        idx[d] = 0;
    }
    return false;
}

}  // namespace

double HermitianWeight::operator()(const TorusFiber& r) const {
    return std::pow(r.weight(), -static_cast<double>(k));
}

std::vector<double> LagrangianGraph::section(const TorusFiber& r) const {
    const double w = r.weight();
    std::vector<double> g(r.dimension());
    for (std::size_t j = 0; j < g.size(); ++j) g[j] = static_cast<double>(k_) * r[j] * r[j] / w;
    return g;
}

MirrorPoint LagrangianGraph::point(const TorusFiber& r) const { return MirrorPoint(r, section(r)); }

std::vector<TangentVector> LagrangianGraph::tangent_frame(const TorusFiber& r) const {
    const std::size_t n = r.dimension();
    const double w = r.weight();
    const double k = static_cast<double>(k_);
    std::vector<TangentVector> frame(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& col = frame[i];
        col.dy.assign(n, 0.0);
        col.dy[i] = 1.0 / r[i];
        col.dgamma.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double diag = (i == j) ? 2.0 * r[j] / w : 0.0;
            col.dgamma[j] = k * (diag - 2.0 * r[j] * r[j] * r[i] / (w * w));
        }
    }
    return frame;
}

std::vector<double> connection_angular_part(int k, const TorusFiber& r) {
    return LagrangianGraph(k).section(r);
}

std::vector<double> section_gamma(int k, const TorusFiber& r) {
    auto g = connection_angular_part(k, r);
    for (double& v : g) {
        v -= std::floor(v);
        if (v >= 1.0) v = 0.0;
    }
    return g;
}

LiftedCell::LiftedCell(std::size_t n, int k, std::vector<int> a) : k_(k), a_(std::move(a)) {
    if (n == 0) throw std::invalid_argument("lifted cell needs n >= 1");
    if (a_.empty()) a_.assign(n, 0);
    if (a_.size() != n) throw std::invalid_argument("lifted cell offset has wrong dimension");
    const int top = static_cast<int>(n);
    if (k_ < -top - 1 || k_ > -1) {
        throw std::invalid_argument("lifted cell level must lie in {-n-1, ..., -1}, got " +
                                    std::to_string(k_));
    }
    for (int ai : a_) {
        if (ai < -top || ai > 0) throw std::invalid_argument("lifted cell offsets must lie in {-n, ..., 0}");
    }
}

std::vector<double> LiftedCell::to_chart(std::span<const double> gamma) const {
    if (gamma.size() != a_.size()) throw std::invalid_argument("point dimension does not match cell");
    const double p = period();
    std::vector<double> out(gamma.begin(), gamma.end());
    for (std::size_t l = 0; l < out.size(); ++l) {
        out[l] -= p * std::ceil((out[l] - a_[l]) / p);
    }
    return out;
}

double LiftedCell::boundary_distance(std::span<const double> gamma) const {
    const auto g = to_chart(gamma);
    double d = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    double offset_sum = 0.0;
    for (std::size_t l = 0; l < g.size(); ++l) {
        d = std::min(d, a_[l] - g[l]);
        sum += g[l];
        offset_sum += a_[l];
    }
    const double slanted = (sum - k_ - offset_sum) / std::sqrt(static_cast<double>(g.size()));
    return std::min(d, slanted);
}

bool LiftedCell::contains(std::span<const double> gamma) const { return boundary_distance(gamma) > 0.0; }

std::vector<double> LiftedCell::barycenter() const {
    std::vector<double> c(a_.size());
    const double shift = static_cast<double>(k_) / static_cast<double>(a_.size() + 1);
    for (std::size_t l = 0; l < c.size(); ++l) c[l] = a_[l] + shift;
    return c;
}

std::vector<double> LiftedCell::lift_of_moment(std::span<const double> x) const {
    if (x.size() != a_.size()) throw std::invalid_argument("moment point dimension does not match cell");
    std::vector<double> g(x.size());
    for (std::size_t l = 0; l < g.size(); ++l) g[l] = a_[l] + k_ * x[l];
    return g;
}

double base_potential(std::span<const double> gamma) {
    double sum = 0.0;
    double value = 0.0;
    for (double g : gamma) {
        if (!(g < 0.0)) throw std::domain_error("potential evaluated outside the base cell");
        value += 0.5 * g * std::log(-g);
        sum += g;
    }
    const double rest = 1.0 + sum;
    if (!(rest > 0.0)) throw std::domain_error("potential evaluated outside the base cell");
    return value - 0.5 * rest * std::log(rest);
}

std::vector<double> base_potential_gradient(std::span<const double> gamma) {
    double sum = 0.0;
    for (double g : gamma) {
        if (!(g < 0.0)) throw std::domain_error("potential evaluated outside the base cell");
        sum += g;
    }
    const double rest = 1.0 + sum;
    if (!(rest > 0.0)) throw std::domain_error("potential evaluated outside the base cell");
    std::vector<double> grad(gamma.size());
    for (std::size_t i = 0; i < grad.size(); ++i) grad[i] = 0.5 * std::log(-gamma[i] / rest);
    return grad;
}

namespace {

std::vector<double> rescaled_argument(const LiftedCell& cell, std::span<const double> gamma) {
    auto g = cell.to_chart(gamma);
    if (!cell.contains(g)) throw std::invalid_argument("point is not inside the lifted cell");
    const double scale = -static_cast<double>(cell.level());
    for (std::size_t l = 0; l < g.size(); ++l) g[l] = (g[l] - cell.offset()[l]) / scale;
    return g;
}

}  // namespace

double potential_value(const LiftedCell& cell, std::span<const double> gamma, PotentialScale scale) {
    const double value = base_potential(rescaled_argument(cell, gamma));
    return scale == PotentialScale::Corrected ? -cell.level() * value : value;
}

std::vector<double> potential_gradient(const LiftedCell& cell, std::span<const double> gamma,
                                       PotentialScale scale) {
    auto grad = base_potential_gradient(rescaled_argument(cell, gamma));
    if (scale == PotentialScale::Literal) {
        for (double& g : grad) g /= -static_cast<double>(cell.level());
    }
    return grad;
}

std::vector<std::vector<double>> simplex_grid(std::size_t n, std::size_t per_axis, double margin) {
    if (n == 0 || per_axis == 0) throw std::invalid_argument("simplex grid needs n >= 1 and per_axis >= 1");
    const double span = 1.0 - static_cast<double>(n + 1) * margin;
    if (!(margin > 0.0) || !(span > 0.0)) throw std::invalid_argument("simplex grid margin leaves no interior");
    std::vector<std::vector<double>> out;
    if (per_axis == 1) {
        out.emplace_back(n, 1.0 / static_cast<double>(n + 1));
        return out;
    }
    const double denom = static_cast<double>(per_axis - 1);
    std::vector<std::size_t> idx(n, 0);
    do {
        const std::size_t total = std::accumulate(idx.begin(), idx.end(), std::size_t{0});
        if (total > per_axis - 1) continue;
        std::vector<double> x(n);
        for (std::size_t l = 0; l < n; ++l) x[l] = margin + span * static_cast<double>(idx[l]) / denom;
        out.push_back(std::move(x));
    } while (next_index(idx, per_axis));
    return out;
}

CheckReport check_graph(std::size_t n, const GraphCheckConfig& config) {
    if (!(config.fd_step > 0.0) || !(config.tol > 0.0)) {
        throw std::invalid_argument("finite-difference step and tolerance must be positive");
    }
    const LiftedCell cell(n, config.k, config.a);
    const auto grid = simplex_grid(n, config.per_axis, config.margin);
    const double h = config.fd_step;

    CheckReport report;
    report.check = "graph";
    report.anchor = "lifted brane is the graph of an exact differential";
    report.parameters = Json{{"n", n},
                             {"k", config.k},
                             {"a", cell.offset()},
                             {"per_axis", config.per_axis},
                             {"samples", grid.size()},
                             {"margin", config.margin},
                             {"fd_step", h},
                             {"tol", config.tol},
                             {"scale", scale_name(config.scale)}};

    double worst_ratio_norm = 0.0;
    double ratio_at_largest_y = 0.0;
    for (const auto& x : grid) {
        const auto g = cell.lift_of_moment(x);
        if (cell.boundary_distance(g) < 2.0 * h) {
            throw std::invalid_argument("graph sample closer than 2h to the cell boundary");
        }
        const auto r = geometry::fiber_radii_from_moment(geometry::MomentImage(x));
        std::vector<double> y(n);
        std::vector<double> fd(n);
        double dev = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            y[l] = std::log(r[l]);
            auto plus = g;
            auto minus = g;
            plus[l] += h;
            minus[l] -= h;
            fd[l] = (potential_value(cell, plus, config.scale) - potential_value(cell, minus, config.scale)) /
                    (2.0 * h);
            dev = std::max(dev, std::abs(fd[l] - y[l]));
        }
        const double ny = norm2(y);
        if (ny > worst_ratio_norm && norm2(fd) > 0.0) {
            worst_ratio_norm = ny;
            ratio_at_largest_y = ny / norm2(fd);
        }
        if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.witness = Json{{"gamma", to_json_vec(g)},
                                  {"moment", to_json_vec(x)},
                                  {"y_brane", to_json_vec(y)},
                                  {"y_fd", to_json_vec(fd)}};
        }
    }
    report.pass = report.max_deviation <= config.tol;
    if (report.pass) report.witness.reset();
    report.details = Json{{"gradient_ratio_at_largest_y", ratio_at_largest_y}};
    return report;
}

CheckReport check_exactness(std::size_t n, const ExactnessCheckConfig& config) {
    if (n == 0 || config.per_axis == 0) throw std::invalid_argument("exactness grid needs n >= 1 and per_axis >= 1");
    if (!(config.tol > 0.0)) throw std::invalid_argument("symplectic tolerance must be positive");
    const LagrangianGraph brane(config.k);

    CheckReport report;
    report.check = "exactness";
    report.anchor = "T-dual brane is an exact Lagrangian";
    report.parameters = Json{{"n", n},
                             {"k", config.k},
                             {"per_axis", config.per_axis},
                             {"log_r_min", config.log_r_min},
                             {"log_r_max", config.log_r_max},
                             {"tol", config.tol}};

    std::vector<double> log_r(config.per_axis);
    for (std::size_t s = 0; s < config.per_axis; ++s) {
        log_r[s] = config.per_axis == 1
                       ? 0.5 * (config.log_r_min + config.log_r_max)
                       : config.log_r_min + (config.log_r_max - config.log_r_min) * static_cast<double>(s) /
                                                static_cast<double>(config.per_axis - 1);
    }

    std::size_t samples = 0;
    std::size_t pairs = 0;
    std::vector<std::size_t> idx(n, 0);
    do {
        std::vector<double> radii(n);
        for (std::size_t l = 0; l < n; ++l) radii[l] = std::exp(log_r[idx[l]]);
        const TorusFiber r(radii);
        const auto base = brane.point(r);
        const auto frame = brane.tangent_frame(r);
        ++samples;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                ++pairs;
                const double w = std::abs(geometry::symplectic_form_eval(base, frame[i], frame[j]));
                if (w > report.max_deviation) {
                    report.max_deviation = w;
                    report.witness = Json{{"r", radii}, {"i", i}, {"j", j}, {"omega", w}};
                }
            }
        }
    } while (next_index(idx, config.per_axis));

    report.pass = report.max_deviation <= config.tol;
    if (report.pass) report.witness.reset();
    report.details = Json{{"samples", samples}, {"pairs_checked", pairs}};
    return report;
}

PhasePoint geodesic_flow(const PhasePoint& p, double t) {
    if (p.y.size() != p.gamma.size()) throw std::invalid_argument("phase point has mismatched dimensions");
    const double ny = norm2(p.y);
    if (!(ny > 0.0)) throw std::invalid_argument("normalized geodesic flow undefined on the zero section");
    PhasePoint out = p;
    for (std::size_t i = 0; i < out.gamma.size(); ++i) out.gamma[i] += t * p.y[i] / ny;
    return out;
}

std::vector<std::vector<double>> boundary_strata_points(std::size_t n) {
    if (n == 0 || n > 16) throw std::invalid_argument("boundary strata need 1 <= n <= 16");
    // Vertices of the closed base cell: 0 and -e_l.
    std::vector<std::vector<double>> vertices(n + 1, std::vector<double>(n, 0.0));
    for (std::size_t l = 0; l < n; ++l) vertices[l + 1][l] = -1.0;

    std::vector<std::vector<double>> out;
    const std::uint32_t full = (1u << (n + 1)) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::vector<double> c(n, 0.0);
        int count = 0;
        for (std::size_t v = 0; v <= n; ++v) {
            if (!(mask & (1u << v))) continue;
            ++count;
            for (std::size_t l = 0; l < n; ++l) c[l] += vertices[v][l];
        }
        for (double& x : c) x /= count;
        out.push_back(std::move(c));
    }
    return out;
}

SeparationProbeResult separation_probe(std::size_t n, const SeparationProbeConfig& config) {
    if (config.s.size() != n) throw std::invalid_argument("probe boundary point has wrong dimension");
    if (!(config.delta > 0.0)) throw std::invalid_argument("probe delta must be positive");

    std::mt19937_64 rng(config.seed);
    std::exponential_distribution<double> expo(1.0);

    // Lattice translates {-1, 0, 1}^n of the boundary point.
    std::vector<std::vector<double>> translates;
    {
        std::vector<std::size_t> idx(n, 0);
        do {
            std::vector<double> t(n);
            for (std::size_t l = 0; l < n; ++l) t[l] = config.s[l] + static_cast<double>(idx[l]) - 1.0;
            translates.push_back(std::move(t));
        } while (next_index(idx, 3));
    }

    SeparationProbeResult result;
    result.min_defect = std::numeric_limits<double>::infinity();
    std::vector<double> e(n + 1);
    while (result.samples < config.samples) {
        // Uniform point of the open moment simplex.
        double total = 0.0;
        for (double& v : e) {
            v = expo(rng);
            total += v;
        }
        std::vector<double> x(n);
        for (std::size_t l = 0; l < n; ++l) x[l] = e[l + 1] / total;
        const geometry::MomentImage moment(x);
        if (!moment.strictly_interior()) continue;
        const auto r = geometry::fiber_radii_from_moment(moment);

        // The point of L(-1): g = -gamma^(1)(r), y = log r.
        std::vector<double> gamma(n);
        std::vector<double> y(n);
        for (std::size_t l = 0; l < n; ++l) {
            gamma[l] = -x[l];
            y[l] = std::log(r[l]);
        }
        const double ny = norm2(y);
        if (!(ny > 0.0)) continue;
        ++result.samples;

        for (const auto& s : translates) {
            std::vector<double> v(n);
            double along = 0.0;
            for (std::size_t l = 0; l < n; ++l) {
                v[l] = s[l] - gamma[l];
                along += v[l] * y[l] / ny;
            }
            const double dt = std::clamp(along, 0.0, config.delta);
            double sq = 0.0;
            for (std::size_t l = 0; l < n; ++l) {
                const double d = v[l] - dt * y[l] / ny;
                sq += d * d;
            }
            const double defect = std::sqrt(sq);
            if (defect < result.min_defect) {
                result.min_defect = defect;
                result.witness_gamma = gamma;
                result.witness_y = y;
                result.witness_dt = dt;
            }
        }
    }
    return result;
}

}  // namespace tdual::branes
