#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "tdual/beilinson.hpp"
#include "tdual/combinatorial_homs.hpp"
#include "tdual/lagrangian_branes.hpp"
#include "tdual/mirror_geometry.hpp"
#include "tdual/serialize.hpp"

namespace tdual::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string rational_string(const oracle::Rational& q) {
    std::ostringstream s;
    s << q;
    return s.str();
}

oracle::Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        auto whole = [](const std::string& s) {
            if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos) {
                throw std::invalid_argument(s);
            }
            return oracle::Integer(s);
        };
        if (slash == std::string::npos) return oracle::Rational(whole(text));
        const auto den = whole(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument(text);
        return oracle::Rational(whole(text.substr(0, slash)), den);
    } catch (const std::exception&) {
        throw UsageError("--epsilon expects an integer or a fraction p/q, got '" + text + "'");
    }
}

std::uint64_t seed_from_environment() {
    const char* raw = std::getenv("TDUAL_SEED");
    if (raw == nullptr || *raw == '\0') return kDefaultSeed;
    const std::string text(raw);
    if (text.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError("TDUAL_SEED must be a non-negative integer, got '" + text + "'");
    }
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        throw UsageError("TDUAL_SEED out of range: '" + text + "'");
    }
}

std::vector<int> collection(std::size_t n) {
    std::vector<int> objects;
    for (int k = -static_cast<int>(n) - 1; k <= -1; ++k) objects.push_back(k);
    return objects;
}

// ---- geometry -------------------------------------------------------------

CheckReport mirror_coordinate_check(const RunConfig& c) {
    CheckReport report;
    report.check = "mirror-coordinates";
    report.anchor = "-log|z_j| / 2pi equals the moment coordinate of the fiber";
    const double tol = 1e-12;
    report.parameters = Json{{"n", c.n}, {"fibers", c.fibers}, {"seed", c.seed}, {"tol", tol}};

    std::mt19937_64 rng(c.seed);
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> angle(0.0, 1.0);
    for (std::size_t s = 0; s < c.fibers; ++s) {
        std::vector<double> e(c.n + 1);
        double total = 0.0;
        for (auto& v : e) total += (v = expo(rng));
        std::vector<double> x(c.n);
        for (std::size_t l = 0; l < c.n; ++l) x[l] = e[l + 1] / total;
        const auto r = geometry::fiber_radii_from_moment(geometry::MomentImage(x));
        std::vector<double> gamma(c.n);
        for (auto& g : gamma) g = angle(rng);
        const auto z = geometry::mirror_coordinates(geometry::MirrorPoint(r, gamma));
        const auto moment = geometry::moment_of_fiber(r);
        for (std::size_t l = 0; l < c.n; ++l) {
            const double dev = std::abs(-std::log(std::abs(z[l])) / geometry::kTwoPi - moment[l]);
            if (dev > report.max_deviation) {
                report.max_deviation = dev;
                report.witness = Json{{"radii", r.radii()}, {"gamma", gamma}, {"coordinate", l}};
            }
        }
    }
    report.pass = report.max_deviation <= tol;
    if (report.pass) report.witness.reset();
    return report;
}

CheckReport critical_point_check(const RunConfig& c) {
    CheckReport report;
    report.check = "critical-points";
    report.anchor = "W has n+1 critical points with values (n+1) zeta e^{-2pi/(n+1)}";
    const double tol = 1e-10;
    report.parameters = Json{{"n", c.n}, {"tol", tol}};

    const auto points = geometry::superpotential_critical_points(c.n);
    const double m = static_cast<double>(c.n + 1);
    Json values = Json::array();
    double residual = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto zeta = std::polar(1.0, geometry::kTwoPi * static_cast<double>(k) / m);
        const auto expected = m * zeta * std::exp(-geometry::kTwoPi / m);
        const auto w = geometry::superpotential(points[k].point);
        double grad = 0.0;
        for (const auto& g : geometry::superpotential_gradient(points[k].point)) grad = std::max(grad, std::abs(g));
        residual = std::max(residual, grad);
        const double dev = std::max(std::abs(w - expected), grad);
        if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.witness = Json{{"index", k}, {"value_re", w.real()}, {"value_im", w.imag()}};
        }
        values.push_back(Json::array({w.real(), w.imag()}));
    }
    report.pass = points.size() == c.n + 1 && report.max_deviation <= tol;
    if (points.size() != c.n + 1) report.witness = Json{{"count", points.size()}};
    if (report.pass) report.witness.reset();
    report.details = Json{{"count", points.size()}, {"max_residual", residual}, {"values", values}};
    return report;
}

// ---- branes ---------------------------------------------------------------

std::vector<CheckReport> brane_checks(const RunConfig& c) {
    std::vector<CheckReport> out;
    for (int k : collection(c.n)) {
        branes::ExactnessCheckConfig e;
        e.k = k;
        e.per_axis = c.grid;
        e.tol = c.symplectic_tol;
        out.push_back(branes::check_exactness(c.n, e));
    }
    for (int k : collection(c.n)) {
        branes::GraphCheckConfig g;
        g.k = k;
        g.per_axis = c.graph_grid;
        g.margin = c.margin;
        g.fd_step = c.fd_step;
        g.tol = c.graph_tol;
        g.scale = c.literal_potential ? branes::PotentialScale::Literal : branes::PotentialScale::Corrected;
        out.push_back(branes::check_graph(c.n, g));
    }
    const auto strata = branes::boundary_strata_points(c.n);
    for (std::size_t s = 0; s < strata.size(); ++s) {
        branes::SeparationProbeConfig p;
        p.s = strata[s];
        p.delta = c.delta_probe;
        p.samples = c.samples;
        p.seed = c.seed + s;
        const auto result = branes::separation_probe(c.n, p);
        CheckReport report;
        report.check = "separation";
        report.anchor = "geodesic flow of L(-1) for short time stays away from the boundary of T";
        report.parameters = Json{{"n", c.n}, {"s", p.s}, {"delta", p.delta}, {"samples", p.samples}, {"seed", p.seed}};
        report.max_deviation = 0.0;
        report.pass = result.min_defect > 0.0;
        report.details = Json{{"min_defect", result.min_defect},
                              {"witness_gamma", result.witness_gamma},
                              {"witness_y", result.witness_y},
                              {"witness_dt", result.witness_dt}};
        if (!report.pass) report.witness = report.details;
        out.push_back(std::move(report));
    }
    return out;
}

// ---- verify ---------------------------------------------------------------

CheckReport strong_exceptional_check(const homs::Quiver& q) {
    CheckReport report;
    report.check = "strong-exceptional";
    report.anchor = "U(-n-1), ..., U(-1) is a strong exceptional collection";
    report.parameters = Json{{"n", q.n}};
    report.pass = homs::is_strong_exceptional(q);
    report.max_deviation = report.pass ? 0.0 : 1.0;
    std::size_t total = 0;
    for (const auto& [key, basis] : q.homs) total += basis.size();
    report.details = Json{{"objects", q.objects}, {"basis_elements", total}, {"compositions", q.compositions.size()}};
    return report;
}

// ---- oracle ---------------------------------------------------------------

CheckReport oracle_check(const RunConfig& c) {
    CheckReport report;
    report.check = "oracle";
    report.anchor = "relative cohomology of cell pairs reproduces the combinatorial hom dimensions";
    report.parameters = Json{{"n", c.n}, {"epsilon", rational_string(c.epsilon)}};

    Json pairs = Json::array();
    const auto objects = collection(c.n);
    for (int i : objects) {
        for (int j : objects) {
            const auto result = oracle::oracle_hom_dim(i, j, c.n, c.epsilon);
            std::vector<std::size_t> expected(c.n + 1, 0);
            expected[0] = homs::hom_dimension(i, j, c.n);
            for (std::size_t d = 0; d <= c.n; ++d) {
                const double dev = std::abs(static_cast<double>(result.dims[d]) - static_cast<double>(expected[d]));
                if (dev > report.max_deviation) {
                    report.max_deviation = dev;
                    report.witness = Json{{"i", i}, {"j", j}, {"oracle", result.dims}, {"expected", expected}};
                }
            }
            // Each offset contributes exactly when the cells are nested.
            for (const auto& audit : result.pairs) {
                std::vector<std::size_t> want(c.n + 1, 0);
                if (homs::cell_contains({i, homs::MultiIndex(c.n, 0)}, {j, audit.b})) want[0] = 1;
                if (audit.profile.betti != want) {
                    report.max_deviation = std::max(report.max_deviation, 1.0);
                    if (!report.witness) report.witness = audit.to_json();
                }
                if (audit.profile.alternating_sum() != audit.profile.euler_characteristic) {
                    report.max_deviation = std::max(report.max_deviation, 1.0);
                    if (!report.witness) report.witness = audit.to_json();
                }
            }
            pairs.push_back(Json{{"i", i}, {"j", j}, {"dims", result.dims}, {"expected", expected}});
        }
    }
    report.pass = report.max_deviation == 0.0;
    report.details = Json{{"pairs", pairs}};
    return report;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path.string());
    file << content;
    if (!file) throw UsageError("cannot write " + path.string());
}

std::string fixed(double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << v;
    return s.str();
}

void print_text(std::ostream& out, const Json& report) {
    out << "tdual " << report["command"].get<std::string>() << " n=" << report["config"]["n"].get<std::size_t>()
        << "\n";
    for (const auto& check : report["checks"]) {
        out << (check["pass"].get<bool>() ? "PASS " : "FAIL ") << check["check"].get<std::string>();
        const auto& p = check["parameters"];
        if (p.contains("k")) out << " k=" << p["k"].get<int>();
        if (p.contains("s")) out << " s=" << p["s"].dump();
        out << "  max_deviation=" << fixed(check["max_deviation"].get<double>());
        if (check.contains("details") && check["details"].contains("min_defect")) {
            out << " min_defect=" << fixed(check["details"]["min_defect"].get<double>());
        }
        out << "\n";
    }
    out << (report["pass"].get<bool>() ? "all checks passed" : "some checks failed") << "\n";
}

}  // namespace

std::string command_name(Command c) {
    switch (c) {
        case Command::Geometry: return "geometry";
        case Command::Branes: return "branes";
        case Command::Quiver: return "quiver";
        case Command::Verify: return "verify";
        case Command::Oracle: return "oracle";
    }
    return "unknown";
}

Json config_to_json(const RunConfig& c) {
    Json j{{"n", c.n}};
    switch (c.command) {
        case Command::Geometry:
            j["fibers"] = c.fibers;
            j["seed"] = c.seed;
            break;
        case Command::Branes:
            j["fd_step"] = c.fd_step;
            j["graph_tol"] = c.graph_tol;
            j["symplectic_tol"] = c.symplectic_tol;
            j["margin"] = c.margin;
            j["grid"] = c.grid;
            j["graph_grid"] = c.graph_grid;
            j["delta_probe"] = c.delta_probe;
            j["samples"] = c.samples;
            j["seed"] = c.seed;
            j["potential"] = c.literal_potential ? "literal" : "corrected";
            break;
        case Command::Oracle: j["epsilon"] = rational_string(c.epsilon); break;
        case Command::Quiver:
        case Command::Verify: break;
    }
    return j;
}

Json execute(const RunConfig& c) {
    if (c.n < 1) throw UsageError("--n must be at least 1");
    if (c.command == Command::Oracle && c.n > 2) throw UsageError("the cohomology oracle supports n <= 2");
    if (c.command == Command::Oracle && !(c.epsilon > 0)) throw UsageError("--epsilon must be positive");

    std::vector<CheckReport> checks;
    Json extra = Json::object();
    switch (c.command) {
        case Command::Geometry:
            checks.push_back(mirror_coordinate_check(c));
            checks.push_back(critical_point_check(c));
            break;
        case Command::Branes: checks = brane_checks(c); break;
        case Command::Quiver: {
            const auto cells = homs::quotient_quiver(c.n);
            const auto sheaves = beilinson::sheaf_quiver(c.n);
            extra["quivers"] = Json{{"cells", quiver_to_json(cells)}, {"sheaves", quiver_to_json(sheaves)}};
            break;
        }
        case Command::Verify: {
            const auto cells = homs::quotient_quiver(c.n);
            const auto sheaves = beilinson::sheaf_quiver(c.n);
            checks.push_back(beilinson::verify_equivalence(cells, sheaves).to_check_report());
            checks.push_back(strong_exceptional_check(cells));
            break;
        }
        case Command::Oracle: checks.push_back(oracle_check(c)); break;
    }

    Json report;
    report["command"] = command_name(c.command);
    report["config"] = config_to_json(c);
    Json list = Json::array();
    bool pass = true;
    for (const auto& r : checks) {
        list.push_back(r.to_json());
        pass = pass && r.pass;
    }
    report["checks"] = std::move(list);
    report["pass"] = pass;
    for (auto& [key, value] : extra.items()) report[key] = value;
    return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    std::string epsilon = "1/8";
    std::string format = "text";

    CLI::App app{"Checks for T-dual branes on the mirror of projective space", "tdual"};
    app.require_subcommand(1);
    auto* geometry = app.add_subcommand("geometry", "moment map and superpotential critical points");
    auto* branes = app.add_subcommand("branes", "exactness, graph and separation probes for the branes L(k)");
    auto* quiver = app.add_subcommand("quiver", "build and export the cell and line-bundle quivers");
    auto* verify = app.add_subcommand("verify", "compare the two quivers and check strong exceptionality");
    auto* oracle = app.add_subcommand("oracle", "recompute hom dimensions as relative cohomology (n <= 2)");
    for (auto* sub : {geometry, branes, quiver, verify, oracle}) {
        sub->add_option("--n", c.n, "dimension of projective space")->required()->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "stdout format")
            ->check(CLI::IsMember({"text", "json", "dot"}))
            ->capture_default_str();
        sub->add_option("--out", c.out, "directory for the JSON report and exports")->capture_default_str();
    }
    for (auto* sub : {geometry}) {
        sub->add_option("--fibers", c.fibers, "random fibers for the coordinate check")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    }
    branes->add_option("--fd-step", c.fd_step, "finite-difference step")->check(CLI::PositiveNumber)->capture_default_str();
    branes->add_option("--tol", c.symplectic_tol, "symplectic pairing tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    branes->add_option("--graph-tol", c.graph_tol, "graph-check tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    branes->add_option("--grid", c.grid, "exactness samples per axis")->check(CLI::PositiveNumber)->capture_default_str();
    branes->add_option("--graph-grid", c.graph_grid, "graph-check samples per axis")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    branes->add_option("--margin", c.margin, "interior margin in moment coordinates")
        ->check(CLI::Range(0.0, 0.5))
        ->capture_default_str();
    branes->add_option("--delta-probe", c.delta_probe, "flow time bound for the separation probe")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    branes->add_option("--samples", c.samples, "separation-probe samples per boundary stratum")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    branes->add_flag("--literal-potential", c.literal_potential, "use the unscaled lifted potential");
    oracle->add_option("--epsilon", epsilon, "shrink parameter, an integer or p/q")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    try {
        if (*geometry) c.command = Command::Geometry;
        if (*branes) c.command = Command::Branes;
        if (*quiver) c.command = Command::Quiver;
        if (*verify) c.command = Command::Verify;
        if (*oracle) c.command = Command::Oracle;
        c.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;
        if (c.format == Format::Dot && c.command != Command::Quiver) {
            throw UsageError("--format dot is only available for the quiver command");
        }
        c.seed = seed_from_environment();
        c.epsilon = parse_rational(epsilon);

        const auto report = execute(c);

        std::error_code ec;
        std::filesystem::create_directories(c.out, ec);
        if (ec) throw UsageError("cannot create " + c.out.string() + ": " + ec.message());
        const std::string dumped = report.dump(2) + "\n";
        write_text(c.out / ("tdual-" + command_name(c.command) + ".json"), dumped);

        if (c.command == Command::Quiver) {
            const auto cells = homs::quotient_quiver(c.n);
            const auto sheaves = beilinson::sheaf_quiver(c.n);
            if (c.format == Format::Dot) {
                write_text(c.out / "quiver-cells.dot", quiver_to_dot(cells));
                write_text(c.out / "quiver-sheaves.dot", quiver_to_dot(sheaves));
            } else {
                write_text(c.out / "quiver-cells.json", quiver_to_json(cells).dump(2) + "\n");
                write_text(c.out / "quiver-sheaves.json", quiver_to_json(sheaves).dump(2) + "\n");
            }
        }

        switch (c.format) {
            case Format::Json: out << dumped; break;
            case Format::Dot: out << quiver_to_dot(homs::quotient_quiver(c.n)); break;
            case Format::Text: print_text(out, report); break;
        }
        return report["pass"].get<bool>() ? 0 : 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace tdual::cli
