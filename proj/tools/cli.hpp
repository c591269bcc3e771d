#pragma once

// Command-line driver.  `run` is the whole program minus process setup so
// that tests can call it in-process.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage error.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "tdual/cohomology_oracle.hpp"
#include "tdual/report.hpp"

namespace tdual::cli {

enum class Command { Geometry, Branes, Quiver, Verify, Oracle };
enum class Format { Text, Json, Dot };

struct RunConfig {
    Command command = Command::Verify;
    std::size_t n = 1;
    double fd_step = 1e-5;
    double graph_tol = 1e-7;
    double symplectic_tol = 1e-9;
    double margin = 0.05;
    std::size_t grid = 20;         // exactness samples per axis
    std::size_t graph_grid = 100;  // graph-check samples per axis
    std::size_t fibers = 1000;     // random fibers for the mirror-coordinate check
    std::size_t samples = 10000;   // separation-probe samples per boundary stratum
    double delta_probe = 0.05;
    oracle::Rational epsilon = oracle::default_epsilon();
    bool literal_potential = false;
    std::uint64_t seed = 0;
    Format format = Format::Text;
    std::filesystem::path out = ".";
};

std::string command_name(Command c);

/// Configuration echoed into the report, in a fixed field order.
Json config_to_json(const RunConfig& config);

/// Execute one command and return the full JSON report
/// {command, config, checks: [...], pass, ...}.
Json execute(const RunConfig& config);

/// Seed used when TDUAL_SEED is unset.
inline constexpr std::uint64_t kDefaultSeed = 20240229;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tdual::cli
