#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace metaopt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct ProblemSpec {
    std::string name = "sphere";
    std::size_t dimension = 2;
};

struct AnnealConfig {
    std::string schedule = "geometric";  // geometric | logarithmic
    double t0 = 1.0;
    double ratio = 0.995;
    double d = 1.0;
    int t_offset = 2;
    double k_b = 1.0;
    double sigma = 0.3;
    double step_scale = 1.0;
    std::size_t max_iters = 5000;
    std::string boundary = "clamp";
};

struct PsoConfig {
    double alpha = 2.0;
    double beta = 2.0;
    std::string inertia = "constant";  // constant | linear
    double theta = 1.0;                // constant value, or the start of the ramp
    double theta_end = 0.4;
    std::size_t swarm_size = 20;
    std::size_t max_iters = 1000;
    double v_max = 0.0;  // 0 disables the limit
    std::string boundary = "clamp";
};

struct PsoRegimeConfig {
    std::string gamma_range = "0.1:6:0.1";
};

struct FireflyConfig {
    double beta0 = 1.0;
    double gamma = 1.0;
    double alpha = 0.2;
    double alpha_decay = 0.97;
    double beta0_decay = 1.0;
    std::string strategy = "full-loop";
    std::size_t population = 25;
    std::size_t max_iters = 500;
    std::string boundary = "clamp";
};

struct WalkConfig {
    std::string dist = "gaussian";  // gaussian | cauchy | levy | uniform
    double scale = 1.0;
    double index = 1.5;
    double scaling = 1.0;
    double drift = 0.0;
    std::size_t steps = 10000;
    std::size_t walks = 1000;
    double coverage_cell = 0.0;  // 0 skips the coverage report
};

struct TailsConfig {
    double index = 1.5;
    double scale = 1.0;
    std::size_t samples = 100000;
    std::size_t k = 0;  // 0 means n / 20
};

struct BifurcateConfig {
    std::string map = "firefly";  // firefly | logistic
    std::string range = "0:4.5:0.01";
    double u0 = 0.8;
    std::size_t n = 1500;
    std::size_t discard = 500;
    std::size_t samples = 200;
    bool fold_abs = false;
};

struct OrbitConfig {
    std::string map = "firefly";
    double param = 1.5;
    double u0 = 0.8;
    std::size_t n = 1500;
    std::size_t discard = 500;
    double tol = 1e-6;
    std::size_t max_period = 64;
};

struct BenchConfig {
    std::size_t runs = 3;
};

struct RunConfig {
    std::string subcommand;
    std::uint64_t seed = 0;
    std::filesystem::path out = "metaopt-out";
    std::vector<std::string> formats{"csv", "json"};
    ProblemSpec problem;
    AnnealConfig anneal;
    PsoConfig pso;
    PsoRegimeConfig pso_regime;
    FireflyConfig firefly;
    WalkConfig walk;
    TailsConfig tails;
    BifurcateConfig bifurcate;
    OrbitConfig orbit;
    BenchConfig bench;

    bool wants(const std::string& format) const;
};

// The resolved configuration as written to the manifest: subcommand, seed,
// out, format, the problem (for subcommands that take one) and the
// subcommand's own parameter block. config_from_json inverts it.
nlohmann::ordered_json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

struct ParseResult {
    std::optional<RunConfig> config;
    int exit_code = kExitOk;
    std::string message;  // usage or error text when config is empty
};

// Command-line flags override config-file keys, which override defaults.
// A missing seed is drawn from std::random_device.
ParseResult parse_config(int argc, const char* const* argv);

// Builds and validates the library parameter objects for the config's
// subcommand. Throws std::invalid_argument with the offending key.
void validate_config(const RunConfig& config);

// Runs the subcommand, writes the declared outputs and then manifest.json.
// On failure every file written so far is removed.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_config + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace metaopt::cli
