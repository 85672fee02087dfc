#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cli.hpp"
#include "metaopt/annealing.hpp"
#include "metaopt/boundary.hpp"
#include "metaopt/chaos.hpp"
#include "metaopt/firefly.hpp"
#include "metaopt/problems.hpp"
#include "metaopt/swarm.hpp"
#include "params.hpp"

namespace metaopt::cli {

// Field-wise (de)serialization for both json flavours. Absent keys keep
// their defaults.
#define METAOPT_JSON_FROM_OPT(v1)                                              \
    if (auto it = nlohmann_json_j.find(#v1); it != nlohmann_json_j.end()) \
        it->get_to(nlohmann_json_t.v1);
#define METAOPT_JSON_FIELDS(Type, ...)                                                      \
    template <class J>                                                                      \
    void to_json(J& nlohmann_json_j, const Type& nlohmann_json_t) {                         \
        NLOHMANN_JSON_EXPAND(NLOHMANN_JSON_PASTE(NLOHMANN_JSON_TO, __VA_ARGS__))            \
    }                                                                                       \
    template <class J>                                                                      \
    void from_json(const J& nlohmann_json_j, Type& nlohmann_json_t) {                       \
        NLOHMANN_JSON_EXPAND(NLOHMANN_JSON_PASTE(METAOPT_JSON_FROM_OPT, __VA_ARGS__))       \
    }

METAOPT_JSON_FIELDS(ProblemSpec, name, dimension)
METAOPT_JSON_FIELDS(AnnealConfig, schedule, t0, ratio, d, t_offset,
                                                k_b, sigma, step_scale, max_iters, boundary)
METAOPT_JSON_FIELDS(PsoConfig, alpha, beta, inertia, theta, theta_end,
                                                swarm_size, max_iters, v_max, boundary)
METAOPT_JSON_FIELDS(PsoRegimeConfig, gamma_range)
METAOPT_JSON_FIELDS(FireflyConfig, beta0, gamma, alpha, alpha_decay,
                                                beta0_decay, strategy, population, max_iters,
                                                boundary)
METAOPT_JSON_FIELDS(WalkConfig, dist, scale, index, scaling, drift,
                                                steps, walks, coverage_cell)
METAOPT_JSON_FIELDS(TailsConfig, index, scale, samples, k)
METAOPT_JSON_FIELDS(BifurcateConfig, map, range, u0, n, discard,
                                                samples, fold_abs)
METAOPT_JSON_FIELDS(OrbitConfig, map, param, u0, n, discard, tol,
                                                max_period)
METAOPT_JSON_FIELDS(BenchConfig, runs)

bool RunConfig::wants(const std::string& format) const {
    return std::find(formats.begin(), formats.end(), format) != formats.end();
}

namespace {

bool takes_problem(const std::string& sub) {
    return sub == "anneal" || sub == "pso" || sub == "firefly" || sub == "bench";
}

template <class F>
void visit_block(const std::string& sub, RunConfig& c, F&& f) {
    if (sub == "anneal") f(c.anneal);
    else if (sub == "pso") f(c.pso);
    else if (sub == "pso-regime") f(c.pso_regime);
    else if (sub == "firefly") f(c.firefly);
    else if (sub == "walk") f(c.walk);
    else if (sub == "tails") f(c.tails);
    else if (sub == "bifurcate") f(c.bifurcate);
    else if (sub == "orbit") f(c.orbit);
    else if (sub == "bench") f(c.bench);
    else throw std::invalid_argument("unknown subcommand '" + sub + "'");
}

}  // namespace

nlohmann::ordered_json config_to_json(const RunConfig& config) {
    nlohmann::ordered_json j;
    j["subcommand"] = config.subcommand;
    j["seed"] = config.seed;
    j["out"] = config.out.string();
    j["format"] = config.formats;
    if (takes_problem(config.subcommand)) j["problem"] = config.problem;
    RunConfig copy = config;
    visit_block(config.subcommand, copy, [&](const auto& block) { j["params"] = block; });
    return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig c;
    c.subcommand = j.at("subcommand").get<std::string>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.out = j.at("out").get<std::string>();
    c.formats = j.at("format").get<std::vector<std::string>>();
    if (j.contains("problem")) c.problem = j.at("problem").get<ProblemSpec>();
    visit_block(c.subcommand, c, [&](auto& block) {
        if (j.contains("params")) j.at("params").get_to(block);
    });
    return c;
}

namespace {

std::string show(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

// Numeric validator; open ends exclude the bound. The message carries the
// rejected value and the legal range, CLI11 prefixes the option name.
CLI::Validator range(double lo, double hi, bool lo_open = false, bool hi_open = false) {
    std::string desc = std::string(lo_open ? "(" : "[") + show(lo) + ", " +
                       (std::isinf(hi) ? "inf" : show(hi)) + (hi_open ? ")" : "]");
    return CLI::Validator(
        [=](std::string& text) -> std::string {
            double v = 0.0;
            try {
                std::size_t used = 0;
                v = std::stod(text, &used);
                if (used != text.size()) throw std::invalid_argument(text);
            } catch (const std::exception&) {
                return "value '" + text + "' is not a number";
            }
            const bool ok = (lo_open ? v > lo : v >= lo) && (hi_open ? v < hi : v <= hi) &&
                            !std::isnan(v);
            if (!ok) return "value " + text + " outside " + desc;
            return {};
        },
        desc);
}

const double kInf = std::numeric_limits<double>::infinity();

CLI::Validator grid_spec() {
    return CLI::Validator(
        [](std::string& text) -> std::string {
            try {
                chaos::parse_grid(text);
            } catch (const std::exception& e) {
                return e.what();
            }
            return {};
        },
        "LO:HI:STEP");
}

const std::vector<std::string> kBoundaries{"clamp", "reflect"};

void add_problem_options(CLI::App* sub, ProblemSpec& p) {
    sub->add_option("--problem", p.name, "Objective from the built-in suite")
        ->check(CLI::IsMember(problems::builtin_names()))
        ->capture_default_str();
    sub->add_option("--dim", p.dimension, "Problem dimension")
        ->check(range(1, 1e6))
        ->capture_default_str();
}

std::string usage_error(const CLI::App& app, const std::string& what) {
    return "error: " + what + "\n\n" + app.help();
}

}  // namespace

ParseResult parse_config(int argc, const char* const* argv) {
    RunConfig c;
    std::optional<std::uint64_t> seed;
    // CLI11 applies every config section, so each subcommand keeps its own
    // problem and only the active one is copied into c.problem.
    std::map<std::string, ProblemSpec> problems;

    CLI::App app{"Metaheuristic optimizers and convergence analysis", "metaopt"};
    app.set_version_flag("--version", std::string(METAOPT_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.set_config("--config", "", "TOML-style config file (see README)");
    app.add_option("--seed", seed, "64-bit seed; drawn from entropy and recorded if absent");
    app.add_option("--out", c.out, "Output directory")->capture_default_str();
    app.add_option("--format", c.formats, "Comma-separated subset of csv,json")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* anneal = app.add_subcommand("anneal", "Simulated annealing run");
    add_problem_options(anneal, problems["anneal"]);
    {
        auto& a = c.anneal;
        anneal->add_option("--schedule", a.schedule)->check(CLI::IsMember({"geometric", "logarithmic"}))->capture_default_str();
        anneal->add_option("--t0", a.t0, "Geometric initial temperature")->check(range(0, kInf, true))->capture_default_str();
        anneal->add_option("--ratio", a.ratio, "Geometric cooling ratio")->check(range(0, 1, true, true))->capture_default_str();
        anneal->add_option("--d", a.d, "Logarithmic schedule numerator")->check(range(0, kInf, true))->capture_default_str();
        anneal->add_option("--t-offset", a.t_offset, "Logarithmic schedule offset")->check(range(2, 1e9))->capture_default_str();
        anneal->add_option("--kb", a.k_b, "Boltzmann constant")->check(range(0, kInf, true))->capture_default_str();
        anneal->add_option("--sigma", a.sigma, "Gaussian proposal width")->check(range(0, kInf, true))->capture_default_str();
        anneal->add_option("--step-scale", a.step_scale)->check(range(0, kInf))->capture_default_str();
        anneal->add_option("--max-iters", a.max_iters)->check(range(1, 1e9))->capture_default_str();
        anneal->add_option("--boundary", a.boundary)->check(CLI::IsMember(kBoundaries))->capture_default_str();
    }

    auto* pso = app.add_subcommand("pso", "Particle swarm run");
    add_problem_options(pso, problems["pso"]);
    {
        auto& p = c.pso;
        pso->add_option("--alpha", p.alpha, "Pull toward the global best")->check(range(0, kInf))->capture_default_str();
        pso->add_option("--beta", p.beta, "Pull toward the personal best")->check(range(0, kInf))->capture_default_str();
        pso->add_option("--inertia", p.inertia)->check(CLI::IsMember({"constant", "linear"}))->capture_default_str();
        pso->add_option("--theta", p.theta, "Inertia value or ramp start")->check(range(0, 1))->capture_default_str();
        pso->add_option("--theta-end", p.theta_end, "Inertia at the last iteration (linear)")->check(range(0, 1))->capture_default_str();
        pso->add_option("--swarm-size", p.swarm_size)->check(range(1, 1e7))->capture_default_str();
        pso->add_option("--max-iters", p.max_iters)->check(range(1, 1e9))->capture_default_str();
        pso->add_option("--v-max", p.v_max, "Speed limit per coordinate, 0 for none")->check(range(0, kInf))->capture_default_str();
        pso->add_option("--boundary", p.boundary)->check(CLI::IsMember(kBoundaries))->capture_default_str();
    }

    auto* regime = app.add_subcommand("pso-regime", "Eigenvalues of the reduced swarm system over a gamma grid");
    regime->add_option("--gamma-range", c.pso_regime.gamma_range, "LO:HI:STEP, gamma > 0")->check(grid_spec())->capture_default_str();

    auto* ff = app.add_subcommand("firefly", "Firefly algorithm run");
    add_problem_options(ff, problems["firefly"]);
    {
        auto& f = c.firefly;
        ff->add_option("--beta0", f.beta0, "Attractiveness at r = 0")->check(range(0, kInf))->capture_default_str();
        ff->add_option("--gamma", f.gamma, "Light absorption")->check(range(0, kInf, true))->capture_default_str();
        ff->add_option("--alpha", f.alpha, "Noise strength")->check(range(0, kInf))->capture_default_str();
        ff->add_option("--alpha-decay", f.alpha_decay)->check(range(0, 1, true))->capture_default_str();
        ff->add_option("--beta0-decay", f.beta0_decay)->check(range(0, 1, true))->capture_default_str();
        ff->add_option("--strategy", f.strategy)->check(CLI::IsMember({"full-loop", "brightest-only"}))->capture_default_str();
        ff->add_option("--population", f.population)->check(range(1, 1e6))->capture_default_str();
        ff->add_option("--max-iters", f.max_iters)->check(range(1, 1e9))->capture_default_str();
        ff->add_option("--boundary", f.boundary)->check(CLI::IsMember(kBoundaries))->capture_default_str();
    }

    auto* walk = app.add_subcommand("walk", "Random-walk ensemble and growth exponents");
    {
        auto& w = c.walk;
        walk->add_option("--dist", w.dist)->check(CLI::IsMember({"gaussian", "cauchy", "levy", "uniform"}))->capture_default_str();
        walk->add_option("--scale", w.scale, "Step law scale")->check(range(0, kInf, true))->capture_default_str();
        walk->add_option("--index", w.index, "Stable index for --dist levy")->check(range(0, 2, true))->capture_default_str();
        walk->add_option("--scaling", w.scaling, "Step multiplier, 0 switches noise off")->check(range(0, kInf))->capture_default_str();
        walk->add_option("--drift", w.drift, "Deterministic displacement per step")->check(range(-kInf, kInf, true, true))->capture_default_str();
        walk->add_option("--steps", w.steps)->check(range(100, 1e8))->capture_default_str();
        walk->add_option("--walks", w.walks)->check(range(100, 1e7))->capture_default_str();
        walk->add_option("--coverage-cell", w.coverage_cell, "Cell size for the coverage report, 0 to skip")->check(range(0, kInf))->capture_default_str();
    }

    auto* tails = app.add_subcommand("tails", "Sample a stable law and estimate its tail exponent");
    {
        auto& t = c.tails;
        tails->add_option("--index", t.index)->check(range(0, 2, true))->capture_default_str();
        tails->add_option("--scale", t.scale)->check(range(0, kInf, true))->capture_default_str();
        tails->add_option("--samples", t.samples)->check(range(1000, 1e9))->capture_default_str();
        tails->add_option("--k", t.k, "Order statistics used, 0 for n/20")->check(range(0, 1e9))->capture_default_str();
    }

    auto* bif = app.add_subcommand("bifurcate", "Bifurcation scan of a one-parameter map");
    {
        auto& b = c.bifurcate;
        bif->add_option("--map", b.map)->check(CLI::IsMember({"firefly", "logistic"}))->capture_default_str();
        bif->add_option("--range,--beta0-range,--lambda-range", b.range, "LO:HI:STEP")->check(grid_spec())->capture_default_str();
        bif->add_option("--u0", b.u0)->check(range(-kInf, kInf, true, true))->capture_default_str();
        bif->add_option("--n", b.n, "Iterations per parameter")->check(range(2, 1e9))->capture_default_str();
        bif->add_option("--discard", b.discard, "Transient length")->check(range(0, 1e9))->capture_default_str();
        bif->add_option("--samples", b.samples, "Attractor samples kept per parameter")->check(range(1, 1e9))->capture_default_str();
        bif->add_flag("--fold-abs", b.fold_abs, "Record |u|");
    }

    auto* orbit = app.add_subcommand("orbit", "Classify one orbit");
    {
        auto& o = c.orbit;
        orbit->add_option("--map", o.map)->check(CLI::IsMember({"firefly", "logistic"}))->capture_default_str();
        orbit->add_option("--param", o.param, "beta0 or lambda")->check(range(-kInf, kInf, true, true))->capture_default_str();
        orbit->add_option("--u0", o.u0)->check(range(-kInf, kInf, true, true))->capture_default_str();
        orbit->add_option("--n", o.n)->check(range(2, 1e9))->capture_default_str();
        orbit->add_option("--discard", o.discard)->check(range(0, 1e9))->capture_default_str();
        orbit->add_option("--tol", o.tol)->check(range(0, kInf, true))->capture_default_str();
        orbit->add_option("--max-period", o.max_period)->check(range(1, 1e6))->capture_default_str();
    }

    auto* bench = app.add_subcommand("bench", "All optimizers on the built-in suite");
    bench->add_option("--dim", problems["bench"].dimension, "Problem dimension")->check(range(2, 1e6))->capture_default_str();
    bench->add_option("--runs", c.bench.runs, "Seeds per (algorithm, problem)")->check(range(1, 1e6))->capture_default_str();

    ParseResult result;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        result.exit_code = kExitOk;
        result.message = app.help();
        return result;
    } catch (const CLI::CallForVersion&) {
        result.exit_code = kExitOk;
        result.message = std::string(METAOPT_VERSION) + "\n";
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = kExitUsage;
        const auto* active = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        result.message = usage_error(*active, e.what());
        return result;
    }

    c.subcommand = app.get_subcommands().front()->get_name();
    if (auto it = problems.find(c.subcommand); it != problems.end()) c.problem = it->second;
    if (c.subcommand == "bench") c.problem.name = "suite";
    if (seed) {
        c.seed = *seed;
    } else {
        std::random_device rd;
        c.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    try {
        validate_config(c);
    } catch (const std::invalid_argument& e) {
        result.exit_code = kExitUsage;
        result.message = std::string("error: ") + e.what() + "\n";
        return result;
    }
    result.config = std::move(c);
    return result;
}

void validate_config(const RunConfig& c) {
    if (c.formats.empty()) throw std::invalid_argument("--format: at least one of csv,json");
    const auto& sub = c.subcommand;
    if (sub == "anneal" || sub == "pso" || sub == "firefly") {
        auto problem = make_problem(c.problem);
        if (sub == "anneal") anneal_params(c.anneal).validate(problem);
        if (sub == "pso") pso_params(c.pso).validate(problem);
        if (sub == "firefly") firefly_params(c.firefly).validate(problem);
    } else if (sub == "pso-regime") {
        const auto grid = chaos::parse_grid(c.pso_regime.gamma_range);
        if (!(grid.front() > 0.0)) {
            throw std::invalid_argument("--gamma-range: value '" + c.pso_regime.gamma_range +
                                        "' must start above 0");
        }
    } else if (sub == "walk") {
        walk_config(c.walk).validate();
    } else if (sub == "tails") {
        if (c.tails.k != 0 && (c.tails.k < 50 || c.tails.k > c.tails.samples / 10)) {
            throw std::invalid_argument("--k: value " + std::to_string(c.tails.k) +
                                        " outside [50, samples/10]");
        }
    } else if (sub == "bifurcate") {
        const auto& b = c.bifurcate;
        chaos::parse_grid(b.range);
        if (b.n <= b.discard || b.samples > b.n - b.discard) {
            throw std::invalid_argument("--samples: value " + std::to_string(b.samples) +
                                        " must not exceed n - discard = " +
                                        std::to_string(b.n > b.discard ? b.n - b.discard : 0));
        }
    } else if (sub == "orbit") {
        const auto& o = c.orbit;
        if (o.n < o.discard + 4 * o.max_period) {
            throw std::invalid_argument("--n: value " + std::to_string(o.n) +
                                        " must be at least discard + 4 * max-period");
        }
    } else if (sub == "bench") {
        if (c.problem.dimension < 2) {
            throw std::invalid_argument("--dim: value must be >= 2 (rosenbrock)");
        }
    } else {
        throw std::invalid_argument("unknown subcommand '" + sub + "'");
    }
}

}  // namespace metaopt::cli
