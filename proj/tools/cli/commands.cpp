#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "cli.hpp"
#include "metaopt/annealing.hpp"
#include "metaopt/chaos.hpp"
#include "metaopt/diagnostics.hpp"
#include "metaopt/firefly.hpp"
#include "metaopt/swarm.hpp"
#include "output.hpp"
#include "params.hpp"

namespace metaopt::cli {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string real(double v) { return format_real(v); }

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void write_header(std::ostream& out, const std::vector<std::string>& lead, std::size_t d,
                  const std::vector<std::string>& vector_prefixes,
                  const std::vector<std::string>& tail) {
    bool first = true;
    auto cell = [&](const std::string& s) {
        if (!first) out << ',';
        out << s;
        first = false;
    };
    for (const auto& s : lead) cell(s);
    for (const auto& prefix : vector_prefixes) {
        for (std::size_t j = 0; j < d; ++j) cell(prefix + std::to_string(j));
    }
    for (const auto& s : tail) cell(s);
    out << '\n';
}

ordered_json run_summary(const RunConfig& c, const RunResult& run) {
    ordered_json j;
    j["seed"] = c.seed;
    j["problem"] = config_to_json(c)["problem"];
    j["params"] = config_to_json(c)["params"];
    j["best_x"] = run.best_x;
    j["best_f"] = run.best_f;
    j["evaluations"] = run.evaluations;
    return j;
}

void cmd_anneal(const RunConfig& c, OutputSet& files, std::ostream& log) {
    auto problem = make_problem(c.problem);
    auto params = anneal_params(c.anneal);
    params.record_steps = c.wants("csv");
    const auto result = annealing::anneal(problem, params, c.seed);
    if (c.wants("csv")) {
        auto out = files.open("anneal.csv");
        write_header(out, {"t", "T"}, problem.dimension(), {"x"}, {"f", "f_best", "accepted"});
        for (const auto& s : result.steps) {
            out << s.t << ',' << real(s.temperature);
            for (double x : s.x) out << ',' << real(x);
            out << ',' << real(s.f) << ',' << real(s.f_best) << ',' << (s.accepted ? 1 : 0) << '\n';
        }
        files.close(out, "anneal.csv");
    }
    if (c.wants("json")) files.write_json("anneal.json", run_summary(c, result.run));
    log << "anneal " << c.problem.name << ": best f = " << real(result.run.best_f) << " after "
        << result.run.evaluations << " evaluations\n";
}

void cmd_pso(const RunConfig& c, OutputSet& files, std::ostream& log) {
    auto problem = make_problem(c.problem);
    auto params = pso_params(c.pso);
    params.record_rows = c.wants("csv");
    const auto result = swarm::pso_optimize(problem, params, c.seed);
    if (c.wants("csv")) {
        auto out = files.open("pso.csv");
        write_header(out, {"t", "particle"}, problem.dimension(), {"x", "v"},
                     {"f", "f_pbest", "f_gbest"});
        for (const auto& r : result.rows) {
            out << r.t << ',' << r.particle;
            for (double x : r.x) out << ',' << real(x);
            for (double v : r.v) out << ',' << real(v);
            out << ',' << real(r.f) << ',' << real(r.f_pbest) << ',' << real(r.f_gbest) << '\n';
        }
        files.close(out, "pso.csv");
    }
    if (c.wants("json")) files.write_json("pso.json", run_summary(c, result.run));
    log << "pso " << c.problem.name << ": best f = " << real(result.run.best_f) << " after "
        << result.run.evaluations << " evaluations\n";
}

void cmd_pso_regime(const RunConfig& c, OutputSet& files, std::ostream& log) {
    const auto grid = chaos::parse_grid(c.pso_regime.gamma_range);
    ordered_json rows = ordered_json::array();
    std::ofstream out;
    if (c.wants("csv")) {
        out = files.open("pso_regime.csv");
        out << "gamma,re_lambda1,im_lambda1,re_lambda2,im_lambda2,regime\n";
    }
    for (double g : grid) {
        const auto [l1, l2] = swarm::eigenvalues(g);
        const auto regime = std::string(swarm::to_string(swarm::classify_regime(g)));
        if (out.is_open()) {
            out << real(g) << ',' << real(l1.real()) << ',' << real(l1.imag()) << ','
                << real(l2.real()) << ',' << real(l2.imag()) << ',' << regime << '\n';
        }
        rows.push_back({{"gamma", g},
                        {"lambda1", {l1.real(), l1.imag()}},
                        {"lambda2", {l2.real(), l2.imag()}},
                        {"regime", regime}});
    }
    if (out.is_open()) files.close(out, "pso_regime.csv");
    if (c.wants("json")) files.write_json("pso_regime.json", rows);
    log << "pso-regime: " << grid.size() << " gamma values\n";
}

void cmd_firefly(const RunConfig& c, OutputSet& files, std::ostream& log) {
    auto problem = make_problem(c.problem);
    auto params = firefly_params(c.firefly);
    params.record_rows = c.wants("csv");
    const auto result = firefly::firefly_optimize(problem, params, c.seed);
    if (c.wants("csv")) {
        auto out = files.open("firefly.csv");
        write_header(out, {"t", "firefly"}, problem.dimension(), {"x"}, {"f", "f_best"});
        for (const auto& r : result.rows) {
            out << r.t << ',' << r.firefly;
            for (double x : r.x) out << ',' << real(x);
            out << ',' << real(r.f) << ',' << real(r.f_best) << '\n';
        }
        files.close(out, "firefly.csv");
    }
    if (c.wants("json")) files.write_json("firefly.json", run_summary(c, result.run));
    log << "firefly " << c.problem.name << ": best f = " << real(result.run.best_f) << " after "
        << result.run.evaluations << " evaluations\n";
}

// 1, 2, 5, 10, 20, 50, ... up to and including `steps`.
std::vector<std::size_t> log_checkpoints(std::size_t steps) {
    std::vector<std::size_t> cps;
    for (std::size_t decade = 1; decade <= steps; decade *= 10) {
        for (std::size_t m : {1u, 2u, 5u}) {
            if (m * decade <= steps) cps.push_back(m * decade);
        }
        if (decade > steps / 10) break;
    }
    if (cps.back() != steps) cps.push_back(steps);
    return cps;
}

ordered_json fit_json(const std::function<diagnostics::ExponentFit()>& fit) {
    try {
        const auto f = fit();
        return {{"exponent", f.exponent},
                {"intercept", f.intercept},
                {"r_squared", f.r_squared},
                {"points", f.points},
                {"reliable", f.reliable}};
    } catch (const std::domain_error& e) {
        return {{"error", e.what()}};
    }
}

void cmd_walk(const RunConfig& c, OutputSet& files, std::ostream& log) {
    const auto cfg = walk_config(c.walk);
    const auto walks = stochastic::walk_ensemble_1d(cfg, c.walk.walks, c.seed);
    const auto cps = log_checkpoints(c.walk.steps);
    const auto moments = diagnostics::ensemble_moments(walks, cps);
    if (c.wants("csv")) {
        auto out = files.open("walk.csv");
        out << "N,variance,mean_square,max_share\n";
        for (const auto& m : moments) {
            out << m.step << ',' << real(m.variance) << ',' << real(m.mean_square) << ','
                << real(m.max_share) << '\n';
        }
        files.close(out, "walk.csv");
    }
    ordered_json j;
    j["step_law"] = cfg.step_dist.describe();
    j["walks"] = c.walk.walks;
    j["steps"] = c.walk.steps;
    j["variance_fit"] = fit_json([&] { return diagnostics::variance_growth_exponent(walks, cps); });
    j["msd_fit"] = fit_json([&] { return diagnostics::msd_growth_exponent(walks, cps); });
    if (c.walk.coverage_cell > 0.0) {
        double total = 0.0;
        std::vector<Vector> path;
        for (const auto& w : walks) {
            path.clear();
            for (double x : w) path.push_back({x});
            total += static_cast<double>(diagnostics::coverage_cells(path, c.walk.coverage_cell));
        }
        j["coverage"] = {{"cell", c.walk.coverage_cell},
                         {"mean_cells_visited", total / static_cast<double>(walks.size())}};
    }
    if (c.wants("json")) files.write_json("walk.json", j);
    log << "walk: " << c.walk.walks << " walks of " << c.walk.steps << " steps\n";
}

void cmd_tails(const RunConfig& c, OutputSet& files, std::ostream& log) {
    const auto& t = c.tails;
    const auto dist = stochastic::StepDistribution::levy_stable(t.scale, t.index);
    Rng rng(c.seed);
    std::vector<double> mags(t.samples);
    for (auto& m : mags) m = std::abs(stochastic::sample_step(dist, rng));
    const std::size_t k = t.k == 0 ? t.samples / 20 : t.k;
    const double hill = diagnostics::tail_index(mags, k);
    ordered_json j;
    j["step_law"] = dist.describe();
    j["samples"] = t.samples;
    j["k"] = k;
    j["hill_exponent"] = hill;
    j["expected_exponent"] = 1.0 + t.index;
    if (c.wants("json")) files.write_json("tails.json", j);
    log << "tails: Hill exponent " << real(hill) << " (1 + index = " << real(1.0 + t.index) << ")\n";
}

firefly::ScalarMap make_map(const std::string& name, double parameter) {
    return name == "logistic" ? firefly::ScalarMap::logistic(parameter)
                              : firefly::ScalarMap::firefly_reduced(parameter);
}

void cmd_bifurcate(const RunConfig& c, OutputSet& files, std::ostream& log) {
    const auto& b = c.bifurcate;
    chaos::ScanOptions opts;
    opts.n = b.n;
    opts.discard = b.discard;
    opts.samples = b.samples;
    opts.fold_abs = b.fold_abs;
    const std::string name = b.map == "logistic" ? "lambda" : "beta0";
    const auto scan = chaos::bifurcation_scan([&](double p) { return make_map(b.map, p); }, name,
                                              chaos::parse_grid(b.range), b.u0, opts);
    if (c.wants("csv")) {
        auto out = files.open("bifurcate.csv");
        out << "param,sample_index,u\n";
        for (std::size_t i = 0; i < scan.grid.size(); ++i) {
            for (std::size_t s = 0; s < scan.samples[i].size(); ++s) {
                out << real(scan.grid[i]) << ',' << s << ',' << real(scan.samples[i][s]) << '\n';
            }
        }
        files.close(out, "bifurcate.csv");
    }
    const auto onset = chaos::first_chaotic_parameter(scan);
    if (c.wants("json")) {
        ordered_json points = ordered_json::array();
        for (std::size_t i = 0; i < scan.grid.size(); ++i) {
            ordered_json p{{"param", scan.grid[i]}, {"lyapunov", scan.lyapunov[i]}};
            if (scan.errors[i]) p["error"] = *scan.errors[i];
            points.push_back(std::move(p));
        }
        ordered_json j;
        j["map"] = b.map;
        j["parameter"] = name;
        j["grid_points"] = scan.grid.size();
        j["first_chaotic"] = onset ? ordered_json(*onset) : ordered_json(nullptr);
        j["points"] = std::move(points);
        files.write_json("bifurcate.json", j);
    }
    log << "bifurcate " << b.map << ": " << scan.grid.size() << " grid points";
    if (onset) log << ", first positive Lyapunov estimate at " << name << " = " << real(*onset);
    log << '\n';
}

void cmd_orbit(const RunConfig& c, OutputSet& files, std::ostream& log) {
    const auto& o = c.orbit;
    chaos::OrbitOptions opts;
    opts.tol = o.tol;
    opts.max_period = o.max_period;
    opts.n = o.n;
    opts.discard = o.discard;
    const auto map = make_map(o.map, o.param);
    const auto summary = chaos::classify_orbit(map, o.u0, opts);
    if (c.wants("csv")) {
        auto out = files.open("orbit.csv");
        out << "t,u\n";
        for (std::size_t i = 0; i < summary.samples.size(); ++i) {
            out << o.discard + 1 + i << ',' << real(summary.samples[i]) << '\n';
        }
        files.close(out, "orbit.csv");
    }
    if (c.wants("json")) {
        ordered_json j;
        j["map"] = o.map;
        j["param"] = o.param;
        j["classification"] = std::string(chaos::to_string(summary.kind));
        j["lyapunov"] = summary.lyapunov;
        if (summary.kind == chaos::OrbitKind::fixed_point) j["fixed_point"] = summary.fixed_point;
        if (summary.kind == chaos::OrbitKind::periodic) {
            j["period"] = summary.period;
            j["cycle"] = summary.cycle;
        }
        files.write_json("orbit.json", j);
    }
    log << "orbit " << o.map << "(" << real(o.param) << "): " << chaos::to_string(summary.kind)
        << ", lyapunov " << real(summary.lyapunov) << '\n';
}

void cmd_bench(const RunConfig& c, OutputSet& files, std::ostream& log) {
    struct Row {
        std::string algorithm;
        std::string problem;
        std::uint64_t seed;
        double best_f;
        std::uint64_t evaluations;
        double wall;
    };
    std::vector<Row> rows;
    const std::vector<std::string> algorithms{"anneal", "pso", "firefly"};
    for (const auto& algo : algorithms) {
        for (const auto& name : problems::builtin_names()) {
            for (std::size_t i = 0; i < c.bench.runs; ++i) {
                const auto seed = derive_seed(c.seed, i);
                auto problem = problems::make_problem(name, c.problem.dimension);
                const auto start = Clock::now();
                RunResult run;
                if (algo == "anneal") {
                    run = annealing::anneal(problem, annealing::AnnealingParams{}, seed).run;
                } else if (algo == "pso") {
                    run = swarm::pso_optimize(problem, swarm::PsoParams{}, seed).run;
                } else {
                    run = firefly::firefly_optimize(problem, firefly::FireflyParams{}, seed).run;
                }
                rows.push_back({algo, name, seed, run.best_f, run.evaluations, seconds_since(start)});
            }
        }
    }
    if (c.wants("csv")) {
        auto out = files.open("bench.csv");
        out << "algorithm,problem,seed,best_f,evaluations,wall_time_s\n";
        for (const auto& r : rows) {
            out << r.algorithm << ',' << r.problem << ',' << r.seed << ',' << real(r.best_f) << ','
                << r.evaluations << ',' << real(r.wall) << '\n';
        }
        files.close(out, "bench.csv");
    }
    if (c.wants("json")) {
        ordered_json j = ordered_json::array();
        for (const auto& r : rows) {
            j.push_back({{"algorithm", r.algorithm},
                         {"problem", r.problem},
                         {"seed", r.seed},
                         {"best_f", r.best_f},
                         {"evaluations", r.evaluations},
                         {"wall_time_s", r.wall}});
        }
        files.write_json("bench.json", j);
    }
    log << "bench: " << rows.size() << " runs\n";
}

using Command = void (*)(const RunConfig&, OutputSet&, std::ostream&);

const std::map<std::string, Command>& commands() {
    static const std::map<std::string, Command> table{
        {"anneal", cmd_anneal},       {"pso", cmd_pso},   {"pso-regime", cmd_pso_regime},
        {"firefly", cmd_firefly},     {"walk", cmd_walk}, {"tails", cmd_tails},
        {"bifurcate", cmd_bifurcate}, {"orbit", cmd_orbit}, {"bench", cmd_bench},
    };
    return table;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto it = commands().find(config.subcommand);
    if (it == commands().end()) {
        err << "error: unknown subcommand '" << config.subcommand << "'\n";
        return kExitUsage;
    }
    std::optional<OutputSet> files;
    const auto start = Clock::now();
    try {
        files.emplace(config.out);
        it->second(config, *files, out);
        ordered_json manifest;
        manifest["tool"] = "metaopt";
        manifest["version"] = METAOPT_VERSION;
        manifest["seed"] = config.seed;
        manifest["config"] = config_to_json(config);
        manifest["wall_time_s"] = seconds_since(start);
        files->finish(std::move(manifest));
    } catch (const std::exception& e) {
        if (files) files->rollback();
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    out << "seed " << config.seed << "; wrote " << files->files().size() + 1 << " files to "
        << config.out.string() << '\n';
    return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    auto parsed = parse_config(argc, argv);
    if (!parsed.config) {
        (parsed.exit_code == kExitOk ? out : err) << parsed.message;
        return parsed.exit_code;
    }
    return run(*parsed.config, out, err);
}

}  // namespace metaopt::cli
