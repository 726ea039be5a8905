// Experiment runner for the strawberry algorithm: benchmark convergence
// studies and fixed-structure mixed-sensitivity controller synthesis.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sba/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

void print_common(const sba::harness::ExperimentConfig& config,
                  const sba::harness::ExperimentResult& result) {
    std::printf("runs/repetitions     : %d\n", config.repetitions);
    std::printf("iterations (aggregated): %zu\n", result.aggregate.size());
    std::printf("best value           : %.10g (run %d, seed %llu)\n", result.best_value,
                result.best_run,
                static_cast<unsigned long long>(config.base_seed +
                                                static_cast<std::uint64_t>(result.best_run)));
    std::printf("median final value   : %.10g\n", result.median_final);
    std::printf("mean final value     : %.10g\n", result.mean_final);
    std::printf("total evaluations    : %lld\n",
                static_cast<long long>(result.total_evaluations));
    std::printf("trace file           : %s\n", config.output.trace.c_str());
    std::printf("summary file         : %s\n", config.output.summary.c_str());
    std::printf("wall-clock seconds   : %.3f\n", result.wall_seconds);
}

void print_synthesis(const sba::harness::ExperimentResult& result) {
    if (!result.controller) return;
    const auto& c = *result.controller;
    std::printf("controller numerator : [%.10g, %.10g, %.10g]\n", c.b2, c.b1, c.b0);
    std::printf("controller denominator: [1, %.10g, %.10g, %.10g]\n", c.a2, c.a1, c.a0);
    std::printf("gamma                : %.10g\n", *result.gamma);
    std::printf("rightmost pole       : %.10g\n", *result.rightmost_pole);
}

int run_config(sba::harness::ExperimentConfig config) {
    const auto result = sba::harness::run_experiment(config);
    print_common(config, result);
    print_synthesis(result);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strawberry algorithm experiment runner"};
    app.require_subcommand(1);

    // optimize: run any config document as-is.
    std::string optimize_config;
    int optimize_threads = 0;
    CLI::App* optimize = app.add_subcommand("optimize", "run an experiment config");
    optimize->add_option("config", optimize_config, "experiment config (JSON)")->required();
    optimize->add_option("--threads", optimize_threads, "worker threads (0 = all cores)");

    // benchmark: registry shortcut with flag overrides.
    std::string bench_name;
    int bench_dim = 2;
    int bench_iters = 100;
    int bench_runs = 1;
    std::uint64_t bench_seed = 0;
    int bench_mothers = 5;
    double bench_d_root = 0.2;
    double bench_d_runner = 2.5;
    double bench_shift = 0.0;
    std::string bench_fitness = "abc";
    double bench_sp = 1.5;
    int bench_mult = 1;
    std::optional<double> bench_target;
    std::string bench_trace = "trace.csv";
    std::string bench_summary = "summary.json";
    bool bench_per_run = false;
    int bench_threads = 0;
    CLI::App* bench = app.add_subcommand("benchmark", "run a registered benchmark function");
    bench->add_option("name", bench_name, "objective name (rastrigin, griewank, sphere)")
        ->required();
    bench->add_option("--dim", bench_dim, "problem dimension");
    bench->add_option("--iters", bench_iters, "iterations per run");
    bench->add_option("--runs", bench_runs, "independent repetitions");
    bench->add_option("--seed", bench_seed, "base seed (run r uses base + r)");
    bench->add_option("--n-mothers", bench_mothers, "population size N");
    bench->add_option("--d-root", bench_d_root, "root (local) radius");
    bench->add_option("--d-runner", bench_d_runner, "runner (global) radius");
    bench->add_option("--fitness-shift", bench_shift, "fitness shift a");
    bench->add_option("--fitness-mode", bench_fitness, "abc or ranking");
    bench->add_option("--selection-pressure", bench_sp, "SP in [1,2] (ranking mode)");
    bench->add_option("--multiplicity", bench_mult, "offspring pairs per mother");
    bench->add_option("--target", bench_target, "stop once incumbent <= target");
    bench->add_option("--trace", bench_trace, "trace CSV path");
    bench->add_option("--summary", bench_summary, "summary JSON path");
    bench->add_flag("--per-run", bench_per_run, "also dump one trace per repetition");
    bench->add_option("--threads", bench_threads, "worker threads (0 = all cores)");

    // synthesize: controller synthesis config with a multi-start override.
    std::string synth_config;
    std::optional<int> synth_restarts;
    int synth_threads = 0;
    CLI::App* synth = app.add_subcommand("synthesize", "robust controller synthesis");
    synth->add_option("config", synth_config, "synthesis config (JSON)")->required();
    synth->add_option("--restarts", synth_restarts,
                      "independent seeded restarts (overrides repetitions)");
    synth->add_option("--threads", synth_threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*optimize) {
            auto config = sba::harness::ExperimentConfig::from_file(optimize_config);
            config.threads = optimize_threads;
            return run_config(std::move(config));
        }
        if (*bench) {
            sba::harness::ExperimentConfig config;
            sba::harness::BenchmarkRequest req;
            req.name = bench_name;
            req.dimension = bench_dim;
            config.objective = std::move(req);
            config.sba.n_mothers = bench_mothers;
            config.sba.d_root = sba::SearchRadius(bench_d_root);
            config.sba.d_runner = sba::SearchRadius(bench_d_runner);
            config.sba.fitness_shift = bench_shift;
            if (bench_fitness == "abc") {
                config.sba.fitness_mode = sba::FitnessMode::abc;
            } else if (bench_fitness == "ranking") {
                config.sba.fitness_mode = sba::FitnessMode::ranking;
            } else {
                throw sba::ConfigError("--fitness-mode: expected \"abc\" or \"ranking\"");
            }
            config.sba.selection_pressure = bench_sp;
            config.sba.multiplicity = bench_mult;
            config.sba.max_iterations = bench_iters;
            config.sba.target_value = bench_target;
            config.repetitions = bench_runs;
            config.base_seed = bench_seed;
            config.output.trace = bench_trace;
            config.output.summary = bench_summary;
            config.output.per_run = bench_per_run;
            config.threads = bench_threads;
            return run_config(std::move(config));
        }
        if (*synth) {
            auto config = sba::harness::ExperimentConfig::from_file(synth_config);
            if (!config.synthesis) {
                throw sba::ConfigError("synthesize: config must contain a \"synthesis\" block");
            }
            if (synth_restarts) config.repetitions = *synth_restarts;
            config.threads = synth_threads;
            return run_config(std::move(config));
        }
    } catch (const sba::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
