#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sba/engine.hpp"
#include "sba/objectives.hpp"
#include "sba/synthesis.hpp"
#include "sba/trace.hpp"

namespace sba::harness {

/// A benchmark objective request: registry name + dimension, with an optional
/// bounds override.
struct BenchmarkRequest {
    std::string name;
    int dimension = 2;
    std::optional<Bounds> bounds;
};

struct OutputPaths {
    std::string trace = "trace.csv";
    std::string summary = "summary.json";
    bool per_run = false; ///< additionally dump one trace file per repetition
};

/// One experiment: an objective (benchmark or synthesis problem), the SBA
/// tunables, and the repetition protocol. Repetition r runs with seed
/// base_seed + r.
struct ExperimentConfig {
    std::optional<BenchmarkRequest> objective;
    std::optional<control::SynthesisProblem> synthesis;
    SbaParams sba;
    int repetitions = 1;
    std::uint64_t base_seed = 0;
    OutputPaths output;
    int threads = 0; ///< worker cap; 0 = hardware concurrency; never affects output

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_file(const std::string& path);

    void validate() const;
};

/// Per-iteration statistics joined across repetitions: arithmetic means of
/// the per-run columns, plus cross-run extremes of the per-run offspring
/// extremes.
struct AggregateTrace {
    std::vector<int> iteration;
    std::vector<double> min_mean;
    std::vector<double> mean_mean;
    std::vector<double> max_mean;
    std::vector<double> incumbent_mean;
    std::vector<double> cross_run_min;
    std::vector<double> cross_run_max;
    std::vector<std::int64_t> evaluations;

    std::size_t size() const { return iteration.size(); }
};

struct ExperimentResult {
    AggregateTrace aggregate;
    std::vector<RunResult> runs; ///< in repetition order
    int best_run = 0;
    double best_value = 0.0;
    Eigen::VectorXd best_position;
    double median_final = 0.0;
    double mean_final = 0.0;
    std::int64_t total_evaluations = 0;
    double wall_seconds = 0.0; ///< reported on stdout, not in the summary file
    // synthesis runs only:
    std::optional<control::ControllerParams> controller;
    std::optional<double> gamma;
    std::optional<double> rightmost_pole;
};

/// Executes the repetitions (in parallel up to `threads` workers), aggregates
/// the traces, and writes the trace and summary files. Output bytes are
/// independent of scheduling and identical across re-executions.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// The experiment without any file output (library callers, tests).
ExperimentResult run_experiment_in_memory(const ExperimentConfig& config);

void write_trace_csv(const std::string& path, const AggregateTrace& aggregate);
void write_run_trace_csv(const std::string& path, const RunTrace& trace);
void write_summary_json(const std::string& path, const ExperimentConfig& config,
                        const ExperimentResult& result);

/// Per-run trace path: "runs/trace.csv" -> "runs/trace.run3.csv".
std::string per_run_trace_path(const std::string& trace_path, int repetition);

/// "%.17g" rendering used for every floating-point field in the CSV outputs.
std::string format_g17(double v);

} // namespace sba::harness
