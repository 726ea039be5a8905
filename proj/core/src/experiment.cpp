#include "sba/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

#include <nlohmann/json.hpp>

namespace sba::harness {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Eigen::VectorXd to_vector(const json& arr, const std::string& field) {
    if (!arr.is_array() || arr.empty()) {
        throw ConfigError(field + ": expected a nonempty array of numbers");
    }
    Eigen::VectorXd out(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number()) throw ConfigError(field + ": expected numbers");
        out[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
    }
    return out;
}

std::vector<double> to_poly(const json& arr, const std::string& field) {
    const Eigen::VectorXd v = to_vector(arr, field);
    return {v.data(), v.data() + v.size()};
}

SearchRadius parse_radius(const json& node, const std::string& field) {
    if (node.is_number()) return SearchRadius(node.get<double>());
    if (node.is_array()) return SearchRadius(to_vector(node, field));
    throw ConfigError(field + ": expected a number or an array");
}

SbaParams parse_sba(const json& node) {
    SbaParams p;
    if (!node.is_object()) throw ConfigError("sba: expected an object");
    if (node.contains("n_mothers")) p.n_mothers = node.at("n_mothers").get<int>();
    if (node.contains("d_root")) p.d_root = parse_radius(node.at("d_root"), "sba.d_root");
    if (node.contains("d_runner")) p.d_runner = parse_radius(node.at("d_runner"), "sba.d_runner");
    if (node.contains("fitness_shift")) p.fitness_shift = node.at("fitness_shift").get<double>();
    if (node.contains("fitness_mode")) {
        const std::string mode = node.at("fitness_mode").get<std::string>();
        if (mode == "abc") {
            p.fitness_mode = FitnessMode::abc;
        } else if (mode == "ranking") {
            p.fitness_mode = FitnessMode::ranking;
        } else {
            throw ConfigError("sba.fitness_mode: expected \"abc\" or \"ranking\"");
        }
    }
    if (node.contains("selection_pressure")) {
        p.selection_pressure = node.at("selection_pressure").get<double>();
    }
    if (node.contains("multiplicity")) p.multiplicity = node.at("multiplicity").get<int>();
    if (node.contains("max_iterations")) p.max_iterations = node.at("max_iterations").get<int>();
    if (node.contains("target_value") && !node.at("target_value").is_null()) {
        p.target_value = node.at("target_value").get<double>();
    }
    if (node.contains("seed")) p.seed = node.at("seed").get<std::uint64_t>();
    return p;
}

control::SynthesisProblem parse_synthesis(const json& node) {
    control::SynthesisProblem p;
    auto require = [&](const char* key) -> const json& {
        if (!node.contains(key)) {
            throw ConfigError(std::string("synthesis.") + key + ": missing field");
        }
        return node.at(key);
    };
    p.plant = control::RationalTF(to_poly(require("plant_num"), "synthesis.plant_num"),
                                  to_poly(require("plant_den"), "synthesis.plant_den"));
    p.perf_weight = control::RationalTF(to_poly(require("wp_num"), "synthesis.wp_num"),
                                        to_poly(require("wp_den"), "synthesis.wp_den"));
    p.uncert_weight = control::RationalTF(to_poly(require("wi_num"), "synthesis.wi_num"),
                                          to_poly(require("wi_den"), "synthesis.wi_den"));
    if (node.contains("lambda")) p.penalty = node.at("lambda").get<double>();
    if (node.contains("grid")) {
        const json& g = node.at("grid");
        if (g.contains("min")) p.grid.min = g.at("min").get<double>();
        if (g.contains("max")) p.grid.max = g.at("max").get<double>();
        if (g.contains("points")) p.grid.points = g.at("points").get<int>();
    }
    if (node.contains("cost_form")) {
        const std::string form = node.at("cost_form").get<std::string>();
        if (form == "sum") {
            p.cost_form = control::CostForm::sum;
        } else if (form == "stacked") {
            p.cost_form = control::CostForm::stacked;
        } else {
            throw ConfigError("synthesis.cost_form: expected \"sum\" or \"stacked\"");
        }
    }
    return p;
}

} // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    ExperimentConfig config;
    if (doc.contains("objective")) {
        const json& o = doc.at("objective");
        BenchmarkRequest req;
        if (!o.contains("name")) throw ConfigError("objective.name: missing field");
        req.name = o.at("name").get<std::string>();
        if (o.contains("dimension")) req.dimension = o.at("dimension").get<int>();
        if (o.contains("bounds")) {
            const json& b = o.at("bounds");
            req.bounds = Bounds(to_vector(b.at("lower"), "objective.bounds.lower"),
                                to_vector(b.at("upper"), "objective.bounds.upper"));
        }
        config.objective = std::move(req);
    }
    if (doc.contains("synthesis")) {
        config.synthesis = parse_synthesis(doc.at("synthesis"));
    }
    if (doc.contains("sba")) config.sba = parse_sba(doc.at("sba"));
    if (doc.contains("repetitions")) config.repetitions = doc.at("repetitions").get<int>();
    if (doc.contains("base_seed")) config.base_seed = doc.at("base_seed").get<std::uint64_t>();
    if (doc.contains("output")) {
        const json& out = doc.at("output");
        if (out.contains("trace")) config.output.trace = out.at("trace").get<std::string>();
        if (out.contains("summary")) config.output.summary = out.at("summary").get<std::string>();
        if (out.contains("per_run")) config.output.per_run = out.at("per_run").get<bool>();
    }
    config.validate();
    return config;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json_text(text);
}

void ExperimentConfig::validate() const {
    if (objective.has_value() == synthesis.has_value()) {
        throw ConfigError("config: exactly one of \"objective\" or \"synthesis\" is required");
    }
    if (repetitions < 1) throw ConfigError("repetitions: must be >= 1");
    if (objective) {
        // Resolves the registry name and dimension; throws on unknown names.
        auto spec = objectives::make_benchmark(objective->name, objective->dimension);
        const Bounds& bounds = objective->bounds ? *objective->bounds : spec.bounds;
        bounds.validate();
        if (bounds.dimension() != objective->dimension) {
            throw ConfigError("objective.bounds: length must match objective.dimension");
        }
        sba.validate(bounds.dimension());
    } else {
        synthesis->validate();
        sba.validate(6);
    }
}

namespace {

struct ResolvedProblem {
    Objective objective;
    Bounds bounds;
    std::shared_ptr<control::PenalizedCost> cost; // non-null for synthesis runs
};

ResolvedProblem resolve(const ExperimentConfig& config) {
    ResolvedProblem r;
    if (config.objective) {
        auto spec = objectives::make_benchmark(config.objective->name,
                                               config.objective->dimension);
        r.bounds = config.objective->bounds ? *config.objective->bounds : spec.bounds;
        r.objective = std::move(spec.fn);
    } else {
        r.cost = std::make_shared<control::PenalizedCost>(*config.synthesis);
        r.bounds = Bounds::cube(-1e10, 1e10, 6);
        auto cost = r.cost;
        r.objective = [cost](const Eigen::Ref<const Eigen::VectorXd>& x) {
            return (*cost)(control::ControllerParams::from_vector(x));
        };
    }
    return r;
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

ExperimentResult run_experiment_in_memory(const ExperimentConfig& config) {
    config.validate();
    const ResolvedProblem problem = resolve(config);

    const auto t0 = std::chrono::steady_clock::now();

    const int reps = config.repetitions;
    std::vector<RunResult> runs(reps);
    unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                          : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(reps)));

    // Each repetition owns its RNG, population, and trace; results land in
    // repetition-indexed slots so output never depends on scheduling.
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (int r = next.fetch_add(1); r < reps; r = next.fetch_add(1)) {
            try {
                SbaParams params = config.sba;
                params.seed = config.base_seed + static_cast<std::uint64_t>(r);
                runs[r] = run(problem.objective, problem.bounds, params);
            } catch (...) {
                std::scoped_lock lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    ExperimentResult result;
    result.runs = std::move(runs);

    // Aggregate over the iterations every repetition completed (runs can stop
    // early when a target value is hit).
    std::size_t common = result.runs.front().trace.size();
    for (const auto& r : result.runs) common = std::min(common, r.trace.size());
    AggregateTrace& agg = result.aggregate;
    for (std::size_t t = 0; t < common; ++t) {
        double min_sum = 0.0, mean_sum = 0.0, max_sum = 0.0, inc_sum = 0.0;
        double xmin = std::numeric_limits<double>::infinity();
        double xmax = -std::numeric_limits<double>::infinity();
        for (const auto& r : result.runs) {
            const IterationRecord& rec = r.trace.records[t];
            min_sum += rec.min;
            mean_sum += rec.mean;
            max_sum += rec.max;
            inc_sum += rec.incumbent_value;
            xmin = std::min(xmin, rec.min);
            xmax = std::max(xmax, rec.max);
        }
        const double n = static_cast<double>(reps);
        agg.iteration.push_back(static_cast<int>(t) + 1);
        agg.min_mean.push_back(min_sum / n);
        agg.mean_mean.push_back(mean_sum / n);
        agg.max_mean.push_back(max_sum / n);
        agg.incumbent_mean.push_back(inc_sum / n);
        agg.cross_run_min.push_back(xmin);
        agg.cross_run_max.push_back(xmax);
        agg.evaluations.push_back(result.runs.front().trace.records[t].evaluations);
    }

    std::vector<double> finals;
    finals.reserve(reps);
    result.total_evaluations = 0;
    result.best_run = 0;
    for (int r = 0; r < reps; ++r) {
        finals.push_back(result.runs[r].best_value);
        result.total_evaluations += result.runs[r].trace.back().evaluations;
        if (result.runs[r].best_value < result.runs[result.best_run].best_value) {
            result.best_run = r;
        }
    }
    result.best_value = result.runs[result.best_run].best_value;
    result.best_position = result.runs[result.best_run].best_position;
    result.median_final = median_of(finals);
    result.mean_final =
        std::accumulate(finals.begin(), finals.end(), 0.0) / static_cast<double>(reps);

    if (config.synthesis) {
        const auto controller =
            control::ControllerParams::from_vector(result.best_position);
        result.controller = controller;
        const control::RationalTF k = controller.tf();
        result.gamma = problem.cost->norm(k);
        try {
            result.rightmost_pole = problem.cost->rightmost_pole(k);
        } catch (const NumericError&) {
            result.rightmost_pole = std::numeric_limits<double>::quiet_NaN();
        }
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();

    // Fail on unwritable outputs before any compute.
    for (const std::string& path : {config.output.trace, config.output.summary}) {
        std::ofstream probe(path);
        if (!probe) throw IoError("cannot write output file: " + path);
    }

    ExperimentResult result = run_experiment_in_memory(config);

    write_trace_csv(config.output.trace, result.aggregate);
    if (config.output.per_run) {
        for (int r = 0; r < config.repetitions; ++r) {
            write_run_trace_csv(per_run_trace_path(config.output.trace, r),
                                result.runs[r].trace);
        }
    }
    write_summary_json(config.output.summary, config, result);
    return result;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_trace_csv(const std::string& path, const AggregateTrace& aggregate) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write output file: " + path);
    out << "iter,min,mean,max,incumbent,evals\n";
    for (std::size_t t = 0; t < aggregate.size(); ++t) {
        out << aggregate.iteration[t] << ',' << format_g17(aggregate.min_mean[t]) << ','
            << format_g17(aggregate.mean_mean[t]) << ',' << format_g17(aggregate.max_mean[t])
            << ',' << format_g17(aggregate.incumbent_mean[t]) << ',' << aggregate.evaluations[t]
            << '\n';
    }
    if (!out) throw IoError("failed while writing " + path);
}

void write_run_trace_csv(const std::string& path, const RunTrace& trace) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write output file: " + path);
    out << "iter,min,mean,max,incumbent,evals\n";
    for (const IterationRecord& rec : trace.records) {
        out << rec.iteration << ',' << format_g17(rec.min) << ',' << format_g17(rec.mean) << ','
            << format_g17(rec.max) << ',' << format_g17(rec.incumbent_value) << ','
            << rec.evaluations << '\n';
    }
    if (!out) throw IoError("failed while writing " + path);
}

std::string per_run_trace_path(const std::string& trace_path, int repetition) {
    const std::string tag = ".run" + std::to_string(repetition);
    const std::size_t slash = trace_path.find_last_of('/');
    const std::size_t dot = trace_path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return trace_path + tag;
    }
    return trace_path.substr(0, dot) + tag + trace_path.substr(dot);
}

void write_summary_json(const std::string& path, const ExperimentConfig& config,
                        const ExperimentResult& result) {
    ordered_json doc;
    if (config.objective) {
        doc["objective"] = {{"name", config.objective->name},
                            {"dimension", config.objective->dimension}};
    } else {
        doc["objective"] = {{"name", "synthesis"}, {"dimension", 6}};
    }
    doc["repetitions"] = config.repetitions;
    doc["base_seed"] = config.base_seed;
    doc["iterations"] = result.aggregate.size();

    ordered_json best;
    best["run"] = result.best_run;
    best["seed"] = config.base_seed + static_cast<std::uint64_t>(result.best_run);
    best["value"] = result.best_value;
    best["position"] = std::vector<double>(result.best_position.data(),
                                           result.best_position.data() +
                                               result.best_position.size());
    doc["best"] = std::move(best);

    std::vector<double> finals;
    finals.reserve(result.runs.size());
    for (const auto& r : result.runs) finals.push_back(r.best_value);
    doc["per_run_final_values"] = finals;
    doc["median_final_value"] = result.median_final;
    doc["mean_final_value"] = result.mean_final;
    doc["total_evaluations"] = result.total_evaluations;
    doc["cross_run_min"] = result.aggregate.cross_run_min;
    doc["cross_run_max"] = result.aggregate.cross_run_max;

    if (result.controller) {
        const control::ControllerParams& c = *result.controller;
        ordered_json k;
        k["a0"] = c.a0;
        k["a1"] = c.a1;
        k["a2"] = c.a2;
        k["b0"] = c.b0;
        k["b1"] = c.b1;
        k["b2"] = c.b2;
        k["numerator"] = std::vector<double>{c.b2, c.b1, c.b0};
        k["denominator"] = std::vector<double>{1.0, c.a2, c.a1, c.a0};
        doc["controller"] = std::move(k);
        doc["gamma"] = *result.gamma;
        doc["rightmost_pole"] = *result.rightmost_pole;
    }

    std::ofstream out(path);
    if (!out) throw IoError("cannot write output file: " + path);
    out << doc.dump(2) << '\n';
    if (!out) throw IoError("failed while writing " + path);
}

} // namespace sba::harness
