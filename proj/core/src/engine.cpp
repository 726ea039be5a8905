#include "sba/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace sba {

namespace {

constexpr double kFitnessSaturation = 1e300;
constexpr double kDenormalGuard = 1e-300;

// Ascending by objective value, non-finite last, stable on ties.
std::vector<Eigen::Index> order_by_value(const Eigen::VectorXd& values) {
    std::vector<Eigen::Index> order(values.size());
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    auto key = [&](Eigen::Index j) {
        const double v = values[j];
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return key(a) < key(b); });
    return order;
}

} // namespace

Population init_population(const Bounds& bounds, const SbaParams& params, Rng& rng) {
    bounds.validate();
    params.validate(bounds.dimension());

    const Eigen::Index m = bounds.dimension();
    Eigen::MatrixXd positions(m, params.n_mothers);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (Eigen::Index j = 0; j < params.n_mothers; ++j) {
        for (Eigen::Index k = 0; k < m; ++k) {
            positions(k, j) = bounds.lower[k] + unit(rng) * (bounds.upper[k] - bounds.lower[k]);
        }
    }
    return {std::move(positions), bounds};
}

Eigen::VectorXd offspring_position(const Eigen::Ref<const Eigen::VectorXd>& mother,
                                   const SearchRadius& radius,
                                   const Eigen::Ref<const Eigen::VectorXd>& draw,
                                   const Bounds& bounds) {
    Eigen::VectorXd out(mother.size());
    for (Eigen::Index k = 0; k < mother.size(); ++k) {
        out[k] = bounds.clamp(mother[k] + radius[k] * draw[k], k);
    }
    return out;
}

OffspringBatch propagate(const Population& pop, const SbaParams& params, Rng& rng) {
    params.validate(pop.dimension());

    const Eigen::Index m = pop.dimension();
    const Eigen::Index n_mothers = pop.size();
    const Eigen::Index per_kind = static_cast<Eigen::Index>(params.multiplicity) * n_mothers;
    const Eigen::Index total = 2 * per_kind;

    OffspringBatch batch;
    batch.positions.resize(m, total);
    batch.origin.resize(total);
    batch.kind.resize(total);
    batch.bounds = pop.bounds;

    std::uniform_real_distribution<double> unit_step(-0.5, 0.5);
    Eigen::VectorXd draw(m);
    Eigen::Index col = 0;
    for (OffspringKind kind : {OffspringKind::root, OffspringKind::runner}) {
        const SearchRadius& radius =
            (kind == OffspringKind::root) ? params.d_root : params.d_runner;
        for (int p = 0; p < params.multiplicity; ++p) {
            for (Eigen::Index j = 0; j < n_mothers; ++j, ++col) {
                for (Eigen::Index k = 0; k < m; ++k) draw[k] = unit_step(rng);
                batch.positions.col(col) =
                    offspring_position(pop.positions.col(j), radius, draw, pop.bounds);
                batch.origin[col] = static_cast<int>(j);
                batch.kind[col] = kind;
            }
        }
    }
    return batch;
}

double abc_fitness(double value, double shift) {
    if (!(shift >= 0.0)) throw ConfigError("fitness shift must be >= 0");
    if (value > 0.0) {
        const double denom = shift + value;
        if (denom < kDenormalGuard) return kFitnessSaturation;
        return 1.0 / denom;
    }
    return shift + std::abs(value);
}

double rank_fitness(int pos, int total, double selection_pressure) {
    if (selection_pressure < 1.0 || selection_pressure > 2.0) {
        throw ConfigError("selection pressure must lie in [1, 2]");
    }
    if (total < 1) throw std::out_of_range("rank_fitness: total must be >= 1");
    if (pos < 1 || pos > total) {
        throw std::out_of_range("rank_fitness: position outside [1, total]");
    }
    if (total == 1) return 1.0;
    return 2.0 - selection_pressure +
           2.0 * (selection_pressure - 1.0) * (pos - 1) / (total - 1.0);
}

Eigen::VectorXd selection_probabilities(const Eigen::Ref<const Eigen::VectorXd>& fitness) {
    const Eigen::Index n = fitness.size();
    if (n == 0) throw std::invalid_argument("selection_probabilities: empty fitness vector");
    double sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (!(fitness[j] >= 0.0)) {
            throw std::invalid_argument("selection_probabilities: fitness must be nonnegative");
        }
        sum += fitness[j];
    }
    if (sum <= 0.0) {
        return Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    }
    if (!std::isfinite(sum)) {
        // Saturated weights can overflow the plain sum; normalize by the max
        // first (the ratios, and hence the probabilities, are unchanged).
        Eigen::VectorXd scaled = fitness / fitness.maxCoeff();
        return scaled / scaled.sum();
    }
    return fitness / sum;
}

Eigen::Index roulette_pick(const Eigen::Ref<const Eigen::VectorXd>& fitness, Rng& rng) {
    const Eigen::VectorXd p = selection_probabilities(fitness);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    double cumulative = 0.0;
    for (Eigen::Index j = 0; j < p.size(); ++j) {
        cumulative += p[j];
        if (u < cumulative) return j;
    }
    return p.size() - 1; // rounding left u at the very top of the wheel
}

Population select_survivors(const OffspringBatch& batch, const SbaParams& params, Rng& rng) {
    const Eigen::Index n_mothers = params.n_mothers;
    if (batch.size() < n_mothers) {
        throw std::invalid_argument("select_survivors: batch smaller than the population");
    }

    const std::vector<Eigen::Index> order = order_by_value(batch.values);
    const Eigen::Index n_elite = (n_mothers + 1) / 2;
    const Eigen::Index n_roulette = n_mothers - n_elite;

    std::vector<Eigen::Index> survivors(order.begin(), order.begin() + n_elite);

    // Roulette over the not-yet-selected columns, without replacement; the
    // weights renormalize over the shrinking pool after each draw.
    std::vector<Eigen::Index> pool(order.begin() + n_elite, order.end());
    std::sort(pool.begin(), pool.end()); // keep column order for the wheel walk
    for (Eigen::Index t = 0; t < n_roulette; ++t) {
        Eigen::VectorXd weights(static_cast<Eigen::Index>(pool.size()));
        for (std::size_t i = 0; i < pool.size(); ++i) weights[i] = batch.fitness[pool[i]];
        const Eigen::Index pick = roulette_pick(weights, rng);
        survivors.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
    }

    Population next;
    next.bounds = batch.bounds;
    next.positions.resize(batch.positions.rows(), n_mothers);
    for (Eigen::Index i = 0; i < n_mothers; ++i) {
        next.positions.col(i) = batch.positions.col(survivors[i]);
    }
    return next;
}

Population step(const Population& pop, const Objective& objective, const SbaParams& params,
                Rng& rng, RunTrace& trace) {
    OffspringBatch batch = propagate(pop, params, rng);
    const Eigen::Index n = batch.size();

    batch.values.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        batch.values[j] = objective(batch.positions.col(j));
    }

    batch.fitness.resize(n);
    if (params.fitness_mode == FitnessMode::abc) {
        for (Eigen::Index j = 0; j < n; ++j) {
            batch.fitness[j] = std::isfinite(batch.values[j])
                                   ? abc_fitness(batch.values[j], params.fitness_shift)
                                   : 0.0;
        }
    } else {
        // Rank finite columns only; worst finite column stands at position 1.
        batch.fitness.setZero();
        std::vector<Eigen::Index> finite;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (std::isfinite(batch.values[j])) finite.push_back(j);
        }
        std::stable_sort(finite.begin(), finite.end(), [&](Eigen::Index a, Eigen::Index b) {
            return batch.values[a] > batch.values[b];
        });
        const int total = static_cast<int>(finite.size());
        for (int pos = 1; pos <= total; ++pos) {
            batch.fitness[finite[pos - 1]] = rank_fitness(pos, total, params.selection_pressure);
        }
    }

    IterationRecord rec;
    if (trace.empty()) {
        rec.iteration = 1;
        rec.evaluations = n;
    } else {
        rec.iteration = trace.back().iteration + 1;
        rec.evaluations = trace.back().evaluations + n;
        rec.incumbent_value = trace.back().incumbent_value;
        rec.incumbent_position = trace.back().incumbent_position;
    }

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    Eigen::Index n_finite = 0;
    Eigen::Index best_col = -1;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double v = batch.values[j];
        if (!std::isfinite(v)) continue;
        ++n_finite;
        sum += v;
        if (v < lo) {
            lo = v;
            best_col = j;
        }
        hi = std::max(hi, v);
    }
    if (n_finite > 0) {
        rec.min = lo;
        rec.mean = sum / static_cast<double>(n_finite);
        rec.max = hi;
        if (lo < rec.incumbent_value) {
            rec.incumbent_value = lo;
            rec.incumbent_position = batch.positions.col(best_col);
        }
    }
    trace.records.push_back(std::move(rec));

    return select_survivors(batch, params, rng);
}

RunResult run(const Objective& objective, const Bounds& bounds, const SbaParams& params) {
    bounds.validate();
    params.validate(bounds.dimension());

    Rng rng(params.seed);
    Population pop = init_population(bounds, params, rng);

    RunResult result;
    for (int i = 0; i < params.max_iterations; ++i) {
        pop = step(pop, objective, params, rng, result.trace);
        if (params.target_value &&
            result.trace.back().incumbent_value <= *params.target_value) {
            break;
        }
    }
    result.best_value = result.trace.back().incumbent_value;
    result.best_position = result.trace.back().incumbent_position;
    return result;
}

} // namespace sba
