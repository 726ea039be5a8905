#pragma once

#include <functional>
#include <random>

#include <Eigen/Dense>

#include "sba/bounds.hpp"
#include "sba/params.hpp"
#include "sba/population.hpp"
#include "sba/trace.hpp"

namespace sba {

/// Owned, seedable random stream. One per run; never shared across runs.
using Rng = std::mt19937_64;

/// Objective contract: a pure mapping from a real vector of length m to a
/// real scalar. Must be callable from the single thread that owns the run.
using Objective = std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)>;

/// N mother plants sampled componentwise uniformly inside the bounds.
/// Deterministic given the stream state.
Population init_population(const Bounds& bounds, const SbaParams& params, Rng& rng);

/// One offspring column: mother + radius .* draw, clamped to the bounds.
/// Scalar radii broadcast across dimensions; vector radii scale row-wise.
Eigen::VectorXd offspring_position(const Eigen::Ref<const Eigen::VectorXd>& mother,
                                   const SearchRadius& radius,
                                   const Eigen::Ref<const Eigen::VectorXd>& draw,
                                   const Bounds& bounds);

/// Duplication: every mother emits `multiplicity` root/runner pairs, each
/// displaced by an independent uniform draw in [-0.5, 0.5] per component.
/// Output has 2 * multiplicity * N columns, roots first, then runners, with
/// origin/kind tags; values and fitness are left for the evaluation phase.
OffspringBatch propagate(const Population& pop, const SbaParams& params, Rng& rng);

/// Inverse-cost fitness: 1/(shift + value) for value > 0, shift + |value|
/// otherwise. Saturates instead of dividing by a denormal.
double abc_fitness(double value, double shift);

/// Linear rank fitness, worst at position 1, best at position `total`:
/// 2 - SP + 2 (SP - 1) (pos - 1) / (total - 1). Defined as 1 for total == 1.
double rank_fitness(int pos, int total, double selection_pressure);

/// Fitness-proportional probabilities; all-zero input falls back to uniform.
Eigen::VectorXd selection_probabilities(const Eigen::Ref<const Eigen::VectorXd>& fitness);

/// One fitness-proportional draw (index into `fitness`).
Eigen::Index roulette_pick(const Eigen::Ref<const Eigen::VectorXd>& fitness, Rng& rng);

/// Elimination: ceil(N/2) survivors are the batch's best columns by objective
/// value (ties broken by column index); the remaining floor(N/2) are drawn by
/// roulette wheel over the not-yet-selected columns, without replacement.
Population select_survivors(const OffspringBatch& batch, const SbaParams& params, Rng& rng);

/// One duplication-elimination cycle: propagate, evaluate every offspring
/// column, compute fitness, select survivors. Appends one trace record and
/// updates the incumbent. Mothers themselves are never evaluated. Non-finite
/// objective values get fitness 0 and are excluded from the statistics.
Population step(const Population& pop, const Objective& objective, const SbaParams& params,
                Rng& rng, RunTrace& trace);

/// Full run: iterate `step` until max_iterations is reached or the incumbent
/// drops to target_value. Fully deterministic given params.seed.
RunResult run(const Objective& objective, const Bounds& bounds, const SbaParams& params);

} // namespace sba
