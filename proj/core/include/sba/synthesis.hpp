#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "sba/engine.hpp"
#include "sba/rational_tf.hpp"
#include "sba/trace.hpp"

namespace sba::control {

/// Sentinel cost for any numeric failure inside the objective (root finder
/// non-convergence, pole on the grid). Huge but finite so the fitness map and
/// roulette selection keep operating.
inline constexpr double kInfiniteCost = 1e30;

enum class CostForm {
    sum,     ///< max over the grid of |wp S| + |wi T|
    stacked, ///< max over the grid of sqrt(|wp S|^2 + |wi T|^2)
};

/// The six free coefficients of the fixed-structure controller
/// K(s) = (b2 s^2 + b1 s + b0) / (s^3 + a2 s^2 + a1 s + a0).
struct ControllerParams {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0;
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;

    /// Decision-vector order: [a0 a1 a2 b0 b1 b2].
    static ControllerParams from_vector(const Eigen::Ref<const Eigen::VectorXd>& x);
    Eigen::VectorXd to_vector() const;

    RationalTF tf() const {
        return RationalTF({b2, b1, b0}, {1.0, a2, a1, a0});
    }
};

/// Logarithmically spaced frequency grid in rad/s, endpoints included.
struct FrequencyGrid {
    double min = 1e-4;
    double max = 1e6;
    int points = 2000;

    void validate() const;
    std::vector<double> omegas() const;
};

/// Everything the penalized objective needs: plant, weights, the penalty
/// factor, and how the sup over frequency is approximated.
struct SynthesisProblem {
    RationalTF plant;                                 ///< G
    RationalTF perf_weight;                           ///< wp
    RationalTF uncert_weight = RationalTF::constant(0.2); ///< wi
    double penalty = 1e5;                             ///< lambda
    FrequencyGrid grid;
    CostForm cost_form = CostForm::sum;

    /// The DC-motor case study: G = 1000/(0.1 s^2 + s), wp = (0.2s+1)/(s+0.001),
    /// wi = 0.2, lambda = 1e5, default grid, sum cost form.
    static SynthesisProblem dc_motor();

    void validate() const;
};

/// g if g >= 0, else 0 (exterior-penalty hinge).
inline double bracket(double g) { return g >= 0.0 ? g : 0.0; }

/// Penalized mixed-sensitivity objective F(x) = ||.|| + lambda * <g(x)> with
/// the plant and weight frequency responses precomputed once. Safe to invoke
/// concurrently from many threads.
class PenalizedCost {
public:
    explicit PenalizedCost(SynthesisProblem problem);

    /// F(x). Numeric failures map to kInfiniteCost, never an exception.
    double operator()(const ControllerParams& x) const;

    /// Mixed-sensitivity norm only (the problem's cost form, or an explicit
    /// one). Returns kInfiniteCost when the loop has a pole on the grid.
    double norm(const RationalTF& controller) const;
    double norm(const RationalTF& controller, CostForm form) const;

    /// Real part of the rightmost nominal closed-loop pole. Throws
    /// NumericError when root finding fails.
    double rightmost_pole(const RationalTF& controller) const;

    const SynthesisProblem& problem() const { return problem_; }
    const std::vector<double>& omegas() const { return omegas_; }

private:
    SynthesisProblem problem_;
    std::vector<double> omegas_;
    std::vector<std::complex<double>> plant_fr_;
    std::vector<std::complex<double>> wp_fr_;
    std::vector<std::complex<double>> wi_fr_;
};

/// Worst-case weighted sensitivity sum over the problem's grid (the cost the
/// synthesis minimizes when stability holds).
double mixed_sensitivity_sum(const SynthesisProblem& problem, const RationalTF& controller);

/// Stacked variant: always within a factor of sqrt(2) below the sum form.
double mixed_sensitivity_stacked(const SynthesisProblem& problem, const RationalTF& controller);

/// One-shot F(x) without evaluator reuse.
double penalized_cost(const SynthesisProblem& problem, const ControllerParams& x);

struct SynthesisResult {
    ControllerParams controller;
    double cost = kInfiniteCost;           ///< final F (includes any penalty)
    double gamma = kInfiniteCost;          ///< raw mixed-sensitivity norm
    double rightmost_pole = 0.0;           ///< g at the returned controller
    RunTrace trace;
};

/// Minimize the penalized cost over the six controller coefficients inside
/// [-1e10, 1e10]^6 with a single seeded run.
SynthesisResult synthesize(const SynthesisProblem& problem, const SbaParams& params);

} // namespace sba::control
