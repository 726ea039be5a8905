#include "sba/synthesis.hpp"

#include <cmath>
#include <limits>

namespace sba::control {

ControllerParams ControllerParams::from_vector(const Eigen::Ref<const Eigen::VectorXd>& x) {
    if (x.size() != 6) {
        throw ConfigError("controller parameters: expected 6 coefficients [a0 a1 a2 b0 b1 b2]");
    }
    return {x[0], x[1], x[2], x[3], x[4], x[5]};
}

Eigen::VectorXd ControllerParams::to_vector() const {
    Eigen::VectorXd x(6);
    x << a0, a1, a2, b0, b1, b2;
    return x;
}

void FrequencyGrid::validate() const {
    if (!(min > 0.0)) throw ConfigError("grid.min: must be > 0");
    if (!(max > min)) throw ConfigError("grid.max: must exceed grid.min");
    if (points < 2) throw ConfigError("grid.points: must be >= 2");
}

std::vector<double> FrequencyGrid::omegas() const {
    validate();
    std::vector<double> w(points);
    const double lo = std::log10(min);
    const double hi = std::log10(max);
    for (int i = 0; i < points; ++i) {
        w[i] = std::pow(10.0, lo + (hi - lo) * i / (points - 1));
    }
    return w;
}

SynthesisProblem SynthesisProblem::dc_motor() {
    SynthesisProblem p;
    p.plant = RationalTF({1000.0}, {0.1, 1.0, 0.0});
    p.perf_weight = RationalTF({0.2, 1.0}, {1.0, 0.001});
    p.uncert_weight = RationalTF::constant(0.2);
    p.penalty = 1e5;
    return p;
}

void SynthesisProblem::validate() const {
    if (!plant.is_proper()) throw ConfigError("synthesis.plant: must be proper");
    if (!perf_weight.is_proper()) throw ConfigError("synthesis.wp: must be proper");
    if (!uncert_weight.is_proper()) throw ConfigError("synthesis.wi: must be proper");
    if (!(penalty >= 0.0)) throw ConfigError("synthesis.lambda: must be >= 0");
    grid.validate();
}

PenalizedCost::PenalizedCost(SynthesisProblem problem) : problem_(std::move(problem)) {
    problem_.validate();
    omegas_ = problem_.grid.omegas();
    plant_fr_.reserve(omegas_.size());
    wp_fr_.reserve(omegas_.size());
    wi_fr_.reserve(omegas_.size());
    try {
        for (double w : omegas_) {
            plant_fr_.push_back(problem_.plant.eval_at(w));
            wp_fr_.push_back(problem_.perf_weight.eval_at(w));
            wi_fr_.push_back(problem_.uncert_weight.eval_at(w));
        }
    } catch (const NumericError&) {
        throw ConfigError("synthesis: plant or weight has a pole on the frequency grid");
    }
}

double PenalizedCost::norm(const RationalTF& controller) const {
    return norm(controller, problem_.cost_form);
}

double PenalizedCost::norm(const RationalTF& controller, CostForm form) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < omegas_.size(); ++i) {
        std::complex<double> k_fr;
        try {
            k_fr = controller.eval_at(omegas_[i]);
        } catch (const NumericError&) {
            return kInfiniteCost; // controller pole sits on the grid point
        }
        const std::complex<double> loop = k_fr * plant_fr_[i];
        const std::complex<double> one_plus = 1.0 + loop;
        if (std::abs(one_plus) < 1e-300) {
            return kInfiniteCost; // closed-loop pole on the grid point
        }
        const std::complex<double> sens = 1.0 / one_plus;
        const std::complex<double> comp = loop * sens;
        const double wp_s = std::abs(wp_fr_[i] * sens);
        const double wi_t = std::abs(wi_fr_[i] * comp);
        const double v = (form == CostForm::sum) ? wp_s + wi_t
                                                 : std::sqrt(wp_s * wp_s + wi_t * wi_t);
        if (!(v < kInfiniteCost)) return kInfiniteCost;
        worst = std::max(worst, v);
    }
    return worst;
}

double PenalizedCost::rightmost_pole(const RationalTF& controller) const {
    return rightmost_root_real_part(closed_loop_char_poly(problem_.plant, controller));
}

double PenalizedCost::operator()(const ControllerParams& x) const {
    const RationalTF controller = x.tf();
    double g;
    try {
        g = rightmost_pole(controller);
    } catch (const NumericError&) {
        return kInfiniteCost;
    }
    const double nrm = norm(controller);
    if (nrm >= kInfiniteCost) return kInfiniteCost;
    return nrm + problem_.penalty * bracket(g);
}

double mixed_sensitivity_sum(const SynthesisProblem& problem, const RationalTF& controller) {
    return PenalizedCost(problem).norm(controller, CostForm::sum);
}

double mixed_sensitivity_stacked(const SynthesisProblem& problem, const RationalTF& controller) {
    return PenalizedCost(problem).norm(controller, CostForm::stacked);
}

double penalized_cost(const SynthesisProblem& problem, const ControllerParams& x) {
    return PenalizedCost(problem)(x);
}

SynthesisResult synthesize(const SynthesisProblem& problem, const SbaParams& params) {
    const PenalizedCost cost(problem);
    const Bounds bounds = Bounds::cube(-1e10, 1e10, 6);
    const Objective objective = [&cost](const Eigen::Ref<const Eigen::VectorXd>& x) {
        return cost(ControllerParams::from_vector(x));
    };

    RunResult run_result = run(objective, bounds, params);

    SynthesisResult result;
    result.controller = ControllerParams::from_vector(run_result.best_position);
    result.cost = run_result.best_value;
    const RationalTF k = result.controller.tf();
    result.gamma = cost.norm(k);
    try {
        result.rightmost_pole = cost.rightmost_pole(k);
    } catch (const NumericError&) {
        result.rightmost_pole = std::numeric_limits<double>::quiet_NaN();
    }
    result.trace = std::move(run_result.trace);
    return result;
}

} // namespace sba::control
