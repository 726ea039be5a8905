#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "sba/errors.hpp"

namespace sba {

enum class FitnessMode {
    abc,     ///< inverse-cost fitness 1/(a+f), f>0; a+|f| otherwise
    ranking, ///< linear rank fitness with selection pressure SP
};

/// Search radius of an offspring move: either one scalar broadcast across all
/// dimensions, or one entry per dimension (element-wise scaling when variable
/// scales differ).
class SearchRadius {
public:
    SearchRadius() : values_(Eigen::VectorXd::Constant(1, 1.0)) {}
    SearchRadius(double scalar) : values_(Eigen::VectorXd::Constant(1, scalar)) {}
    explicit SearchRadius(Eigen::VectorXd per_dimension) : values_(std::move(per_dimension)) {}

    bool is_scalar() const { return values_.size() == 1; }
    Eigen::Index size() const { return values_.size(); }

    /// Radius applied in dimension k (broadcasts when scalar).
    double operator[](Eigen::Index k) const { return is_scalar() ? values_[0] : values_[k]; }

    double max() const { return values_.maxCoeff(); }
    const Eigen::VectorXd& values() const { return values_; }

    void validate(Eigen::Index dim, const std::string& field) const {
        if (!is_scalar() && values_.size() != dim) {
            throw ConfigError(field + ": vector radius must have one entry per dimension");
        }
        for (Eigen::Index k = 0; k < values_.size(); ++k) {
            if (!(values_[k] > 0.0)) {
                throw ConfigError(field + ": every component must be > 0");
            }
        }
    }

private:
    Eigen::VectorXd values_; // size 1 means scalar broadcast
};

/// All tunables of a single run.
struct SbaParams {
    int n_mothers = 20;               ///< N: mother plants kept per iteration
    SearchRadius d_root{0.1};         ///< local-move radius
    SearchRadius d_runner{1.0};       ///< global-move radius
    double fitness_shift = 0.0;       ///< a: roulette selectivity shift
    FitnessMode fitness_mode = FitnessMode::abc;
    double selection_pressure = 1.5;  ///< SP in [1,2], ranking mode only
    int multiplicity = 1;             ///< offspring pairs generated per mother
    int max_iterations = 100;
    std::optional<double> target_value; ///< stop once incumbent <= target
    std::uint64_t seed = 0;

    void validate(Eigen::Index dim) const {
        if (n_mothers < 1) throw ConfigError("sba.n_mothers: must be >= 1");
        d_root.validate(dim, "sba.d_root");
        d_runner.validate(dim, "sba.d_runner");
        if (!(fitness_shift >= 0.0)) throw ConfigError("sba.fitness_shift: must be >= 0");
        if (selection_pressure < 1.0 || selection_pressure > 2.0) {
            throw ConfigError("sba.selection_pressure: must lie in [1, 2]");
        }
        if (multiplicity < 1) throw ConfigError("sba.multiplicity: must be >= 1");
        if (max_iterations < 1) {
            throw ConfigError("sba.max_iterations: no iterations executed");
        }
    }
};

} // namespace sba
