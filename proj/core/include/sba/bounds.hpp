#pragma once

#include <Eigen/Dense>

#include "sba/errors.hpp"

namespace sba {

/// Box constraints of the search domain: lower[k] < upper[k] for every
/// dimension k.
struct Bounds {
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;

    Bounds() = default;
    Bounds(Eigen::VectorXd lo, Eigen::VectorXd hi)
        : lower(std::move(lo)), upper(std::move(hi)) {}

    /// Same [lo, hi] interval in every dimension.
    static Bounds cube(double lo, double hi, Eigen::Index dim) {
        return {Eigen::VectorXd::Constant(dim, lo), Eigen::VectorXd::Constant(dim, hi)};
    }

    Eigen::Index dimension() const { return lower.size(); }

    void validate() const {
        if (lower.size() == 0) {
            throw ConfigError("bounds: dimension must be >= 1");
        }
        if (lower.size() != upper.size()) {
            throw ConfigError("bounds: lower and upper must have equal length");
        }
        for (Eigen::Index k = 0; k < lower.size(); ++k) {
            if (!(lower[k] < upper[k])) {
                throw ConfigError("bounds: lower must be strictly below upper in dimension " +
                                  std::to_string(k));
            }
        }
    }

    double clamp(double v, Eigen::Index k) const {
        if (v < lower[k]) return lower[k];
        if (v > upper[k]) return upper[k];
        return v;
    }

    bool contains(const Eigen::Ref<const Eigen::VectorXd>& x) const {
        for (Eigen::Index k = 0; k < lower.size(); ++k) {
            if (x[k] < lower[k] || x[k] > upper[k]) return false;
        }
        return true;
    }
};

} // namespace sba
