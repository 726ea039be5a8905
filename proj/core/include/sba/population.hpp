#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "sba/bounds.hpp"

namespace sba {

/// Current mother plants: an m x N matrix, one column per plant. Mothers are
/// never evaluated themselves; only their offspring are.
struct Population {
    Eigen::MatrixXd positions;
    Bounds bounds;

    Eigen::Index dimension() const { return positions.rows(); }
    Eigen::Index size() const { return positions.cols(); }
};

enum class OffspringKind : std::uint8_t { root, runner };

/// One duplication round: 2 * multiplicity * N offspring columns, roots first,
/// then runners. `values` and `fitness` are filled in by the evaluation phase.
struct OffspringBatch {
    Eigen::MatrixXd positions;
    std::vector<int> origin;          ///< parent mother index per column
    std::vector<OffspringKind> kind;  ///< per column
    Eigen::VectorXd values;           ///< objective value per column
    Eigen::VectorXd fitness;          ///< selection weight per column
    Bounds bounds;

    Eigen::Index size() const { return positions.cols(); }
};

} // namespace sba
