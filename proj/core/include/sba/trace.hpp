#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace sba {

/// Statistics of one duplication-elimination cycle. min/mean/max cover the
/// offspring evaluated in that iteration (non-finite values excluded); the
/// incumbent is the best offspring ever evaluated in the run.
struct IterationRecord {
    int iteration = 0; ///< 1-based
    double min = std::numeric_limits<double>::quiet_NaN();
    double mean = std::numeric_limits<double>::quiet_NaN();
    double max = std::numeric_limits<double>::quiet_NaN();
    double incumbent_value = std::numeric_limits<double>::infinity();
    Eigen::VectorXd incumbent_position;
    std::int64_t evaluations = 0; ///< cumulative objective evaluations
};

struct RunTrace {
    std::vector<IterationRecord> records;

    bool empty() const { return records.empty(); }
    std::size_t size() const { return records.size(); }
    const IterationRecord& back() const { return records.back(); }
};

/// Outcome of a full run: the incumbent and the per-iteration trace.
struct RunResult {
    Eigen::VectorXd best_position;
    double best_value = std::numeric_limits<double>::infinity();
    RunTrace trace;
};

} // namespace sba
