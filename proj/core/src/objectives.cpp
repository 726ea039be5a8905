#include "sba/objectives.hpp"

#include <cmath>
#include <numbers>

namespace sba::objectives {

double rastrigin(const Eigen::Ref<const Eigen::VectorXd>& x) {
    const double two_pi = 2.0 * std::numbers::pi;
    double acc = 10.0 * static_cast<double>(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        acc += x[i] * x[i] - 10.0 * std::cos(two_pi * x[i]);
    }
    return acc;
}

double griewank(const Eigen::Ref<const Eigen::VectorXd>& x) {
    double quad = 0.0;
    double prod = 1.0;
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        quad += x[k] * x[k];
        prod *= std::cos(x[k] / std::sqrt(static_cast<double>(k + 1)));
    }
    return 1.0 + quad / 4000.0 - prod;
}

double sphere(const Eigen::Ref<const Eigen::VectorXd>& x) {
    return x.squaredNorm();
}

BenchmarkSpec make_benchmark(const std::string& name, Eigen::Index dimension) {
    if (dimension < 1) {
        throw ConfigError("objective.dimension: must be >= 1");
    }
    BenchmarkSpec spec;
    spec.name = name;
    spec.dimension = dimension;
    spec.optimum_position = Eigen::VectorXd::Zero(dimension);
    spec.optimum_value = 0.0;
    if (name == "rastrigin") {
        spec.bounds = Bounds::cube(-5.12, 5.12, dimension);
        spec.fn = [](const Eigen::Ref<const Eigen::VectorXd>& x) { return rastrigin(x); };
    } else if (name == "griewank") {
        spec.bounds = Bounds::cube(-600.0, 600.0, dimension);
        spec.fn = [](const Eigen::Ref<const Eigen::VectorXd>& x) { return griewank(x); };
    } else if (name == "sphere") {
        spec.bounds = Bounds::cube(-100.0, 100.0, dimension);
        spec.fn = [](const Eigen::Ref<const Eigen::VectorXd>& x) { return sphere(x); };
    } else {
        throw ConfigError("objective.name: unknown objective \"" + name + "\"");
    }
    return spec;
}

std::vector<std::string> benchmark_names() {
    return {"rastrigin", "griewank", "sphere"};
}

} // namespace sba::objectives
