#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sba/bounds.hpp"
#include "sba/engine.hpp"

namespace sba::objectives {

/// 10n + sum_i [x_i^2 - 10 cos(2 pi x_i)]; global minimum f(0) = 0.
double rastrigin(const Eigen::Ref<const Eigen::VectorXd>& x);

/// 1 + (1/4000) sum_k x_k^2 - prod_k cos(x_k / sqrt(k)); global minimum
/// f(0) = 0.
double griewank(const Eigen::Ref<const Eigen::VectorXd>& x);

/// sum_i x_i^2 (smoke-test objective).
double sphere(const Eigen::Ref<const Eigen::VectorXd>& x);

/// A registered benchmark: the function, its canonical box, and its known
/// optimum for verification.
struct BenchmarkSpec {
    std::string name;
    Eigen::Index dimension = 0;
    Bounds bounds;
    Eigen::VectorXd optimum_position;
    double optimum_value = 0.0;
    Objective fn;
};

/// Benchmarks addressable by name ("rastrigin", "griewank", "sphere").
/// Throws ConfigError on an unknown name or invalid dimension.
BenchmarkSpec make_benchmark(const std::string& name, Eigen::Index dimension);

std::vector<std::string> benchmark_names();

} // namespace sba::objectives
