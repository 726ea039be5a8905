#include "sba/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace sba::control {

namespace {

// Parlett-Reinsch balancing: similarity scaling by powers of 2 until row and
// column norms agree. Leaves the eigenvalues untouched and makes companion
// matrices of wildly scaled polynomials tractable for the QR iteration.
void balance(Eigen::MatrixXd& a) {
    const double radix = 2.0;
    const double radix_sq = radix * radix;
    const Eigen::Index n = a.rows();
    bool settled = false;
    while (!settled) {
        settled = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double r = 0.0;
            double c = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            const double s = c + r;
            double f = 1.0;
            double g = r / radix;
            while (c < g) {
                f *= radix;
                c *= radix_sq;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix_sq;
            }
            if ((c + r) / f < 0.95 * s) {
                settled = false;
                const double inv = 1.0 / f;
                a.row(i) *= inv;
                a.col(i) *= f;
            }
        }
    }
}

} // namespace

Poly trim(Poly p) {
    auto first = std::find_if(p.begin(), p.end(), [](double c) { return c != 0.0; });
    p.erase(p.begin(), first);
    if (p.empty()) p.push_back(0.0);
    return p;
}

int degree(const Poly& p) {
    const Poly t = trim(p);
    return static_cast<int>(t.size()) - 1;
}

Poly multiply(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {0.0};
    Poly out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Poly add(const Poly& a, const Poly& b) {
    const std::size_t n = std::max(a.size(), b.size());
    Poly out(n, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) out[n - a.size() + i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[n - b.size() + i] += b[i];
    return out;
}

std::complex<double> horner(const Poly& p, std::complex<double> s) {
    std::complex<double> acc{0.0, 0.0};
    for (double c : p) acc = acc * s + c;
    return acc;
}

std::vector<std::complex<double>> roots(const Poly& p) {
    Poly q = trim(p);
    const int deg = static_cast<int>(q.size()) - 1;
    if (deg < 1) {
        throw ConfigError("polynomial roots: degree must be >= 1");
    }

    // Monic form.
    const double lead = q.front();
    std::vector<double> monic(deg);
    for (int i = 0; i < deg; ++i) monic[i] = q[i + 1] / lead;

    // Peel off roots at the origin so the scaling below stays meaningful.
    int zeros_at_origin = 0;
    while (zeros_at_origin < deg && monic[deg - 1 - zeros_at_origin] == 0.0) {
        ++zeros_at_origin;
    }
    const int reduced = deg - zeros_at_origin;
    std::vector<std::complex<double>> out;
    out.reserve(deg);
    for (int i = 0; i < zeros_at_origin; ++i) out.emplace_back(0.0, 0.0);
    if (reduced == 0) return out;

    // Rescale the variable so the root radius bound 2 max_k |c_k|^(1/k)
    // becomes ~1; keeps companion entries of widely scaled problems sane.
    double scale = 0.0;
    for (int k = 1; k <= reduced; ++k) {
        scale = std::max(scale, std::pow(std::abs(monic[k - 1]), 1.0 / k));
    }
    scale *= 2.0;
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw NumericError("polynomial roots: coefficient scaling failed");
    }

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(reduced, reduced);
    double power = scale;
    for (int k = 1; k <= reduced; ++k) {
        companion(0, k - 1) = -monic[k - 1] / power;
        power *= scale;
    }
    for (int i = 1; i < reduced; ++i) companion(i, i - 1) = 1.0;

    balance(companion);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw NumericError("polynomial roots: eigenvalue iteration did not converge");
    }
    for (int i = 0; i < reduced; ++i) {
        out.push_back(solver.eigenvalues()[i] * scale);
    }
    return out;
}

double rightmost_root_real_part(const Poly& p) {
    double rightmost = -std::numeric_limits<double>::infinity();
    for (const auto& r : roots(p)) rightmost = std::max(rightmost, r.real());
    return rightmost;
}

} // namespace sba::control
