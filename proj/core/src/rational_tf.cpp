#include "sba/rational_tf.hpp"

#include <algorithm>
#include <cmath>

namespace sba::control {

RationalTF::RationalTF(Poly numerator, Poly denominator)
    : num_(trim(std::move(numerator))), den_(trim(std::move(denominator))) {
    if (den_.size() == 1 && den_.front() == 0.0) {
        throw ConfigError("transfer function: denominator must be nonzero");
    }
}

std::complex<double> RationalTF::eval_at(double omega) const {
    const std::complex<double> s{0.0, omega};
    const std::complex<double> den = horner(den_, s);
    if (std::abs(den) < 1e-300) {
        throw NumericError("transfer function: pole on the evaluation grid");
    }
    return horner(num_, s) / den;
}

Poly closed_loop_char_poly(const RationalTF& plant, const RationalTF& controller) {
    Poly char_poly = trim(add(multiply(controller.denominator(), plant.denominator()),
                              multiply(controller.numerator(), plant.numerator())));
    if (char_poly.size() == 1 && char_poly.front() == 0.0) {
        throw NumericError("closed loop: characteristic polynomial is identically zero");
    }
    return char_poly;
}

} // namespace sba::control
