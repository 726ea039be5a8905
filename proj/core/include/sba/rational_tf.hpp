#pragma once

#include <complex>

#include "sba/polynomial.hpp"

namespace sba::control {

/// A continuous-time SISO transfer function num(s)/den(s), coefficients in
/// descending powers of s. Leading zeros are normalized away on construction;
/// the denominator must not vanish identically.
class RationalTF {
public:
    RationalTF() : num_{0.0}, den_{1.0} {}
    RationalTF(Poly numerator, Poly denominator);

    /// Pure gain.
    static RationalTF constant(double gain) { return RationalTF({gain}, {1.0}); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    bool is_proper() const { return degree(num_) <= degree(den_); }

    /// Frequency response num(jw)/den(jw). Throws NumericError when the
    /// denominator magnitude falls below 1e-300 (pole on the grid point).
    std::complex<double> eval_at(double omega) const;

private:
    Poly num_;
    Poly den_;
};

/// Frequency-response sample of any H(s) at s = j*omega.
inline std::complex<double> tf_eval(const RationalTF& tf, double omega) {
    return tf.eval_at(omega);
}

/// Numerator polynomial of 1 + K*G: den_K*den_G + num_K*num_G. Its roots are
/// the nominal closed-loop poles. Throws NumericError when the result is the
/// zero polynomial.
Poly closed_loop_char_poly(const RationalTF& plant, const RationalTF& controller);

} // namespace sba::control
