#pragma once

#include <complex>
#include <vector>

#include "sba/errors.hpp"

namespace sba::control {

/// Real polynomial coefficients in descending powers of s.
using Poly = std::vector<double>;

/// Drops leading zero coefficients; an all-zero input collapses to {0}.
Poly trim(Poly p);

/// Degree after trimming; the zero polynomial has degree 0.
int degree(const Poly& p);

/// Polynomial product (convolution of coefficient vectors).
Poly multiply(const Poly& a, const Poly& b);

/// Polynomial sum, aligned at the constant term.
Poly add(const Poly& a, const Poly& b);

/// Horner evaluation at a complex point.
std::complex<double> horner(const Poly& p, std::complex<double> s);

/// All complex roots via the balanced companion matrix. Coefficients are
/// normalized to monic form and the variable is rescaled so root magnitudes
/// land near unity before the eigenvalue solve. Throws ConfigError on a
/// polynomial of degree < 1 and NumericError when the eigensolver fails.
std::vector<std::complex<double>> roots(const Poly& p);

/// Largest real part over all roots.
double rightmost_root_real_part(const Poly& p);

} // namespace sba::control
