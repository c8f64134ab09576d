#pragma once

#include <complex>
#include <vector>

namespace triesmooth {

/// Dense real polynomial, coefficients in ascending powers.
struct Polynomial {
    std::vector<double> coeffs;

    double eval(double z) const;
    int degree() const;  // ignores trailing coefficients below 1e-14
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, double factor);

/// All complex roots via companion-matrix eigenvalues.
std::vector<std::complex<double>> polynomial_roots(const Polynomial& p);

}  // namespace triesmooth
