#pragma once

#include "chromazero/poly.hpp"

#include <complex>
#include <vector>

namespace chromazero {

/// Approximate root with a certified enclosure: some true root of the
/// polynomial lies within `radius` of re + i*im.
struct ComplexInterval {
    double re = 0;
    double im = 0;
    double radius = 0;

    std::complex<double> center() const { return {re, im}; }
    double modulus() const { return std::abs(center()); }
};

struct RootResult {
    std::vector<ComplexInterval> roots;  // sorted by modulus, with multiplicity
    bool converged = true;
    int iterations = 0;
    bool used_companion_fallback = false;
};

/// All complex roots of a nonzero integer polynomial. Aberth-Ehrlich
/// simultaneous iteration from a perturbed-circle start; falls back to the
/// companion-matrix eigenvalues if not converged within the iteration cap.
/// Non-convergence after the fallback is reported, never silent.
RootResult complex_roots(const IntPolynomial& p);

}  // namespace chromazero
