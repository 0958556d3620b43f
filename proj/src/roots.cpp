#include "chromazero/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chromazero {

namespace {

using cplx = std::complex<double>;

IntPolynomial derivative(const IntPolynomial& p) {
    std::vector<BigInt> d;
    for (int k = 1; k <= p.degree(); ++k) d.push_back(p.coefficient(k) * k);
    return IntPolynomial(std::move(d));
}

/// Coefficients as doubles, pre-scaled by a power of two when they exceed
/// the double range. The scaling only affects the iteration, not the final
/// residual certification, which always evaluates the exact polynomial.
std::vector<double> to_doubles(const std::vector<BigInt>& c) {
    std::size_t maxbits = 0;
    for (const auto& x : c) {
        const std::size_t bits = boost::multiprecision::msb(abs(x) + 1) + 1;
        maxbits = std::max(maxbits, bits);
    }
    int shift = 0;
    if (maxbits > 900) shift = static_cast<int>(maxbits) - 500;
    std::vector<double> out;
    out.reserve(c.size());
    for (const auto& x : c)
        out.push_back(shift > 0 ? BigInt(x >> shift).convert_to<double>()
                                : x.convert_to<double>());
    return out;
}

cplx horner(const std::vector<double>& c, cplx z) {
    cplx acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx horner_derivative(const std::vector<double>& c, cplx z) {
    cplx acc = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k)
        acc = acc * z + static_cast<double>(k) * c[k];
    return acc;
}

std::vector<cplx> companion_eigenvalues(const std::vector<double>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) m(i, d - 1) = -c[i] / c[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    std::vector<cplx> out(d);
    for (int i = 0; i < d; ++i) out[i] = solver.eigenvalues()[i];
    return out;
}

bool aberth_sweep(const std::vector<double>& c, std::vector<cplx>& z, int max_iter,
                  int* iterations) {
    const int d = static_cast<int>(z.size());
    for (int it = 0; it < max_iter; ++it) {
        ++*iterations;
        double max_step = 0;
        for (int i = 0; i < d; ++i) {
            const cplx pv = horner(c, z[i]);
            const cplx dv = horner_derivative(c, z[i]);
            if (pv == cplx(0)) continue;
            cplx w;
            if (dv == cplx(0)) {
                w = cplx(1e-8, 1e-8);  // nudge off a critical point
            } else {
                w = pv / dv;
            }
            cplx s = 0;
            for (int j = 0; j < d; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            const cplx denom = 1.0 - w * s;
            const cplx step = denom == cplx(0) ? w : w / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (max_step < 1e-15) return true;
    }
    return false;
}

}  // namespace

RootResult complex_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("complex_roots: zero polynomial");

    // Split off exact roots at the origin.
    int zero_mult = 0;
    while (p.coefficient(zero_mult) == 0) ++zero_mult;
    std::vector<BigInt> reduced(p.coefficients().begin() + zero_mult,
                                p.coefficients().end());

    RootResult result;
    for (int i = 0; i < zero_mult; ++i) result.roots.push_back({0, 0, 0});

    // Deflate small integer roots exactly; repeated roots at the integers
    // (ubiquitous in chromatic polynomials) are ill-conditioned for the
    // iteration but trivial to divide out.
    for (int r = -100; r <= 100; ++r) {
        if (r == 0) continue;
        while (reduced.size() > 1 && IntPolynomial{std::vector<BigInt>(reduced)}
                                             .eval_exact(r) == 0) {
            std::vector<BigInt> quot(reduced.size() - 1);
            BigInt carry = 0;
            for (int k = static_cast<int>(reduced.size()) - 1; k >= 1; --k) {
                carry = reduced[k] + carry * r;
                quot[k - 1] = carry;
            }
            reduced = std::move(quot);
            result.roots.push_back({static_cast<double>(r), 0, 0});
        }
    }

    const IntPolynomial q{std::vector<BigInt>(reduced)};
    const IntPolynomial qd = derivative(q);
    const int d = q.degree();
    if (d == 0) {
        std::sort(result.roots.begin(), result.roots.end(),
                  [](const ComplexInterval& a, const ComplexInterval& b) {
                      return a.modulus() < b.modulus();
                  });
        return result;
    }

    const std::vector<double> c = to_doubles(q.coefficients());

    // Perturbed-circle start inside the Cauchy bound.
    double cauchy = 0;
    for (int k = 0; k < d; ++k) cauchy = std::max(cauchy, std::abs(c[k] / c[d]));
    const double r0 = 0.5 * (1.0 + cauchy);
    std::vector<cplx> z(d);
    for (int k = 0; k < d; ++k) {
        const double theta =
            2.0 * std::numbers::pi * k / d + 0.4 + 0.01 * k;
        z[k] = r0 * cplx(std::cos(theta), std::sin(theta));
    }

    double coeff_scale = 0;
    for (const auto& x : q.coefficients())
        coeff_scale = std::max(coeff_scale, std::abs(BigInt(abs(x)).convert_to<double>()));
    const double residual_tol = 1e-10 * coeff_scale;

    auto max_residual = [&] {
        double worst = 0;
        for (const cplx& zi : z)
            worst = std::max(worst, std::abs(eval_complex(q, zi).value));
        return worst;
    };

    bool ok = aberth_sweep(c, z, 500, &result.iterations);
    if (!ok && max_residual() > residual_tol) {
        result.used_companion_fallback = true;
        z = companion_eigenvalues(c);
        aberth_sweep(c, z, 100, &result.iterations);
    }
    result.converged = max_residual() <= residual_tol;

    for (const cplx& zi : z) {
        const EvalResult pv = eval_complex(q, zi);
        const EvalResult dv = eval_complex(qd, zi);
        const double pmag = std::abs(pv.value) + pv.error_bound;
        const double lead = std::abs(c[d]);
        // Some true root lies within each of these radii of zi.
        double radius = std::pow(pmag / lead, 1.0 / d);
        const double dmag = std::abs(dv.value) - dv.error_bound;
        if (dmag > 0) radius = std::min(radius, d * pmag / dmag);
        result.roots.push_back({zi.real(), zi.imag(), radius});
    }
    std::sort(result.roots.begin(), result.roots.end(),
              [](const ComplexInterval& a, const ComplexInterval& b) {
                  return a.modulus() < b.modulus();
              });
    return result;
}

}  // namespace chromazero
