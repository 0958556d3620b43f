#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <vector>

namespace chromazero {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer-coefficient univariate polynomial.
/// coefficients[k] is the coefficient of x^k; normalized so the highest
/// stored coefficient is nonzero (the zero polynomial stores nothing).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(int power, BigInt c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return c_; }
    BigInt coefficient(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigInt(0);
    }

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
        return a += b;
    }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
        return a -= b;
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }

    IntPolynomial pow(int k) const;

    BigInt eval_exact(const BigInt& x) const;
    double eval_double(double x) const;

    std::string to_string() const;

private:
    std::vector<BigInt> c_;
};

/// x^n * p(-1/x): coefficient k of p lands at power n-k with sign (-1)^k.
/// Requires degree(p) <= n.
IntPolynomial whitney_transform(const IntPolynomial& p, int n);

/// Horner evaluation in double precision with a running error bound on the
/// result (bound on |computed - exact|, including coefficient rounding).
struct EvalResult {
    std::complex<double> value;
    double error_bound;
};
EvalResult eval_complex(const IntPolynomial& p, std::complex<double> z);

/// JSON array of decimal coefficient strings, lowest power first.
std::string poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const std::string& json);

IntPolynomial falling_factorial(int n);

}  // namespace chromazero
