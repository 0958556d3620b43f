#include "chromazero/poly.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

namespace chromazero {

namespace {
void normalize(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    normalize(c_);
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    return IntPolynomial({std::move(c)});
}

IntPolynomial IntPolynomial::monomial(int power, BigInt c) {
    std::vector<BigInt> v(power + 1, BigInt(0));
    v[power] = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), BigInt(0));
    for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] += other.c_[k];
    normalize(c_);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), BigInt(0));
    for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] -= other.c_[k];
    normalize(c_);
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(int k) const {
    IntPolynomial result = constant(1);
    for (int i = 0; i < k; ++i) result = result * *this;
    return result;
}

BigInt IntPolynomial::eval_exact(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double IntPolynomial::eval_double(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + it->convert_to<double>();
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        if (c_[k] == 0) continue;
        if (!out.empty()) out += c_[k] > 0 ? " + " : " - ";
        else if (c_[k] < 0) out += "-";
        const BigInt mag = abs(c_[k]);
        if (k == 0 || mag != 1) out += mag.str();
        if (k > 0) {
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPolynomial whitney_transform(const IntPolynomial& p, int n) {
    if (p.degree() > n)
        throw std::invalid_argument("whitney_transform: degree exceeds n");
    std::vector<BigInt> out(n + 1, BigInt(0));
    for (int k = 0; k <= p.degree(); ++k) {
        BigInt c = p.coefficient(k);
        if (k % 2) c = -c;
        out[n - k] = std::move(c);
    }
    return IntPolynomial(std::move(out));
}

EvalResult eval_complex(const IntPolynomial& p, std::complex<double> z) {
    // Horner with the standard running error bound: for complex Horner the
    // per-step relative error is a small multiple of machine epsilon; we
    // track mu_k = bound on |computed_k - exact_k| after each step.
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double gamma = 4.0 * eps;  // covers complex mul + add rounding
    std::complex<double> acc = 0;
    double mu = 0;
    const double az = std::abs(z);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        const double cd = it->convert_to<double>();
        // coefficient conversion error (exact if the integer fits in 53 bits)
        const double conv_err = std::abs(cd) * eps;
        acc = acc * z + cd;
        mu = mu * az + (std::abs(acc) + std::abs(cd)) * gamma + conv_err;
    }
    return {acc, mu};
}

std::string poly_to_json(const IntPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.str());
    return arr.dump();
}

IntPolynomial poly_from_json(const std::string& json) {
    const auto arr = nlohmann::json::parse(json);
    if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<BigInt> coeffs;
    for (const auto& item : arr) coeffs.emplace_back(item.get<std::string>());
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial falling_factorial(int n) {
    IntPolynomial result = IntPolynomial::constant(1);
    for (int k = 0; k < n; ++k)
        result = result * IntPolynomial({BigInt(-k), BigInt(1)});
    return result;
}

}  // namespace chromazero
