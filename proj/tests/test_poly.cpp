#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chromazero/poly.hpp"

using namespace chromazero;

namespace {
IntPolynomial make(std::vector<long long> c) {
    std::vector<BigInt> v(c.begin(), c.end());
    return IntPolynomial(std::move(v));
}
}  // namespace

TEST_CASE("ring arithmetic") {
    const IntPolynomial x = IntPolynomial::monomial(1);
    const IntPolynomial xm1 = make({-1, 1});
    CHECK(x * xm1 == make({0, -1, 1}));
    const IntPolynomial p = make({1, 3, 2});
    CHECK(p + IntPolynomial() == p);
    CHECK(p - p == IntPolynomial());
    CHECK(make({1, 1}).pow(3) == make({1, 3, 3, 1}));
    CHECK(IntPolynomial().degree() == -1);
}

TEST_CASE("normalization") {
    CHECK(IntPolynomial({BigInt(1), BigInt(0), BigInt(0)}).degree() == 0);
    CHECK(make({0, 1}) - make({0, 1}) == IntPolynomial());
}

TEST_CASE("whitney transform") {
    CHECK(whitney_transform(make({1, 3, 2}), 3) == make({0, 2, -3, 1}));
    CHECK(whitney_transform(make({1}), 2) == make({0, 0, 1}));
    // the transform is an involution up to the sign (-1)^n
    const IntPolynomial p = make({1, 3, 2});
    CHECK(whitney_transform(whitney_transform(p, 4), 4) == p);
    CHECK(whitney_transform(whitney_transform(p, 3), 3) ==
          IntPolynomial() - p);
    CHECK_THROWS(whitney_transform(make({1, 1, 1}), 1));
}

TEST_CASE("evaluation") {
    const IntPolynomial chi_k3 = make({0, 2, -3, 1});
    CHECK(chi_k3.eval_exact(2) == 0);
    CHECK(chi_k3.eval_exact(3) == 6);
    CHECK(chi_k3.eval_double(0.0) == 0.0);
    const auto r = eval_complex(chi_k3, {3.0, 0.0});
    CHECK(std::abs(r.value - std::complex<double>(6, 0)) <= r.error_bound + 1e-12);
    CHECK(eval_complex(make({5, 1}), {0, 0}).value == std::complex<double>(5, 0));
}

TEST_CASE("json round trip") {
    const IntPolynomial p = make({0, 2, -3, 1});
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_to_json(make({-1, 2})) == "[\"-1\",\"2\"]");
    CHECK(poly_from_json("[]") == IntPolynomial());
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(3) == make({0, 2, -3, 1}));
    CHECK(falling_factorial(0) == make({1}));
    CHECK(falling_factorial(4).eval_exact(4) == 24);
}

TEST_CASE("big coefficients") {
    // (x + 2^400)^2 exercises values beyond double range.
    BigInt big = BigInt(1) << 400;
    const IntPolynomial p = IntPolynomial({big, BigInt(1)});
    const IntPolynomial q = p * p;
    CHECK(q.coefficient(0) == big * big);
    CHECK(poly_from_json(poly_to_json(q)) == q);
}
