#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>

#include "chromazero/corpus.hpp"
#include "chromazero/roots.hpp"
#include "chromazero/whitney.hpp"

using namespace chromazero;

namespace {

bool has_root_near(const RootResult& r, std::complex<double> z, double tol) {
    for (const ComplexInterval& c : r.roots)
        if (std::abs(c.center() - z) <= tol) return true;
    return false;
}

}  // namespace

TEST_CASE("chromatic roots of K4") {
    const RootResult r = complex_roots(chromatic_polynomial(complete_graph(4)));
    REQUIRE(r.roots.size() == 4);
    CHECK(r.converged);
    for (double expect : {0.0, 1.0, 2.0, 3.0})
        CHECK(has_root_near(r, {expect, 0.0}, 1e-8));
    // sorted by modulus
    for (std::size_t i = 1; i < r.roots.size(); ++i)
        CHECK(r.roots[i - 1].modulus() <= r.roots[i].modulus() + 1e-12);
}

TEST_CASE("chromatic roots of C4") {
    const RootResult r = complex_roots(chromatic_polynomial(cycle_graph(4)));
    REQUIRE(r.roots.size() == 4);
    const double s = std::sqrt(3.0) / 2.0;
    CHECK(has_root_near(r, {0.0, 0.0}, 1e-8));
    CHECK(has_root_near(r, {1.0, 0.0}, 1e-8));
    CHECK(has_root_near(r, {1.5, s}, 1e-8));
    CHECK(has_root_near(r, {1.5, -s}, 1e-8));
}

TEST_CASE("x^2 + 1") {
    const RootResult r = complex_roots(IntPolynomial({BigInt(1), BigInt(0), BigInt(1)}));
    REQUIRE(r.roots.size() == 2);
    CHECK(has_root_near(r, {0.0, 1.0}, 1e-10));
    CHECK(has_root_near(r, {0.0, -1.0}, 1e-10));
}

TEST_CASE("degenerate inputs") {
    CHECK(complex_roots(IntPolynomial::constant(7)).roots.empty());
    const RootResult r = complex_roots(IntPolynomial::monomial(3, 2));
    REQUIRE(r.roots.size() == 3);
    for (const auto& c : r.roots) CHECK(c.modulus() == 0.0);
    CHECK_THROWS(complex_roots(IntPolynomial()));
}

TEST_CASE("root sum and residuals on a corpus") {
    std::mt19937 rng(42);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_graph(rng, 3 + t % 6, 0.5);
        const IntPolynomial chi = chromatic_polynomial(g);
        const RootResult r = complex_roots(chi);
        REQUIRE(static_cast<int>(r.roots.size()) == chi.degree());
        std::complex<double> sum = 0;
        for (const auto& c : r.roots) {
            sum += c.center();
            CHECK(c.radius >= 0);
            CHECK(std::isfinite(c.radius));
        }
        const double expect =
            -chi.coefficient(chi.degree() - 1).convert_to<double>() /
            chi.coefficient(chi.degree()).convert_to<double>();
        const double scale = std::max(1.0, std::abs(expect));
        CHECK(std::abs(sum - std::complex<double>(expect, 0)) <= 1e-8 * scale);
        // Each certified radius is consistent with the residual there.
        for (const auto& c : r.roots) {
            const auto ev = eval_complex(chi, c.center());
            if (std::abs(ev.value) > ev.error_bound)
                CHECK(c.radius > 0);
        }
    }
}

TEST_CASE("huge coefficients prescale") {
    // (x - 3)^2 * 2^1000 still yields the double root at 3.
    IntPolynomial p = IntPolynomial({BigInt(9), BigInt(-6), BigInt(1)});
    p = p * IntPolynomial::constant(BigInt(1) << 1000);
    const RootResult r = complex_roots(p);
    REQUIRE(r.roots.size() == 2);
    for (const auto& c : r.roots) CHECK(std::abs(c.center() - std::complex<double>(3, 0)) < 1e-5);
}
