#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracschro/errors.hpp"
#include "fracschro/scalar.hpp"
#include "oracles.hpp"

using namespace fracschro;
using namespace std::complex_literals;

TEST_CASE("default test family") {
    const auto family = default_test_family();
    REQUIRE(family.size() == 9);
    CHECK(family[4](0.0) == 1.0);
    CHECK(std::abs(family[0](-2.0) - 1.0) < 1e-15);
    CHECK_THROWS_AS((ScalarProblem{FractionalOrder(0.5), 1.0, {}}.validate()), DomainError);
    CHECK_THROWS_AS((ScalarProblem{FractionalOrder(0.5), 1.0, {TestFunction{}}}.validate()),
                    DomainError);
}

TEST_CASE("exponentials at the problem frequency solve the weak equation") {
    const ScalarProblem prob{FractionalOrder(0.5), 1.0, default_test_family()};
    CHECK(scalar_weak_residual(prob, {1.0, 1.0}) <= 1e-4);
    CHECK(scalar_weak_residual(prob, {0.0, 3.0}) == 0.0);
}

TEST_CASE("a constant is not a solution") {
    const ScalarProblem prob{FractionalOrder(0.5), 1.0, {TestFunction::gaussian(0.0, 1.0)}};
    // D^a 1 = 0 while the right side is i^a sqrt(pi).
    const double rhs = std::sqrt(std::numbers::pi);
    const double expected = rhs / (1.0 + rhs);
    const double residual = scalar_weak_residual(prob, {1.0, 0.0});
    CHECK(residual == doctest::Approx(expected).epsilon(1e-8));
    CHECK(residual > 0.1);
}

TEST_CASE("residual under rescaling of u") {
    const ScalarProblem prob{FractionalOrder(0.25), 1.0, default_test_family()};
    for (Complex c : {Complex(2.0), 1.0i, Complex(-1.0)}) {
        CHECK(scalar_weak_residual(prob, {c, 1.0}) <= 1e-4);
    }
    // On non-solutions the 1 + |.| normalisation is invariant for |c| = 1 only.
    const double base = scalar_weak_residual(prob, {1.0, 2.0});
    for (Complex c : {1.0i, Complex(-1.0)}) {
        CHECK(scalar_weak_residual(prob, {c, 2.0}) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("frequency selectivity") {
    const ScalarProblem prob{FractionalOrder(0.5), 1.0, default_test_family()};
    for (double a : {0.5, 2.0}) {
        CHECK(scalar_weak_residual(prob, {1.0, a}) > 0.05);
    }
}

TEST_CASE("caputo_compare") {
    const std::vector<double> grid{0.0, 0.25, 0.5, 1.0, 1.5, 2.0};
    for (const auto& row : caputo_compare(0.3, 0.0, grid)) {
        CHECK(row.modulus_weyl == 1.0);
        CHECK(row.modulus_caputo == 1.0);
    }
    for (const auto& row : caputo_compare(1.0, 1.0, grid)) {
        CHECK(std::abs(row.modulus_weyl - 1.0) < 1e-15);
        CHECK(std::abs(row.modulus_caputo - 1.0) < 1e-13);
    }

    const auto rows = caputo_compare(0.5, 1.0, grid);
    double deviation = 0.0;
    for (const auto& row : rows) {
        CHECK(std::abs(row.modulus_weyl - 1.0) <= 1e-15);
        // E_{1/2}(z) = exp(z^2) erfc(-z) by an independent quadrature
        const Complex z = std::exp(0.25i * std::numbers::pi) * std::sqrt(row.t);
        CHECK(row.modulus_caputo == doctest::Approx(std::abs(oracle::mittag_leffler_half(z))).epsilon(1e-12));
        deviation = std::max(deviation, std::abs(row.modulus_caputo - 1.0));
    }
    CHECK(deviation > 1e-3);
    // Regression value at t = 1: |E_{1/2}(e^{i pi/4})|.
    CHECK(rows[3].modulus_caputo == doctest::Approx(2.0255412900695249).epsilon(1e-13));

    CHECK_THROWS_AS(caputo_compare(0.5, 4.0, {2.0}), DomainError);
    CHECK_THROWS_AS(caputo_compare(0.5, -1.0, {1.0}), DomainError);
    CHECK_THROWS_AS(caputo_compare(0.5, 1.0, {2.5}), DomainError);
    CHECK_THROWS_AS(caputo_compare(0.0, 1.0, {1.0}), DomainError);
}
