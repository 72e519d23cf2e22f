#include "fracschro/scalar.hpp"

#include <cmath>
#include <numbers>

#include "fracschro/errors.hpp"

namespace fracschro {

void ScalarProblem::validate() const {
    if (test_family.empty()) {
        throw DomainError("scalar problem needs at least one test function");
    }
    for (const auto& phi : test_family) {
        if (phi.is_zero()) {
            throw DomainError("test functions must be nonzero");
        }
    }
}

std::vector<TestFunction> default_test_family() {
    std::vector<TestFunction> family;
    for (double c : {-2.0, 0.0, 2.0}) {
        for (double w : {0.5, 1.0, 2.0}) {
            family.push_back(TestFunction::gaussian(c, w));
        }
    }
    return family;
}

double scalar_weak_residual(const ScalarProblem& prob, const ExponentialSignal& u,
                            const QuadratureSpec& quad) {
    prob.validate();
    quad.validate();
    const Complex symbol = complex_power(prob.alpha, prob.a);
    double worst = 0.0;
    for (const auto& phi : prob.test_family) {
        const Complex rhs = symbol * pairing(u, phi);
        const Complex lhs = weak_pairing(prob.alpha, u, phi, quad);
        worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    }
    return worst;
}

std::vector<ModulusRow> caputo_compare(double alpha, double lambda,
                                       const std::vector<double>& t_grid) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("caputo_compare: alpha must lie in (0, 1]");
    }
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw DomainError("caputo_compare: lambda must be finite and >= 0");
    }
    for (double t : t_grid) {
        if (!(t >= 0.0 && t <= 2.0)) {
            throw DomainError("caputo_compare: times must lie in [0, 2]");
        }
        if (lambda * std::pow(t, alpha) > 5.0) {
            throw DomainError("caputo_compare: lambda t^alpha exceeds the Mittag-Leffler budget 5");
        }
    }
    const Complex i_alpha = std::polar(1.0, 0.5 * alpha * std::numbers::pi);
    const double rate = std::pow(lambda, 1.0 / alpha);
    std::vector<ModulusRow> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        const double weyl = std::abs(std::polar(1.0, rate * t));
        const double caputo = std::abs(mittag_leffler(alpha, i_alpha * lambda * std::pow(t, alpha)));
        rows.push_back({t, weyl, caputo});
    }
    return rows;
}

}  // namespace fracschro
