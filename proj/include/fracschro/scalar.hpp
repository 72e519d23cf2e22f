#pragma once

#include <vector>

#include "fracschro/fracderiv.hpp"

namespace fracschro {

/// Weak scalar equation D^alpha u = (i a)^alpha u, checked against a family of test functions.
struct ScalarProblem {
    FractionalOrder alpha;
    double a = 1.0;
    std::vector<TestFunction> test_family;

    /// Throws DomainError for an empty family or a zero member.
    void validate() const;
};

/// Gaussians exp(-((t - c) / w)^2) with c in {-2, 0, 2} and w in {0.5, 1, 2}.
std::vector<TestFunction> default_test_family();

/// max over the family of |<D^alpha u, phi> - (i a)^alpha <u, phi>| / (1 + |(i a)^alpha <u, phi>|).
double scalar_weak_residual(const ScalarProblem& prob, const ExponentialSignal& u,
                            const QuadratureSpec& quad = {});

struct ModulusRow {
    double t;
    double modulus_weyl;
    double modulus_caputo;
};

/// |exp(i lambda^(1/alpha) t)| next to |E_alpha(i^alpha lambda t^alpha)|.
///
/// alpha may equal 1, where both are the classical exponential. Throws
/// DomainError when lambda t^alpha > 5 at some grid point, lambda < 0, or a
/// time lies outside [0, 2].
std::vector<ModulusRow> caputo_compare(double alpha, double lambda,
                                       const std::vector<double>& t_grid);

}  // namespace fracschro
