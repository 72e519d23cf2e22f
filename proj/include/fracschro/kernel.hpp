#pragma once

#include <complex>

#include "fracschro/quadrature.hpp"

namespace fracschro {

/// Fractional order alpha, strictly inside (0, 1).
class FractionalOrder {
public:
    explicit FractionalOrder(double alpha);

    double value() const { return alpha_; }

private:
    double alpha_;
};

/// g_beta(t) = t^(beta-1) / Gamma(beta) for beta > 0, t > 0.
double gamma_kernel(double beta, double t);

/// Principal-branch power (i a)^exponent = |a|^exponent * exp(i exponent sgn(a) pi/2).
/// Returns 0 for a == 0 and exponent > 0.
Complex imaginary_power(double a, double exponent);

/// int_{r0}^inf exp(-i a r) r^(-p) dr for r0 > 0.
///
/// Requires p > 0 when a != 0 and p > 1 when a == 0. The finite part up to a
/// cut R with |a| R >= 60 is integrated numerically; the remainder uses the
/// asymptotic integration-by-parts series summed to convergence.
Complex power_oscillatory_tail(double p, double a, double r0);

/// Numerical value of a half-line convolution next to its closed form.
struct ConvolutionResult {
    Complex value;
    Complex oracle;
};

/// int_0^inf g_beta(y) exp(i a (t - y)) dy for beta in (0, 1], a != 0.
///
/// The closed form (i a)^(-beta) exp(i a t) is returned as `oracle`.
ConvolutionResult convolve_exponential(double beta, double a, double t,
                                       const QuadratureSpec& quad = {});

/// |g_{1-a} * (g_a * u)(t) - g_{1-a} * (g_a * u)(0) - int_0^t u| for u(y) = exp(i a y).
double love_identity_residual(FractionalOrder alpha, double a, double t,
                              const QuadratureSpec& quad = {});

}  // namespace fracschro
