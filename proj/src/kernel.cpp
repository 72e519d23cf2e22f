#include "fracschro/kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fracschro/errors.hpp"

namespace fracschro {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Below this |a| R the asymptotic series cannot reach double precision.
constexpr double kAsymptoticCut = 60.0;

// exp(-i a R) R^-p / (i a) * sum_k c_k with c_0 = 1, c_k = -c_{k-1} (p + k - 1) / (i a R).
// max_terms < 0 sums until the terms stop decreasing or drop below 1e-17.
Complex asymptotic_tail(double p, double a, double R, int max_terms) {
    const Complex iaR = kI * a * R;
    Complex term = 1.0;
    Complex sum = 0.0;
    double previous = HUGE_VAL;
    const int limit = max_terms < 0 ? 400 : max_terms;
    for (int k = 0; k < limit; ++k) {
        const double size = std::abs(term);
        if (max_terms < 0 && (size < 1e-17 * std::abs(sum) || size >= previous)) {
            break;
        }
        sum += term;
        previous = size;
        term *= -(p + k) / iaR;
    }
    return std::exp(-kI * a * R) * std::pow(R, -p) / (kI * a) * sum;
}

}  // namespace

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("fractional order must lie strictly inside (0, 1), got " +
                          std::to_string(alpha));
    }
}

double gamma_kernel(double beta, double t) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw DomainError("gamma_kernel: beta must be positive");
    }
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("gamma_kernel: g_beta is only defined for t > 0");
    }
    if (beta < 160.0) {
        return std::pow(t, beta - 1.0) / std::tgamma(beta);
    }
    return std::exp((beta - 1.0) * std::log(t) - std::lgamma(beta));
}

Complex imaginary_power(double a, double exponent) {
    if (a == 0.0) {
        if (exponent > 0.0) {
            return 0.0;
        }
        throw DomainError("imaginary_power: (i 0)^e is undefined for e <= 0");
    }
    const double sign = a > 0.0 ? 1.0 : -1.0;
    return std::polar(std::pow(std::abs(a), exponent),
                      exponent * sign * 0.5 * std::numbers::pi);
}

Complex power_oscillatory_tail(double p, double a, double r0) {
    if (!(r0 > 0.0)) {
        throw DomainError("power_oscillatory_tail: r0 must be positive");
    }
    if (a == 0.0) {
        if (!(p > 1.0)) {
            throw DivergenceError("power_oscillatory_tail: int r^-p diverges for p <= 1");
        }
        return std::pow(r0, 1.0 - p) / (p - 1.0);
    }
    if (!(p > 0.0)) {
        throw DivergenceError("power_oscillatory_tail: exponent must be positive");
    }
    const double wavelength = kTwoPi / std::abs(a);
    const double cut = std::max(r0, kAsymptoticCut / std::abs(a));
    Complex finite = 0.0;
    if (cut > r0) {
        const int count = 1 + static_cast<int>(std::ceil(std::log(cut / r0) / std::log(1.25)));
        const auto breaks = refine_max_width(geometric_breaks(r0, cut, count), wavelength);
        const GaussLegendreRule rule(16);
        finite = integrate([&](double r) { return std::exp(-kI * a * r) * std::pow(r, -p); },
                           breaks, rule);
    }
    return finite + asymptotic_tail(p, a, cut, -1);
}

ConvolutionResult convolve_exponential(double beta, double a, double t,
                                       const QuadratureSpec& quad) {
    quad.validate();
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw DomainError("convolve_exponential: beta must lie in (0, 1]");
    }
    if (a == 0.0) {
        throw DivergenceError("convolve_exponential: int_0^inf g_beta diverges for a = 0");
    }
    const GaussLegendreRule rule(quad.nodes_per_panel);
    const double wavelength = kTwoPi / std::abs(a);

    // Head (0, 1]: y = s^(1/beta) turns y^(beta-1) dy into ds / beta.
    const double inv_beta = 1.0 / beta;
    const auto head_breaks = refine_max_width(graded_unit_breaks(12), beta * wavelength);
    const Complex head =
        integrate([&](double s) { return std::exp(-kI * a * std::pow(s, inv_beta)); },
                  head_breaks, rule) /
        std::tgamma(beta + 1.0);

    // Body (1, Y]: geometric panels, each at most one wavelength wide.
    const double Y = quad.truncation;
    const auto body_breaks =
        refine_max_width(geometric_breaks(1.0, Y, quad.panels), wavelength);
    const Complex body =
        integrate([&](double y) { return std::exp(-kI * a * y) * std::pow(y, beta - 1.0); },
                  body_breaks, rule) /
        std::tgamma(beta);

    // Beyond Y: boundary terms of repeated integration by parts.
    Complex tail = 0.0;
    if (quad.tail_correction_order > 0) {
        tail = asymptotic_tail(1.0 - beta, a, Y, quad.tail_correction_order) / std::tgamma(beta);
    }

    const Complex phase = std::exp(kI * a * t);
    return {phase * (head + body + tail), phase * imaginary_power(a, -beta)};
}

double love_identity_residual(FractionalOrder alpha, double a, double t,
                              const QuadratureSpec& quad) {
    if (a == 0.0) {
        throw DivergenceError("love_identity_residual: u = 1 has no bounded g_alpha * u");
    }
    const double al = alpha.value();
    // g_alpha * u is known in closed form; the outer convolution goes through quadrature.
    const Complex inner = imaginary_power(a, -al);
    const Complex lhs_t = inner * convolve_exponential(1.0 - al, a, t, quad).value;
    const Complex lhs_0 = inner * convolve_exponential(1.0 - al, a, 0.0, quad).value;
    const Complex primitive = (std::exp(kI * a * t) - 1.0) / (kI * a);
    return std::abs(lhs_t - (lhs_0 + primitive));
}

}  // namespace fracschro
