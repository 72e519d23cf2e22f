#pragma once

// Half-line integrals shared by the test-function derivatives and the harness.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "fracschro/fracderiv.hpp"
#include "fracschro/quadrature.hpp"

namespace fracschro::detail {

inline constexpr int kHeadGradingLevels = 12;

inline double min_scale(std::span<const Feature> features) {
    double s = HUGE_VAL;
    for (const auto& f : features) {
        s = std::min(s, f.scale);
    }
    return s;
}

/// Breakpoints in s for the head (0, 1] after y = s^exponent, exponent >= 1.
inline std::vector<double> head_breaks(double exponent, double scale) {
    return refine_max_width(graded_unit_breaks(kHeadGradingLevels), 0.5 * scale / exponent);
}

/// Geometric body panels on (1, Y], refined where a feature sits at y = shift + sign * x.
inline std::vector<double> body_breaks(const QuadratureSpec& quad,
                                       std::span<const Feature> features, double shift,
                                       double sign) {
    auto breaks = geometric_breaks(1.0, quad.truncation, quad.panels);
    for (const auto& f : features) {
        const double a = shift + sign * f.lo;
        const double b = shift + sign * f.hi;
        breaks = refine_window(breaks, std::min(a, b), std::max(a, b), 0.5 * f.scale);
    }
    return breaks;
}

/// |Gamma(-alpha)| * backward derivative of f at t:
/// int_0^inf y^(-alpha-1) (f(t+y) - f(t)) dy.
///
/// On (0, 1] one integration by parts gives
///   -(f(t+1) - f(t)) / alpha + alpha^-1 int_0^1 y^-alpha f'(t+y) dy,
/// whose integrand is bounded after y = s^(1/(1-alpha)). The constant part of
/// the tail beyond Y is kept in closed form, -f(t) Y^-alpha / alpha.
template <class F, class DF>
Complex regularized_backward_integral(double alpha, F&& f, DF&& df, double t,
                                      std::span<const Feature> features,
                                      const QuadratureSpec& quad, const GaussLegendreRule& rule) {
    if (features.empty()) {
        return 0.0;
    }
    const double exponent = 1.0 / (1.0 - alpha);
    const Complex ft = f(t);

    const auto hb = head_breaks(exponent, min_scale(features));
    const Complex head_integral =
        integrate([&](double s) -> Complex { return df(t + std::pow(s, exponent)); }, hb, rule) *
        exponent;
    const Complex head = (head_integral - (f(t + 1.0) - ft)) / alpha;

    const auto bb = body_breaks(quad, features, -t, 1.0);
    const Complex body = integrate(
        [&](double y) -> Complex { return std::pow(y, -alpha - 1.0) * (f(t + y) - ft); }, bb,
        rule);

    const Complex tail = -ft * std::pow(quad.truncation, -alpha) / alpha;
    return head + body + tail;
}

/// Gamma(1-alpha) * forward derivative of f at t: int_0^inf y^-alpha f'(t - y) dy.
/// f' is assumed negligible beyond the truncation Y.
template <class DF>
Complex forward_integral(double alpha, DF&& df, double t, std::span<const Feature> features,
                         const QuadratureSpec& quad, const GaussLegendreRule& rule) {
    if (features.empty()) {
        return 0.0;
    }
    const double exponent = 1.0 / (1.0 - alpha);
    const auto hb = head_breaks(exponent, min_scale(features));
    const Complex head =
        integrate([&](double s) -> Complex { return df(t - std::pow(s, exponent)); }, hb, rule) *
        exponent;
    const auto bb = body_breaks(quad, features, t, -1.0);
    const Complex body = integrate(
        [&](double y) -> Complex { return std::pow(y, -alpha) * df(t - y); }, bb, rule);
    return head + body;
}

}  // namespace fracschro::detail
