#include "fracschro/fracderiv.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fracschro/detail/half_line.hpp"
#include "fracschro/errors.hpp"

namespace fracschro {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

// The left tail of backward_deriv(phi) is integrated numerically over at
// least this many widths (and 60 / |a|) before switching to closed form.
constexpr double kLeftReachWidths = 20.0;
constexpr double kLeftReachPhase = 60.0;

double binomial(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) {
        r = r * (n - k + j) / j;
    }
    return r;
}

double abs_gamma_neg(double alpha) { return std::tgamma(1.0 - alpha) / alpha; }

struct OuterGrid {
    std::vector<double> breaks;  // covers [left, support_hi]
    double left;
};

// Breakpoints for t-integrals of backward_deriv(phi)(t) * exp(i a t): uniform over
// the support, geometric in the distance to the support on the left.
OuterGrid outer_grid(const TestFunction& phi, double a, double fine, const QuadratureSpec& quad) {
    const double lo = phi.support_lo();
    const double hi = phi.support_hi();
    double reach = kLeftReachWidths * phi.max_width();
    double panel = fine * phi.min_width();
    if (a != 0.0) {
        reach = std::max(reach, kLeftReachPhase / std::abs(a));
        panel = std::min(panel, 2.0 * kPi / std::abs(a));
    }
    const double left = lo - reach;
    if (hi - left > 0.5 * quad.truncation) {
        throw SpecError("weak pairing range " + std::to_string(hi - left) +
                        " does not fit inside half the truncation Y; increase Y or |a|");
    }
    const double d0 = 0.5 * phi.min_width();
    const int count = 1 + static_cast<int>(std::ceil(std::log(reach / d0) / std::log(1.25)));
    const auto dist = geometric_breaks(d0, reach, count);
    std::vector<double> breaks;
    breaks.reserve(dist.size() + 1);
    for (auto it = dist.rbegin(); it != dist.rend(); ++it) {
        breaks.push_back(lo - *it);
    }
    breaks.push_back(lo);
    breaks = refine_max_width(breaks, a != 0.0 ? 2.0 * kPi / std::abs(a) : HUGE_VAL);
    const auto inner = phi.support_breaks(panel);
    breaks.insert(breaks.end(), inner.begin() + 1, inner.end());
    return {std::move(breaks), left};
}

}  // namespace

TestFunction::TestFunction(std::vector<GaussianTerm> terms) : terms_(std::move(terms)) {
    for (const auto& term : terms_) {
        if (!(term.width > 0.0) || !std::isfinite(term.width)) {
            throw DomainError("TestFunction: widths must be positive and finite");
        }
        if (term.degree < 0 || term.degree > kMaxDegree) {
            throw DomainError("TestFunction: degree must lie in [0, 8]");
        }
        if (!std::isfinite(term.center)) {
            throw DomainError("TestFunction: centers must be finite");
        }
    }
}

TestFunction TestFunction::gaussian(double center, double width, Complex coefficient) {
    return TestFunction({GaussianTerm{coefficient, 0, center, width}});
}

Complex TestFunction::operator()(double t) const {
    Complex sum = 0.0;
    for (const auto& term : terms_) {
        const double z = (t - term.center) / term.width;
        sum += term.coefficient * std::pow(t, term.degree) * std::exp(-z * z);
    }
    return sum;
}

Complex TestFunction::derivative(double t) const {
    Complex sum = 0.0;
    for (const auto& term : terms_) {
        const double z = (t - term.center) / term.width;
        const double envelope = std::exp(-z * z);
        const double d = term.degree;
        const double poly = (term.degree > 0 ? d * std::pow(t, term.degree - 1) : 0.0) -
                            std::pow(t, term.degree) * 2.0 * z / term.width;
        sum += term.coefficient * poly * envelope;
    }
    return sum;
}

TestFunction TestFunction::shifted(double s) const {
    std::vector<GaussianTerm> out;
    for (const auto& term : terms_) {
        // (t + s)^d = sum_j C(d, j) s^(d-j) t^j
        for (int j = 0; j <= term.degree; ++j) {
            const double c = binomial(term.degree, j) * std::pow(s, term.degree - j);
            if (c == 0.0) {
                continue;
            }
            out.push_back({term.coefficient * c, j, term.center - s, term.width});
        }
    }
    return TestFunction(std::move(out));
}

TestFunction TestFunction::conjugate() const {
    auto out = terms_;
    for (auto& term : out) {
        term.coefficient = std::conj(term.coefficient);
    }
    return TestFunction(std::move(out));
}

TestFunction TestFunction::scaled(Complex factor) const {
    auto out = terms_;
    for (auto& term : out) {
        term.coefficient *= factor;
    }
    return TestFunction(std::move(out));
}

TestFunction operator+(const TestFunction& lhs, const TestFunction& rhs) {
    auto out = lhs.terms_;
    out.insert(out.end(), rhs.terms_.begin(), rhs.terms_.end());
    return TestFunction(std::move(out));
}

double TestFunction::support_lo() const {
    double lo = HUGE_VAL;
    for (const auto& term : terms_) {
        lo = std::min(lo, term.center - kEnvelopeWidths * term.width);
    }
    return lo;
}

double TestFunction::support_hi() const {
    double hi = -HUGE_VAL;
    for (const auto& term : terms_) {
        hi = std::max(hi, term.center + kEnvelopeWidths * term.width);
    }
    return hi;
}

double TestFunction::min_width() const {
    double w = HUGE_VAL;
    for (const auto& term : terms_) {
        w = std::min(w, term.width);
    }
    return w;
}

double TestFunction::max_width() const {
    double w = 0.0;
    for (const auto& term : terms_) {
        w = std::max(w, term.width);
    }
    return w;
}

std::vector<Feature> TestFunction::features() const {
    std::vector<Feature> out;
    out.reserve(terms_.size());
    for (const auto& term : terms_) {
        out.push_back({term.center - kEnvelopeWidths * term.width,
                       term.center + kEnvelopeWidths * term.width, term.width});
    }
    return out;
}

std::vector<double> TestFunction::support_breaks(double max_width) const {
    if (is_zero()) {
        return {};
    }
    const double lo = support_lo();
    const double hi = support_hi();
    const auto count = static_cast<int>(std::ceil((hi - lo) / max_width));
    return uniform_breaks(lo, hi, std::max(count, 1));
}

Complex ExponentialSignal::operator()(double t) const {
    return amplitude * std::exp(kI * frequency * t);
}

Complex complex_power(FractionalOrder alpha, double a) {
    return imaginary_power(a, alpha.value());
}

Complex backward_deriv(FractionalOrder alpha, const TestFunction& phi, double t,
                       const QuadratureSpec& quad) {
    quad.validate();
    const GaussLegendreRule rule(quad.nodes_per_panel);
    const auto features = phi.features();
    const double al = alpha.value();
    return detail::regularized_backward_integral(
               al, [&](double x) { return phi(x); }, [&](double x) { return phi.derivative(x); },
               t, features, quad, rule) /
           abs_gamma_neg(al);
}

Complex forward_deriv(FractionalOrder alpha, const TestFunction& phi, double t,
                      const QuadratureSpec& quad) {
    quad.validate();
    const GaussLegendreRule rule(quad.nodes_per_panel);
    const auto features = phi.features();
    const double al = alpha.value();
    return detail::forward_integral(
               al, [&](double x) { return phi.derivative(x); }, t, features, quad, rule) /
           std::tgamma(1.0 - al);
}

Complex pairing(const ExponentialSignal& u, const TestFunction& phi) {
    if (phi.is_zero() || u.amplitude == 0.0) {
        return 0.0;
    }
    double panel = 0.5 * phi.min_width();
    if (u.frequency != 0.0) {
        panel = std::min(panel, 2.0 * kPi / std::abs(u.frequency));
    }
    const GaussLegendreRule rule(16);
    return integrate([&](double t) { return u(t) * phi(t); }, phi.support_breaks(panel), rule);
}

Complex weak_pairing(FractionalOrder alpha, const ExponentialSignal& u, const TestFunction& phi,
                     const QuadratureSpec& quad) {
    quad.validate();
    if (phi.is_zero() || u.amplitude == 0.0) {
        return 0.0;
    }
    const double al = alpha.value();
    const double a = u.frequency;
    const GaussLegendreRule rule(quad.nodes_per_panel);
    const auto features = phi.features();
    const auto grid = outer_grid(phi, a, 0.5, quad);

    const Complex body = integrate(
        [&](double t) {
            return std::exp(kI * a * t) *
                   detail::regularized_backward_integral(
                       al, [&](double x) { return phi(x); },
                       [&](double x) { return phi.derivative(x); }, t, features, quad, rule);
        },
        grid.breaks, rule);

    // For t < left, phi(t) = 0 and |Gamma(-alpha)| backward_deriv(phi)(t) = int (s-t)^(-alpha-1) phi(s) ds,
    // so the remaining t-integral is int phi(s) e^{ias} int_{s-left}^inf e^{-iar} r^(-alpha-1) dr ds.
    double panel = 0.5 * phi.min_width();
    if (a != 0.0) {
        panel = std::min(panel, 2.0 * kPi / std::abs(a));
    }
    const Complex left_tail = integrate(
        [&](double s) {
            return phi(s) * std::exp(kI * a * s) *
                   power_oscillatory_tail(al + 1.0, a, s - grid.left);
        },
        phi.support_breaks(panel), rule);

    return -u.amplitude * (body + left_tail) / abs_gamma_neg(al);
}

double l1_norm(const TestFunction& phi) {
    if (phi.is_zero()) {
        return 0.0;
    }
    const GaussLegendreRule rule(16);
    return integrate([&](double t) { return std::abs(phi(t)); },
                     phi.support_breaks(0.125 * phi.min_width()), rule);
}

double l1_norm_derivative(const TestFunction& phi) {
    if (phi.is_zero()) {
        return 0.0;
    }
    const GaussLegendreRule rule(16);
    return integrate([&](double t) { return std::abs(phi.derivative(t)); },
                     phi.support_breaks(0.125 * phi.min_width()), rule);
}

double backward_deriv_l1_norm(FractionalOrder alpha, const TestFunction& phi,
                              const QuadratureSpec& quad) {
    quad.validate();
    if (phi.is_zero()) {
        return 0.0;
    }
    const double al = alpha.value();
    const GaussLegendreRule rule(quad.nodes_per_panel);
    const auto features = phi.features();
    const auto grid = outer_grid(phi, 0.0, 0.25, quad);
    const double body = integrate(
        [&](double t) {
            return std::abs(detail::regularized_backward_integral(
                al, [&](double x) { return phi(x); },
                [&](double x) { return phi.derivative(x); }, t, features, quad, rule));
        },
        grid.breaks, rule);
    // Left of the grid |D phi(t)| <= int (s-t)^(-alpha-1) |phi(s)| ds / |Gamma(-alpha)|;
    // this bound is exact for phi of one sign.
    const double left_tail = integrate(
        [&](double s) { return std::abs(phi(s)) * std::pow(s - grid.left, -al) / al; },
        phi.support_breaks(0.125 * phi.min_width()), rule);
    return (body + left_tail) / abs_gamma_neg(al);
}

double duality_bound(FractionalOrder alpha, const TestFunction& phi) {
    const double al = alpha.value();
    return (l1_norm_derivative(phi) / (1.0 - al) + 2.0 * l1_norm(phi) / al) / abs_gamma_neg(al);
}

Complex mittag_leffler(double alpha, Complex z) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("mittag_leffler: alpha must lie in (0, 1]");
    }
    const double modulus = std::abs(z);
    if (!(modulus <= 5.0 * (1.0 + 1e-12))) {
        throw DomainError("mittag_leffler: |z| = " + std::to_string(modulus) +
                          " exceeds the series budget |z| <= 5");
    }
    if (modulus == 0.0) {
        return 1.0;
    }
    using Extended = std::complex<long double>;
    const long double radius = modulus;
    const long double arg =
        std::atan2(static_cast<long double>(z.imag()), static_cast<long double>(z.real()));
    // Kahan-compensated sum in extended precision. Magnitudes come from powl / tgammal
    // directly; log space is only a fallback once those leave the representable range.
    Extended sum = 1.0L;
    Extended compensation = 0.0L;
    int small_run = 0;
    for (int n = 1; n < 200000 && small_run < 3; ++n) {
        const long double shifted = static_cast<long double>(alpha) * n + 1.0L;
        long double size = std::pow(radius, static_cast<long double>(n)) / std::tgamma(shifted);
        if (!std::isfinite(size) || size == 0.0L) {
            size = std::exp(n * std::log(radius) - std::lgamma(shifted));
        }
        // Real arguments keep exact signs instead of cos(n pi) in extended precision.
        const Extended term = z.imag() == 0.0
                                  ? Extended(z.real() < 0.0 && n % 2 == 1 ? -size : size, 0.0L)
                                  : std::polar(size, n * arg);
        const Extended y = term - compensation;
        const Extended t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
        small_run = size < 1e-16L ? small_run + 1 : 0;
    }
    const Complex result(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
        throw NumericalError("mittag_leffler: series overflowed double range");
    }
    return result;
}

}  // namespace fracschro
