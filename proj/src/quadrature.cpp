#include "fracschro/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fracschro/errors.hpp"

namespace fracschro {

void QuadratureSpec::validate() const {
    if (!(truncation > 1.0) || !std::isfinite(truncation)) {
        throw SpecError("quadrature truncation Y must be finite and > 1, got " +
                        std::to_string(truncation));
    }
    if (panels <= 0) {
        throw SpecError("quadrature panels must be positive");
    }
    if (nodes_per_panel <= 0) {
        throw SpecError("quadrature nodes_per_panel must be positive");
    }
    if (tail_correction_order < 0 || tail_correction_order > 2) {
        throw SpecError("tail_correction_order must be 0, 1 or 2");
    }
}

GaussLegendreRule::GaussLegendreRule(int n) {
    if (n <= 0) {
        throw SpecError("Gauss-Legendre rule needs at least one node");
    }
    nodes.resize(n);
    weights.resize(n);
    // Newton on P_n from the Tricomi initial guesses; roots are symmetric.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // Recompute the derivative at the converged root.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        nodes[n / 2] = 0.0;
    }
}

std::vector<double> geometric_breaks(double a, double b, int count) {
    if (!(a > 0.0) || !(b > a) || count <= 0) {
        throw SpecError("geometric_breaks needs 0 < a < b and count > 0");
    }
    std::vector<double> out(count + 1);
    const double ratio = std::log(b / a) / count;
    for (int k = 0; k <= count; ++k) {
        out[k] = a * std::exp(ratio * k);
    }
    out.front() = a;
    out.back() = b;
    return out;
}

std::vector<double> uniform_breaks(double a, double b, int count) {
    if (!(b > a) || count <= 0) {
        throw SpecError("uniform_breaks needs a < b and count > 0");
    }
    std::vector<double> out(count + 1);
    for (int k = 0; k <= count; ++k) {
        out[k] = a + (b - a) * k / count;
    }
    out.back() = b;
    return out;
}

std::vector<double> refine_max_width(std::span<const double> breaks, double max_width) {
    return refine_window(breaks, -HUGE_VAL, HUGE_VAL, max_width);
}

std::vector<double> refine_window(std::span<const double> breaks, double lo, double hi,
                                  double max_width) {
    std::vector<double> out;
    if (breaks.empty()) {
        return out;
    }
    out.reserve(breaks.size());
    out.push_back(breaks[0]);
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double a = breaks[p];
        const double b = breaks[p + 1];
        // Window edges become breakpoints so only the overlap is subdivided.
        const double from = std::max(a, lo);
        const double to = std::min(b, hi);
        if (!(to > from) || !(max_width > 0.0)) {
            out.push_back(b);
            continue;
        }
        if (from > a) {
            out.push_back(from);
        }
        const double width = to - from;
        if (width > max_width) {
            const auto pieces = static_cast<long>(std::ceil(width / max_width));
            for (long k = 1; k < pieces; ++k) {
                out.push_back(from + width * static_cast<double>(k) / static_cast<double>(pieces));
            }
        }
        if (to < b) {
            out.push_back(to);
        }
        out.push_back(b);
    }
    return out;
}

std::vector<double> graded_unit_breaks(int levels) {
    std::vector<double> out;
    out.reserve(levels + 2);
    out.push_back(0.0);
    for (int k = levels; k >= 1; --k) {
        out.push_back(std::ldexp(1.0, -k));
    }
    out.push_back(1.0);
    return out;
}

}  // namespace fracschro
