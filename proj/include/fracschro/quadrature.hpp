#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fracschro {

using Complex = std::complex<double>;

/// Discretisation of the improper integrals over (0, inf).
///
/// The half line is split at y = 1: the singular head (0, 1] is handled by a
/// power substitution, the body (1, Y] by composite Gauss-Legendre on
/// `panels` geometric panels, and whatever lies beyond Y by
/// `tail_correction_order` integration-by-parts boundary terms.
struct QuadratureSpec {
    double truncation = 1.0e4;
    int panels = 64;
    int nodes_per_panel = 16;
    int tail_correction_order = 1;

    /// Throws SpecError unless truncation > 1, panels > 0, nodes > 0 and order in {0,1,2}.
    void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendreRule(int n);
    int size() const { return static_cast<int>(nodes.size()); }
};

/// `count` + 1 breakpoints a = x0 < ... < x_count = b with constant ratio x_{k+1}/x_k.
/// Requires 0 < a < b.
std::vector<double> geometric_breaks(double a, double b, int count);

/// `count` + 1 equispaced breakpoints on [a, b].
std::vector<double> uniform_breaks(double a, double b, int count);

/// Splits every interval of `breaks` wider than `max_width` into equal pieces.
std::vector<double> refine_max_width(std::span<const double> breaks, double max_width);

/// Refines only the part of `breaks` overlapping [lo, hi] to pieces no wider than `max_width`.
std::vector<double> refine_window(std::span<const double> breaks, double lo, double hi,
                                  double max_width);

/// Breakpoints on [0, 1] graded geometrically towards 0 (smallest panel 2^-levels).
std::vector<double> graded_unit_breaks(int levels);

/// Composite Gauss-Legendre sum of f over consecutive intervals of `breaks`.
template <class F>
auto integrate(F&& f, std::span<const double> breaks, const GaussLegendreRule& rule)
    -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    R total{};
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double half = 0.5 * (breaks[p + 1] - breaks[p]);
        const double mid = 0.5 * (breaks[p + 1] + breaks[p]);
        R panel{};
        for (int k = 0; k < rule.size(); ++k) {
            panel += rule.weights[k] * f(mid + half * rule.nodes[k]);
        }
        total += half * panel;
    }
    return total;
}

}  // namespace fracschro
