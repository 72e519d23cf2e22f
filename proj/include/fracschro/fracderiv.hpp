#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fracschro/kernel.hpp"
#include "fracschro/quadrature.hpp"

namespace fracschro {

/// One term coefficient * t^degree * exp(-((t - center) / width)^2).
struct GaussianTerm {
    Complex coefficient{1.0, 0.0};
    int degree = 0;
    double center = 0.0;
    double width = 1.0;
};

/// Region where a test function (or a function built from one) varies, with its length scale.
struct Feature {
    double lo;
    double hi;
    double scale;
};

/// Schwartz-class test function: a finite sum of Gaussian-modulated monomials.
///
/// Immutable after construction. The default-constructed value is the zero
/// function. Each term is treated as negligible outside center +- 9 width.
class TestFunction {
public:
    static constexpr int kMaxDegree = 8;
    static constexpr double kEnvelopeWidths = 9.0;

    TestFunction() = default;
    explicit TestFunction(std::vector<GaussianTerm> terms);

    static TestFunction gaussian(double center, double width, Complex coefficient = 1.0);

    Complex operator()(double t) const;
    Complex derivative(double t) const;

    std::span<const GaussianTerm> terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// t -> phi(t + s), expanded back into the same term family.
    TestFunction shifted(double s) const;
    TestFunction conjugate() const;
    TestFunction scaled(Complex factor) const;
    friend TestFunction operator+(const TestFunction& lhs, const TestFunction& rhs);

    /// Smallest lower and largest upper envelope edge over all terms.
    double support_lo() const;
    double support_hi() const;
    double min_width() const;
    double max_width() const;

    /// One Feature per term: its envelope window and width.
    std::vector<Feature> features() const;

    /// Breakpoints covering [support_lo, support_hi] with panels no wider than `max_width`.
    std::vector<double> support_breaks(double max_width) const;

private:
    std::vector<GaussianTerm> terms_;
};

/// u(t) = amplitude * exp(i frequency t).
struct ExponentialSignal {
    Complex amplitude{1.0, 0.0};
    double frequency = 0.0;

    Complex operator()(double t) const;
};

/// (i a)^alpha on the principal branch; 0 for a = 0.
Complex complex_power(FractionalOrder alpha, double a);

/// Backward derivative of order alpha, evaluated from the regularised integral
/// |Gamma(-alpha)|^-1 int_0^inf y^(-alpha-1) (phi(t+y) - phi(t)) dy.
Complex backward_deriv(FractionalOrder alpha, const TestFunction& phi, double t,
                       const QuadratureSpec& quad = {});

/// Forward derivative with lower bound -inf: int_0^inf g_{1-alpha}(y) phi'(t - y) dy.
Complex forward_deriv(FractionalOrder alpha, const TestFunction& phi, double t,
                      const QuadratureSpec& quad = {});

/// int_R u(t) phi(t) dt.
Complex pairing(const ExponentialSignal& u, const TestFunction& phi);

/// Weak derivative <D^alpha u, phi> = -int_R u(t) backward_deriv(phi)(t) dt.
///
/// The backward derivative of a test function has a t^(-alpha-1) tail on the
/// left, so the outer integral is taken numerically over a finite range and
/// the remainder in closed form. Throws SpecError when 0 < |a| is so small
/// that this range no longer fits inside the truncation Y.
Complex weak_pairing(FractionalOrder alpha, const ExponentialSignal& u, const TestFunction& phi,
                     const QuadratureSpec& quad = {});

/// int_R |phi|, int_R |phi'| and int_R |backward_deriv(phi)| by quadrature.
double l1_norm(const TestFunction& phi);
double l1_norm_derivative(const TestFunction& phi);
double backward_deriv_l1_norm(FractionalOrder alpha, const TestFunction& phi,
                              const QuadratureSpec& quad = {});

/// Explicit constant of the L1 estimate:
/// (||phi'||_1 / (1 - alpha) + 2 ||phi||_1 / alpha) / |Gamma(-alpha)|.
double duality_bound(FractionalOrder alpha, const TestFunction& phi);

/// Mittag-Leffler function E_alpha(z) = sum_n z^n / Gamma(alpha n + 1), alpha in (0, 1], |z| <= 5.
Complex mittag_leffler(double alpha, Complex z);

}  // namespace fracschro
