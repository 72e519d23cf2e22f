#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fracschro/fracderiv.hpp"
#include "fracschro/scalar.hpp"
#include "fracschro/spectral.hpp"

namespace fracschro {

using Json = nlohmann::ordered_json;

/// Outcome of one verification. passed is always residual <= tolerance; checks
/// with several conditions fold them into one normalised residual and keep the
/// raw numbers in metadata.
struct CheckReport {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    Json metadata = Json::object();
};

CheckReport make_report(std::string name, double residual, double tolerance, Json metadata = {});

Json to_json(const CheckReport& report);
/// JSON array of reports, two-space indented, trailing newline.
std::string reports_to_json(const std::vector<CheckReport>& reports);

using Rng = std::mt19937_64;

/// Independent standard normal real and imaginary parts.
WaveFunction random_wave(const GridSpec& grid, Rng& rng);
/// V_j uniform in [0, vmax).
std::vector<double> random_potential(int n, Rng& rng, double vmax = 3.0);
/// Random coefficients on the eigenmodes with h^(1/alpha) <= omega_max, zero elsewhere.
WaveFunction low_band_wave(const SpectralOperator& op, double alpha, double omega_max, Rng& rng);
/// Nine test functions of mixed degree, width, centre and phase.
std::vector<TestFunction> standard_test_functions();

// Spectral group.

CheckReport check_norm_conservation(const SpectralOperator& op, FractionalOrder alpha,
                                    const WaveFunction& v, const std::vector<double>& times);

/// Throws DegenerateInputError for v = 0.
CheckReport check_group_law(const SpectralOperator& op, FractionalOrder alpha,
                            const WaveFunction& v,
                            const std::vector<std::pair<double, double>>& pairs);

/// Difference quotient (S(dt) v - v) / dt against i A^(1/alpha) v.
///
/// Needs at least three dt values (SpecError) and a v whose top 10% of modes
/// vanish (SpecError). The residual is
///   max(|order - 1| / 0.1, r(dt_min) / (C0 dt_min))
/// with tolerance 1, where order is the worst slope between consecutive dt and
/// C0 = 1.1 |A^(2/alpha) v| / 2, the sharp Taylor constant with a relative
/// margin. Slopes between residuals at roundoff level are not counted.
CheckReport check_generator(const SpectralOperator& op, FractionalOrder alpha,
                            const WaveFunction& v, const std::vector<double>& dt_list);

/// Classical RK4 on du/dt = i A^(1/alpha) u from v over [0, T] with `steps`
/// and 2 * steps, against propagate.
///
/// The residual is max(err / tol, 3.7 / order) with tolerance 1, where err is
/// the relative error at `steps`, tol twice the leading RK4 error estimate
/// T omega^5 dt^4 / 120 weighted by spectral mass (floored at 1e-12), and
/// order = log2(err(steps) / err(2 steps)) when err(2 steps) clears roundoff.
/// Throws SpecError for steps < 8, StabilityError when dt max h^(1/alpha) > 2.8.
CheckReport check_equivalence(const SpectralOperator& op, FractionalOrder alpha,
                              const WaveFunction& v, double T, int steps);

// Fourier symbol.

struct FourierWindow {
    double half_width = 16.0;
    int samples = 4096;
};

/// Compares the Fourier transform of D^alpha phi with (i sigma)^alpha phi_hat.
///
/// Both transforms use the trapezoid rule on [-T_w, T_w]. D^alpha phi has a
/// t^(-alpha-1) tail to the right of the window; its transform is added in
/// closed form. The error at sigma = 0 is measured relative to ||phi||_1,
/// elsewhere relative to |(i sigma)^alpha phi_hat(sigma)|. Metadata also holds
/// an informational check of the backward-derivative identity for phi_hat at
/// the first nonzero sigma. Throws SpecError when phi is not negligible at the
/// window edges or samples < 512.
CheckReport check_fourier_symbol(FractionalOrder alpha, const TestFunction& phi,
                                 const std::vector<double>& sigmas, const FourierWindow& window = {},
                                 const QuadratureSpec& quad = {});

// Kernel, scalar and duality groups.

/// max over (a, t) of |convolve_exponential(1 - alpha, a, t) - oracle|.
CheckReport check_convolution(FractionalOrder alpha, const std::vector<double>& frequencies,
                              const std::vector<double>& times, const QuadratureSpec& quad = {});

CheckReport check_love_identity(FractionalOrder alpha, double a, const std::vector<double>& times,
                                const QuadratureSpec& quad = {});

/// Worst weak residual over the given solutions k exp(i prob.a t); tolerance 1e-4.
CheckReport check_scalar_solutions(const ScalarProblem& prob, const std::vector<Complex>& amplitudes,
                                   const QuadratureSpec& quad = {});

/// A non-solution must leave a weak residual above `threshold`.
/// Residual is threshold / r with tolerance 1.
CheckReport check_scalar_separation(const ScalarProblem& prob, const ExponentialSignal& u,
                                    double threshold = 0.05, const QuadratureSpec& quad = {});

/// Draws `trials` random potentials, requires every eigenvalue >= -1e-10 and
/// that a potential with one negative entry is rejected.
CheckReport check_positivity(const GridSpec& grid, int trials, Rng& rng);

/// |E_alpha(i^alpha lambda t^alpha)| must leave 1 by more than 1e-3 somewhere
/// while the Weyl modulus stays within 1e-15 of 1. Residual normalised to tolerance 1.
CheckReport check_caputo_contrast(double alpha, double lambda, const std::vector<double>& t_grid);

/// max over phi of ||D phi||_1 / bound - 1 against tolerance 1e-3.
CheckReport check_duality_bound(FractionalOrder alpha, const std::vector<TestFunction>& family,
                                const QuadratureSpec& quad = {});

// Suite.

struct SuiteConfig {
    double alpha = 0.5;
    int n = 64;
    std::uint64_t seed = 7;
    QuadratureSpec quad{};
    /// Subset of {kernel, scalar, spectral, fourier, caputo, duality}; empty runs all.
    std::vector<std::string> groups;
    /// Potential for the -Delta + V checks; random when absent.
    std::optional<std::vector<double>> potential;
};

/// Names accepted in SuiteConfig::groups.
const std::vector<std::string>& suite_groups();

/// Runs the requested groups in a fixed order. The spectral checks use the
/// grid L = n pi / 4.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

}  // namespace fracschro
