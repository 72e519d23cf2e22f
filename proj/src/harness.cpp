#include "fracschro/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fracschro/detail/half_line.hpp"
#include "fracschro/errors.hpp"

namespace fracschro {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr Complex kI{0.0, 1.0};

double max_abs_row(const Eigen::VectorXd& h) { return h.size() ? h.cwiseAbs().maxCoeff() : 0.0; }

double max_omega(const SpectralOperator& op, double alpha) {
    return fractional_power(max_abs_row(op.symbol()), 1.0 / alpha);
}

Json grid_meta(const GridSpec& grid) { return Json{{"n", grid.n}, {"L", grid.L}}; }

Json quad_meta(const QuadratureSpec& quad) {
    return Json{{"Y", quad.truncation},
                {"panels", quad.panels},
                {"nodes_per_panel", quad.nodes_per_panel},
                {"tail_correction_order", quad.tail_correction_order}};
}

Json operator_meta(const SpectralOperator& op, double alpha) {
    return Json{{"grid", grid_meta(op.grid())},
                {"basis", op.basis() == SpectralOperator::Basis::fourier ? "fourier" : "eigen"},
                {"alpha", alpha}};
}

/// Dyadic time in [-range, range] so that sums of two draws stay exact.
double dyadic_time(Rng& rng, double range) {
    std::uniform_real_distribution<double> u(-range, range);
    return std::ldexp(std::round(std::ldexp(u(rng), 10)), -10);
}

}  // namespace

CheckReport make_report(std::string name, double residual, double tolerance, Json metadata) {
    if (!(tolerance > 0.0)) {
        throw SpecError("check tolerance must be positive");
    }
    CheckReport r;
    r.name = std::move(name);
    r.residual = residual;
    r.tolerance = tolerance;
    r.passed = residual <= tolerance;
    r.metadata = metadata.is_null() ? Json::object() : std::move(metadata);
    return r;
}

Json to_json(const CheckReport& report) {
    return Json{{"name", report.name},
                {"residual", report.residual},
                {"tolerance", report.tolerance},
                {"passed", report.passed},
                {"metadata", report.metadata}};
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    Json array = Json::array();
    for (const auto& r : reports) {
        array.push_back(to_json(r));
    }
    return array.dump(2) + "\n";
}

WaveFunction random_wave(const GridSpec& grid, Rng& rng) {
    std::normal_distribution<double> normal;
    Eigen::VectorXcd v(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        const double re = normal(rng);
        v[j] = Complex(re, normal(rng));
    }
    return WaveFunction(grid, std::move(v));
}

std::vector<double> random_potential(int n, Rng& rng, double vmax) {
    std::uniform_real_distribution<double> u(0.0, vmax);
    std::vector<double> V(n);
    for (auto& x : V) {
        x = u(rng);
    }
    return V;
}

WaveFunction low_band_wave(const SpectralOperator& op, double alpha, double omega_max, Rng& rng) {
    std::normal_distribution<double> normal;
    const auto& h = op.symbol();
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(h.size());
    for (Eigen::Index j = 0; j < h.size(); ++j) {
        const double re = normal(rng);
        const double im = normal(rng);
        if (fractional_power(h[j], 1.0 / alpha) <= omega_max) {
            c[j] = Complex(re, im);
        }
    }
    return op.inverse(c);
}

std::vector<TestFunction> standard_test_functions() {
    using namespace std::complex_literals;
    return {
        TestFunction::gaussian(0.0, 1.0),
        TestFunction::gaussian(1.5, 0.5, 2.0 - 1.0i),
        TestFunction::gaussian(-2.0, 2.0),
        TestFunction({{1.0, 1, 0.0, 1.0}}),
        TestFunction({{0.5i, 2, 1.0, 0.8}}),
        TestFunction({{1.0, 4, 0.0, 0.7}}),
        TestFunction({{1.0, 8, -0.5, 0.6}}),
        TestFunction({{1.0, 0, -1.0, 0.5}, {-0.7, 0, 1.0, 1.0}}),
        TestFunction({{1.0 + 1.0i, 3, 2.0, 1.2}, {0.3, 0, -3.0, 0.5}}),
    };
}

// Spectral group.

CheckReport check_norm_conservation(const SpectralOperator& op, FractionalOrder alpha,
                                    const WaveFunction& v, const std::vector<double>& times) {
    const double norm0 = v.norm();
    double worst = 0.0;
    for (double t : times) {
        worst = std::max(worst, std::abs(propagate(op, alpha, t, v).norm() - norm0));
    }
    Json meta = operator_meta(op, alpha.value());
    meta["times"] = times;
    meta["norm"] = norm0;
    return make_report("norm_conservation", worst, 1e-12 * std::max(1.0, norm0), std::move(meta));
}

CheckReport check_group_law(const SpectralOperator& op, FractionalOrder alpha,
                            const WaveFunction& v,
                            const std::vector<std::pair<double, double>>& pairs) {
    const double norm0 = v.norm();
    if (norm0 == 0.0) {
        throw DegenerateInputError("group-law check needs a nonzero wave function");
    }
    double worst = 0.0;
    Json listed = Json::array();
    for (const auto& [t, s] : pairs) {
        const auto composed = propagate(op, alpha, t, propagate(op, alpha, s, v));
        const auto direct = propagate(op, alpha, t + s, v);
        worst = std::max(worst, (composed - direct).norm() / norm0);
        listed.push_back({t, s});
    }
    Json meta = operator_meta(op, alpha.value());
    meta["pairs"] = std::move(listed);
    return make_report("group_law", worst, 1e-12, std::move(meta));
}

CheckReport check_generator(const SpectralOperator& op, FractionalOrder alpha,
                            const WaveFunction& v, const std::vector<double>& dt_list) {
    if (dt_list.size() < 3) {
        throw SpecError("generator check needs at least three dt values");
    }
    for (double dt : dt_list) {
        if (!(dt > 0.0) || !std::isfinite(dt)) {
            throw SpecError("generator check step sizes must be positive");
        }
    }
    const double norm0 = v.norm();
    if ((v - band_limit(op, v)).norm() > 1e-10 * norm0) {
        throw SpecError("generator check needs v with its top 10% of modes removed");
    }
    const double al = alpha.value();
    const auto g = generator_apply(op, alpha, v);
    const double g_norm = g.norm();
    Eigen::VectorXcd second(op.symbol().size());
    for (Eigen::Index j = 0; j < second.size(); ++j) {
        second[j] = fractional_power(op.symbol()[j], 2.0 / al);
    }
    // The Taylor bound is sharp as dt -> 0, so the margin is relative.
    const double c0 = 0.5 * op.multiply(second, v).norm() * 1.1;

    std::vector<double> residuals;
    std::vector<double> floors;
    for (double dt : dt_list) {
        const auto u = propagate(op, alpha, dt, v);
        const Eigen::VectorXcd quotient = (u.values() - v.values()) / dt - g.values();
        residuals.push_back(WaveFunction(v.grid(), quotient).norm());
        floors.push_back(1e-12 * (norm0 / dt + g_norm));
    }
    Json orders = Json::array();
    double worst_order = 0.0;
    for (std::size_t k = 0; k + 1 < dt_list.size(); ++k) {
        if (residuals[k] <= floors[k] || residuals[k + 1] <= floors[k + 1]) {
            continue;
        }
        const double order = std::log(residuals[k] / residuals[k + 1]) /
                             std::log(dt_list[k] / dt_list[k + 1]);
        orders.push_back(order);
        worst_order = std::max(worst_order, std::abs(order - 1.0));
    }
    const auto smallest =
        std::min_element(dt_list.begin(), dt_list.end()) - dt_list.begin();
    const double dt_min = dt_list[smallest];
    const double bound_ratio = residuals[smallest] / (c0 * dt_min + floors[smallest]);

    Json meta = operator_meta(op, al);
    meta["dt"] = dt_list;
    meta["residuals"] = residuals;
    meta["orders"] = std::move(orders);
    meta["C0"] = c0;
    meta["bound_ratio"] = bound_ratio;
    return make_report("generator", std::max(worst_order / 0.1, bound_ratio), 1.0, std::move(meta));
}

namespace {

WaveFunction rk4(const SpectralOperator& op, FractionalOrder alpha, const WaveFunction& v, double T,
                 int steps) {
    const double dt = T / steps;
    const GridSpec& grid = v.grid();
    Eigen::VectorXcd u = v.values();
    auto rhs = [&](const Eigen::VectorXcd& x) {
        return generator_apply(op, alpha, WaveFunction(grid, x)).values();
    };
    for (int k = 0; k < steps; ++k) {
        const Eigen::VectorXcd k1 = rhs(u);
        const Eigen::VectorXcd k2 = rhs(u + 0.5 * dt * k1);
        const Eigen::VectorXcd k3 = rhs(u + 0.5 * dt * k2);
        const Eigen::VectorXcd k4 = rhs(u + dt * k3);
        u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return WaveFunction(grid, std::move(u));
}

}  // namespace

CheckReport check_equivalence(const SpectralOperator& op, FractionalOrder alpha,
                              const WaveFunction& v, double T, int steps) {
    if (steps < 8) {
        throw SpecError("equivalence check needs at least 8 steps");
    }
    if (!std::isfinite(T)) {
        throw SpecError("equivalence check needs a finite final time");
    }
    const double norm0 = v.norm();
    if (norm0 == 0.0) {
        throw DegenerateInputError("equivalence check needs a nonzero wave function");
    }
    const double al = alpha.value();
    const double omega_max = max_omega(op, al);
    const double dt = std::abs(T) / steps;
    if (dt * omega_max > 2.8) {
        const auto needed = static_cast<long long>(std::ceil(std::abs(T) * omega_max / 2.8));
        std::ostringstream msg;
        msg << "RK4 step dt * max h^(1/alpha) = " << dt * omega_max
            << " exceeds 2.8; use at least " << needed << " steps";
        throw StabilityError(msg.str());
    }
    Json meta = operator_meta(op, al);
    meta["T"] = T;
    meta["steps"] = steps;
    if (T == 0.0) {
        meta["relative_error"] = 0.0;
        meta["order_measured"] = false;
        return make_report("equivalence", 0.0, 1.0, std::move(meta));
    }
    const auto exact = propagate(op, alpha, T, v);
    const double err = (rk4(op, alpha, v, T, steps) - exact).norm() / norm0;
    const double err_fine = (rk4(op, alpha, v, T, 2 * steps) - exact).norm() / norm0;

    const auto mass = spectral_mass(op, v);
    double estimate = 0.0;
    for (Eigen::Index j = 0; j < mass.size(); ++j) {
        const double omega = fractional_power(op.symbol()[j], 1.0 / al);
        const double e = std::abs(T) * std::pow(omega, 5) * std::pow(dt, 4) / 120.0;
        estimate += mass[j] * e * e;
    }
    estimate = std::sqrt(estimate) / norm0;
    const double tol = std::max(1e-12, 2.0 * estimate);

    const bool measured = err_fine > 1e-13;
    const double order = measured ? std::log2(err / err_fine) : 0.0;
    double order_term = 0.0;
    if (measured) {
        order_term = order > 0.0 ? 3.7 / order : kInf;
    }

    meta["relative_error"] = err;
    meta["relative_error_fine"] = err_fine;
    meta["error_tolerance"] = tol;
    meta["order_measured"] = measured;
    meta["order"] = order;
    meta["dt_times_max_rate"] = dt * omega_max;
    return make_report("equivalence", std::max(err / tol, order_term), 1.0, std::move(meta));
}

// Fourier symbol.

namespace {

/// Trapezoid samples t_j, weights h w_j on [-T_w, T_w].
struct TrapezoidGrid {
    std::vector<double> t;
    std::vector<double> w;
};

TrapezoidGrid trapezoid(double half_width, int samples) {
    TrapezoidGrid g{std::vector<double>(samples), std::vector<double>(samples)};
    const double h = 2.0 * half_width / (samples - 1);
    for (int j = 0; j < samples; ++j) {
        g.t[j] = -half_width + j * h;
        g.w[j] = (j == 0 || j == samples - 1) ? 0.5 * h : h;
    }
    return g;
}

Complex fourier_sum(const TrapezoidGrid& g, const std::vector<Complex>& f, double sigma) {
    Complex sum = 0.0;
    for (std::size_t j = 0; j < g.t.size(); ++j) {
        sum += g.w[j] * f[j] * std::exp(-kI * sigma * g.t[j]);
    }
    return sum;
}

void require_envelope(const TestFunction& phi, double half_width) {
    for (const auto& term : phi.terms()) {
        const double gap = half_width - std::abs(term.center);
        if (!(gap > 0.0)) {
            throw SpecError("Fourier window must contain every term centre");
        }
        const double z = gap / term.width;
        const double edge =
            std::abs(term.coefficient) * std::pow(half_width, term.degree) * std::exp(-z * z);
        if (edge > 1e-14) {
            std::ostringstream msg;
            msg << "test function is " << edge << " at the window edge " << half_width
                << "; enlarge the window";
            throw SpecError(msg.str());
        }
    }
}

}  // namespace

CheckReport check_fourier_symbol(FractionalOrder alpha, const TestFunction& phi,
                                 const std::vector<double>& sigmas, const FourierWindow& window,
                                 const QuadratureSpec& quad) {
    if (window.samples < 512) {
        throw SpecError("Fourier check needs at least 512 samples");
    }
    if (!(window.half_width > 0.0) || !std::isfinite(window.half_width)) {
        throw SpecError("Fourier window must be positive");
    }
    quad.validate();
    require_envelope(phi, window.half_width);
    const double al = alpha.value();
    const double tw = window.half_width;
    Json meta = Json{{"alpha", al},
                     {"sigmas", sigmas},
                     {"window", tw},
                     {"samples", window.samples},
                     {"quadrature", quad_meta(quad)}};
    if (phi.is_zero()) {
        return make_report("fourier_symbol", 0.0, 1e-3, std::move(meta));
    }

    const auto grid = trapezoid(tw, window.samples);
    std::vector<Complex> phi_s(grid.t.size());
    std::vector<Complex> deriv_s(grid.t.size());
    for (std::size_t j = 0; j < grid.t.size(); ++j) {
        phi_s[j] = phi(grid.t[j]);
        deriv_s[j] = forward_deriv(alpha, phi, grid.t[j], quad);
    }

    // Right of the window D phi(t) = -(alpha / Gamma(1 - alpha)) int phi(s) (t - s)^(-alpha-1) ds.
    const GaussLegendreRule rule(quad.nodes_per_panel);
    const double s_lo = std::max(phi.support_lo(), -tw);
    const double s_hi = std::min(phi.support_hi(), tw);
    const auto s_breaks = uniform_breaks(
        s_lo, s_hi, std::max(1, static_cast<int>(std::ceil((s_hi - s_lo) / (0.25 * phi.min_width())))));
    auto right_tail = [&](double sigma) {
        return -al / std::tgamma(1.0 - al) *
               integrate(
                   [&](double s) {
                       return phi(s) * std::exp(-kI * sigma * s) *
                              power_oscillatory_tail(al + 1.0, sigma, tw - s);
                   },
                   s_breaks, rule);
    };

    const double phi_l1 = l1_norm(phi);
    double worst = 0.0;
    Json errors = Json::array();
    Json transforms = Json::array();
    for (double sigma : sigmas) {
        const Complex lhs = fourier_sum(grid, deriv_s, sigma) + right_tail(sigma);
        const Complex phi_hat = fourier_sum(grid, phi_s, sigma);
        const Complex rhs = imaginary_power(sigma, al) * phi_hat;
        transforms.push_back({phi_hat.real(), phi_hat.imag()});
        const double scale = sigma == 0.0 ? phi_l1 : std::abs(rhs);
        const double e = std::abs(lhs - rhs) / scale;
        errors.push_back(e);
        worst = std::max(worst, e);
    }
    meta["errors"] = std::move(errors);
    meta["phi_hat"] = std::move(transforms);

    // Informational: backward derivative of the sampled phi_hat against -F((i t)^alpha phi).
    const auto nonzero = std::find_if(sigmas.begin(), sigmas.end(), [](double s) { return s != 0.0; });
    if (nonzero != sigmas.end()) {
        const double sigma = *nonzero;
        std::vector<Complex> weighted(grid.t.size());
        std::vector<Complex> t_phi(grid.t.size());
        double max_center = 0.0;
        for (const auto& term : phi.terms()) {
            max_center = std::max(max_center, std::abs(term.center));
        }
        for (std::size_t j = 0; j < grid.t.size(); ++j) {
            weighted[j] = imaginary_power(grid.t[j], al) * phi_s[j];
            t_phi[j] = -kI * grid.t[j] * phi_s[j];
        }
        const double reach = 2.0 * TestFunction::kEnvelopeWidths / phi.min_width();
        const std::vector<Feature> features{
            {-reach, reach, 2.0 / (phi.max_width() + 2.0 * max_center)}};
        const Complex lhs =
            detail::regularized_backward_integral(
                al, [&](double x) { return fourier_sum(grid, phi_s, x); },
                [&](double x) { return fourier_sum(grid, t_phi, x); }, sigma, features, quad,
                rule) *
            (al / std::tgamma(1.0 - al));
        const Complex rhs = -fourier_sum(grid, weighted, sigma);
        meta["backward_identity"] = Json{{"sigma", sigma},
                                         {"lhs", {lhs.real(), lhs.imag()}},
                                         {"rhs", {rhs.real(), rhs.imag()}},
                                         {"relative_difference", std::abs(lhs - rhs) / std::abs(rhs)},
                                         {"informational", true}};
    }
    return make_report("fourier_symbol", worst, 1e-3, std::move(meta));
}

// Kernel, scalar and duality groups.

CheckReport check_convolution(FractionalOrder alpha, const std::vector<double>& frequencies,
                              const std::vector<double>& times, const QuadratureSpec& quad) {
    double worst = 0.0;
    for (double a : frequencies) {
        for (double t : times) {
            const auto r = convolve_exponential(1.0 - alpha.value(), a, t, quad);
            worst = std::max(worst, std::abs(r.value - r.oracle));
        }
    }
    return make_report("exponential_convolution", worst, 1e-4,
                       Json{{"alpha", alpha.value()},
                            {"frequencies", frequencies},
                            {"times", times},
                            {"quadrature", quad_meta(quad)}});
}

CheckReport check_love_identity(FractionalOrder alpha, double a, const std::vector<double>& times,
                                const QuadratureSpec& quad) {
    double worst = 0.0;
    for (double t : times) {
        worst = std::max(worst, love_identity_residual(alpha, a, t, quad));
    }
    return make_report("love_identity", worst, 1e-4,
                       Json{{"alpha", alpha.value()},
                            {"a", a},
                            {"times", times},
                            {"quadrature", quad_meta(quad)}});
}

CheckReport check_scalar_solutions(const ScalarProblem& prob, const std::vector<Complex>& amplitudes,
                                   const QuadratureSpec& quad) {
    double worst = 0.0;
    Json ks = Json::array();
    for (const Complex k : amplitudes) {
        worst = std::max(worst, scalar_weak_residual(prob, {k, prob.a}, quad));
        ks.push_back({k.real(), k.imag()});
    }
    return make_report("scalar_weak_solution", worst, 1e-4,
                       Json{{"alpha", prob.alpha.value()},
                            {"a", prob.a},
                            {"amplitudes", std::move(ks)},
                            {"family_size", prob.test_family.size()},
                            {"quadrature", quad_meta(quad)}});
}

CheckReport check_scalar_separation(const ScalarProblem& prob, const ExponentialSignal& u,
                                    double threshold, const QuadratureSpec& quad) {
    const double r = scalar_weak_residual(prob, u, quad);
    return make_report("scalar_non_solution", r > 0.0 ? threshold / r : kInf, 1.0,
                       Json{{"alpha", prob.alpha.value()},
                            {"a", prob.a},
                            {"signal_frequency", u.frequency},
                            {"weak_residual", r},
                            {"threshold", threshold},
                            {"family_size", prob.test_family.size()}});
}

CheckReport check_positivity(const GridSpec& grid, int trials, Rng& rng) {
    double lowest = kInf;
    for (int k = 0; k < trials; ++k) {
        const auto op = build_schrodinger(grid, random_potential(grid.n, rng));
        lowest = std::min(lowest, op.unclamped_min());
    }
    auto bad = random_potential(grid.n, rng);
    bad[grid.n / 3] = -1e-3;
    bool rejected = false;
    try {
        build_schrodinger(grid, bad);
    } catch (const DomainError&) {
        rejected = true;
    }
    const double residual = rejected ? std::max(0.0, -lowest) : kInf;
    return make_report("positivity", residual, 1e-10,
                       Json{{"grid", grid_meta(grid)},
                            {"trials", trials},
                            {"min_eigenvalue", lowest},
                            {"negative_potential_rejected", rejected}});
}

CheckReport check_caputo_contrast(double alpha, double lambda, const std::vector<double>& t_grid) {
    const auto rows = caputo_compare(alpha, lambda, t_grid);
    double weyl = 0.0;
    double caputo = 0.0;
    double at = 0.0;
    for (const auto& row : rows) {
        weyl = std::max(weyl, std::abs(row.modulus_weyl - 1.0));
        const double d = std::abs(row.modulus_caputo - 1.0);
        if (d > caputo) {
            caputo = d;
            at = row.t;
        }
    }
    const double residual = std::max(weyl / 1e-15, caputo > 0.0 ? 1e-3 / caputo : kInf);
    return make_report("caputo_contrast", residual, 1.0,
                       Json{{"alpha", alpha},
                            {"lambda", lambda},
                            {"times", t_grid},
                            {"weyl_deviation", weyl},
                            {"caputo_deviation", caputo},
                            {"caputo_deviation_at", at}});
}

CheckReport check_duality_bound(FractionalOrder alpha, const std::vector<TestFunction>& family,
                                const QuadratureSpec& quad) {
    double worst = -kInf;
    Json ratios = Json::array();
    for (const auto& phi : family) {
        const double ratio = backward_deriv_l1_norm(alpha, phi, quad) / duality_bound(alpha, phi);
        ratios.push_back(ratio);
        worst = std::max(worst, ratio);
    }
    return make_report("duality_bound", std::max(0.0, worst - 1.0), 1e-3,
                       Json{{"alpha", alpha.value()},
                            {"ratios", std::move(ratios)},
                            {"quadrature", quad_meta(quad)}});
}

// Suite.

const std::vector<std::string>& suite_groups() {
    static const std::vector<std::string> names{"kernel", "scalar", "spectral",
                                                "fourier", "caputo", "duality"};
    return names;
}

namespace {

constexpr long long kMaxSuiteSteps = 1 << 20;

CheckReport renamed(CheckReport r, const std::string& name) {
    r.name = name;
    return r;
}

void spectral_checks(const SpectralOperator& op, const std::string& tag, FractionalOrder alpha,
                     Rng& rng, std::vector<CheckReport>& out) {
    const double al = alpha.value();

    std::uniform_real_distribution<double> time(-10.0, 10.0);
    std::vector<double> times;
    for (int k = 0; k < 20; ++k) {
        times.push_back(time(rng));
    }
    out.push_back(renamed(check_norm_conservation(op, alpha, random_wave(op.grid(), rng), times),
                          "norm_conservation_" + tag));

    std::vector<std::pair<double, double>> pairs;
    for (int k = 0; k < 18; ++k) {
        pairs.emplace_back(dyadic_time(rng, 10.0), dyadic_time(rng, 10.0));
    }
    const double t = dyadic_time(rng, 10.0);
    pairs.emplace_back(t, -t);
    pairs.emplace_back(t, 0.0);
    out.push_back(renamed(check_group_law(op, alpha, random_wave(op.grid(), rng), pairs),
                          "group_law_" + tag));

    // Low-band data keep omega dt small, where the asymptotic orders are visible.
    const double omega_cap = 20.0;
    auto low_band = [&] { return band_limit(op, low_band_wave(op, al, omega_cap, rng)); };
    out.push_back(renamed(check_generator(op, alpha, low_band(), {1e-2, 5e-3, 2.5e-3}),
                          "generator_" + tag));

    const double T = 0.1;
    const auto v = low_band();
    long long steps = 256;
    while (T * max_omega(op, al) / steps > 2.0 && steps < kMaxSuiteSteps) {
        steps *= 2;
    }
    try {
        out.push_back(renamed(check_equivalence(op, alpha, v, T, static_cast<int>(steps)),
                              "equivalence_" + tag));
    } catch (const StabilityError& e) {
        // Small alpha makes h^(1/alpha) too stiff for explicit stepping on this grid.
        Json meta = operator_meta(op, al);
        meta["T"] = T;
        meta["steps"] = steps;
        meta["error"] = e.what();
        out.push_back(make_report("equivalence_" + tag, kInf, 1.0, std::move(meta)));
    }
}

}  // namespace

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
    const FractionalOrder alpha(config.alpha);
    config.quad.validate();
    for (const auto& g : config.groups) {
        if (std::find(suite_groups().begin(), suite_groups().end(), g) == suite_groups().end()) {
            throw SpecError("unknown check group '" + g + "'");
        }
    }
    auto wanted = [&](const std::string& g) {
        return config.groups.empty() ||
               std::find(config.groups.begin(), config.groups.end(), g) != config.groups.end();
    };
    Rng rng(config.seed);
    std::vector<CheckReport> out;

    if (wanted("kernel")) {
        std::uniform_real_distribution<double> time(-5.0, 5.0);
        std::vector<double> times;
        for (int k = 0; k < 5; ++k) {
            times.push_back(time(rng));
        }
        out.push_back(check_convolution(alpha, {1.0, 2.0}, times, config.quad));
        out.push_back(check_love_identity(alpha, 1.0, {0.5, std::numbers::pi}, config.quad));
    }
    if (wanted("scalar")) {
        const auto family = default_test_family();
        for (double a : {1.0, 2.0}) {
            const ScalarProblem prob{alpha, a, family};
            out.push_back(renamed(check_scalar_solutions(prob, {1.0, kI}, config.quad),
                                  a == 1.0 ? "scalar_weak_solution_a1" : "scalar_weak_solution_a2"));
        }
        const ScalarProblem single{alpha, 1.0, {TestFunction::gaussian(0.0, 1.0)}};
        out.push_back(renamed(check_scalar_separation(single, {1.0, 0.0}, 0.05, config.quad),
                              "scalar_constant_counterexample"));
        const ScalarProblem prob{alpha, 1.0, family};
        for (double a : {0.5, 2.0}) {
            out.push_back(renamed(check_scalar_separation(prob, {1.0, a}, 0.05, config.quad),
                                  a == 0.5 ? "scalar_frequency_selectivity_a0.5"
                                           : "scalar_frequency_selectivity_a2"));
        }
    }
    if (wanted("spectral")) {
        const GridSpec grid{config.n, config.n * std::numbers::pi / 4.0};
        grid.validate();
        spectral_checks(build_free_laplacian(grid), "free", alpha, rng, out);
        const auto V = config.potential ? *config.potential : random_potential(grid.n, rng);
        spectral_checks(build_schrodinger(grid, V), "schrodinger", alpha, rng, out);
        out.push_back(check_positivity(grid, 20, rng));
    }
    if (wanted("fourier")) {
        out.push_back(check_fourier_symbol(alpha, TestFunction::gaussian(0.0, 1.0),
                                           {0.0, 0.5, 1.0, 2.0, 5.0}, {}, config.quad));
    }
    if (wanted("caputo")) {
        std::vector<double> grid;
        for (int k = 0; k <= 20; ++k) {
            grid.push_back(0.1 * k);
        }
        out.push_back(check_caputo_contrast(config.alpha, 1.0, grid));
    }
    if (wanted("duality")) {
        out.push_back(check_duality_bound(alpha, standard_test_functions(), config.quad));
    }
    for (auto& r : out) {
        r.metadata["seed"] = config.seed;
    }
    return out;
}

}  // namespace fracschro
