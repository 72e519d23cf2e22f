// Runs every acceptance criterion at full size and prints one PASS/FAIL line each.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fracschro/errors.hpp"
#include "fracschro/harness.hpp"
#include "fracschro/kernel.hpp"
#include "fracschro/scalar.hpp"
#include "fracschro/spectral.hpp"
#include "oracles.hpp"

using namespace fracschro;

namespace {

constexpr std::uint64_t kSeed = 20261014;
const Complex kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            detail << " [failed: " << what << "]";
        }
    }
    void absorb(const CheckReport& r) {
        detail << " " << r.name << "=" << r.residual << "/" << r.tolerance;
        require(r.passed, r.name);
    }
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

/// Multiples of 1/64 in [-span, span]; exact sums keep phase roundoff out of the group law.
double dyadic(Rng& rng, double span) {
    std::uniform_int_distribution<int> d(-static_cast<int>(64 * span), static_cast<int>(64 * span));
    return d(rng) / 64.0;
}

std::vector<SpectralOperator> operators(int n, Rng& rng) {
    const GridSpec grid{n, n * std::numbers::pi / 4.0};
    return {build_free_laplacian(grid), build_schrodinger(grid, random_potential(n, rng))};
}

Outcome scalar_solutions() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const QuadratureSpec quad{1e4, 64, 16, 1};
    double worst = 0.0;
    double weakest = kInf;
    for (double alpha : {0.25, 0.5, 0.75}) {
        for (double a : {1.0, 2.0}) {
            const ScalarProblem prob{FractionalOrder(alpha), a, default_test_family()};
            for (Complex k : {Complex(1.0), kI}) {
                worst = std::max(worst, scalar_weak_residual(prob, {k, a}, quad));
            }
        }
        const ScalarProblem single{FractionalOrder(alpha), 1.0, {TestFunction::gaussian(0.0, 1.0)}};
        weakest = std::min(weakest, scalar_weak_residual(single, {1.0, 0.0}, quad));
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.detail << " worst solution residual " << sci(worst) << ", smallest counterexample residual "
             << weakest << ", " << seconds << " s";
    o.require(worst <= 1e-4, "solution residual <= 1e-4");
    o.require(weakest > 0.05, "counterexample residual > 0.05");
    o.require(seconds < 20.0, "runtime < 20 s");
    return o;
}

Outcome convolution(Rng& rng) {
    Outcome o;
    std::uniform_real_distribution<double> time(-5.0, 5.0);
    std::vector<double> times;
    for (int k = 0; k < 5; ++k) {
        times.push_back(time(rng));
    }
    for (double alpha : {0.25, 0.5, 0.75}) {
        auto r = check_convolution(FractionalOrder(alpha), {1.0, 2.0}, times);
        r.name += "_a" + std::to_string(alpha).substr(0, 4);
        o.absorb(r);
    }
    return o;
}

Outcome love() {
    Outcome o;
    for (double alpha : {0.25, 0.5}) {
        auto r = check_love_identity(FractionalOrder(alpha), 1.0, {0.5, std::numbers::pi});
        r.name += "_a" + std::to_string(alpha).substr(0, 4);
        o.absorb(r);
    }
    return o;
}

Outcome norm_conservation(Rng& rng) {
    Outcome o;
    std::uniform_real_distribution<double> order(0.05, 1.0);
    std::uniform_real_distribution<double> time(-10.0, 10.0);
    double worst = 0.0;
    for (int n : {64, 256}) {
        for (const auto& op : operators(n, rng)) {
            const auto v = random_wave(op.grid(), rng);
            for (int trial = 0; trial < 20; ++trial) {
                const double alpha = order(rng);
                const double t = time(rng);
                const auto r = check_norm_conservation(op, FractionalOrder(alpha), v, {t});
                worst = std::max(worst, r.residual / (r.tolerance / 1e-12));
                o.require(r.passed, "n=" + std::to_string(n) + " alpha=" + std::to_string(alpha));
            }
        }
    }
    o.detail << " worst drift (scaled to unit norm) " << sci(worst) << " over 80 runs";
    return o;
}

Outcome group_law(Rng& rng) {
    Outcome o;
    for (int n : {64, 256}) {
        for (const auto& op : operators(n, rng)) {
            std::vector<std::pair<double, double>> pairs;
            for (int k = 0; k < 19; ++k) {
                pairs.emplace_back(dyadic(rng, 10.0), dyadic(rng, 10.0));
            }
            const double t = dyadic(rng, 10.0);
            pairs.emplace_back(t, -t);
            auto r = check_group_law(op, FractionalOrder(0.5), random_wave(op.grid(), rng), pairs);
            r.name += "_n" + std::to_string(n) + (op.basis() == SpectralOperator::Basis::fourier ? "_free" : "_v");
            o.absorb(r);
        }
    }
    return o;
}

Outcome generator(Rng& rng) {
    Outcome o;
    for (const auto& op : operators(64, rng)) {
        const auto v = band_limit(op, low_band_wave(op, 0.5, 20.0, rng));
        auto r = check_generator(op, FractionalOrder(0.5), v, {1e-2, 5e-3, 2.5e-3});
        double lo = kInf, hi = 0.0;
        for (double p : r.metadata["orders"]) {
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        o.detail << " orders [" << lo << ", " << hi << "]";
        o.absorb(r);
    }
    return o;
}

Outcome equivalence(Rng& rng) {
    Outcome o;
    for (const auto& op : operators(32, rng)) {
        const auto v = band_limit(op, low_band_wave(op, 0.5, 20.0, rng));
        const auto r = check_equivalence(op, FractionalOrder(0.5), v, 0.1, 256);
        const double err = r.metadata["relative_error"];
        const double order = r.metadata["order_measured"] == true ? double(r.metadata["order"]) : 0.0;
        o.detail << " err " << sci(err) << " order " << order;
        o.require(err <= 1e-8, "terminal error <= 1e-8");
        o.require(order >= 3.7, "observed order >= 3.7");
    }
    return o;
}

Outcome fourier() {
    Outcome o;
    const auto r = check_fourier_symbol(FractionalOrder(0.5), TestFunction::gaussian(0.0, 1.0),
                                        {0.5, 1.0, 2.0, 5.0});
    double worst = 0.0;
    for (double e : r.metadata["errors"]) {
        worst = std::max(worst, e);
    }
    o.detail << " worst relative error " << sci(worst);
    o.require(worst <= 1e-3, "relative error <= 1e-3");
    o.absorb(r);
    return o;
}

Outcome positivity(Rng& rng) {
    Outcome o;
    o.absorb(check_positivity(GridSpec{64, 16.0 * std::numbers::pi}, 20, rng));
    return o;
}

Outcome caputo() {
    Outcome o;
    std::vector<double> grid;
    for (int k = 0; k <= 20; ++k) {
        grid.push_back(0.1 * k);
    }
    const auto r = check_caputo_contrast(0.5, 1.0, grid);
    o.detail << " max deviation " << double(r.metadata["caputo_deviation"]);
    o.absorb(r);
    // |E_{1/2}(e^{i pi/4})|, frozen from the series oracle.
    const double pinned = 2.0255412900695249;
    const double at_one = caputo_compare(0.5, 1.0, {1.0})[0].modulus_caputo;
    const double oracle_value = std::abs(oracle::mittag_leffler_half(std::polar(1.0, std::numbers::pi / 4)));
    o.detail << ", modulus at t=1 " << at_one;
    o.require(std::abs(at_one - pinned) <= 1e-12, "regression value at t=1");
    o.require(std::abs(oracle_value - pinned) <= 1e-12, "oracle value at t=1");
    return o;
}

Outcome duality() {
    Outcome o;
    for (double alpha : {0.25, 0.5, 0.75}) {
        auto r = check_duality_bound(FractionalOrder(alpha), standard_test_functions());
        r.name += "_a" + std::to_string(alpha).substr(0, 4);
        o.absorb(r);
    }
    return o;
}

}  // namespace

int main() {
    Rng rng(kSeed);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"scalar weak solutions and counterexample", scalar_solutions},
        {"exponential convolution identity", [&] { return convolution(rng); }},
        {"Love identity", love},
        {"norm conservation", [&] { return norm_conservation(rng); }},
        {"group law and reversibility", [&] { return group_law(rng); }},
        {"generator first-order convergence", [&] { return generator(rng); }},
        {"RK4 equivalence", [&] { return equivalence(rng); }},
        {"Fourier symbol", fourier},
        {"positivity and negative-potential rejection", [&] { return positivity(rng); }},
        {"Caputo contrast", caputo},
        {"duality bound", duality},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [title, run] = criteria[i];
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        failures += o.passed ? 0 : 1;
        std::cout << (o.passed ? "PASS" : "FAIL") << " " << (i + 1) << " " << title << ":"
                  << o.detail.str() << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
