#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "fracschro/errors.hpp"
#include "fracschro/spectral.hpp"
#include "oracles.hpp"

using namespace fracschro;
using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;

WaveFunction random_wave(const GridSpec& grid, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Eigen::VectorXcd v(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        v[j] = Complex(normal(rng), normal(rng));
    }
    return WaveFunction(grid, v);
}

std::vector<double> random_potential(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 3.0);
    std::vector<double> V(n);
    for (auto& x : V) {
        x = u(rng);
    }
    return V;
}

std::vector<double> sorted(const Eigen::VectorXd& h) {
    std::vector<double> s(h.data(), h.data() + h.size());
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS((GridSpec{3, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((GridSpec{0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((GridSpec{4, 0.0}.validate()), DomainError);
    CHECK_NOTHROW((GridSpec{2, 0.5}.validate()));
    CHECK(GridSpec{8, 4.0}.dx() == 0.5);
    CHECK_THROWS_AS(WaveFunction(GridSpec{4, 1.0}, Eigen::VectorXcd::Zero(3)), ContractError);
}

TEST_CASE("discrete L2 norm and pairing") {
    const GridSpec grid{8, 4.0};
    const auto one = WaveFunction(grid, Eigen::VectorXcd::Ones(8));
    CHECK(one.norm() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(one.inner(WaveFunction(grid, Eigen::VectorXcd::Constant(8, 1.0i))) == 4.0i);
    CHECK_THROWS_AS(one.inner(WaveFunction::zeros(GridSpec{8, 2.0})), ContractError);
}

TEST_CASE("free Laplacian symbol") {
    const auto op = build_free_laplacian({4, 2.0 * kPi});
    const auto h = sorted(op.symbol());
    REQUIRE(h.size() == 4);
    CHECK(h[0] == doctest::Approx(0.0));
    CHECK(h[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h[2] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h[3] == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(signed_mode(2, 4) == -2);
    CHECK(signed_mode(3, 4) == -1);
}

TEST_CASE("free Laplacian on resolved modes") {
    const GridSpec grid{64, 2.0 * kPi};
    const auto op = build_free_laplacian(grid);
    const auto constant = WaveFunction(grid, Eigen::VectorXcd::Constant(64, 0.7 - 0.2i));
    CHECK(op.apply(constant).norm() < 1e-13);
    const auto mass = spectral_mass(op, constant);
    CHECK(mass[0] == doctest::Approx(constant.norm() * constant.norm()).epsilon(1e-13));

    const auto e1 = WaveFunction::mode(grid, 1);
    CHECK((op.apply(e1) - e1).norm() < 1e-12);
    const auto e5 = WaveFunction::mode(grid, -5);
    CHECK((e5.values() * 25.0 - op.apply(e5).values()).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("bases are unitary and the operator is self-adjoint") {
    std::mt19937_64 rng(11);
    const GridSpec grid{64, 16.0};
    for (const auto& op : {build_free_laplacian(grid), build_schrodinger(grid, random_potential(64, rng))}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto v = random_wave(grid, rng);
            const auto w = random_wave(grid, rng);
            CHECK(std::abs(op.forward(v).norm() - v.norm()) < 1e-12 * v.norm());
            CHECK((op.inverse(op.forward(v)) - v).norm() < 1e-13 * v.norm());
            const Complex lhs = op.apply(v).inner(w);
            const Complex rhs = v.inner(op.apply(w));
            CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(lhs)));
        }
    }
}

TEST_CASE("Schrodinger operator eigenvalues") {
    const auto two = build_schrodinger({2, 2.0}, {0.0, 0.0});
    CHECK(two.symbol()[0] == doctest::Approx(0.0));
    CHECK(two.symbol()[1] == doctest::Approx(4.0).epsilon(1e-14));

    const GridSpec grid{16, 3.0};
    const auto base = build_schrodinger(grid, std::vector<double>(16, 0.0));
    const auto shifted = build_schrodinger(grid, std::vector<double>(16, 1.25));
    for (int j = 0; j < 16; ++j) {
        CHECK(std::abs(shifted.symbol()[j] - base.symbol()[j] - 1.25) < 1e-12);
    }

    // At V = 0 the spectrum is the stencil symbol, not k^2.
    std::vector<double> stencil;
    for (int j = 0; j < 16; ++j) {
        stencil.push_back(stencil_symbol(grid, signed_mode(j, 16)));
    }
    std::sort(stencil.begin(), stencil.end());
    const auto h = sorted(base.symbol());
    for (int j = 0; j < 16; ++j) {
        CHECK(std::abs(h[j] - stencil[j]) < 1e-12 * (1.0 + stencil[j]));
    }
    const auto free_h = sorted(build_free_laplacian(grid).symbol());
    CHECK(free_h[15] > h[15]);
}

TEST_CASE("Schrodinger operator positivity and rejection of negative V") {
    std::mt19937_64 rng(5);
    const GridSpec grid{64, 10.0};
    for (int trial = 0; trial < 5; ++trial) {
        CHECK(build_schrodinger(grid, random_potential(64, rng)).symbol().minCoeff() >= 0.0);
    }
    auto V = random_potential(64, rng);
    V[17] = -1e-3;
    CHECK_THROWS_AS(build_schrodinger(grid, V), DomainError);
    CHECK_THROWS_AS(build_schrodinger(grid, std::vector<double>(32, 0.0)), ContractError);
}

TEST_CASE("propagate examples") {
    const GridSpec grid{64, 2.0 * kPi};
    const auto op = build_free_laplacian(grid);
    const FractionalOrder half(0.5);
    const auto e1 = WaveFunction::mode(grid, 1);
    CHECK((propagate(op, half, kPi, e1).values() + e1.values()).cwiseAbs().maxCoeff() < 1e-12);

    std::mt19937_64 rng(3);
    const auto v = random_wave(grid, rng);
    CHECK((propagate(op, half, 0.0, v) - v).norm() < 1e-14 * v.norm());
    CHECK_THROWS_AS(propagate(op, half, 1.0, WaveFunction::zeros({32, 2.0 * kPi})), ContractError);
}

TEST_CASE("propagate matches direct mode summation") {
    // L = 32 keeps t h^(1/alpha) moderate so the oracle's own phases stay accurate.
    const GridSpec grid{32, 32.0};
    const auto op = build_free_laplacian(grid);
    std::mt19937_64 rng(8);
    const auto v = random_wave(grid, rng);
    for (double alpha : {0.3, 0.5, 0.9}) {
        const double t = 0.37;
        const auto ours = propagate(op, FractionalOrder(alpha), t, v);
        const std::vector<Complex> raw(v.values().data(), v.values().data() + grid.n);
        const auto want = oracle::free_propagation(raw, grid.L, alpha, t);
        double err = 0.0;
        for (int j = 0; j < grid.n; ++j) {
            err = std::max(err, std::abs(ours[j] - want[j]));
        }
        CHECK(err < 1e-11);
    }
}

TEST_CASE("unitary group properties") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> time(-10.0, 10.0);
    const GridSpec grid{64, 16.0};
    const FractionalOrder alpha(0.6);
    for (const auto& op : {build_free_laplacian(grid), build_schrodinger(grid, random_potential(64, rng))}) {
        const auto v = random_wave(grid, rng);
        for (int k = 0; k < 20; ++k) {
            // Dyadic times keep t + s exact.
            const double t = std::ldexp(std::round(std::ldexp(time(rng), 10)), -10);
            const double s = std::ldexp(std::round(std::ldexp(time(rng), 10)), -10);
            const auto ut = propagate(op, alpha, t, v);
            CHECK(std::abs(ut.norm() - v.norm()) <= 1e-12 * v.norm());
            CHECK((propagate(op, alpha, t, propagate(op, alpha, s, v)) - propagate(op, alpha, t + s, v))
                      .norm() <= 1e-12 * v.norm());
            CHECK((propagate(op, alpha, -t, ut) - v).norm() <= 1e-12 * v.norm());
        }
    }
}

TEST_CASE("strong continuity bound") {
    std::mt19937_64 rng(4);
    const GridSpec grid{64, 16.0};
    const auto op = build_schrodinger(grid, random_potential(64, rng));
    const FractionalOrder alpha(0.7);
    const auto v = band_limit(op, random_wave(grid, rng));
    const double g = generator_apply(op, alpha, v).norm();
    for (double t : {1e-2, -1e-3, 1e-4, 1e-6}) {
        CHECK((propagate(op, alpha, t, v) - v).norm() <= std::abs(t) * g * (1.0 + 1e-6));
    }
}

TEST_CASE("generator_apply") {
    const GridSpec grid{64, 2.0 * kPi};
    const auto op = build_free_laplacian(grid);
    const auto constant = WaveFunction(grid, Eigen::VectorXcd::Ones(64));
    CHECK(generator_apply(op, FractionalOrder(0.5), constant).norm() < 1e-13);
    const auto e1 = WaveFunction::mode(grid, 1);
    // Transform roundoff in the top modes is amplified by h^2 ~ 1e6.
    CHECK((generator_apply(op, FractionalOrder(0.5), e1).values() - 1.0i * e1.values())
              .cwiseAbs()
              .maxCoeff() < 1e-9);

    std::mt19937_64 rng(9);
    const auto s_op = build_schrodinger({64, 16.0}, random_potential(64, rng));
    const auto v = band_limit(s_op, random_wave({64, 16.0}, rng));
    const auto near_one = generator_apply(s_op, 1.0 - 1e-12, v);
    const auto direct = s_op.apply(v);
    CHECK((near_one.values() - 1.0i * direct.values()).norm() <= 1e-6 * direct.values().norm());
    CHECK_THROWS_AS(generator_apply(op, 0.0, e1), DomainError);
}

TEST_CASE("band_limit removes the top modes") {
    const GridSpec grid{20, 2.0 * kPi};
    const auto op = build_free_laplacian(grid);
    std::mt19937_64 rng(2);
    const auto v = band_limit(op, random_wave(grid, rng));
    const auto mass = spectral_mass(op, v);
    int zeroed = 0;
    for (int j = 0; j < 20; ++j) {
        if (std::abs(signed_mode(j, 20)) >= 9) {
            CHECK(mass[j] < 1e-28);
        }
        zeroed += mass[j] < 1e-28;
    }
    // ceil(0.1 * 20) = 2 modes, widened to the +-9 pair: m = -10, -9, 9.
    CHECK(zeroed == 3);
}

TEST_CASE("CSV input and output") {
    const auto dir = std::filesystem::temp_directory_path() / "fracschro_spectral_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "v.csv");
        f << "V\n0.5\n1.0\r\n\n2.25\n";
    }
    CHECK(read_potential_csv(dir / "v.csv") == std::vector<double>{0.5, 1.0, 2.25});
    {
        std::ofstream f(dir / "bad.csv");
        f << "0.5\nabc\n";
    }
    CHECK_THROWS_AS(read_potential_csv(dir / "bad.csv"), IoError);
    {
        std::ofstream f(dir / "two.csv");
        f << "0.5,1.0\n";
    }
    CHECK_THROWS_AS(read_potential_csv(dir / "two.csv"), IoError);
    CHECK_THROWS_AS(read_potential_csv(dir / "missing.csv"), IoError);

    std::ostringstream out;
    write_wave_csv(out, WaveFunction(GridSpec{2, 1.0}, Eigen::Vector2cd(1.0, 1.0i)));
    CHECK(out.str() == "x,re,im,abs2\n0.0,1.0,0.0,1.0\n0.5,0.0,1.0,1.0\n");
    std::filesystem::remove_all(dir);
}
