#include "fracschro/spectral.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "fracschro/errors.hpp"
#include "fracschro/format.hpp"

namespace fracschro {

namespace {

constexpr double kClampThreshold = -1e-10;

}  // namespace

void GridSpec::validate() const {
    if (n < 2 || n % 2 != 0) {
        throw DomainError("grid size n must be even and >= 2, got " + std::to_string(n));
    }
    if (!(L > 0.0) || !std::isfinite(L)) {
        throw DomainError("grid length L must be finite and > 0");
    }
}

WaveFunction::WaveFunction(const GridSpec& grid, Eigen::VectorXcd values)
    : grid_(grid), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != grid_.n) {
        throw ContractError("wave function has " + std::to_string(values_.size()) +
                            " values on a grid of " + std::to_string(grid_.n));
    }
}

WaveFunction WaveFunction::zeros(const GridSpec& grid) {
    return WaveFunction(grid, Eigen::VectorXcd::Zero(grid.n));
}

WaveFunction WaveFunction::gaussian(const GridSpec& grid, double center, double width) {
    if (!(width > 0.0)) {
        throw DomainError("Gaussian width must be > 0");
    }
    Eigen::VectorXcd v(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        const double z = (grid.x(j) - center) / width;
        v[j] = std::exp(-z * z);
    }
    return WaveFunction(grid, std::move(v));
}

WaveFunction WaveFunction::mode(const GridSpec& grid, int k) {
    Eigen::VectorXcd v(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        // Reduce k j mod n first so the phase is exact for large grids.
        const long long r = (static_cast<long long>(k) * j) % grid.n;
        v[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / grid.n);
    }
    return WaveFunction(grid, std::move(v));
}

double WaveFunction::norm() const { return std::sqrt(grid_.dx()) * values_.norm(); }

Complex WaveFunction::inner(const WaveFunction& other) const {
    if (!(grid_ == other.grid_)) {
        throw ContractError("inner product of wave functions on different grids");
    }
    return grid_.dx() * values_.dot(other.values_);
}

WaveFunction operator-(const WaveFunction& lhs, const WaveFunction& rhs) {
    if (!(lhs.grid_ == rhs.grid_)) {
        throw ContractError("difference of wave functions on different grids");
    }
    return WaveFunction(lhs.grid_, lhs.values_ - rhs.values_);
}

SpectralOperator::SpectralOperator(GridSpec grid, Basis basis, Eigen::VectorXd symbol,
                                   Eigen::MatrixXd vectors, double unclamped_min)
    : grid_(grid),
      basis_(basis),
      symbol_(std::move(symbol)),
      eigenvectors_(std::move(vectors)),
      unclamped_min_(unclamped_min) {}

void SpectralOperator::require_grid(const WaveFunction& v) const {
    if (!(v.grid() == grid_)) {
        throw ContractError("wave function grid does not match the operator grid");
    }
}

Eigen::VectorXcd SpectralOperator::forward(const WaveFunction& v) const {
    require_grid(v);
    const double dx = grid_.dx();
    if (basis_ == Basis::fourier) {
        Eigen::FFT<double> fft;
        Eigen::VectorXcd out(grid_.n);
        fft.fwd(out, v.values());
        return out * std::sqrt(dx / grid_.n);
    }
    return std::sqrt(dx) * (eigenvectors_.transpose() * v.values());
}

WaveFunction SpectralOperator::inverse(const Eigen::VectorXcd& coefficients) const {
    if (coefficients.size() != grid_.n) {
        throw ContractError("coefficient vector length does not match the grid");
    }
    const double dx = grid_.dx();
    if (basis_ == Basis::fourier) {
        Eigen::FFT<double> fft;
        Eigen::VectorXcd out(grid_.n);
        fft.inv(out, coefficients);
        return WaveFunction(grid_, out * std::sqrt(grid_.n / dx));
    }
    return WaveFunction(grid_, (eigenvectors_ * coefficients) / std::sqrt(dx));
}

WaveFunction SpectralOperator::multiply(const Eigen::VectorXcd& multiplier,
                                        const WaveFunction& v) const {
    if (multiplier.size() != grid_.n) {
        throw ContractError("multiplier length does not match the grid");
    }
    return inverse(multiplier.cwiseProduct(forward(v)));
}

WaveFunction SpectralOperator::apply(const WaveFunction& v) const {
    return multiply(symbol_.cast<Complex>(), v);
}

int signed_mode(int j, int n) { return j < n / 2 ? j : j - n; }

double stencil_symbol(const GridSpec& grid, int m) {
    const double dx = grid.dx();
    const double s = std::sin(std::numbers::pi * m / grid.n);
    // 2 - 2 cos(k dx) = 4 sin^2(k dx / 2), free of cancellation for small k
    return 4.0 * s * s / (dx * dx);
}

SpectralOperator build_free_laplacian(const GridSpec& grid) {
    grid.validate();
    Eigen::VectorXd h(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        const double k = 2.0 * std::numbers::pi * signed_mode(j, grid.n) / grid.L;
        h[j] = k * k;
    }
    return SpectralOperator(grid, SpectralOperator::Basis::fourier, std::move(h), {}, 0.0);
}

SpectralOperator build_schrodinger(const GridSpec& grid, const std::vector<double>& V) {
    grid.validate();
    if (static_cast<int>(V.size()) != grid.n) {
        throw ContractError("potential has " + std::to_string(V.size()) + " values on a grid of " +
                            std::to_string(grid.n));
    }
    for (std::size_t j = 0; j < V.size(); ++j) {
        if (!(V[j] >= 0.0) || !std::isfinite(V[j])) {
            throw DomainError("potential must be finite and nonnegative; V[" + std::to_string(j) +
                              "] = " + std::to_string(V[j]));
        }
    }
    const int n = grid.n;
    const double w = 1.0 / (grid.dx() * grid.dx());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        A(j, j) += 2.0 * w + V[j];
        A(j, (j + 1) % n) -= w;
        A(j, (j + n - 1) % n) -= w;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition of -Delta + V failed");
    }
    Eigen::VectorXd h = solver.eigenvalues();
    if (h.minCoeff() < kClampThreshold) {
        std::ostringstream msg;
        msg << "negative eigenvalue " << h.minCoeff() << " violates positivity of -Delta + V";
        throw NumericalError(msg.str());
    }
    const double lowest = h.minCoeff();
    h = h.cwiseMax(0.0);
    return SpectralOperator(grid, SpectralOperator::Basis::eigen, std::move(h),
                            solver.eigenvectors(), lowest);
}

double fractional_power(double h, double inv_alpha) {
    return h == 0.0 ? 0.0 : std::exp(inv_alpha * std::log(h));
}

WaveFunction propagate(const SpectralOperator& op, FractionalOrder alpha, double t,
                       const WaveFunction& v) {
    const double inv_alpha = 1.0 / alpha.value();
    const auto& h = op.symbol();
    Eigen::VectorXcd phase(h.size());
    for (Eigen::Index j = 0; j < h.size(); ++j) {
        // Extended precision keeps t h^(1/alpha) additive in t for large h.
        const long double theta = static_cast<long double>(t) *
                                  (h[j] == 0.0 ? 0.0L : std::exp(inv_alpha * std::log((long double)h[j])));
        const long double reduced = std::remainder(theta, 2.0L * std::numbers::pi_v<long double>);
        phase[j] = Complex(static_cast<double>(std::cos(reduced)),
                           static_cast<double>(std::sin(reduced)));
    }
    return op.multiply(phase, v);
}

WaveFunction generator_apply(const SpectralOperator& op, double alpha, const WaveFunction& v) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("generator order must lie in (0, 1]");
    }
    const double inv_alpha = 1.0 / alpha;
    const auto& h = op.symbol();
    Eigen::VectorXcd m(h.size());
    for (Eigen::Index j = 0; j < h.size(); ++j) {
        m[j] = Complex(0.0, fractional_power(h[j], inv_alpha));
    }
    return op.multiply(m, v);
}

WaveFunction generator_apply(const SpectralOperator& op, FractionalOrder alpha,
                             const WaveFunction& v) {
    return generator_apply(op, alpha.value(), v);
}

WaveFunction band_limit(const SpectralOperator& op, const WaveFunction& v, double fraction) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw DomainError("band-limit fraction must lie in [0, 1]");
    }
    const auto& h = op.symbol();
    const int n = static_cast<int>(h.size());
    const int drop = static_cast<int>(std::ceil(fraction * n));
    if (drop == 0) {
        return v;
    }
    std::vector<double> ranked(h.data(), h.data() + n);
    std::nth_element(ranked.begin(), ranked.begin() + (drop - 1), ranked.end(), std::greater<>());
    // A degenerate cluster at the cut is removed whole, so the result does not
    // depend on how the eigensolver ordered vectors inside it.
    const double cut = ranked[drop - 1] - 1e-12 * std::max(1.0, h.maxCoeff());
    Eigen::VectorXcd keep(n);
    for (int j = 0; j < n; ++j) {
        keep[j] = h[j] >= cut ? 0.0 : 1.0;
    }
    return op.multiply(keep, v);
}

Eigen::VectorXd spectral_mass(const SpectralOperator& op, const WaveFunction& v) {
    return op.forward(v).cwiseAbs2();
}

std::vector<double> read_potential_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open potential file " + path.string());
    }
    std::vector<double> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(line, &used);
        } catch (const std::exception&) {
            if (line_no == 1) {
                continue;
            }
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": not a number");
        }
        if (line.find_first_not_of(" \t,", used) != std::string::npos) {
            throw IoError(path.string() + ":" + std::to_string(line_no) +
                          ": expected a single column");
        }
        values.push_back(value);
    }
    if (in.bad()) {
        throw IoError("error while reading " + path.string());
    }
    return values;
}

void write_wave_csv(std::ostream& out, const WaveFunction& v) {
    out << "x,re,im,abs2\n";
    for (int j = 0; j < v.grid().n; ++j) {
        const Complex z = v[j];
        out << format_real(v.grid().x(j)) << ',' << format_real(z.real()) << ','
            << format_real(z.imag()) << ',' << format_real(std::norm(z)) << '\n';
    }
}

void write_wave_csv(const std::filesystem::path& path, const WaveFunction& v) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    write_wave_csv(out, v);
    if (!out) {
        throw IoError("error while writing " + path.string());
    }
}

}  // namespace fracschro
