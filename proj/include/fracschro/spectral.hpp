#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <iosfwd>
#include <numbers>
#include <vector>

#include "fracschro/kernel.hpp"

namespace fracschro {

/// Periodic grid x_j = j L / n on [0, L).
struct GridSpec {
    int n = 64;
    double L = 2.0 * std::numbers::pi;

    /// Throws DomainError unless n is even, n >= 2 and L > 0.
    void validate() const;
    double dx() const { return L / n; }
    double x(int j) const { return j * dx(); }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Complex grid function with the discrete L2 pairing dx * sum conj(v_j) w_j.
class WaveFunction {
public:
    WaveFunction(const GridSpec& grid, Eigen::VectorXcd values);
    static WaveFunction zeros(const GridSpec& grid);
    /// exp(-((x - center) / width)^2), not normalised.
    static WaveFunction gaussian(const GridSpec& grid, double center, double width);
    /// exp(2 pi i k x / L).
    static WaveFunction mode(const GridSpec& grid, int k);

    const GridSpec& grid() const { return grid_; }
    const Eigen::VectorXcd& values() const { return values_; }
    Complex operator[](int j) const { return values_[j]; }

    double norm() const;
    Complex inner(const WaveFunction& other) const;

    friend WaveFunction operator-(const WaveFunction& lhs, const WaveFunction& rhs);

private:
    GridSpec grid_;
    Eigen::VectorXcd values_;
};

/// Finite multiplication form of a nonnegative self-adjoint operator: A = U^-1 diag(h) U.
///
/// U maps grid values to coefficients whose Euclidean norm equals the discrete
/// L2 norm of the grid function. Immutable once built.
class SpectralOperator {
public:
    enum class Basis { fourier, eigen };

    const GridSpec& grid() const { return grid_; }
    Basis basis() const { return basis_; }
    /// Eigenvalue h_j attached to coefficient j.
    const Eigen::VectorXd& symbol() const { return symbol_; }

    Eigen::VectorXcd forward(const WaveFunction& v) const;
    WaveFunction inverse(const Eigen::VectorXcd& coefficients) const;

    /// U^-1 diag(f) U v for a multiplier f indexed like symbol().
    WaveFunction multiply(const Eigen::VectorXcd& multiplier, const WaveFunction& v) const;
    WaveFunction apply(const WaveFunction& v) const;

    /// Smallest eigenvalue before clamping (0 for the Fourier basis).
    double unclamped_min() const { return unclamped_min_; }

    /// Unitary eigenvectors as columns (eigen basis only).
    const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

private:
    friend SpectralOperator build_free_laplacian(const GridSpec&);
    friend SpectralOperator build_schrodinger(const GridSpec&, const std::vector<double>&);

    SpectralOperator(GridSpec grid, Basis basis, Eigen::VectorXd symbol, Eigen::MatrixXd vectors,
                     double unclamped_min);
    void require_grid(const WaveFunction& v) const;

    GridSpec grid_;
    Basis basis_;
    Eigen::VectorXd symbol_;
    Eigen::MatrixXd eigenvectors_;
    double unclamped_min_;
};

/// Signed mode index of DFT slot j: j for j < n/2, j - n otherwise (Nyquist is -n/2).
int signed_mode(int j, int n);

/// -Delta with the exact Fourier symbol (2 pi m / L)^2.
SpectralOperator build_free_laplacian(const GridSpec& grid);

/// 3-point periodic stencil for -Delta plus diag(V), diagonalised.
///
/// Throws DomainError for a negative or non-finite V_j, NumericalError when the
/// eigensolver fails or an eigenvalue falls below -1e-10. Eigenvalues in
/// [-1e-10, 0) are clamped to 0.
SpectralOperator build_schrodinger(const GridSpec& grid, const std::vector<double>& V);

/// Stencil eigenvalue (2 - 2 cos(k dx)) / dx^2 for signed mode m.
double stencil_symbol(const GridSpec& grid, int m);

/// h^(1/alpha) with h = 0 mapped to 0.
double fractional_power(double h, double inv_alpha);

/// S_alpha(t) v = U^-1 exp(i t h^(1/alpha)) U v.
WaveFunction propagate(const SpectralOperator& op, FractionalOrder alpha, double t,
                       const WaveFunction& v);

/// i A^(1/alpha) v. Takes a raw exponent so that alpha = 1 - eps limits can be probed.
WaveFunction generator_apply(const SpectralOperator& op, double alpha, const WaveFunction& v);
WaveFunction generator_apply(const SpectralOperator& op, FractionalOrder alpha,
                             const WaveFunction& v);

/// Zero the coefficients of the ceil(fraction * n) largest eigenvalues, widened to
/// take in any eigenvalue tied with the last one removed.
WaveFunction band_limit(const SpectralOperator& op, const WaveFunction& v, double fraction = 0.1);

/// |(U v)_j|^2, the spectral measure of v carried by each eigenvalue.
Eigen::VectorXd spectral_mass(const SpectralOperator& op, const WaveFunction& v);

/// One value per line; a non-numeric first line is taken as a header.
std::vector<double> read_potential_csv(const std::filesystem::path& path);

/// Columns x,re,im,abs2 with a header row.
void write_wave_csv(std::ostream& out, const WaveFunction& v);
void write_wave_csv(const std::filesystem::path& path, const WaveFunction& v);

}  // namespace fracschro
