#pragma once

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bousslab {

using cplx = std::complex<double>;

/// Raised when a grid or scenario parameter violates its contract.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Square periodic grid [0,L)^2 sampled at n points per axis.
struct GridSpec {
    int n = 256;                      // points per axis, power of two, >= 16
    double length = 8.0 * 3.14159265358979323846;
    double dealias_fraction = 2.0 / 3.0;

    void validate() const;

    double dx() const { return length / n; }
    /// Physical frequency of integer mode k (cycles scaled by 2*pi/L).
    double xi(int k) const { return 2.0 * 3.14159265358979323846 * k / length; }
    /// Largest retained integer mode under the dealias rule.
    int dealias_cutoff() const {
        return static_cast<int>(dealias_fraction * (n / 2));
    }
    bool operator==(const GridSpec&) const = default;
};

/// Real scalar sample on a GridSpec with its discrete Fourier coefficients.
///
/// Both representations are stored; a field is immutable after construction,
/// so they can never fall out of sync and instances are safe to share
/// across threads.  Values are row-major with x2 as the slow index:
/// value(i,j) = values[j*n + i] sampled at (i*dx, j*dx).  The spectrum uses
/// the half-complex layout (n rows of n/2+1 columns); coefficients are
/// Fourier-series coefficients, i.e. u(x) = sum_k u_hat(k) exp(i xi_k . x).
class ScalarField {
public:
    ScalarField() = default;
    ScalarField(GridSpec grid, std::vector<double> values);
    static ScalarField from_spectrum(GridSpec grid, std::vector<cplx> spectrum);
    static ScalarField from_function(GridSpec grid,
                                     const std::function<double(double, double)>& f);
    static ScalarField zero(GridSpec grid);
    static ScalarField constant(GridSpec grid, double c);

    const GridSpec& grid() const { return grid_; }
    std::span<const double> values() const { return values_; }
    std::span<const cplx> spectrum() const { return spectrum_; }

    double value(int i, int j) const { return values_[static_cast<size_t>(j) * grid_.n + i]; }
    int spec_cols() const { return grid_.n / 2 + 1; }
    const cplx& coeff(int k1_half, int k2_row) const {
        return spectrum_[static_cast<size_t>(k2_row) * spec_cols() + k1_half];
    }

    bool empty() const { return values_.empty(); }

private:
    GridSpec grid_;
    std::vector<double> values_;
    std::vector<cplx> spectrum_;
};

/// Divergence-free velocity pair; provenance records how it was produced.
struct VelocityField {
    enum class Provenance { biot_savart, explicit_field };
    ScalarField u1;
    ScalarField u2;
    Provenance provenance = Provenance::explicit_field;

    const GridSpec& grid() const { return u1.grid(); }
};

namespace fft {
/// Forward transform of real samples into Fourier coefficients (1/n^2 scaled).
std::vector<cplx> forward(const GridSpec& grid, std::span<const double> values);
/// Inverse transform of Fourier coefficients into real samples.
std::vector<double> inverse(const GridSpec& grid, std::span<const cplx> spectrum);
}  // namespace fft

}  // namespace bousslab
