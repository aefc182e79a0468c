#include "bousslab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace bousslab {

namespace {

// Signed integer mode for spectrum row j.
inline int row_mode(int j, int n) { return j <= n / 2 ? j : j - n; }

}  // namespace

ScalarField spectral_derivative(const ScalarField& f, int axis) {
    if (axis != 1 && axis != 2) throw ConfigError("spectral_derivative: axis must be 1 or 2");
    const GridSpec& g = f.grid();
    const int n = g.n;
    const int cols = n / 2 + 1;
    std::vector<cplx> s(f.spectrum().begin(), f.spectrum().end());
    for (int j = 0; j < n; ++j) {
        const int k2 = row_mode(j, n);
        for (int i = 0; i < cols; ++i) {
            const int k1 = i;
            if (k1 == n / 2 || k2 == n / 2 || j == n / 2) {
                s[static_cast<size_t>(j) * cols + i] = 0.0;
                continue;
            }
            const double xi = (axis == 1) ? g.xi(k1) : g.xi(k2);
            s[static_cast<size_t>(j) * cols + i] *= cplx(0.0, xi);
        }
    }
    return ScalarField::from_spectrum(g, std::move(s));
}

ScalarField dealias(const ScalarField& f) {
    const GridSpec& g = f.grid();
    const int n = g.n;
    const int cols = n / 2 + 1;
    const int kc = g.dealias_cutoff();
    std::vector<cplx> s(f.spectrum().begin(), f.spectrum().end());
    for (int j = 0; j < n; ++j) {
        const int k2 = std::abs(row_mode(j, n));
        for (int i = 0; i < cols; ++i) {
            if (std::max(i, k2) > kc) s[static_cast<size_t>(j) * cols + i] = 0.0;
        }
    }
    return ScalarField::from_spectrum(g, std::move(s));
}

ScalarField multiply(const ScalarField& a, const ScalarField& b, bool dealias_result) {
    if (!(a.grid() == b.grid())) throw ConfigError("multiply: grid mismatch");
    const size_t nn = a.values().size();
    std::vector<double> v(nn);
    for (size_t k = 0; k < nn; ++k) v[k] = a.values()[k] * b.values()[k];
    ScalarField prod(a.grid(), std::move(v));
    return dealias_result ? dealias(prod) : prod;
}

ScalarField axpby(double alpha, const ScalarField& a, double beta, const ScalarField& b) {
    if (!(a.grid() == b.grid())) throw ConfigError("axpby: grid mismatch");
    const size_t nn = a.values().size();
    std::vector<double> v(nn);
    for (size_t k = 0; k < nn; ++k) v[k] = alpha * a.values()[k] + beta * b.values()[k];
    return ScalarField(a.grid(), std::move(v));
}

ScalarField scale(double alpha, const ScalarField& a) {
    const size_t nn = a.values().size();
    std::vector<double> v(nn);
    for (size_t k = 0; k < nn; ++k) v[k] = alpha * a.values()[k];
    return ScalarField(a.grid(), std::move(v));
}

VelocityField biot_savart(const ScalarField& omega) {
    const GridSpec& g = omega.grid();
    const int n = g.n;
    const int cols = n / 2 + 1;
    std::vector<cplx> s1(static_cast<size_t>(n) * cols), s2(s1.size());
    for (int j = 0; j < n; ++j) {
        const int k2 = row_mode(j, n);
        for (int i = 0; i < cols; ++i) {
            const int k1 = i;
            const size_t idx = static_cast<size_t>(j) * cols + i;
            if ((k1 == 0 && k2 == 0) || k1 == n / 2 || j == n / 2) {
                s1[idx] = s2[idx] = 0.0;  // mean projected out; Nyquist dropped
                continue;
            }
            const double x1 = g.xi(k1), x2 = g.xi(k2);
            const cplx psi = -omega.spectrum()[idx] / (x1 * x1 + x2 * x2);
            s1[idx] = cplx(0.0, -x2) * psi;
            s2[idx] = cplx(0.0, x1) * psi;
        }
    }
    VelocityField v;
    v.u1 = ScalarField::from_spectrum(g, std::move(s1));
    v.u2 = ScalarField::from_spectrum(g, std::move(s2));
    v.provenance = VelocityField::Provenance::biot_savart;
    return v;
}

ScalarField curl(const VelocityField& v) {
    return axpby(1.0, spectral_derivative(v.u2, 1), -1.0, spectral_derivative(v.u1, 2));
}

ScalarField divergence(const VelocityField& v) {
    return axpby(1.0, spectral_derivative(v.u1, 1), 1.0, spectral_derivative(v.u2, 2));
}

VelocityField leray_project(const ScalarField& w1, const ScalarField& w2) {
    const GridSpec& g = w1.grid();
    const int n = g.n;
    const int cols = n / 2 + 1;
    std::vector<cplx> s1(w1.spectrum().begin(), w1.spectrum().end());
    std::vector<cplx> s2(w2.spectrum().begin(), w2.spectrum().end());
    for (int j = 0; j < n; ++j) {
        const int k2 = row_mode(j, n);
        for (int i = 0; i < cols; ++i) {
            const int k1 = i;
            const size_t idx = static_cast<size_t>(j) * cols + i;
            if (k1 == 0 && k2 == 0) continue;
            const double x1 = g.xi(k1), x2 = g.xi(k2);
            const cplx div = x1 * s1[idx] + x2 * s2[idx];
            const double norm2 = x1 * x1 + x2 * x2;
            s1[idx] -= x1 * div / norm2;
            s2[idx] -= x2 * div / norm2;
        }
    }
    VelocityField out;
    out.u1 = ScalarField::from_spectrum(g, std::move(s1));
    out.u2 = ScalarField::from_spectrum(g, std::move(s2));
    out.provenance = VelocityField::Provenance::explicit_field;
    return out;
}

double norm_linf(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

double norm_l2(const ScalarField& f) { return norm_lp(f, 2.0); }

double norm_lp(const ScalarField& f, double p) {
    if (!(p >= 1.0)) throw ConfigError("norm_lp: p must be >= 1");
    const double w = f.grid().dx() * f.grid().dx();
    double acc = 0.0;
    for (double v : f.values()) acc += std::pow(std::abs(v), p);
    return std::pow(acc * w, 1.0 / p);
}

double norm_la_linf(const ScalarField& f, double a) {
    return std::max(norm_lp(f, a), norm_linf(f));
}

double mean(const ScalarField& f) {
    double acc = 0.0;
    for (double v : f.values()) acc += v;
    return acc / static_cast<double>(f.values().size());
}

double spectral_l2(const ScalarField& f) {
    // Parseval with half-complex storage: interior columns count twice.
    const GridSpec& g = f.grid();
    const int n = g.n;
    const int cols = n / 2 + 1;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < cols; ++i) {
            const double a = std::norm(f.spectrum()[static_cast<size_t>(j) * cols + i]);
            acc += (i == 0 || i == n / 2) ? a : 2.0 * a;
        }
    }
    return std::sqrt(acc) * g.length;
}

ScalarField grad_magnitude(const VelocityField& v) {
    ScalarField d11 = spectral_derivative(v.u1, 1);
    ScalarField d21 = spectral_derivative(v.u1, 2);
    ScalarField d12 = spectral_derivative(v.u2, 1);
    ScalarField d22 = spectral_derivative(v.u2, 2);
    const size_t nn = d11.values().size();
    std::vector<double> m(nn);
    for (size_t k = 0; k < nn; ++k) {
        m[k] = std::max(std::max(std::abs(d11.values()[k]), std::abs(d21.values()[k])),
                        std::max(std::abs(d12.values()[k]), std::abs(d22.values()[k])));
    }
    return ScalarField(v.grid(), std::move(m));
}

double grad_linf(const VelocityField& v) { return norm_linf(grad_magnitude(v)); }

double grad_lp(const VelocityField& v, double p) { return norm_lp(grad_magnitude(v), p); }

ScalarField random_band_limited(const GridSpec& grid, int kmin, int kmax, uint64_t seed) {
    grid.validate();
    if (kmin < 0 || kmax < kmin || kmax > grid.n / 2 - 1)
        throw ConfigError("random_band_limited: invalid mode band");
    const int n = grid.n;
    const int cols = n / 2 + 1;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> s(static_cast<size_t>(n) * cols, cplx(0.0, 0.0));
    for (int j = 0; j < n; ++j) {
        const int k2 = row_mode(j, n);
        for (int i = 0; i < cols; ++i) {
            const double kk = std::sqrt(static_cast<double>(i) * i + static_cast<double>(k2) * k2);
            if (kk < kmin || kk > kmax) continue;
            s[static_cast<size_t>(j) * cols + i] = cplx(gauss(rng), gauss(rng));
        }
    }
    // Hermitian symmetry for the self-conjugate columns.
    for (int j = 1; j < n / 2; ++j) {
        s[static_cast<size_t>(j) * cols + 0] =
            std::conj(s[static_cast<size_t>(n - j) * cols + 0]);
    }
    s[0] = cplx(s[0].real(), 0.0);
    s[static_cast<size_t>(n / 2) * cols + 0] = 0.0;
    for (int j = 0; j < n; ++j) s[static_cast<size_t>(j) * cols + n / 2] = 0.0;
    ScalarField f = ScalarField::from_spectrum(grid, std::move(s));
    const double m = norm_linf(f);
    return m > 0.0 ? scale(1.0 / m, f) : f;
}

double spectral_tail_fraction(const ScalarField& f) {
    const GridSpec& g = f.grid();
    const int n = g.n;
    const int cols = n / 2 + 1;
    const int kc = g.dealias_cutoff();
    const int tail_from = static_cast<int>(0.9 * kc);
    double total = 0.0, tail = 0.0;
    for (int j = 0; j < n; ++j) {
        const int k2 = std::abs(row_mode(j, n));
        for (int i = 0; i < cols; ++i) {
            const double a = std::norm(f.spectrum()[static_cast<size_t>(j) * cols + i]);
            const double w = (i == 0 || i == n / 2) ? 1.0 : 2.0;
            total += w * a;
            if (std::max(i, k2) >= tail_from) tail += w * a;
        }
    }
    return total > 0.0 ? tail / total : 0.0;
}

}  // namespace bousslab
