#pragma once

#include "bousslab/grid.hpp"

namespace bousslab {

/// Spectral partial derivative along axis 1 or 2.  Exact for band-limited
/// fields; Nyquist modes are zeroed (odd-order multipliers are ambiguous
/// there and would break Hermitian symmetry).
ScalarField spectral_derivative(const ScalarField& f, int axis);

/// Zero every mode with max(|k1|,|k2|) above the grid's dealias cutoff.
ScalarField dealias(const ScalarField& f);

/// Pointwise product, dealiased by default (2/3 rule).
ScalarField multiply(const ScalarField& a, const ScalarField& b, bool dealias_result = true);

/// Pointwise linear combination alpha*a + beta*b.
ScalarField axpby(double alpha, const ScalarField& a, double beta, const ScalarField& b);
ScalarField scale(double alpha, const ScalarField& a);

/// Divergence-free velocity with curl(v) = omega, via v_hat = i xi^perp
/// psi-hat inversion of the streamfunction Poisson problem.  The k = 0 mode
/// of omega is projected out (mean vorticity carries no periodic velocity).
VelocityField biot_savart(const ScalarField& omega);

/// Scalar curl d1 v2 - d2 v1.
ScalarField curl(const VelocityField& v);
/// Spectral divergence d1 v1 + d2 v2.
ScalarField divergence(const VelocityField& v);

/// Leray projection onto divergence-free fields: w - grad(inv_lap(div w)).
VelocityField leray_project(const ScalarField& w1, const ScalarField& w2);

// Grid norms.  Lp uses the equal-weight quadrature dx^2, Linf the grid max.
double norm_linf(const ScalarField& f);
double norm_l2(const ScalarField& f);
double norm_lp(const ScalarField& f, double p);
/// max(||f||_La, ||f||_Linf), the L^a cap L^inf norm.
double norm_la_linf(const ScalarField& f, double a);
double mean(const ScalarField& f);
/// L2 norm computed from the spectrum (Parseval route).
double spectral_l2(const ScalarField& f);

/// Pointwise max over the four entries |d_i v_j|; norm_linf of it is the
/// velocity-gradient sup norm used throughout.
ScalarField grad_magnitude(const VelocityField& v);
double grad_linf(const VelocityField& v);
/// ||grad v||_Lp with the same max-entry pointwise convention.
double grad_lp(const VelocityField& v, double p);

/// Deterministic random field, band-limited to integer modes in
/// [kmin, kmax], normalised to unit sup norm.
ScalarField random_band_limited(const GridSpec& grid, int kmin, int kmax, uint64_t seed);

/// Fraction of spectral L2 energy carried by modes within 10% of the
/// dealias cutoff; the under-resolution monitor.
double spectral_tail_fraction(const ScalarField& f);

}  // namespace bousslab
