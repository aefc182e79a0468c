#pragma once

#include "bousslab/spectral.hpp"

#include <map>

namespace bousslab {

/// Frozen dyadic partition profile.  chi is 1 on |xi| <= 3/4 and 0 beyond
/// 4/3; phi(xi) = chi(xi/2) - chi(xi) lives on the annulus 3/4 <= |xi| <= 8/3.
/// Every measured constant in the test suite depends on this profile, so the
/// version tag changes whenever the shape does.
namespace lp_profile {
inline constexpr const char* kVersion = "bump-exp-v1";
double chi(double r);
double phi(double r);
}  // namespace lp_profile

/// Dyadic block decomposition of a grid field.
///
/// q_max is the smallest q whose low-pass chi(2^-(q+1) xi) covers the whole
/// grid spectrum, so the blocks telescope back to the field exactly.
struct DyadicBlockSet {
    int q_min = -1;
    int q_max = 0;
    std::vector<ScalarField> blocks;   // index 0 is q = -1
    std::vector<double> block_sup;     // per-block sup norm

    const ScalarField& block(int q) const { return blocks[static_cast<size_t>(q - q_min)]; }
    double sup(int q) const { return block_sup[static_cast<size_t>(q - q_min)]; }
};

/// Largest dyadic index used for a grid (see DyadicBlockSet).
int dyadic_q_max(const GridSpec& grid);

/// Single Littlewood-Paley block Delta_q u (q = -1 is the chi block).
ScalarField dyadic_block(const ScalarField& u, int q);

/// All blocks of u.
DyadicBlockSet dyadic_decompose(const ScalarField& u);

/// Holder norm ||u||_s = sup_q 2^(qs) ||Delta_q u||_inf, any real s.
/// The sup runs over the computable blocks q <= q_max; that truncation is
/// reported through HolderDetail.
struct HolderDetail {
    double value = 0.0;
    int q_max = 0;
    int argmax_q = 0;
};
double holder_norm(const ScalarField& u, double s);
HolderDetail holder_norm_detail(const ScalarField& u, double s);
double holder_norm(const DyadicBlockSet& blocks, double s);

/// Bony splitting of the pointwise product uv.
struct BonyParts {
    ScalarField T_uv;  // paraproduct sum S_{q-1}u Delta_q v
    ScalarField T_vu;
    ScalarField R;     // remainder sum Delta_q u (Delta_{q-1}+Delta_q+Delta_{q+1}) v
};
BonyParts bony_decompose(const ScalarField& u, const ScalarField& v);

/// ||X||_eps + ||div X||_{eps-1}, the weighted norm attached to frame fields.
double tilde_norm(const ScalarField& x1, const ScalarField& x2, double eps);

}  // namespace bousslab
