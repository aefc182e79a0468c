#include "bousslab/dyadic.hpp"

#include <cmath>

namespace bousslab {

namespace lp_profile {

namespace {
// Smooth 0->1 transition built from exp(-1/t); identically 0 below 0 and 1
// above 1.
double smoothstep(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}
}  // namespace

double chi(double r) {
    constexpr double lo = 0.75;
    constexpr double hi = 4.0 / 3.0;
    return 1.0 - smoothstep((r - lo) / (hi - lo));
}

double phi(double r) { return chi(r / 2.0) - chi(r); }

}  // namespace lp_profile

int dyadic_q_max(const GridSpec& grid) {
    const double xi_corner = grid.xi(grid.n / 2) * std::sqrt(2.0);
    // Smallest q with chi(2^-(q+1) xi) = 1 on the whole grid, i.e.
    // 2^(q+1) >= xi_corner * 4/3.
    int q = 0;
    while (std::ldexp(1.0, q + 1) < xi_corner * 4.0 / 3.0) ++q;
    return q;
}

namespace {

ScalarField apply_radial_multiplier(const ScalarField& u,
                                    const std::function<double(double)>& m) {
    const GridSpec& g = u.grid();
    const int n = g.n;
    const int cols = n / 2 + 1;
    std::vector<cplx> s(u.spectrum().begin(), u.spectrum().end());
    for (int j = 0; j < n; ++j) {
        const int k2 = j <= n / 2 ? j : j - n;
        for (int i = 0; i < cols; ++i) {
            const double xi = std::hypot(g.xi(i), g.xi(k2));
            s[static_cast<size_t>(j) * cols + i] *= m(xi);
        }
    }
    return ScalarField::from_spectrum(g, std::move(s));
}

}  // namespace

ScalarField dyadic_block(const ScalarField& u, int q) {
    const int qmax = dyadic_q_max(u.grid());
    if (q < -1 || q > qmax)
        throw ConfigError("dyadic_block: q out of range [-1, " + std::to_string(qmax) + "]");
    if (q == -1) return apply_radial_multiplier(u, [](double r) { return lp_profile::chi(r); });
    const double s = std::ldexp(1.0, -q);
    return apply_radial_multiplier(u, [s](double r) { return lp_profile::phi(s * r); });
}

DyadicBlockSet dyadic_decompose(const ScalarField& u) {
    DyadicBlockSet out;
    out.q_min = -1;
    out.q_max = dyadic_q_max(u.grid());
    out.blocks.reserve(out.q_max + 2);
    for (int q = -1; q <= out.q_max; ++q) {
        out.blocks.push_back(dyadic_block(u, q));
        out.block_sup.push_back(norm_linf(out.blocks.back()));
    }
    return out;
}

double holder_norm(const DyadicBlockSet& blocks, double s) {
    double best = 0.0;
    for (int q = blocks.q_min; q <= blocks.q_max; ++q) {
        best = std::max(best, std::pow(2.0, q * s) * blocks.sup(q));
    }
    return best;
}

HolderDetail holder_norm_detail(const ScalarField& u, double s) {
    DyadicBlockSet blocks = dyadic_decompose(u);
    HolderDetail d;
    d.q_max = blocks.q_max;
    d.argmax_q = blocks.q_min;
    for (int q = blocks.q_min; q <= blocks.q_max; ++q) {
        const double v = std::pow(2.0, q * s) * blocks.sup(q);
        if (v > d.value) {
            d.value = v;
            d.argmax_q = q;
        }
    }
    return d;
}

double holder_norm(const ScalarField& u, double s) { return holder_norm_detail(u, s).value; }

BonyParts bony_decompose(const ScalarField& u, const ScalarField& v) {
    if (!(u.grid() == v.grid())) throw ConfigError("bony_decompose: grid mismatch");
    DyadicBlockSet bu = dyadic_decompose(u);
    DyadicBlockSet bv = dyadic_decompose(v);
    const int qmax = bu.q_max;
    const GridSpec& g = u.grid();

    // Running low-pass sums S_q = sum_{j <= q-1} Delta_j.
    auto partial_sum_upto = [&](const DyadicBlockSet& b, int q_incl) {
        ScalarField acc = ScalarField::zero(g);
        for (int j = -1; j <= q_incl; ++j) acc = axpby(1.0, acc, 1.0, b.block(j));
        return acc;
    };

    ScalarField T_uv = ScalarField::zero(g);
    ScalarField T_vu = ScalarField::zero(g);
    ScalarField R = ScalarField::zero(g);

    // Paraproducts: products are formed on the grid without extra
    // truncation so the three parts sum to the pointwise product exactly.
    ScalarField S_u = ScalarField::zero(g);  // S_{q-1} u, starts empty for q = -1, 0
    ScalarField S_v = ScalarField::zero(g);
    for (int q = -1; q <= qmax; ++q) {
        if (q >= 1) {
            S_u = partial_sum_upto(bu, q - 2);
            S_v = partial_sum_upto(bv, q - 2);
            T_uv = axpby(1.0, T_uv, 1.0, multiply(S_u, bv.block(q), false));
            T_vu = axpby(1.0, T_vu, 1.0, multiply(S_v, bu.block(q), false));
        }
        ScalarField tilde = ScalarField::zero(g);
        for (int j = q - 1; j <= q + 1; ++j) {
            if (j >= -1 && j <= qmax) tilde = axpby(1.0, tilde, 1.0, bv.block(j));
        }
        R = axpby(1.0, R, 1.0, multiply(bu.block(q), tilde, false));
    }
    return BonyParts{std::move(T_uv), std::move(T_vu), std::move(R)};
}

double tilde_norm(const ScalarField& x1, const ScalarField& x2, double eps) {
    const double nx = std::max(holder_norm(x1, eps), holder_norm(x2, eps));
    VelocityField v{x1, x2, VelocityField::Provenance::explicit_field};
    const double ndiv = holder_norm(divergence(v), eps - 1.0);
    return nx + ndiv;
}

}  // namespace bousslab
