#include "bousslab/grid.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <cstring>

namespace bousslab {

void GridSpec::validate() const {
    if (n < 16) throw ConfigError("grid.n must be >= 16, got " + std::to_string(n));
    if ((n & (n - 1)) != 0) throw ConfigError("grid.n must be a power of two, got " + std::to_string(n));
    if (!(length > 0.0)) throw ConfigError("grid.length must be positive");
    if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
        throw ConfigError("grid.dealias_fraction must lie in (0, 1]");
}

namespace {

// One cached plan pair per grid size.  Plans own aligned scratch buffers and
// execution copies through them under a lock; FFTW planning/execution on
// shared buffers is not thread-safe otherwise.
struct PlanSet {
    int n = 0;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    double* real_buf = nullptr;
    fftw_complex* cplx_buf = nullptr;

    explicit PlanSet(int n_) : n(n_) {
        real_buf = fftw_alloc_real(static_cast<size_t>(n) * n);
        cplx_buf = fftw_alloc_complex(static_cast<size_t>(n) * (n / 2 + 1));
        fwd = fftw_plan_dft_r2c_2d(n, n, real_buf, cplx_buf, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_2d(n, n, cplx_buf, real_buf, FFTW_ESTIMATE);
    }
    ~PlanSet() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(real_buf);
        fftw_free(cplx_buf);
    }
    PlanSet(const PlanSet&) = delete;
    PlanSet& operator=(const PlanSet&) = delete;
};

std::mutex g_fft_mutex;

PlanSet& plans_for(int n) {
    static std::map<int, PlanSet*> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, new PlanSet(n)).first;
    return *it->second;
}

}  // namespace

namespace fft {

std::vector<cplx> forward(const GridSpec& grid, std::span<const double> values) {
    const int n = grid.n;
    const size_t nc = static_cast<size_t>(n) * (n / 2 + 1);
    std::vector<cplx> out(nc);
    std::lock_guard<std::mutex> lock(g_fft_mutex);
    PlanSet& p = plans_for(n);
    std::memcpy(p.real_buf, values.data(), sizeof(double) * values.size());
    fftw_execute(p.fwd);
    const double scale = 1.0 / (static_cast<double>(n) * n);
    for (size_t k = 0; k < nc; ++k)
        out[k] = cplx(p.cplx_buf[k][0] * scale, p.cplx_buf[k][1] * scale);
    return out;
}

std::vector<double> inverse(const GridSpec& grid, std::span<const cplx> spectrum) {
    const int n = grid.n;
    const size_t nr = static_cast<size_t>(n) * n;
    std::vector<double> out(nr);
    std::lock_guard<std::mutex> lock(g_fft_mutex);
    PlanSet& p = plans_for(n);
    for (size_t k = 0; k < spectrum.size(); ++k) {
        p.cplx_buf[k][0] = spectrum[k].real();
        p.cplx_buf[k][1] = spectrum[k].imag();
    }
    fftw_execute(p.bwd);
    std::memcpy(out.data(), p.real_buf, sizeof(double) * nr);
    return out;
}

}  // namespace fft

ScalarField::ScalarField(GridSpec grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != static_cast<size_t>(grid_.n) * grid_.n)
        throw ConfigError("ScalarField: values size does not match grid");
    spectrum_ = fft::forward(grid_, values_);
}

ScalarField ScalarField::from_spectrum(GridSpec grid, std::vector<cplx> spectrum) {
    grid.validate();
    if (spectrum.size() != static_cast<size_t>(grid.n) * (grid.n / 2 + 1))
        throw ConfigError("ScalarField: spectrum size does not match grid");
    ScalarField f;
    f.grid_ = grid;
    f.spectrum_ = std::move(spectrum);
    f.values_ = fft::inverse(grid, f.spectrum_);
    return f;
}

ScalarField ScalarField::from_function(GridSpec grid,
                                       const std::function<double(double, double)>& f) {
    grid.validate();
    const int n = grid.n;
    const double dx = grid.dx();
    std::vector<double> v(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            v[static_cast<size_t>(j) * n + i] = f(i * dx, j * dx);
    return ScalarField(grid, std::move(v));
}

ScalarField ScalarField::zero(GridSpec grid) {
    grid.validate();
    return ScalarField(grid, std::vector<double>(static_cast<size_t>(grid.n) * grid.n, 0.0));
}

ScalarField ScalarField::constant(GridSpec grid, double c) {
    grid.validate();
    return ScalarField(grid, std::vector<double>(static_cast<size_t>(grid.n) * grid.n, c));
}

}  // namespace bousslab
