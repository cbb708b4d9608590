#include "hrx/poisson.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <vector>

#include "hrx/parallel.hpp"

namespace hrx {

namespace {
std::mutex g_fftw_mutex;  // FFTW planning is not thread-safe
}

struct SpectralSolver::Impl {
    GridSpec grid;
    int n[3];   // box dims (x,y,z)
    int m[3];   // padded dims
    std::size_t real_count, cplx_count;
    double* real_buf = nullptr;
    fftw_complex* cplx_buf = nullptr;
    fftw_plan fwd = nullptr, bwd = nullptr;
    std::vector<double> sym[3];  // sin(2 pi k / m) / h per padded axis

    explicit Impl(const GridSpec& g) : grid(g) {
        for (int a = 0; a < 3; ++a) {
            n[a] = g.dims[a];
            m[a] = 2 * n[a];
        }
        real_count = std::size_t(m[0]) * m[1] * m[2];
        cplx_count = std::size_t(m[2]) * m[1] * (m[0] / 2 + 1);
        real_buf = fftw_alloc_real(real_count);
        cplx_buf = fftw_alloc_complex(cplx_count);
        {
            std::lock_guard<std::mutex> lock(g_fftw_mutex);
            // FFTW is row-major; pass dims as (z, y, x) so x stays fastest
            fwd = fftw_plan_dft_r2c_3d(m[2], m[1], m[0], real_buf, cplx_buf, FFTW_ESTIMATE);
            bwd = fftw_plan_dft_c2r_3d(m[2], m[1], m[0], cplx_buf, real_buf, FFTW_ESTIMATE);
        }
        for (int a = 0; a < 3; ++a) {
            sym[a].resize(m[a]);
            for (int k = 0; k < m[a]; ++k)
                sym[a][k] = std::sin(2.0 * M_PI * k / m[a]) / g.spacing;
        }
    }

    ~Impl() {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(real_buf);
        fftw_free(cplx_buf);
    }

    // forward transform of one component of a box field, zero padded
    void forward(const VectorField3& v, int comp, std::vector<std::complex<double>>& out) {
        std::fill(real_buf, real_buf + real_count, 0.0);
        for (int k = 0; k < n[2]; ++k)
            for (int j = 0; j < n[1]; ++j) {
                const double* src = v.values.data() + (grid.index(0, j, k)) * 3;
                double* dst = real_buf + (std::size_t(k) * m[1] + j) * m[0];
                for (int i = 0; i < n[0]; ++i) dst[i] = src[3 * i + comp];
            }
        fftw_execute(fwd);
        out.assign(reinterpret_cast<std::complex<double>*>(cplx_buf),
                   reinterpret_cast<std::complex<double>*>(cplx_buf) + cplx_count);
    }

    // inverse transform into one component of a box field
    void backward(const std::vector<std::complex<double>>& in, VectorField3& v, int comp) {
        std::copy(in.begin(), in.end(), reinterpret_cast<std::complex<double>*>(cplx_buf));
        fftw_execute(bwd);
        const double scale = 1.0 / double(real_count);
        for (int k = 0; k < n[2]; ++k)
            for (int j = 0; j < n[1]; ++j) {
                const double* src = real_buf + (std::size_t(k) * m[1] + j) * m[0];
                double* dst = v.values.data() + (grid.index(0, j, k)) * 3;
                for (int i = 0; i < n[0]; ++i) dst[3 * i + comp] = src[i] * scale;
            }
    }

    void backward_scalar(const std::vector<std::complex<double>>& in, ScalarField& f) {
        std::copy(in.begin(), in.end(), reinterpret_cast<std::complex<double>*>(cplx_buf));
        fftw_execute(bwd);
        const double scale = 1.0 / double(real_count);
        for (int k = 0; k < n[2]; ++k)
            for (int j = 0; j < n[1]; ++j) {
                const double* src = real_buf + (std::size_t(k) * m[1] + j) * m[0];
                for (int i = 0; i < n[0]; ++i) f.values[grid.index(i, j, k)] = src[i] * scale;
            }
    }

    std::size_t cindex(int kx, int ky, int kz) const {
        return (std::size_t(kz) * m[1] + ky) * (m[0] / 2 + 1) + kx;
    }

    template <typename F>
    void for_modes(F&& fn) const {
        const int hx = m[0] / 2 + 1;
        for (int kz = 0; kz < m[2]; ++kz) {
            const double sz = sym[2][kz];
            for (int ky = 0; ky < m[1]; ++ky) {
                const double sy = sym[1][ky];
                for (int kx = 0; kx < hx; ++kx)
                    fn(cindex(kx, ky, kz), sym[0][kx], sy, sz);
            }
        }
    }
};

SpectralSolver::SpectralSolver(const GridSpec& grid) : impl_(std::make_unique<Impl>(grid)) {
    grid.validate();
}

SpectralSolver::~SpectralSolver() = default;

VectorField3 SpectralSolver::curl_inverse(const VectorField3& D) const {
    Impl& im = *impl_;
    std::vector<std::complex<double>> Dh[3];
    for (int c = 0; c < 3; ++c) im.forward(D, c, Dh[c]);
    std::vector<std::complex<double>> Eh[3];
    for (int c = 0; c < 3; ++c) Eh[c].assign(im.cplx_count, {0.0, 0.0});
    const std::complex<double> I(0.0, 1.0);
    im.for_modes([&](std::size_t idx, double sx, double sy, double sz) {
        const double s2 = sx * sx + sy * sy + sz * sz;
        if (s2 == 0.0) return;
        const std::complex<double> dx = Dh[0][idx], dy = Dh[1][idx], dz = Dh[2][idx];
        Eh[0][idx] = I * (sy * dz - sz * dy) / s2;
        Eh[1][idx] = I * (sz * dx - sx * dz) / s2;
        Eh[2][idx] = I * (sx * dy - sy * dx) / s2;
    });
    VectorField3 eta(im.grid);
    for (int c = 0; c < 3; ++c) im.backward(Eh[c], eta, c);
    return eta;
}

VectorField3 SpectralSolver::solenoidal_part(const VectorField3& w) const {
    Impl& im = *impl_;
    std::vector<std::complex<double>> Wh[3];
    for (int c = 0; c < 3; ++c) im.forward(w, c, Wh[c]);
    im.for_modes([&](std::size_t idx, double sx, double sy, double sz) {
        const double s2 = sx * sx + sy * sy + sz * sz;
        if (s2 == 0.0) return;  // mean/Nyquist modes pass through
        const std::complex<double> sd = (sx * Wh[0][idx] + sy * Wh[1][idx] + sz * Wh[2][idx]) / s2;
        Wh[0][idx] -= sx * sd;
        Wh[1][idx] -= sy * sd;
        Wh[2][idx] -= sz * sd;
    });
    VectorField3 out(im.grid);
    for (int c = 0; c < 3; ++c) im.backward(Wh[c], out, c);
    return out;
}

VectorField3 SpectralSolver::periodic_curl(const VectorField3& v) const {
    Impl& im = *impl_;
    std::vector<std::complex<double>> Vh[3];
    for (int c = 0; c < 3; ++c) im.forward(v, c, Vh[c]);
    std::vector<std::complex<double>> Ch[3];
    for (int c = 0; c < 3; ++c) Ch[c].assign(im.cplx_count, {0.0, 0.0});
    const std::complex<double> I(0.0, 1.0);
    im.for_modes([&](std::size_t idx, double sx, double sy, double sz) {
        Ch[0][idx] = I * (sy * Vh[2][idx] - sz * Vh[1][idx]);
        Ch[1][idx] = I * (sz * Vh[0][idx] - sx * Vh[2][idx]);
        Ch[2][idx] = I * (sx * Vh[1][idx] - sy * Vh[0][idx]);
    });
    VectorField3 out(im.grid);
    for (int c = 0; c < 3; ++c) im.backward(Ch[c], out, c);
    return out;
}

ScalarField SpectralSolver::periodic_divergence(const VectorField3& v) const {
    Impl& im = *impl_;
    std::vector<std::complex<double>> Vh[3];
    for (int c = 0; c < 3; ++c) im.forward(v, c, Vh[c]);
    std::vector<std::complex<double>> Dh(im.cplx_count, {0.0, 0.0});
    const std::complex<double> I(0.0, 1.0);
    im.for_modes([&](std::size_t idx, double sx, double sy, double sz) {
        Dh[idx] = I * (sx * Vh[0][idx] + sy * Vh[1][idx] + sz * Vh[2][idx]);
    });
    ScalarField out(im.grid);
    im.backward_scalar(Dh, out);
    return out;
}

}  // namespace hrx
