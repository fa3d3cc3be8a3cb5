#include "heatlat/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

namespace heatlat {

namespace {
// FFTW plan creation/destruction is not thread-safe.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fourier::Fourier(const Lattice& lat)
    : dim_(lat.dim()), n_(lat.n()), last_(lat.n() / 2 + 1), sites_(lat.sites()) {
    modes_ = last_;
    for (int a = 0; a < dim_ - 1; ++a) modes_ *= n_;

    rbuf_ = fftw_alloc_real(sites_);
    fftw_complex* cb = fftw_alloc_complex(modes_);
    cbuf_ = cb;

    int dims[3] = {n_, n_, n_};
    std::lock_guard<std::mutex> lock(plan_mutex());
    fwd_ = fftw_plan_dft_r2c(dim_, dims, rbuf_, cb, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_c2r(dim_, dims, cb, rbuf_, FFTW_ESTIMATE);
}

Fourier::~Fourier() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(inv_));
    fftw_free(rbuf_);
    fftw_free(static_cast<fftw_complex*>(cbuf_));
}

void Fourier::forward(const double* src, std::complex<double>* dst) {
    std::memcpy(rbuf_, src, sizeof(double) * sites_);
    fftw_execute(static_cast<fftw_plan>(fwd_));
    std::memcpy(dst, cbuf_, sizeof(fftw_complex) * modes_);
}

void Fourier::inverse(const std::complex<double>* src, double* dst) {
    std::memcpy(cbuf_, src, sizeof(fftw_complex) * modes_);
    fftw_execute(static_cast<fftw_plan>(inv_));
    const double scale = 1.0 / static_cast<double>(sites_);
    for (std::int64_t i = 0; i < sites_; ++i) dst[i] = rbuf_[i] * scale;
}

}  // namespace heatlat
