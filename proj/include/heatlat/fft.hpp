#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "heatlat/lattice.hpp"

namespace heatlat {

// Real <-> half-complex transforms on the lattice (FFTW r2c/c2r layout: the
// last axis is truncated to n/2+1 modes). forward() is unnormalized;
// inverse() divides by n^dim, so inverse(forward(f)) == f up to rounding.
// Instances own their plans and scratch; they are not thread-safe, use one
// per worker. Plan creation is serialized internally.
class Fourier {
public:
    explicit Fourier(const Lattice& lat);
    ~Fourier();

    Fourier(const Fourier&) = delete;
    Fourier& operator=(const Fourier&) = delete;

    std::int64_t modes() const { return modes_; }
    int dim() const { return dim_; }
    int n() const { return n_; }

    void forward(const double* src, std::complex<double>* dst);
    void inverse(const std::complex<double>* src, double* dst);

    // Integer mode coordinates (each in [0, n); last axis in [0, n/2]).
    std::array<int, 3> mode_coords(std::int64_t mode) const {
        std::array<int, 3> c{0, 0, 0};
        c[dim_ - 1] = static_cast<int>(mode % last_);
        mode /= last_;
        for (int a = dim_ - 2; a >= 0; --a) {
            c[a] = static_cast<int>(mode % n_);
            mode /= n_;
        }
        return c;
    }

private:
    int dim_;
    int n_;
    int last_;
    std::int64_t sites_;
    std::int64_t modes_;
    double* rbuf_;
    void* cbuf_;   // fftw_complex*
    void* fwd_;    // fftw_plan
    void* inv_;    // fftw_plan
};

}  // namespace heatlat
