#pragma once

#include <cstdint>
#include <vector>

#include "heatlat/fft.hpp"
#include "heatlat/params.hpp"
#include "heatlat/rng.hpp"
#include "heatlat/state.hpp"

namespace heatlat {

// Exact sampler of the Gaussian equilibrium measure: momenta i.i.d. with
// variance 1/beta, displacements a Gaussian field with covariance
// Gamma(x-y)/beta per component, q and p independent. Displacements are
// drawn by filtering real white noise in Fourier space, which reproduces the
// covariance exactly in O(n^d log n). With nu = 0 the q zero mode is pinned
// to 0, i.e. the lattice average of each q component vanishes at sampling.
class GibbsSampler {
public:
    GibbsSampler(const ModelParams& params, const Lattice& lat, std::uint64_t seed);

    void reseed(std::uint64_t seed) { rng_.reseed(seed); }

    void sample(PhaseState& state);

    // Per-mode filter applied to unit white noise; equals
    // sqrt(Gamma_hat(k)/beta) on the lattice mode grid.
    const std::vector<double>& mode_sigma() const { return sigma_; }

private:
    const Lattice& lat_;
    ModelParams params_;
    Fourier fft_;
    Rng rng_;
    std::vector<double> sigma_;
    std::vector<double> white_;
    std::vector<std::complex<double>> spec_;
    std::vector<double> comp_;
};

// Exact equilibrium mean of the site energy e_x: dim/beta for nu > 0, with
// the excluded-zero-mode correction -dim/(2 beta n^dim) when nu = 0.
double mean_site_energy(const ModelParams& params);

}  // namespace heatlat
