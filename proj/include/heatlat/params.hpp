#pragma once

#include <cmath>
#include <cstdint>

namespace heatlat {

// Dispersion inputs only; enough for every closed-form spectral quantity.
struct HarmonicSpec {
    int dim = 1;
    double alpha = 1.0;
    double nu = 1.0;
};

struct ModelParams {
    int dim = 1;       // lattice dimension, 1..3
    int n = 32;        // sites per axis, periodic
    double alpha = 1.0;  // spring strength, > 0
    double nu = 1.0;     // pinning strength, >= 0; nu = 0 admitted only for dim = 3
    double gamma = 1.0;  // noise strength, >= 0 (0 disables the noise)
    double beta = 1.0;   // inverse temperature, > 0
    double dt = 0.0;     // integrator step; 0 selects the default 0.02 / omega_max
    std::uint64_t seed = 1;

    // Throws ConfigError for invalid values, RegimeError for the unpinned
    // d < 3 regime.
    void validate() const;

    double omega_max() const { return std::sqrt(nu + 4.0 * alpha * dim); }

    double time_step() const { return dt > 0.0 ? dt : 0.02 / omega_max(); }

    HarmonicSpec spec() const { return HarmonicSpec{dim, alpha, nu}; }
};

}  // namespace heatlat
