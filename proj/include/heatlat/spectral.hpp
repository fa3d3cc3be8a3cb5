#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "heatlat/lattice.hpp"
#include "heatlat/params.hpp"

namespace heatlat::spectral {

// omega(k) = sqrt(nu + 4 alpha sum_j sin^2(pi k_j)), k in [0,1)^dim.
double dispersion(const HarmonicSpec& spec, const double* k);

// Mode relaxation rate of the momentum noise:
//   d >= 2: 8 sum_j sin^2(pi k_j)
//   d = 1 : (4/3) sin^2(pi k) (1 + 2 cos^2(pi k))
double scattering_rate(const HarmonicSpec& spec, const double* k);

// Analytic derivative of omega along axis 0: 2 pi alpha sin(2 pi k_0) / omega.
double dispersion_deriv1(const HarmonicSpec& spec, const double* k);

// Fourier symbol of the operator inverted by the resolvent field g_lambda
// (without the +lambda). For d >= 2 this is the scattering rate itself; in
// d = 1 the defining lattice equation carries twice the scattering rate.
double resolvent_symbol(const HarmonicSpec& spec, const double* k);

// hat g_lambda^axis(k) = 2 i sin(2 pi k_axis) / (resolvent_symbol(k) + lambda).
std::complex<double> g_hat(const HarmonicSpec& spec, const double* k, int axis, double lambda);

// Real-space resolvent field on the n-torus, by diagonalization in Fourier
// space; real and antisymmetric under x -> -x. Requires lambda > 0.
ScalarField g_realspace(const HarmonicSpec& spec, int axis, double lambda, const Lattice& lat);

// Midpoint quadrature of int (d_1 omega^2 / omega)^2 / (Phi + lambda) over
// the unit torus. lambda = 0 requires an integrable regime (nu > 0 or d = 3);
// otherwise a DivergenceError is thrown.
double kappa_lambda(const HarmonicSpec& spec, double lambda, int grid_m);

struct DiffusivityResult {
    double kappa = 0.0;
    double quadrature_error = 0.0;  // |kappa(M) - kappa(2M)|
    int grid = 0;
    double lambda_used = 0.0;
};

// Thermal diffusivity
//   kappa = 1/(8 pi^2 gamma) int (d_1 omega)^2 / Phi  d xi + gamma
// by midpoint quadrature on grid_m^dim nodes (grid_m <= 0 picks a default).
// Requires gamma > 0 and an integrable regime.
DiffusivityResult thermal_diffusivity(const ModelParams& params, int grid_m = 0);

// Equilibrium displacement covariance Gamma(x) = (nu I - alpha Lap)^{-1}(x)
// on the n-torus (the k = 0 mode is excluded when nu = 0).
ScalarField covariance_realspace(const HarmonicSpec& spec, const Lattice& lat);

// Tables of omega, Phi and Gamma_hat = 1/omega^2 on the midpoint grid
// k = (i + 1/2)/m per axis; the shifted grid never contains k = 0.
struct SpectralTable {
    int dim = 0;
    int m = 0;
    std::vector<double> omega;
    std::vector<double> phi;
    std::vector<double> gamma_hat;

    static SpectralTable build(const HarmonicSpec& spec, int m);
    std::int64_t nodes() const { return omega.size(); }
    void node_k(std::int64_t flat, double* k) const;
};

// Largest group velocity of the dispersion, in sites per unit time.
double max_group_velocity(const HarmonicSpec& spec);

int default_grid(int dim);

}  // namespace heatlat::spectral
