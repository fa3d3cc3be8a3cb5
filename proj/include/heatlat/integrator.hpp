#pragma once

#include <cstdint>
#include <vector>

#include "heatlat/fft.hpp"
#include "heatlat/params.hpp"
#include "heatlat/rng.hpp"
#include "heatlat/state.hpp"

namespace heatlat {

// Rotates the difference of the (i,j) momentum components of a bond pair by
// angle phi, keeping the pair sums fixed. Exact exponential of the pair
// noise field with phi = 2 theta.
void rotate_pair(double& pxi, double& pxj, double& pzi, double& pzj, double phi);

// Rotates (a,b,c) about the axis (1,1,1)/sqrt(3) by angle psi; preserves
// a+b+c and a^2+b^2+c^2 up to rounding.
void rotate_triple(double& a, double& b, double& c, double psi);

// Strang-split integrator: exact-in-Fourier Hamiltonian flow around an
// exactly conservative momentum-noise sweep. One instance per trajectory
// worker; reseed() + a fresh sample give an independent replica.
class Integrator {
public:
    Integrator(const ModelParams& params, const Lattice& lat, std::uint64_t seed);

    double dt() const { return dt_; }
    void reseed(std::uint64_t seed) { rng_.reseed(seed); }
    Rng& rng() { return rng_; }

    // Test hooks: scales the Gaussian angle variance, or randomizes the
    // sweep order each step (for splitting-bias checks).
    void set_noise_variance_scale(double s) { variance_scale_ = s; }
    void set_shuffled_sweep(bool on);

    // Exact evolution of the linear Hamiltonian flow over time h: per mode,
    // (q,p) -> (cos(w h) q + sin(w h)/w p, -w sin(w h) q + cos(w h) p); the
    // nu = 0 zero mode moves in free flight.
    void hamiltonian_step(PhaseState& state, double h);

    // One sweep of exact conservative rotations over all noise cells:
    // d >= 2 rotates each bond/component-pair difference by an angle with
    // variance 8 gamma h/(d-1); d = 1 rotates each momentum triple about
    // (1,1,1)/sqrt(3) by an angle with variance gamma h. Total momentum and
    // kinetic energy are invariant per cell up to rounding; q is untouched.
    // The variances match the generator of the noise semigroup; the
    // calibration report validates them against the closed-form drifts.
    void noise_step(PhaseState& state, double h);

    // hamiltonian_step(dt/2), noise_step(dt), hamiltonian_step(dt/2).
    void strang_step(PhaseState& state);

private:
    void rotate_modes(double h);  // acts on qhat_/phat_
    void to_fourier(const PhaseState& state);
    void from_fourier(PhaseState& state);

    const Lattice& lat_;
    ModelParams params_;
    double dt_;
    Fourier fft_;
    Rng rng_;
    double variance_scale_ = 1.0;
    bool shuffled_ = false;

    std::vector<double> omega_;   // per r2c mode
    std::vector<double> cos_h_;   // cached for h = dt/2
    std::vector<double> sinc_h_;  // sin(w h)/w, h = dt/2
    std::vector<double> wsin_h_;  // w sin(w h), h = dt/2

    std::vector<std::vector<std::complex<double>>> qhat_, phat_;
    std::vector<double> scratch_;

    struct Cell {
        std::int64_t site;
        int axis;
        int ci, cj;
    };
    std::vector<Cell> cells_;     // only built for the shuffled sweep
    std::vector<std::uint32_t> order_;
};

// Noise-only drift calibration: evolves R replicas one noise step from a
// fixed initial momentum field (default: unit kick at the origin, first
// component) and compares the empirical drifts of p and of |p|^2/2 with
// gamma S p and with the divergence of the noise current. Reports per-entry
// z-scores.
struct CalibrationReport {
    int replicas = 0;
    double dt = 0.0;
    std::vector<double> p_drift, p_ref, p_se;  // sites*dim entries
    std::vector<double> e_drift, e_ref, e_se;  // per site
    double max_z_p = 0.0;
    double max_z_e = 0.0;
};

CalibrationReport calibrate_generator(const ModelParams& params, const Lattice& lat, int replicas,
                                      double dt, double variance_scale = 1.0,
                                      const VectorField* initial_p = nullptr);

}  // namespace heatlat
