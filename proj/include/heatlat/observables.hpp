#pragma once

#include "heatlat/lattice.hpp"
#include "heatlat/params.hpp"
#include "heatlat/state.hpp"

namespace heatlat {

struct EnergyField {
    ScalarField e;
    double t = 0.0;
};

// Bond currents attached to the directed bond (x, x + e_axis), stored at
// [site*dim + axis]. The decomposition is j = j_a + gamma * j_s.
struct CurrentField {
    std::vector<double> j_a;
    std::vector<double> j_s;
    double t = 0.0;
};

// e_x = |p_x|^2/2 + (alpha/4) sum_{|y-x|=1} |q_y - q_x|^2 + (nu/2)|q_x|^2.
EnergyField site_energy(const HarmonicSpec& spec, const Lattice& lat, const PhaseState& state);

// Direct evaluation of the Hamiltonian (independent of site_energy).
double hamiltonian(const HarmonicSpec& spec, const Lattice& lat, const PhaseState& state);

// j_a(x, x+e_i) = -(alpha/2) (q_{x+e_i} - q_x) . (p_{x+e_i} + p_x).
std::vector<double> current_hamiltonian(const HarmonicSpec& spec, const Lattice& lat,
                                        const PhaseState& state);

// Noise current without the gamma factor:
//   d >= 2: j_s(x, x+e_i) = -(|p_{x+e_i}|^2 - |p_x|^2)
//   d = 1 : j_s(x, x+1)   = -(phi_{x+1} - phi_x), phi the three-site form.
std::vector<double> current_noise(const Lattice& lat, const PhaseState& state);

// Divergence of a bond field: sum_i [ j(x-e_i, i) - j(x, i) ].
ScalarField current_divergence(const Lattice& lat, const std::vector<double>& j);

// Generator of the momentum noise applied to p (per component):
//   d >= 2: S p = 2 Lap p,   d = 1: S p = (1/6) Lap (4 p + p_+ + p_-).
VectorField s_momentum(const Lattice& lat, const VectorField& p);

// S applied to the kinetic energy |p_x|^2/2, evaluated from the per-cell
// generator structure (pair fields in d >= 2, three-site fields in d = 1).
ScalarField s_kinetic_energy(const Lattice& lat, const VectorField& p);

// Max over sites of | A e_x + gamma S e_x - div j | with A e_x from the
// chain rule along the Hamiltonian vector field, S e_x from the cell
// generator and div j from the bond-current fields. A pathwise identity;
// the residual is rounding-level for a correct sign convention.
double continuity_residual(const ModelParams& params, const Lattice& lat, const PhaseState& state);

}  // namespace heatlat
