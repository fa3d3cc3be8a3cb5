#pragma once

#include <vector>

#include "heatlat/params.hpp"
#include "heatlat/records.hpp"

namespace heatlat {

struct RunSpec {
    std::vector<double> output_times;  // > 0, ascending; t = 0 is always recorded
    bool record_currents = false;
    bool record_total_current = false;
    int current_stride = 1;  // steps between dense current samples
    bool shuffled_sweep = false;
    double noise_variance_scale = 1.0;
};

// Evolves `replicas` independent trajectories from fresh Gibbs samples and
// returns one record per replica. Replica r runs on seed
// replica_seed(params.seed, r); results are bitwise independent of the
// worker count. Output times are snapped to the integrator step grid.
std::vector<TrajectoryRecord> run_replicas(const ModelParams& params, const RunSpec& spec,
                                           int replicas, int workers);

// Ballistic/diffusive wrap guard for a planned horizon. With gamma = 0 the
// sound cone must stay inside half the box. With gamma > 0 the coherent
// front is damped at rate gamma Phi(k), so the bound combines the damped
// free path with a 4-sigma diffusive width; wrapped correlation mass beyond
// that is orders of magnitude below replica-level resolution.
void check_horizon(const ModelParams& params, double horizon);

}  // namespace heatlat
