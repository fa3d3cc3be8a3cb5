#pragma once

#include <cstdint>
#include <vector>

#include "heatlat/lattice.hpp"
#include "heatlat/params.hpp"
#include "heatlat/records.hpp"

namespace heatlat {

struct EstimatorOptions {
    double window_sigmas = 6.0;     // second-moment window, in units of sqrt(m)
    double fit_tmin = 0.0;          // least-squares fit uses output times >= this
    double shape_bin_sigmas = 0.5;  // shape-test bin width in units of sigma
    double flag_ratio = 5.0;        // raise the signed-weights flag when sum|S| > ratio |sum S|
};

// Ensemble- and translation-averaged energy correlation
//   S(x, t) = < (e_{y+x}(t) - ebar)(e_y(0) - ebar) >,
// centered with the exact equilibrium mean energy. Standard errors are
// replica-level. The windowed second-moment ladder retained per replica
// drives the MSD fit and its jackknife errors.
struct CorrelationProfile {
    int dim = 0;
    int n = 0;
    int replicas = 0;
    double centering = 0.0;
    std::vector<double> times;            // output times, times[0] == 0
    std::vector<ScalarField> S;           // per time, displacement-indexed (flat row-major)
    std::vector<ScalarField> stderr_;     // per time
    std::vector<double> sum_S;            // per time, sum over all displacements
    std::vector<double> sum_absS;         // per time
    std::vector<double> window_radius;    // moment-window ladder; last entry covers everything
    // [time][window][replica] windowed mass and second moment of the
    // per-replica profile.
    std::vector<std::vector<std::vector<double>>> mass_rep;
    std::vector<std::vector<std::vector<double>>> mom_rep;
};

CorrelationProfile estimate_correlation(const ModelParams& params,
                                        const std::vector<TrajectoryRecord>& records);

struct MsdResult {
    std::vector<double> times;   // output times > 0 entering the fit data
    std::vector<double> m;       // windowed second moment per time
    std::vector<double> m_se;    // jackknife standard error
    std::vector<double> window;  // window radius used per time
    double m0 = 0.0;             // static width at t = 0
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;  // jackknife over replicas
    bool signed_weights_flag = false;
};

// Second moment m(t) = sum |x|^2 rho(x,t), rho = S / sum S restricted to an
// adaptive window (window_sigmas * sqrt(m)); slope from a variance-weighted
// least-squares line over the fit window. The predicted slope is d * kappa.
MsdResult msd(const CorrelationProfile& profile, const EstimatorOptions& opts = {});

struct ShapeResult {
    double l1 = 0.0;
    double sigma_model = 0.0;
    double time = 0.0;
    int bins = 0;
};

// L1 distance between the normalized profile at one output time and the
// discretized Gaussian with per-coordinate variance (m0 + dim*kappa*t)/dim,
// compared on coarse bins (macroscopic resolution).
ShapeResult profile_shape_test(const CorrelationProfile& profile, int time_index, double kappa,
                               const EstimatorOptions& opts = {});

// Monte Carlo variance of Y_t(F) = n^{-d/2} sum_y F(y)(e_y(t) - ebar).
double fluctuation_field_variance(const ModelParams& params,
                                  const std::vector<TrajectoryRecord>& records,
                                  const ScalarField& F, int time_index);

struct GreenKuboSeries {
    std::vector<double> lag;
    std::vector<double> C;         // (beta^2 / n^d) <J1(t) J1(0)>
    std::vector<double> C_se;      // replica-level
    std::vector<double> integral;  // running trapezoid of C
    bool plateau_found = false;
    double plateau_time = 0.0;
    double plateau_integral = 0.0;
    // plateau_integral + gamma. The volume-summed noise current vanishes
    // identically (it is a lattice gradient), and the exchange noise enters
    // the diffusivity as the same additive gamma as the quadrature formula.
    double kappa_estimate = 0.0;
};

GreenKuboSeries green_kubo(const ModelParams& params,
                           const std::vector<TrajectoryRecord>& records, double max_lag_time);

}  // namespace heatlat
