#include "heatlat/gibbs.hpp"

#include <cmath>

#include "heatlat/spectral.hpp"

namespace heatlat {

GibbsSampler::GibbsSampler(const ModelParams& params, const Lattice& lat, std::uint64_t seed)
    : lat_(lat), params_(params), fft_(lat), rng_(seed) {
    params_.validate();
    const HarmonicSpec spec = params.spec();
    sigma_.resize(fft_.modes());
    double k[3];
    const double inv_sqrt_beta = 1.0 / std::sqrt(params.beta);
    for (std::int64_t mo = 0; mo < fft_.modes(); ++mo) {
        const auto c = fft_.mode_coords(mo);
        bool zero_mode = true;
        for (int a = 0; a < spec.dim; ++a) {
            k[a] = static_cast<double>(c[a]) / lat.n();
            zero_mode = zero_mode && c[a] == 0;
        }
        if (zero_mode && spec.nu == 0.0)
            sigma_[mo] = 0.0;
        else
            sigma_[mo] = inv_sqrt_beta / spectral::dispersion(spec, k);
    }
    white_.resize(lat.sites());
    spec_.resize(fft_.modes());
    comp_.resize(lat.sites());
}

void GibbsSampler::sample(PhaseState& state) {
    const int d = lat_.dim();
    const std::int64_t sites = lat_.sites();
    state.q.resize(sites * d);
    state.p.resize(sites * d);
    state.t = 0.0;

    const double p_sigma = 1.0 / std::sqrt(params_.beta);
    for (int c = 0; c < d; ++c) {
        for (std::int64_t s = 0; s < sites; ++s) white_[s] = rng_.gaussian();
        fft_.forward(white_.data(), spec_.data());
        for (std::int64_t mo = 0; mo < fft_.modes(); ++mo) spec_[mo] *= sigma_[mo];
        fft_.inverse(spec_.data(), comp_.data());
        for (std::int64_t s = 0; s < sites; ++s) state.q[s * d + c] = comp_[s];
    }
    for (std::int64_t s = 0; s < sites; ++s)
        for (int c = 0; c < d; ++c) state.p[s * d + c] = p_sigma * rng_.gaussian();
}

double mean_site_energy(const ModelParams& params) {
    const double base = params.dim / params.beta;
    if (params.nu > 0.0) return base;
    double vol = 1.0;
    for (int a = 0; a < params.dim; ++a) vol *= params.n;
    return base - 0.5 * params.dim / (params.beta * vol);
}

}  // namespace heatlat
