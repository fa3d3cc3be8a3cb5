#include "heatlat/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heatlat/errors.hpp"
#include "heatlat/observables.hpp"
#include "heatlat/spectral.hpp"

namespace heatlat {

void rotate_pair(double& pxi, double& pxj, double& pzi, double& pzj, double phi) {
    const double di = pzi - pxi;
    const double dj = pzj - pxj;
    const double si = pzi + pxi;
    const double sj = pzj + pxj;
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double ri = c * di + s * dj;
    const double rj = -s * di + c * dj;
    pxi = 0.5 * (si - ri);
    pzi = 0.5 * (si + ri);
    pxj = 0.5 * (sj - rj);
    pzj = 0.5 * (sj + rj);
}

void rotate_triple(double& a, double& b, double& c, double psi) {
    constexpr double inv_sqrt3 = 0.57735026918962576450914878050196;
    const double m = (a + b + c) / 3.0;
    const double u1 = a - m, u2 = b - m, u3 = c - m;
    const double x1 = inv_sqrt3 * (u3 - u2);
    const double x2 = inv_sqrt3 * (u1 - u3);
    const double x3 = inv_sqrt3 * (u2 - u1);
    const double cp = std::cos(psi);
    const double sp = std::sin(psi);
    a = m + cp * u1 + sp * x1;
    b = m + cp * u2 + sp * x2;
    c = m + cp * u3 + sp * x3;
}

Integrator::Integrator(const ModelParams& params, const Lattice& lat, std::uint64_t seed)
    : lat_(lat), params_(params), dt_(params.time_step()), fft_(lat), rng_(seed) {
    params_.validate();
    const HarmonicSpec spec = params_.spec();
    omega_.resize(fft_.modes());
    double k[3];
    for (std::int64_t mo = 0; mo < fft_.modes(); ++mo) {
        const auto c = fft_.mode_coords(mo);
        bool zero = true;
        for (int a = 0; a < spec.dim; ++a) {
            k[a] = static_cast<double>(c[a]) / lat.n();
            zero = zero && c[a] == 0;
        }
        omega_[mo] = (zero && spec.nu == 0.0) ? 0.0 : spectral::dispersion(spec, k);
    }
    const double h = 0.5 * dt_;
    cos_h_.resize(fft_.modes());
    sinc_h_.resize(fft_.modes());
    wsin_h_.resize(fft_.modes());
    for (std::int64_t mo = 0; mo < fft_.modes(); ++mo) {
        const double w = omega_[mo];
        cos_h_[mo] = std::cos(w * h);
        sinc_h_[mo] = w == 0.0 ? h : std::sin(w * h) / w;
        wsin_h_[mo] = w * std::sin(w * h);
    }
    qhat_.assign(lat.dim(), std::vector<std::complex<double>>(fft_.modes()));
    phat_.assign(lat.dim(), std::vector<std::complex<double>>(fft_.modes()));
    scratch_.resize(lat.sites());
}

void Integrator::set_shuffled_sweep(bool on) {
    shuffled_ = on;
    if (!on || !cells_.empty()) return;
    const int d = lat_.dim();
    if (d == 1) {
        for (std::int64_t s = 0; s < lat_.sites(); ++s) cells_.push_back({s, 0, 0, 0});
    } else {
        for (int a = 0; a < d; ++a)
            for (std::int64_t s = 0; s < lat_.sites(); ++s)
                for (int i = 0; i < d; ++i)
                    for (int j = i + 1; j < d; ++j) cells_.push_back({s, a, i, j});
    }
    order_.resize(cells_.size());
}

void Integrator::to_fourier(const PhaseState& state) {
    const int d = lat_.dim();
    for (int c = 0; c < d; ++c) {
        for (std::int64_t s = 0; s < lat_.sites(); ++s) scratch_[s] = state.q[s * d + c];
        fft_.forward(scratch_.data(), qhat_[c].data());
        for (std::int64_t s = 0; s < lat_.sites(); ++s) scratch_[s] = state.p[s * d + c];
        fft_.forward(scratch_.data(), phat_[c].data());
    }
}

void Integrator::from_fourier(PhaseState& state) {
    const int d = lat_.dim();
    for (int c = 0; c < d; ++c) {
        fft_.inverse(qhat_[c].data(), scratch_.data());
        for (std::int64_t s = 0; s < lat_.sites(); ++s) state.q[s * d + c] = scratch_[s];
        fft_.inverse(phat_[c].data(), scratch_.data());
        for (std::int64_t s = 0; s < lat_.sites(); ++s) state.p[s * d + c] = scratch_[s];
    }
}

void Integrator::rotate_modes(double h) {
    const bool cached = h == 0.5 * dt_;
    const int d = lat_.dim();
    for (int c = 0; c < d; ++c) {
        auto* qh = qhat_[c].data();
        auto* ph = phat_[c].data();
        for (std::int64_t mo = 0; mo < fft_.modes(); ++mo) {
            double cw, sc, ws;
            if (cached) {
                cw = cos_h_[mo];
                sc = sinc_h_[mo];
                ws = wsin_h_[mo];
            } else {
                const double w = omega_[mo];
                cw = std::cos(w * h);
                sc = w == 0.0 ? h : std::sin(w * h) / w;
                ws = w * std::sin(w * h);
            }
            const auto q0 = qh[mo];
            const auto p0 = ph[mo];
            qh[mo] = cw * q0 + sc * p0;
            ph[mo] = -ws * q0 + cw * p0;
        }
    }
}

void Integrator::hamiltonian_step(PhaseState& state, double h) {
    to_fourier(state);
    rotate_modes(h);
    from_fourier(state);
    state.t += h;
}

void Integrator::noise_step(PhaseState& state, double h) {
    const int d = lat_.dim();
    if (params_.gamma == 0.0 || h == 0.0) {
        state.t += h;
        return;
    }
    double* p = state.p.data();
    if (shuffled_) {
        set_shuffled_sweep(true);
        for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<std::uint32_t>(i);
        for (std::size_t i = order_.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(rng_.raw() % i);
            std::swap(order_[i - 1], order_[j]);
        }
    }
    if (d == 1) {
        const double sd = std::sqrt(params_.gamma * h * variance_scale_);
        auto kick = [&](std::int64_t s) {
            const double psi = sd * rng_.gaussian();
            rotate_triple(p[lat_.minus(s, 0)], p[s], p[lat_.plus(s, 0)], psi);
        };
        if (shuffled_)
            for (const auto idx : order_) kick(cells_[idx].site);
        else
            for (std::int64_t s = 0; s < lat_.sites(); ++s) kick(s);
    } else {
        const double sd = std::sqrt(8.0 * params_.gamma * h * variance_scale_ / (d - 1));
        auto kick = [&](std::int64_t s, int axis, int ci, int cj) {
            const std::int64_t z = lat_.plus(s, axis);
            const double phi = sd * rng_.gaussian();
            rotate_pair(p[s * d + ci], p[s * d + cj], p[z * d + ci], p[z * d + cj], phi);
        };
        if (shuffled_) {
            for (const auto idx : order_) {
                const Cell& cell = cells_[idx];
                kick(cell.site, cell.axis, cell.ci, cell.cj);
            }
        } else {
            for (int a = 0; a < d; ++a)
                for (std::int64_t s = 0; s < lat_.sites(); ++s)
                    for (int i = 0; i < d; ++i)
                        for (int j = i + 1; j < d; ++j) kick(s, a, i, j);
        }
    }
    state.t += h;
}

void Integrator::strang_step(PhaseState& state) {
    const double t1 = state.t + dt_;
    hamiltonian_step(state, 0.5 * dt_);
    noise_step(state, dt_);
    hamiltonian_step(state, 0.5 * dt_);
    state.t = t1;  // the three sub-steps together span one dt
}

CalibrationReport calibrate_generator(const ModelParams& params, const Lattice& lat, int replicas,
                                      double dt, double variance_scale,
                                      const VectorField* initial_p) {
    if (replicas < 100) throw ConfigError("calibrate_generator: need at least 100 replicas");
    const int d = lat.dim();
    const std::int64_t sites = lat.sites();

    VectorField p0(sites * d, 0.0);
    if (initial_p) {
        p0 = *initial_p;
    } else {
        p0[0] = 1.0;  // unit kick at the origin, first component
    }

    PhaseState base;
    base.resize(lat);
    base.p = p0;

    CalibrationReport rep;
    rep.replicas = replicas;
    rep.dt = dt;
    rep.p_ref = s_momentum(lat, p0);
    for (double& v : rep.p_ref) v *= params.gamma;
    rep.e_ref = current_divergence(lat, current_noise(lat, base));
    for (double& v : rep.e_ref) v *= params.gamma;

    ScalarField e0(sites);
    for (std::int64_t s = 0; s < sites; ++s) {
        double acc = 0.0;
        for (int c = 0; c < d; ++c) acc += p0[s * d + c] * p0[s * d + c];
        e0[s] = 0.5 * acc;
    }

    ModelParams run = params;
    run.dt = dt;
    Integrator integ(run, lat, params.seed);
    integ.set_noise_variance_scale(variance_scale);

    std::vector<double> p_sum(sites * d, 0.0), p_sq(sites * d, 0.0);
    std::vector<double> e_sum(sites, 0.0), e_sq(sites, 0.0);
    PhaseState state;
    state.resize(lat);
    for (int r = 0; r < replicas; ++r) {
        integ.reseed(replica_seed(params.seed, r));
        state.p = p0;
        std::fill(state.q.begin(), state.q.end(), 0.0);
        state.t = 0.0;
        integ.noise_step(state, dt);
        for (std::int64_t i = 0; i < sites * d; ++i) {
            const double v = (state.p[i] - p0[i]) / dt;
            p_sum[i] += v;
            p_sq[i] += v * v;
        }
        for (std::int64_t s = 0; s < sites; ++s) {
            double acc = 0.0;
            for (int c = 0; c < d; ++c) acc += state.p[s * d + c] * state.p[s * d + c];
            const double v = (0.5 * acc - e0[s]) / dt;
            e_sum[s] += v;
            e_sq[s] += v * v;
        }
    }

    const double R = replicas;
    auto finish = [&](const std::vector<double>& sum, const std::vector<double>& sq,
                      const std::vector<double>& ref, std::vector<double>& mean,
                      std::vector<double>& se, double& max_z) {
        mean.resize(sum.size());
        se.resize(sum.size());
        max_z = 0.0;
        for (std::size_t i = 0; i < sum.size(); ++i) {
            mean[i] = sum[i] / R;
            const double var = std::max(0.0, (sq[i] / R - mean[i] * mean[i]) * R / (R - 1.0));
            se[i] = std::sqrt(var / R);
            const double diff = mean[i] - ref[i];
            double z;
            if (se[i] > 0.0)
                z = std::abs(diff) / se[i];
            else
                z = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
            max_z = std::max(max_z, z);
        }
    };
    finish(p_sum, p_sq, rep.p_ref, rep.p_drift, rep.p_se, rep.max_z_p);
    finish(e_sum, e_sq, rep.e_ref, rep.e_drift, rep.e_se, rep.max_z_e);
    return rep;
}

}  // namespace heatlat
