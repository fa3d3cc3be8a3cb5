#include "heatlat/runner.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "heatlat/errors.hpp"
#include "heatlat/gibbs.hpp"
#include "heatlat/integrator.hpp"
#include "heatlat/observables.hpp"
#include "heatlat/spectral.hpp"

namespace heatlat {

namespace {

std::vector<std::int64_t> snap_to_steps(const std::vector<double>& times, double dt) {
    std::vector<std::int64_t> steps;
    steps.reserve(times.size());
    std::int64_t prev = 0;
    for (double t : times) {
        if (!(t > 0.0)) throw ConfigError("output times must be > 0");
        const std::int64_t s = std::llround(t / dt);
        if (s <= prev)
            throw ConfigError("output times collapse onto the same integrator step (t = " +
                              std::to_string(t) + ")");
        steps.push_back(s);
        prev = s;
    }
    return steps;
}

}  // namespace

std::vector<TrajectoryRecord> run_replicas(const ModelParams& params, const RunSpec& spec,
                                           int replicas, int workers) {
    params.validate();
    if (replicas < 1) throw ConfigError("need at least one replica");
    const double dt = params.time_step();
    const std::vector<std::int64_t> out_steps = snap_to_steps(spec.output_times, dt);
    const std::int64_t total_steps = out_steps.empty() ? 0 : out_steps.back();

    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min(workers, replicas);

    std::vector<TrajectoryRecord> records(replicas);
    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto work = [&]() {
        try {
            const Lattice lat(params.dim, params.n);
            const HarmonicSpec hspec = params.spec();
            GibbsSampler sampler(params, lat, 0);
            Integrator integ(params, lat, 0);
            integ.set_noise_variance_scale(spec.noise_variance_scale);
            integ.set_shuffled_sweep(spec.shuffled_sweep);
            PhaseState state;
            state.resize(lat);

            for (;;) {
                const int r = next.fetch_add(1);
                if (r >= replicas) break;
                const std::uint64_t seed = replica_seed(params.seed, r);
                sampler.reseed(seed);
                integ.reseed(splitmix64(seed));  // sampler and dynamics use distinct streams
                sampler.sample(state);

                TrajectoryRecord rec;
                rec.replica = r;
                rec.seed = seed;
                rec.dim = params.dim;
                rec.n = params.n;

                auto capture = [&](double t) {
                    rec.times.push_back(t);
                    EnergyField ef = site_energy(hspec, lat, state);
                    if (!state.finite())
                        throw EstimatorFailure("non-finite state in replica " + std::to_string(r));
                    rec.total_energy.push_back(hamiltonian(hspec, lat, state));
                    rec.energy.push_back(std::move(ef.e));
                    if (spec.record_currents) {
                        rec.j_a.push_back(current_hamiltonian(hspec, lat, state));
                        rec.j_s.push_back(current_noise(lat, state));
                    }
                };
                auto sample_jtot = [&]() {
                    const auto ja = current_hamiltonian(hspec, lat, state);
                    const auto js = current_noise(lat, state);
                    double acc = 0.0;
                    for (std::int64_t s = 0; s < lat.sites(); ++s)
                        acc += ja[s * params.dim] + params.gamma * js[s * params.dim];
                    rec.jtot_series.push_back(acc);
                };

                capture(0.0);
                if (spec.record_total_current) {
                    rec.jtot_dt = dt * spec.current_stride;
                    sample_jtot();
                }
                std::size_t out_idx = 0;
                for (std::int64_t step = 1; step <= total_steps; ++step) {
                    integ.strang_step(state);
                    if (spec.record_total_current && step % spec.current_stride == 0) sample_jtot();
                    if (out_idx < out_steps.size() && step == out_steps[out_idx]) {
                        capture(static_cast<double>(step) * dt);
                        ++out_idx;
                    }
                }
                records[r] = std::move(rec);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return records;
}

void check_horizon(const ModelParams& params, double horizon) {
    if (!(horizon > 0.0)) throw ConfigError("horizon must be > 0");
    const HarmonicSpec spec = params.spec();
    const double v = spectral::max_group_velocity(spec);
    const double half = 0.5 * params.n;
    if (params.gamma == 0.0) {
        if (v * horizon >= half)
            throw RegimeError("horizon " + std::to_string(horizon) +
                              " exceeds the ballistic wrap guard (c_s T >= n/2)");
        return;
    }
    const double kappa = spectral::thermal_diffusivity(params).kappa;
    // Damped ballistic reach: a mode travels at most ~v_k / (gamma Phi_k)
    // before decohering.
    double reach = 0.0;
    const int m = 1 << 13;
    double k[3] = {0.0, 0.0, 0.0};
    for (int i = 1; i < m; ++i) {
        k[0] = static_cast<double>(i) / m;
        const double vk = spec.alpha * std::abs(std::sin(2.0 * 3.14159265358979323846 * k[0])) /
                          spectral::dispersion(spec, k);
        const double free_path = vk / (params.gamma * spectral::scattering_rate(spec, k));
        reach = std::max(reach, std::min(vk * horizon, free_path));
    }
    const double width = 4.0 * std::sqrt(kappa * horizon);
    if (reach + width >= half)
        throw RegimeError("horizon " + std::to_string(horizon) +
                          " risks wrap-around (damped reach " + std::to_string(reach) +
                          " + 4-sigma width " + std::to_string(width) + " >= n/2 = " +
                          std::to_string(half) + ")");
}

}  // namespace heatlat
