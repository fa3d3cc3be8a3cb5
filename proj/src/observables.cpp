#include "heatlat/observables.hpp"

#include <cmath>

namespace heatlat {

namespace {

inline double pair_dot(const double* a, const double* b, int d) {
    double acc = 0.0;
    for (int c = 0; c < d; ++c) acc += a[c] * b[c];
    return acc;
}

inline double norm2(const double* a, int d) { return pair_dot(a, a, d); }

// phi(p_{x-1}, p_x, p_{x+1}) of the d=1 noise current.
inline double phi1(double pm, double p0, double pp) {
    return (pp * pp + 4.0 * p0 * p0 + pm * pm + pp * pm - 2.0 * pp * p0 - 2.0 * pm * p0) / 6.0;
}

}  // namespace

EnergyField site_energy(const HarmonicSpec& spec, const Lattice& lat, const PhaseState& state) {
    const int d = lat.dim();
    EnergyField out;
    out.t = state.t;
    out.e.resize(lat.sites());
    for (std::int64_t s = 0; s < lat.sites(); ++s) {
        const double* qs = &state.q[s * d];
        double e = 0.5 * norm2(&state.p[s * d], d) + 0.5 * spec.nu * norm2(qs, d);
        double bond = 0.0;
        for (int a = 0; a < d; ++a) {
            const double* qp = &state.q[lat.plus(s, a) * d];
            const double* qm = &state.q[lat.minus(s, a) * d];
            for (int c = 0; c < d; ++c) {
                const double dp = qp[c] - qs[c];
                const double dm = qm[c] - qs[c];
                bond += dp * dp + dm * dm;
            }
        }
        out.e[s] = e + 0.25 * spec.alpha * bond;
    }
    return out;
}

double hamiltonian(const HarmonicSpec& spec, const Lattice& lat, const PhaseState& state) {
    const int d = lat.dim();
    double kin = 0.0, pin = 0.0, spring = 0.0;
    for (std::int64_t s = 0; s < lat.sites(); ++s) {
        kin += norm2(&state.p[s * d], d);
        pin += norm2(&state.q[s * d], d);
        for (int a = 0; a < d; ++a) {
            const double* qp = &state.q[lat.plus(s, a) * d];
            const double* qs = &state.q[s * d];
            for (int c = 0; c < d; ++c) {
                const double dq = qp[c] - qs[c];
                spring += dq * dq;
            }
        }
    }
    return 0.5 * kin + 0.5 * spec.nu * pin + 0.5 * spec.alpha * spring;
}

std::vector<double> current_hamiltonian(const HarmonicSpec& spec, const Lattice& lat,
                                        const PhaseState& state) {
    const int d = lat.dim();
    std::vector<double> j(lat.sites() * d);
    for (std::int64_t s = 0; s < lat.sites(); ++s) {
        for (int a = 0; a < d; ++a) {
            const std::int64_t z = lat.plus(s, a);
            double acc = 0.0;
            for (int c = 0; c < d; ++c)
                acc += (state.q[z * d + c] - state.q[s * d + c]) *
                       (state.p[z * d + c] + state.p[s * d + c]);
            j[s * d + a] = -0.5 * spec.alpha * acc;
        }
    }
    return j;
}

std::vector<double> current_noise(const Lattice& lat, const PhaseState& state) {
    const int d = lat.dim();
    std::vector<double> j(lat.sites() * d);
    if (d == 1) {
        for (std::int64_t s = 0; s < lat.sites(); ++s) {
            const std::int64_t sp = lat.plus(s, 0);
            const double phi_x = phi1(state.p[lat.minus(s, 0)], state.p[s], state.p[sp]);
            const double phi_xp = phi1(state.p[s], state.p[sp], state.p[lat.plus(sp, 0)]);
            j[s] = -(phi_xp - phi_x);
        }
        return j;
    }
    for (std::int64_t s = 0; s < lat.sites(); ++s) {
        const double p2 = norm2(&state.p[s * d], d);
        for (int a = 0; a < d; ++a)
            j[s * d + a] = -(norm2(&state.p[lat.plus(s, a) * d], d) - p2);
    }
    return j;
}

ScalarField current_divergence(const Lattice& lat, const std::vector<double>& j) {
    const int d = lat.dim();
    ScalarField div(lat.sites(), 0.0);
    for (std::int64_t s = 0; s < lat.sites(); ++s)
        for (int a = 0; a < d; ++a)
            div[s] += j[lat.minus(s, a) * d + a] - j[s * d + a];
    return div;
}

VectorField s_momentum(const Lattice& lat, const VectorField& p) {
    const int d = lat.dim();
    if (d >= 2) {
        VectorField out = laplacian_vec(lat, p);
        for (double& v : out) v *= 2.0;
        return out;
    }
    ScalarField g(lat.sites());
    for (std::int64_t s = 0; s < lat.sites(); ++s)
        g[s] = 4.0 * p[s] + p[lat.plus(s, 0)] + p[lat.minus(s, 0)];
    ScalarField lg = laplacian(lat, g);
    for (double& v : lg) v /= 6.0;
    return lg;
}

ScalarField s_kinetic_energy(const Lattice& lat, const VectorField& p) {
    const int d = lat.dim();
    ScalarField out(lat.sites(), 0.0);
    if (d == 1) {
        for (std::int64_t s = 0; s < lat.sites(); ++s) {
            const double pm2 = p[lat.minus(lat.minus(s, 0), 0)];
            const double pm = p[lat.minus(s, 0)];
            const double p0 = p[s];
            const double pp = p[lat.plus(s, 0)];
            const double pp2 = p[lat.plus(lat.plus(s, 0), 0)];
            const double sq = (pp - pm) * (pp - pm) + (pm2 - pm) * (pm2 - pm) + (pp - pp2) * (pp - pp2);
            out[s] = (sq + p0 * (pp2 + pm2 + 2.0 * pp + 2.0 * pm - 6.0 * p0)) / 6.0;
        }
        return out;
    }
    // Per bond {x,z}: sum over ordered pairs of X^2(|p_x|^2/2) equals
    // 2(d-1)|p_z - p_x|^2 + 4(d-1) p_x.(p_z - p_x); the 1/(2(d-1)) of S
    // cancels the 2(d-1).
    for (std::int64_t s = 0; s < lat.sites(); ++s) {
        const double* ps = &p[s * d];
        double acc = 0.0;
        for (int a = 0; a < d; ++a) {
            for (const std::int64_t z : {lat.plus(s, a), lat.minus(s, a)}) {
                const double* pz = &p[z * d];
                for (int c = 0; c < d; ++c) {
                    const double delta = pz[c] - ps[c];
                    acc += delta * delta + 2.0 * ps[c] * delta;
                }
            }
        }
        out[s] = acc;
    }
    return out;
}

double continuity_residual(const ModelParams& params, const Lattice& lat, const PhaseState& state) {
    const HarmonicSpec spec = params.spec();
    const int d = lat.dim();

    // A e_x by the chain rule: p.pdot with pdot = alpha Lap q - nu q, plus
    // (alpha/2) sum_{y~x} (q_y-q_x).(p_y-p_x) from the bond energies, plus
    // nu q.p from the pinning term. The two nu contributions cancel only in
    // exact arithmetic; evaluating both keeps this an independent route.
    ScalarField a_e(lat.sites());
    for (std::int64_t s = 0; s < lat.sites(); ++s) {
        const double* qs = &state.q[s * d];
        const double* ps = &state.p[s * d];
        double acc = 0.0;
        for (int c = 0; c < d; ++c) {
            double lap_q = 0.0;
            for (int a = 0; a < d; ++a)
                lap_q += state.q[lat.plus(s, a) * d + c] + state.q[lat.minus(s, a) * d + c] -
                         2.0 * qs[c];
            acc += ps[c] * (spec.alpha * lap_q - spec.nu * qs[c]);  // p . pdot
            acc += spec.nu * qs[c] * ps[c];                         // pinning energy rate
        }
        for (int a = 0; a < d; ++a) {
            for (const std::int64_t z : {lat.plus(s, a), lat.minus(s, a)}) {
                const double* qz = &state.q[z * d];
                const double* pz = &state.p[z * d];
                for (int c = 0; c < d; ++c)
                    acc += 0.5 * spec.alpha * (qz[c] - qs[c]) * (pz[c] - ps[c]);
            }
        }
        a_e[s] = acc;
    }

    const ScalarField s_e = s_kinetic_energy(lat, state.p);

    std::vector<double> j = current_hamiltonian(spec, lat, state);
    const std::vector<double> js = current_noise(lat, state);
    for (std::size_t i = 0; i < j.size(); ++i) j[i] += params.gamma * js[i];
    const ScalarField div = current_divergence(lat, j);

    double worst = 0.0;
    for (std::int64_t s = 0; s < lat.sites(); ++s)
        worst = std::max(worst, std::abs(a_e[s] + params.gamma * s_e[s] - div[s]));
    return worst;
}

}  // namespace heatlat
