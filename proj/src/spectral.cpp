#include "heatlat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "heatlat/errors.hpp"
#include "heatlat/fft.hpp"

namespace heatlat::spectral {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool integrable_at_zero(const HarmonicSpec& spec) { return spec.nu > 0.0 || spec.dim == 3; }

// Runs fn over every node of the midpoint grid m^dim and accumulates the
// mean (which equals the torus integral, cell volume 1/m^dim).
template <typename F>
double midpoint_mean(int dim, int m, F&& fn) {
    double k[3] = {0.0, 0.0, 0.0};
    double acc = 0.0;
    std::int64_t nodes = 1;
    for (int a = 0; a < dim; ++a) nodes *= m;
    for (std::int64_t flat = 0; flat < nodes; ++flat) {
        std::int64_t r = flat;
        for (int a = dim - 1; a >= 0; --a) {
            k[a] = (static_cast<double>(r % m) + 0.5) / m;
            r /= m;
        }
        acc += fn(k);
    }
    return acc / static_cast<double>(nodes);
}

}  // namespace

double dispersion(const HarmonicSpec& spec, const double* k) {
    double s2 = 0.0;
    for (int a = 0; a < spec.dim; ++a) {
        const double s = std::sin(kPi * k[a]);
        s2 += s * s;
    }
    return std::sqrt(spec.nu + 4.0 * spec.alpha * s2);
}

double scattering_rate(const HarmonicSpec& spec, const double* k) {
    if (spec.dim == 1) {
        const double s = std::sin(kPi * k[0]);
        const double c = std::cos(kPi * k[0]);
        return (4.0 / 3.0) * s * s * (1.0 + 2.0 * c * c);
    }
    double s2 = 0.0;
    for (int a = 0; a < spec.dim; ++a) {
        const double s = std::sin(kPi * k[a]);
        s2 += s * s;
    }
    return 8.0 * s2;
}

double dispersion_deriv1(const HarmonicSpec& spec, const double* k) {
    return 2.0 * kPi * spec.alpha * std::sin(2.0 * kPi * k[0]) / dispersion(spec, k);
}

double resolvent_symbol(const HarmonicSpec& spec, const double* k) {
    const double phi = scattering_rate(spec, k);
    return spec.dim == 1 ? 2.0 * phi : phi;
}

std::complex<double> g_hat(const HarmonicSpec& spec, const double* k, int axis, double lambda) {
    if (!(lambda > 0.0)) throw ConfigError("g_hat: lambda must be > 0");
    if (axis < 0 || axis >= spec.dim) throw ConfigError("g_hat: axis out of range");
    return std::complex<double>(0.0, 2.0 * std::sin(2.0 * kPi * k[axis])) /
           (resolvent_symbol(spec, k) + lambda);
}

ScalarField g_realspace(const HarmonicSpec& spec, int axis, double lambda, const Lattice& lat) {
    if (!(lambda > 0.0)) throw ConfigError("g_realspace: lambda must be > 0");
    if (axis < 0 || axis >= spec.dim) throw ConfigError("g_realspace: axis out of range");
    Fourier fft(lat);
    std::vector<std::complex<double>> ghat(fft.modes());
    double k[3];
    for (std::int64_t mo = 0; mo < fft.modes(); ++mo) {
        const auto c = fft.mode_coords(mo);
        for (int a = 0; a < spec.dim; ++a) k[a] = static_cast<double>(c[a]) / lat.n();
        ghat[mo] = g_hat(spec, k, axis, lambda);
    }
    ScalarField g(lat.sites());
    fft.inverse(ghat.data(), g.data());
    return g;
}

double kappa_lambda(const HarmonicSpec& spec, double lambda, int grid_m) {
    if (lambda < 0.0) throw ConfigError("kappa_lambda: lambda must be >= 0");
    if (lambda == 0.0 && !integrable_at_zero(spec))
        throw DivergenceError("kappa_lambda diverges for nu = 0 in dim " + std::to_string(spec.dim));
    if (grid_m <= 0) grid_m = default_grid(spec.dim);
    return midpoint_mean(spec.dim, grid_m, [&](const double* k) {
        const double dw2 = 4.0 * kPi * spec.alpha * std::sin(2.0 * kPi * k[0]);
        const double w = dispersion(spec, k);
        const double r = dw2 / w;
        return r * r / (scattering_rate(spec, k) + lambda);
    });
}

namespace {

double kappa_once(const ModelParams& params, int m) {
    const HarmonicSpec spec = params.spec();
    const double integral = midpoint_mean(spec.dim, m, [&](const double* k) {
        const double dw = dispersion_deriv1(spec, k);
        return dw * dw / scattering_rate(spec, k);
    });
    return integral / (8.0 * kPi * kPi * params.gamma) + params.gamma;
}

}  // namespace

DiffusivityResult thermal_diffusivity(const ModelParams& params, int grid_m) {
    const HarmonicSpec spec = params.spec();
    if (!(params.gamma > 0.0))
        throw RegimeError("thermal_diffusivity requires gamma > 0");
    if (!integrable_at_zero(spec))
        throw DivergenceError("thermal diffusivity diverges for nu = 0 in dim " +
                              std::to_string(spec.dim));
    if (grid_m <= 0) grid_m = default_grid(spec.dim);
    DiffusivityResult res;
    res.grid = grid_m;
    res.lambda_used = 0.0;
    res.kappa = kappa_once(params, grid_m);
    res.quadrature_error = std::abs(res.kappa - kappa_once(params, 2 * grid_m));
    return res;
}

ScalarField covariance_realspace(const HarmonicSpec& spec, const Lattice& lat) {
    if (!integrable_at_zero(spec) && spec.nu == 0.0)
        throw RegimeError("covariance undefined for nu = 0 in dim " + std::to_string(spec.dim));
    Fourier fft(lat);
    std::vector<std::complex<double>> ghat(fft.modes());
    double k[3];
    for (std::int64_t mo = 0; mo < fft.modes(); ++mo) {
        const auto c = fft.mode_coords(mo);
        bool zero_mode = true;
        for (int a = 0; a < spec.dim; ++a) {
            k[a] = static_cast<double>(c[a]) / lat.n();
            zero_mode = zero_mode && c[a] == 0;
        }
        if (zero_mode && spec.nu == 0.0) {
            ghat[mo] = 0.0;
        } else {
            const double w = dispersion(spec, k);
            ghat[mo] = 1.0 / (w * w);
        }
    }
    ScalarField g(lat.sites());
    fft.inverse(ghat.data(), g.data());
    return g;
}

SpectralTable SpectralTable::build(const HarmonicSpec& spec, int m) {
    if (m < 2) throw ConfigError("spectral table grid must be >= 2");
    SpectralTable t;
    t.dim = spec.dim;
    t.m = m;
    std::int64_t nodes = 1;
    for (int a = 0; a < spec.dim; ++a) nodes *= m;
    t.omega.resize(nodes);
    t.phi.resize(nodes);
    t.gamma_hat.resize(nodes);
    double k[3];
    for (std::int64_t flat = 0; flat < nodes; ++flat) {
        t.node_k(flat, k);
        const double w = dispersion(spec, k);
        t.omega[flat] = w;
        t.phi[flat] = scattering_rate(spec, k);
        t.gamma_hat[flat] = 1.0 / (w * w);
    }
    return t;
}

void SpectralTable::node_k(std::int64_t flat, double* k) const {
    for (int a = dim - 1; a >= 0; --a) {
        k[a] = (static_cast<double>(flat % m) + 0.5) / m;
        flat /= m;
    }
}

double max_group_velocity(const HarmonicSpec& spec) {
    // The per-axis velocity alpha |sin(2 pi k_j)| / omega(k) is maximized with
    // the transverse sine terms at zero, so a one-axis scan suffices.
    double best = spec.nu == 0.0 ? std::sqrt(spec.alpha) : 0.0;
    const int m = 1 << 14;
    for (int i = 0; i <= m; ++i) {
        double k[3] = {static_cast<double>(i) / m, 0.0, 0.0};
        const double v = spec.alpha * std::abs(std::sin(2.0 * kPi * k[0])) / dispersion(spec, k);
        best = std::max(best, v);
    }
    return best;
}

int default_grid(int dim) {
    switch (dim) {
        case 1: return 4096;
        case 2: return 512;
        default: return 128;
    }
}

}  // namespace heatlat::spectral
