#include "heatlat/lattice.hpp"

#include "heatlat/errors.hpp"

namespace heatlat {

Lattice::Lattice(int dim, int n) : dim_(dim), n_(n) {
    if (dim < 1 || dim > 3) throw ConfigError("lattice dimension must be 1, 2 or 3");
    if (n < 3) throw ConfigError("lattice side must be at least 3");
    sites_ = 1;
    for (int a = 0; a < dim_; ++a) sites_ *= n_;

    std::int64_t stride[3] = {0, 0, 0};
    stride[dim_ - 1] = 1;
    for (int a = dim_ - 2; a >= 0; --a) stride[a] = stride[a + 1] * n_;

    for (int a = 0; a < dim_; ++a) {
        plus_[a].resize(sites_);
        minus_[a].resize(sites_);
        for (std::int64_t s = 0; s < sites_; ++s) {
            const int xa = static_cast<int>((s / stride[a]) % n_);
            plus_[a][s] = s + (xa + 1 == n_ ? (1 - n_) : 1) * stride[a];
            minus_[a][s] = s + (xa == 0 ? (n_ - 1) : -1) * stride[a];
        }
    }
}

ScalarField grad(const Lattice& lat, const ScalarField& f, int axis) {
    if (axis < 0 || axis >= lat.dim()) throw ConfigError("grad: axis out of range");
    ScalarField out(lat.sites());
    const auto& up = lat.plus_table(axis);
    for (std::int64_t s = 0; s < lat.sites(); ++s) out[s] = f[up[s]] - f[s];
    return out;
}

ScalarField adj_grad(const Lattice& lat, const ScalarField& f, int axis) {
    if (axis < 0 || axis >= lat.dim()) throw ConfigError("adj_grad: axis out of range");
    ScalarField out(lat.sites());
    const auto& dn = lat.minus_table(axis);
    for (std::int64_t s = 0; s < lat.sites(); ++s) out[s] = f[dn[s]] - f[s];
    return out;
}

ScalarField laplacian(const Lattice& lat, const ScalarField& f) {
    ScalarField out(lat.sites(), 0.0);
    for (int a = 0; a < lat.dim(); ++a) {
        const auto& up = lat.plus_table(a);
        const auto& dn = lat.minus_table(a);
        for (std::int64_t s = 0; s < lat.sites(); ++s)
            out[s] += f[up[s]] + f[dn[s]] - 2.0 * f[s];
    }
    return out;
}

VectorField laplacian_vec(const Lattice& lat, const VectorField& f) {
    const int d = lat.dim();
    VectorField out(lat.sites() * d, 0.0);
    for (int a = 0; a < d; ++a) {
        const auto& up = lat.plus_table(a);
        const auto& dn = lat.minus_table(a);
        for (std::int64_t s = 0; s < lat.sites(); ++s)
            for (int c = 0; c < d; ++c)
                out[s * d + c] += f[up[s] * d + c] + f[dn[s] * d + c] - 2.0 * f[s * d + c];
    }
    return out;
}

double dot(const ScalarField& a, const ScalarField& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace heatlat
