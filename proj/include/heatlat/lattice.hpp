#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace heatlat {

using ScalarField = std::vector<double>;  // one value per site
using VectorField = std::vector<double>;  // dim values per site, components contiguous

// Periodic cubic lattice {0..n-1}^dim. Sites are flattened row-major with
// axis 0 slowest; vector fields store the components of a site contiguously,
// value(site, c) = data[site*dim + c]. This layout is also the on-disk order.
class Lattice {
public:
    Lattice(int dim, int n);

    int dim() const { return dim_; }
    int n() const { return n_; }
    std::int64_t sites() const { return sites_; }

    std::array<int, 3> coords(std::int64_t site) const {
        std::array<int, 3> c{0, 0, 0};
        for (int a = dim_ - 1; a >= 0; --a) {
            c[a] = static_cast<int>(site % n_);
            site /= n_;
        }
        return c;
    }

    std::int64_t site(const std::array<int, 3>& c) const {
        std::int64_t s = 0;
        for (int a = 0; a < dim_; ++a) s = s * n_ + wrap(c[a]);
        return s;
    }

    int wrap(int x) const {
        x %= n_;
        return x < 0 ? x + n_ : x;
    }

    // Signed displacement with minimal image, per axis in [-n/2, n/2).
    int min_image(int x) const {
        x = wrap(x);
        return x >= (n_ + 1) / 2 ? x - n_ : x;
    }

    std::int64_t plus(std::int64_t site, int axis) const { return plus_[axis][site]; }
    std::int64_t minus(std::int64_t site, int axis) const { return minus_[axis][site]; }

    const std::vector<std::int64_t>& plus_table(int axis) const { return plus_[axis]; }
    const std::vector<std::int64_t>& minus_table(int axis) const { return minus_[axis]; }

private:
    int dim_;
    int n_;
    std::int64_t sites_;
    std::array<std::vector<std::int64_t>, 3> plus_;
    std::array<std::vector<std::int64_t>, 3> minus_;
};

// Forward difference f(x+e_axis) - f(x).
ScalarField grad(const Lattice& lat, const ScalarField& f, int axis);

// Adjoint difference f(x-e_axis) - f(x).
ScalarField adj_grad(const Lattice& lat, const ScalarField& f, int axis);

// Standard lattice Laplacian, sum_j [f(x+e_j) + f(x-e_j) - 2 f(x)].
// The Fourier symbol of -laplacian is 4 sum_j sin^2(pi k_j) >= 0; note that
// the composition sum_j adj_grad_j(grad_j f) equals -laplacian(f).
ScalarField laplacian(const Lattice& lat, const ScalarField& f);

// Laplacian applied per component of a vector field.
VectorField laplacian_vec(const Lattice& lat, const VectorField& f);

double dot(const ScalarField& a, const ScalarField& b);

}  // namespace heatlat
