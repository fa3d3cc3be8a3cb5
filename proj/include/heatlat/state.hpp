#pragma once

#include <cmath>

#include "heatlat/lattice.hpp"

namespace heatlat {

// Displacements and momenta on the periodic lattice, dim components per
// site. Owned by exactly one trajectory worker at a time.
struct PhaseState {
    VectorField q;
    VectorField p;
    double t = 0.0;

    void resize(const Lattice& lat) {
        q.assign(lat.sites() * lat.dim(), 0.0);
        p.assign(lat.sites() * lat.dim(), 0.0);
        t = 0.0;
    }

    bool finite() const {
        for (double v : q)
            if (!std::isfinite(v)) return false;
        for (double v : p)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

}  // namespace heatlat
