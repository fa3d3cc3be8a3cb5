#include "heatlat/params.hpp"

#include <string>

#include "heatlat/errors.hpp"

namespace heatlat {

void ModelParams::validate() const {
    if (dim < 1 || dim > 3) throw ConfigError("dim must be 1, 2 or 3");
    // The d=1 noise couples three consecutive sites and correlation windows
    // need room, hence the floor on n.
    if (n < 5) throw ConfigError("n must be at least 5");
    if (!(alpha > 0.0)) throw ConfigError("alpha must be > 0");
    if (!(beta > 0.0)) throw ConfigError("beta must be > 0");
    if (nu < 0.0) throw ConfigError("nu must be >= 0");
    if (gamma < 0.0) throw ConfigError("gamma must be >= 0");
    if (dt < 0.0) throw ConfigError("dt must be >= 0");
    if (nu == 0.0 && dim != 3)
        throw RegimeError("unpinned lattice (nu = 0) is admitted only for dim = 3; got dim = " +
                          std::to_string(dim));
}

}  // namespace heatlat
