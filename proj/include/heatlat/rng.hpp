#pragma once

#include <cstdint>
#include <random>

namespace heatlat {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Substream rule: replica i draws its seed from
// splitmix64(master + (i+1) * 0x9E3779B97F4A7C15). Documented so that
// per-replica streams can be reproduced independently of worker count.
inline std::uint64_t replica_seed(std::uint64_t master, int replica) {
    return splitmix64(master + static_cast<std::uint64_t>(replica + 1) * 0x9E3779B97F4A7C15ULL);
}

// mt19937_64 stream with an explicit Box-Muller normal generator, so the
// byte-for-byte trajectory contract does not depend on the standard
// library's normal_distribution implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    void reseed(std::uint64_t seed) {
        gen_.seed(seed);
        has_spare_ = false;
    }

    std::uint64_t raw() { return gen_(); }

    // Uniform on (0,1]; never returns 0 so it is safe under log().
    double uniform_pos() {
        return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Uniform on [0,1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double a = 6.283185307179586476925286766559 * uniform();
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace heatlat
