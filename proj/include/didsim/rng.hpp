#ifndef DIDSIM_RNG_HPP
#define DIDSIM_RNG_HPP

#include <cmath>
#include <cstdint>

namespace didsim {

// Counter-based random stream. A stream is addressed by
// (master_seed, s1, s2, s3) -- typically (seed, trial, pair, purpose) -- and
// draws are a pure function of (key, counter), so results do not depend on
// execution order or worker count. Not shareable between workers; each worker
// owns its streams.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t s1, std::uint64_t s2, std::uint64_t s3)
        : key_(derive_key(master_seed, s1, s2, s3)) {}

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

    // Uniform on the open interval (0,1); never returns 0 or 1 exactly.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; the spare value is cached.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 6.283185307179586 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    // Gamma(shape, scale) via Marsaglia-Tsang, with the U^{1/shape} boost for
    // shape < 1. Consumes a variable number of draws (rejection sampling).
    double next_gamma(double shape, double scale) {
        if (shape < 1.0) {
            double u = next_unit();
            return next_gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = next_normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            double u = next_unit();
            double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v * scale;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v * scale;
        }
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        // SplitMix64 finalizer.
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t s1, std::uint64_t s2,
                                    std::uint64_t s3) {
        std::uint64_t k = mix(seed);
        k = mix(k ^ (s1 + 0xD1B54A32D192ED03ULL));
        k = mix(k ^ (s2 + 0x8CB92BA72F3D8DD7ULL));
        k = mix(k ^ (s3 + 0xA24BAED4963EE407ULL));
        return k;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace didsim

#endif
