#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace extentlab {

// Deterministic stream splitting: a root seed plus a (label, index) pair maps to
// an independent engine seed. Label hashing uses FNV-1a 64; the combined word is
// passed through splitmix64 so that adjacent indices land far apart in seed space.
// Every parallel unit of work (chain, replicate) draws from its own substream, so
// results are independent of thread scheduling.
uint64_t splitmix64(uint64_t x);
uint64_t fnv1a64(std::string_view bytes);
uint64_t substream_seed(uint64_t root_seed, std::string_view label, uint64_t index);

class RngStream {
public:
    explicit RngStream(uint64_t seed) : engine_(seed) {}
    RngStream(uint64_t root_seed, std::string_view label, uint64_t index)
        : engine_(substream_seed(root_seed, label, index)) {}

    // Distribution objects are constructed per call: std::normal_distribution
    // carries a cached spare variate, and discarding that state keeps draw
    // sequences reproducible no matter how calls interleave.
    double normal(double mean = 0.0, double sd = 1.0) {
        return std::normal_distribution<double>(mean, sd)(engine_);
    }
    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    // Gamma(shape, rate) -> mean shape/rate. std::gamma_distribution is scale-
    // parameterized, hence the inversion.
    double gamma(double shape, double rate) {
        return std::gamma_distribution<double>(shape, 1.0 / rate)(engine_);
    }
    // Inverse-gamma(shape, rate): 1/Gamma(shape, rate).
    double inverse_gamma(double shape, double rate) { return 1.0 / gamma(shape, rate); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace extentlab
