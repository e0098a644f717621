#pragma once

#include <cstdint>

namespace difflab {

/// Deterministic splitmix64 generator. Used instead of <random> distributions
/// so reports are byte-identical across standard library implementations.
/// Each trial of an experiment draws from its own substream, making results
/// independent of execution order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

    static Rng substream(std::uint64_t seed, std::uint64_t stream) {
        Rng r(seed);
        r.state_ += 0xbf58476d1ce4e5b9ULL * (stream + 1);
        r.next();
        return r;
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n) { return next() % n; }

  private:
    std::uint64_t state_;
};

}  // namespace difflab
