#pragma once

#include <cstdint>
#include <random>

#include "isocap/common.hpp"

namespace isocap {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed for an independent substream. Results that combine substreams in a
/// fixed order are reproducible for any worker count.
inline uint64_t stream_seed(uint64_t seed, uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x51ED2701u));
}

class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    Rng(uint64_t seed, uint64_t stream) : eng_(stream_seed(seed, stream)) {}

    double uniform() { return uni_(eng_); }
    double uniform(double a, double b) { return a + (b - a) * uni_(eng_); }
    double gaussian() { return gauss_(eng_); }
    uint64_t bits() { return eng_(); }

    /// Uniform point on the unit sphere S^{d-1}.
    Vec unit_sphere(int d) {
        Vec v(d);
        double n2;
        do {
            n2 = 0.0;
            for (int i = 0; i < d; ++i) {
                v[i] = gaussian();
                n2 += v[i] * v[i];
            }
        } while (n2 == 0.0);
        double inv = 1.0 / std::sqrt(n2);
        for (int i = 0; i < d; ++i) v[i] *= inv;
        return v;
    }

    /// Uniform point in the unit ball B^d.
    Vec unit_ball(int d) {
        Vec v = unit_sphere(d);
        double r = std::pow(uniform(), 1.0 / d);
        for (int i = 0; i < d; ++i) v[i] *= r;
        return v;
    }

  private:
    std::mt19937_64 eng_;
    std::uniform_real_distribution<double> uni_{0.0, 1.0};
    std::normal_distribution<double> gauss_{0.0, 1.0};
};

}  // namespace isocap
