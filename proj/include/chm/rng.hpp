#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "chm/scalar.hpp"

namespace chm {

/// Deterministic generator behind every randomized check: mt19937_64 drawing
/// 53-bit uniforms, normals via Box-Muller. The same seed produces the same
/// sequence on every platform, so seeded runs are reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t uniform_int(std::uint64_t bound) { return gen_() % bound; }

    double normal() {
        double u = uniform01();
        while (u == 0.0) u = uniform01();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(kTwoPi * uniform01());
    }

    Complex unit() {
        const double t = kTwoPi * uniform01();
        return {std::cos(t), std::sin(t)};
    }

    Complex complex_normal() { return {normal(), normal()}; }

private:
    std::mt19937_64 gen_;
};

}  // namespace chm
