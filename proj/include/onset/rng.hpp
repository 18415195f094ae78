// rng.hpp - deterministic random numbers for tests and verify suites.
//
// std::normal_distribution is implementation-defined, so the same seed can
// give different streams across standard libraries. This generator pins the
// whole pipeline (mt19937_64, explicit bits-to-double, Box-Muller), making
// every "random" matrix in the project reproducible byte for byte.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace onset {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; draws are cached in pairs.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = 0.0;
        do { u = uniform(); } while (u == 0.0);
        const double r = std::sqrt(-2.0 * std::log(u));
        const double phi = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return r * std::cos(phi);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace onset
