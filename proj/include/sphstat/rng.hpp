/*
 * Copyright 2026 sphstat authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace sphstat {

/// Seed plus stream index. The pair fully determines the generated
/// sequence; distinct stream indices give statistically independent
/// streams (counter-based seeding, no jumping required).
struct RngStream {
    std::uint64_t base_seed = 0;
    std::uint64_t stream_index = 0;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

/// xoshiro256++ with splitmix64 stream derivation and explicit scalar
/// distributions. Every sampler in the project draws through this class so
/// that output is bit-reproducible for a given RngStream, independent of
/// platform library choices.
class Rng {
   public:
    explicit Rng(RngStream stream) {
        // Fold the stream index through an odd multiplier so that nearby
        // (seed, stream) pairs land far apart in splitmix's orbit.
        std::uint64_t x = stream.base_seed ^
                          (0x9E3779B97F4A7C15ULL * (stream.stream_index + 1));
        for (auto& word : state_) word = detail::splitmix64(x);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    Rng(std::uint64_t base_seed, std::uint64_t stream_index)
        : Rng(RngStream{base_seed, stream_index}) {}

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0,1); never returns 0, safe under log().
    double uniform_pos() {
        double u;
        do {
            u = uniform01();
        } while (u == 0.0);
        return u;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard normal via the polar (Marsaglia) method with one cached spare.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    double exponential() { return -std::log(uniform_pos()); }

    /// Gamma(shape, scale) via Marsaglia--Tsang, boosted for shape < 1.
    double gamma(double shape, double scale) {
        if (!(shape > 0.0) || !(scale > 0.0))
            throw std::domain_error("Rng::gamma: shape and scale must be > 0");
        if (shape < 1.0) {
            const double u = uniform_pos();
            return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform_pos();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
                return d * v * scale;
        }
    }

    double chi_squared(double dof) { return gamma(0.5 * dof, 2.0); }

    double beta(double a, double b) {
        const double x = gamma(a, 1.0);
        const double y = gamma(b, 1.0);
        return x / (x + y);
    }

    double cauchy(double location, double scale) {
        return location + scale * std::tan(M_PI * (uniform01() - 0.5));
    }

    double student_t(double dof) {
        return normal() / std::sqrt(chi_squared(dof) / dof);
    }

   private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4] = {};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace sphstat
