// SPDX-License-Identifier: Apache-2.0
//
// rsma-lms: closed-form and Monte-Carlo analysis of secure rate-splitting
// multiple access over shadowed-Rician land-mobile-satellite downlinks
// Copyright (C) 2026 The rsma-lms authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RSMA_RNG_HPP
#define RSMA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace rsma {

inline constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Identifies which experiment a substream belongs to, so that different
/// estimators never share draws for the same (seed, block).
enum class StreamTag : std::uint64_t {
    channels = 1,
    moments = 2,
    power = 3,
    rates = 4,
};

/// Random source for one block of trials. The engine state is a pure function
/// of (seed, tag, block), so results do not depend on scheduling.
class RandomStream {
public:
    using engine_type = std::mt19937_64;

    explicit RandomStream(std::uint64_t seed, StreamTag tag = StreamTag::channels,
                          std::uint64_t block = 0)
        : engine_(derive(seed, tag, block))
    {
    }

    double normal() { return normal_(engine_); }

    /// Uniform on the open interval (0, 1).
    double uniform()
    {
        double u;
        do {
            u = uniform_(engine_);
        } while (u <= 0.0);
        return u;
    }

    /// Gamma(shape, scale) by Marsaglia–Tsang squeeze/rejection. Shapes below
    /// one are boosted: G(a) = G(a + 1) * U^(1/a).
    double gamma(double shape, double scale)
    {
        if (!(shape > 0.0) || !(scale >= 0.0))
            throw std::domain_error("gamma: shape must be > 0 and scale >= 0");
        if (shape < 1.0) {
            const double boost = std::pow(uniform(), 1.0 / shape);
            return gamma_ge1(shape + 1.0) * boost * scale;
        }
        return gamma_ge1(shape) * scale;
    }

    engine_type& engine() { return engine_; }

private:
    static std::uint64_t derive(std::uint64_t seed, StreamTag tag, std::uint64_t block)
    {
        std::uint64_t s = splitmix64(seed);
        s = splitmix64(s ^ static_cast<std::uint64_t>(tag));
        return splitmix64(s ^ splitmix64(block + 0x632be59bd9b4e019ULL));
    }

    double gamma_ge1(double shape)
    {
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    engine_type engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace rsma

#endif  // RSMA_RNG_HPP
