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

#ifndef RSMA_CHANNEL_HPP
#define RSMA_CHANNEL_HPP

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "rsma/linalg.hpp"
#include "rsma/params.hpp"
#include "rsma/rng.hpp"

namespace rsma {

struct SeedInfo {
    std::uint64_t seed = 0;
    std::uint64_t draw = 0;

    friend bool operator==(const SeedInfo&, const SeedInfo&) = default;
};

/// One channel realisation. Row k of h is h_k^T; h_hat = h + estimation error.
struct ChannelSet {
    CMatrix h;
    CMatrix h_hat;
    SeedInfo seed_info;

    friend bool operator==(const ChannelSet&, const ChannelSet&) = default;
};

/// MRT common precoder and matched-filter private precoders.
struct Precoders {
    std::vector<cplx> w_c;  ///< length N, sum of the columns of w_p
    CMatrix w_p;            ///< N x K, column k = conj(h_hat_k)
};

/// One Shadowed-Rician element Z + X + jY: Z = sqrt(Gamma(m, omega/m)),
/// X, Y ~ N(0, b). The LOS phase is zero.
inline cplx sample_sr_element(const ScenarioParams& sc, RandomStream& rng)
{
    const double z = sc.omega > 0.0 ? std::sqrt(rng.gamma(sc.m, sc.omega / sc.m)) : 0.0;
    if (sc.b == 0.0) return {z, 0.0};
    const double sd = std::sqrt(sc.b);
    const double x = sd * rng.normal();
    const double y = sd * rng.normal();
    return {z + x, y};
}

/// Actual channels only, K x N.
inline CMatrix sample_actual_channels(const SystemConfig& cfg, RandomStream& rng)
{
    const auto K = static_cast<std::size_t>(cfg.n_users);
    const auto N = static_cast<std::size_t>(cfg.n_antennas);
    CMatrix h(K, N);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t n = 0; n < N; ++n) h(k, n) = sample_sr_element(cfg.scenarios[k], rng);
    return h;
}

/// Adds CN(0, sigma_e^2) estimation error to each element of row k.
inline CMatrix add_estimation_error(const CMatrix& h, const SystemConfig& cfg, RandomStream& rng)
{
    CMatrix h_hat = h;
    for (std::size_t k = 0; k < h.rows(); ++k) {
        const double var = cfg.sigma_e2[k];
        if (var == 0.0) continue;
        const double sd = std::sqrt(0.5 * var);
        for (auto& x : h_hat.row(k)) {
            const double re = sd * rng.normal();
            const double im = sd * rng.normal();
            x += cplx(re, im);
        }
    }
    return h_hat;
}

inline ChannelSet sample_channels(const SystemConfig& cfg, RandomStream& rng, SeedInfo info = {})
{
    ChannelSet cs;
    cs.h = sample_actual_channels(cfg, rng);
    cs.h_hat = add_estimation_error(cs.h, cfg, rng);
    cs.seed_info = info;
    return cs;
}

inline Precoders build_precoders(const ChannelSet& cs)
{
    const std::size_t K = cs.h_hat.rows();
    const std::size_t N = cs.h_hat.cols();
    Precoders p;
    p.w_p = CMatrix(N, K);
    p.w_c.assign(N, cplx{});
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t n = 0; n < N; ++n) {
            const cplx v = std::conj(cs.h_hat(k, n));
            p.w_p(n, k) = v;
            p.w_c[n] += v;
        }
    return p;
}

// ---------------------------------------------------------------------------
// Binary batch dump
//
// Little-endian. Header: four uint64 (N, K, seed, count). Then `count`
// records, each the K x N matrix h followed by the K x N matrix h_hat, both
// row-major with every complex stored as (real, imag) IEEE-754 doubles.
// ---------------------------------------------------------------------------

namespace detail {

inline void put_u64(std::ostream& out, std::uint64_t v)
{
    std::array<char, 8> b;
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffU);
    out.write(b.data(), 8);
}

inline std::uint64_t get_u64(std::istream& in)
{
    std::array<unsigned char, 8> b{};
    in.read(reinterpret_cast<char*>(b.data()), 8);
    if (!in) throw std::runtime_error("channel batch: truncated input");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

inline void put_matrix(std::ostream& out, const CMatrix& m)
{
    for (const auto& x : m.data()) {
        put_u64(out, std::bit_cast<std::uint64_t>(x.real()));
        put_u64(out, std::bit_cast<std::uint64_t>(x.imag()));
    }
}

inline CMatrix get_matrix(std::istream& in, std::size_t rows, std::size_t cols)
{
    CMatrix m(rows, cols);
    for (auto& x : m.data()) {
        const double re = std::bit_cast<double>(get_u64(in));
        const double im = std::bit_cast<double>(get_u64(in));
        x = {re, im};
    }
    return m;
}

}  // namespace detail

struct ChannelBatch {
    std::uint64_t n_antennas = 0;
    std::uint64_t n_users = 0;
    std::uint64_t seed = 0;
    std::vector<ChannelSet> sets;
};

inline void write_channel_batch(std::ostream& out, const ChannelBatch& batch)
{
    detail::put_u64(out, batch.n_antennas);
    detail::put_u64(out, batch.n_users);
    detail::put_u64(out, batch.seed);
    detail::put_u64(out, batch.sets.size());
    for (const auto& cs : batch.sets) {
        if (cs.h.rows() != batch.n_users || cs.h.cols() != batch.n_antennas ||
            cs.h_hat.rows() != batch.n_users || cs.h_hat.cols() != batch.n_antennas)
            throw std::invalid_argument("channel batch: set dimensions differ from header");
        detail::put_matrix(out, cs.h);
        detail::put_matrix(out, cs.h_hat);
    }
}

inline ChannelBatch read_channel_batch(std::istream& in)
{
    ChannelBatch batch;
    batch.n_antennas = detail::get_u64(in);
    batch.n_users = detail::get_u64(in);
    batch.seed = detail::get_u64(in);
    const std::uint64_t count = detail::get_u64(in);
    batch.sets.reserve(count);
    for (std::uint64_t d = 0; d < count; ++d) {
        ChannelSet cs;
        cs.h = detail::get_matrix(in, batch.n_users, batch.n_antennas);
        cs.h_hat = detail::get_matrix(in, batch.n_users, batch.n_antennas);
        cs.seed_info = {batch.seed, d};
        batch.sets.push_back(std::move(cs));
    }
    return batch;
}

/// Draws `count` channel sets; draw d uses its own substream of `seed`.
inline ChannelBatch sample_channel_batch(const SystemConfig& cfg, std::uint64_t seed,
                                         std::uint64_t count)
{
    require_valid(cfg);
    ChannelBatch batch{static_cast<std::uint64_t>(cfg.n_antennas),
                       static_cast<std::uint64_t>(cfg.n_users), seed, {}};
    batch.sets.reserve(count);
    for (std::uint64_t d = 0; d < count; ++d) {
        RandomStream rng(seed, StreamTag::channels, d);
        batch.sets.push_back(sample_channels(cfg, rng, {seed, d}));
    }
    return batch;
}

}  // namespace rsma

#endif  // RSMA_CHANNEL_HPP
