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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "rsma/channel.hpp"
#include "rsma/moments.hpp"
#include "rsma/sinr.hpp"
#include "rsma/stats.hpp"

using namespace rsma;
using Catch::Matchers::WithinRel;

namespace {

cplx dot(const CMatrix& a, std::size_t r, const CMatrix& b, std::size_t s)
{
    cplx acc{};
    for (std::size_t n = 0; n < a.cols(); ++n) acc += a(r, n) * std::conj(b(s, n));
    return acc;
}

CMatrix random_h(const SystemConfig& cfg, std::uint64_t seed)
{
    RandomStream rng(seed);
    return sample_actual_channels(cfg, rng);
}

}  // namespace

TEST_CASE("single antenna, single user")
{
    auto cfg = SystemConfig::symmetric(preset("AS"), 1, 1, 0.5, 1.0);
    CMatrix h(1, 1);
    h(0, 0) = 1.0;
    const auto s = compute_sinrs(h, cfg, 1.0);
    CHECK_THAT(s.gamma_c[0], WithinRel(1.0 / 3.0, 1e-15));
    CHECK_THAT(s.gamma_p[0], WithinRel(0.5, 1e-15));
    CHECK(s.gamma_eav.empty());
}

TEST_CASE("two users on one antenna")
{
    auto cfg = SystemConfig::symmetric(preset("AS"), 1, 2, 0.5, 1.0);
    CMatrix h(2, 1);
    h(0, 0) = 1.0;
    h(1, 0) = 2.0;
    const auto s = compute_sinrs(h, cfg, 1.0);
    CHECK_THAT(s.gamma_c[0], WithinRel(4.5 / 3.5, 1e-15));
    CHECK_THAT(s.gamma_c[1], WithinRel(18.0 / 11.0, 1e-15));
    CHECK_THAT(s.gamma_p[0], WithinRel(0.5 / 3.0, 1e-15));
    CHECK_THAT(s.gamma_p[1], WithinRel(8.0 / 3.0, 1e-15));
    CHECK_THAT(s.gamma_eav(0, 1), WithinRel(2.0, 1e-15));
    CHECK_THAT(s.gamma_eav(1, 0), WithinRel(2.0, 1e-15));
    CHECK(s.gamma_eav(0, 0) == 0.0);
}

TEST_CASE("all-zero channels give zero SINRs")
{
    auto cfg = SystemConfig::symmetric(preset("AS"), 4, 3, 0.5, 1.0);
    const CMatrix h(3, 4);
    const auto s = compute_sinrs(h, cfg, 2.0);
    for (int k = 0; k < 3; ++k) {
        CHECK(s.gamma_c[k] == 0.0);
        CHECK(s.gamma_p[k] == 0.0);
    }
}

TEST_CASE("SINRs are invariant to a common phase rotation")
{
    auto cfg = SystemConfig::symmetric(preset("ORs"), 6, 3, 0.4, 1.0, 1.0, 0.05);
    const auto h = random_h(cfg, 31);
    const auto base = compute_sinrs(h, cfg, 0.7);

    CMatrix rot = h;
    const cplx ph = std::polar(1.0, 1.234);
    for (auto& x : rot.data()) x *= ph;
    const auto r = compute_sinrs(rot, cfg, 0.7);
    for (int k = 0; k < 3; ++k) {
        CHECK_THAT(r.gamma_c[k], WithinRel(base.gamma_c[k], 1e-12));
        CHECK_THAT(r.gamma_p[k], WithinRel(base.gamma_p[k], 1e-12));
    }

    // per-user phases leave the private and eavesdropping SINRs unchanged
    CMatrix per = h;
    for (std::size_t k = 0; k < 3; ++k)
        for (auto& x : per.row(k)) x *= std::polar(1.0, 0.9 * double(k + 1));
    const auto p = compute_sinrs(per, cfg, 0.7);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK_THAT(p.gamma_p[k], WithinRel(base.gamma_p[k], 1e-12));
        for (std::size_t i = 0; i < 3; ++i)
            if (i != k) CHECK_THAT(p.gamma_eav(i, k), WithinRel(base.gamma_eav(i, k), 1e-12));
    }
}

TEST_CASE("SINRs are nondecreasing in the power factor")
{
    auto cfg = SystemConfig::symmetric(preset("FHS"), 8, 4, 0.5, 1.0, 1.0, 0.1);
    const auto h = random_h(cfg, 2);
    auto prev = compute_sinrs(h, cfg, 1e-3);
    for (double a = 2e-3; a < 1e4; a *= 2.0) {
        const auto s = compute_sinrs(h, cfg, a);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(s.gamma_c[k] >= prev.gamma_c[k]);
            CHECK(s.gamma_p[k] >= prev.gamma_p[k]);
            for (std::size_t i = 0; i < 4; ++i)
                if (i != k) CHECK(s.gamma_eav(i, k) >= prev.gamma_eav(i, k));
        }
        prev = s;
    }
}

TEST_CASE("common SINR equals the ratio of error-averaged powers")
{
    // Draw the estimation error explicitly for a fixed channel and average the
    // received common-stream and private-stream powers.
    auto cfg = SystemConfig::symmetric(preset("AS"), 4, 3, 0.5, 1.0, 1.0, 0.2);
    cfg.sigma_e2 = {0.2, 0.05, 0.4};
    const double a = 0.3;
    const auto h = random_h(cfg, 17);
    const auto closed = sinr_common(ChannelGeometry(h), cfg, a);

    RandomStream rng(99, StreamTag::moments);
    std::vector<RunningStats> sig(3), interf(3);
    for (int t = 0; t < 200000; ++t) {
        const auto h_hat = add_estimation_error(h, cfg, rng);
        for (std::size_t k = 0; k < 3; ++k) {
            cplx c{};
            double p = 0.0;
            for (std::size_t i = 0; i < 3; ++i) {
                const cplx g = dot(h, k, h_hat, i);
                c += g;
                p += std::norm(g);
            }
            sig[k].push(std::norm(c));
            interf[k].push(p);
        }
    }
    for (std::size_t k = 0; k < 3; ++k) {
        const double oracle =
            a * cfg.rho * sig[k].mean() / (cfg.sigma2[k] + a * cfg.rho_bar() * interf[k].mean());
        CHECK_THAT(closed[k], WithinRel(oracle, 0.01));
    }
}

TEST_CASE("eavesdropping SINR against a direct evaluation")
{
    auto cfg = SystemConfig::symmetric(preset("ORs"), 5, 3, 0.3, 1.0, 1.0, 0.1);
    cfg.sigma_e2 = {0.1, 0.0, 0.3};
    cfg.sigma2 = {1.0, 2.0, 0.5};
    const double a = 1.7;
    const auto h = random_h(cfg, 5);
    const auto s = sinr_eavesdrop(ChannelGeometry(h), cfg, a);
    const double arb = a * 0.7;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) {
            if (i == k) continue;
            const double ni = dot(h, i, h, i).real();
            const std::size_t j = 3 - i - k;  // the remaining user
            const double target = std::norm(dot(h, i, h, k)) + cfg.sigma_e2[k] * ni;
            const double other = std::norm(dot(h, i, h, j)) + cfg.sigma_e2[j] * ni;
            const double expect = arb * target / (cfg.sigma2[i] + arb * other);
            CHECK_THAT(s(i, k), WithinRel(expect, 1e-12));
        }
}

TEST_CASE("single user has no interference and no eavesdropper")
{
    auto cfg = SystemConfig::symmetric(preset("AS"), 8, 1, 0.25, 1.0, 2.0, 0.1);
    const auto h = random_h(cfg, 6);
    const double n2 = norm_sq(h.row(0));
    const auto s = compute_sinrs(h, cfg, 0.5);
    CHECK_THAT(s.gamma_p[0], WithinRel(0.5 * 0.75 * (n2 * n2 + n2 * 0.1) / 2.0, 1e-13));
    CHECK(s.gamma_eav.empty());
    CHECK(s.gamma_eav.rows() == 0);
}
