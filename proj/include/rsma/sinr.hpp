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

#ifndef RSMA_SINR_HPP
#define RSMA_SINR_HPP

#include <vector>

#include "rsma/channel.hpp"
#include "rsma/linalg.hpp"
#include "rsma/params.hpp"

namespace rsma {

/// Channel-conditioned SINRs. gamma_eav(i, k) is user i decoding user k's
/// private message; the diagonal is unused (zero). Empty for K = 1.
struct SinrSample {
    std::vector<double> gamma_c;
    std::vector<double> gamma_p;
    RMatrix gamma_eav;
};

/// Quantities shared by all three SINRs, derived once from the Gram matrix.
struct ChannelGeometry {
    std::vector<double> norm2;    ///< ||h_k||^2
    RMatrix cross2;               ///< |h_k^T h_i^*|^2 (diagonal = ||h_k||^4)
    std::vector<double> common2;  ///< |h_k^T sum_i h_i^*|^2

    explicit ChannelGeometry(const CMatrix& h)
    {
        const auto g = gram(h);
        const std::size_t K = g.rows();
        norm2.resize(K);
        common2.resize(K);
        cross2 = RMatrix(K, K);
        for (std::size_t k = 0; k < K; ++k) {
            norm2[k] = g(k, k).real();
            cplx s{};
            for (std::size_t i = 0; i < K; ++i) {
                cross2(k, i) = std::norm(g(k, i));
                s += g(k, i);
            }
            common2[k] = std::norm(s);
        }
    }
};

inline std::vector<double> sinr_common(const ChannelGeometry& geo, const SystemConfig& cfg,
                                       double alpha)
{
    const std::size_t K = geo.norm2.size();
    double sum_err = 0.0;
    for (std::size_t i = 0; i < K; ++i) sum_err += cfg.sigma_e2[i];
    std::vector<double> out(K);
    const double ar = alpha * cfg.rho, arb = alpha * cfg.rho_bar();
    for (std::size_t k = 0; k < K; ++k) {
        const double num = ar * geo.common2[k] + ar * sum_err * geo.norm2[k];
        double interf = 0.0;
        for (std::size_t i = 0; i < K; ++i)  // includes i == k
            interf += cfg.sigma_e2[i] * geo.norm2[k] + geo.cross2(k, i);
        out[k] = num / (cfg.sigma2[k] + arb * interf);
    }
    return out;
}

inline std::vector<double> sinr_private(const ChannelGeometry& geo, const SystemConfig& cfg,
                                        double alpha)
{
    const std::size_t K = geo.norm2.size();
    std::vector<double> out(K);
    const double arb = alpha * cfg.rho_bar();
    for (std::size_t k = 0; k < K; ++k) {
        const double nk = geo.norm2[k];
        const double num = arb * nk * nk + arb * nk * cfg.sigma_e2[k];
        double interf = 0.0;
        for (std::size_t i = 0; i < K; ++i)
            if (i != k) interf += geo.cross2(k, i) + nk * cfg.sigma_e2[i];
        out[k] = num / (cfg.sigma2[k] + arb * interf);
    }
    return out;
}

inline RMatrix sinr_eavesdrop(const ChannelGeometry& geo, const SystemConfig& cfg, double alpha)
{
    const std::size_t K = geo.norm2.size();
    if (K < 2) return {};
    RMatrix out(K, K, 0.0);
    const double arb = alpha * cfg.rho_bar();
    for (std::size_t i = 0; i < K; ++i) {
        const double ni = geo.norm2[i];
        for (std::size_t k = 0; k < K; ++k) {
            if (k == i) continue;
            double interf = 0.0;
            for (std::size_t j = 0; j < K; ++j)
                if (j != k && j != i) interf += geo.cross2(i, j) + cfg.sigma_e2[j] * ni;
            const double target = geo.cross2(i, k) + cfg.sigma_e2[k] * ni;
            out(i, k) = arb * target / (cfg.sigma2[i] + arb * interf);
        }
    }
    return out;
}

inline std::vector<double> sinr_common(const ChannelSet& cs, const SystemConfig& cfg, double alpha)
{
    return sinr_common(ChannelGeometry(cs.h), cfg, alpha);
}

inline std::vector<double> sinr_private(const ChannelSet& cs, const SystemConfig& cfg, double alpha)
{
    return sinr_private(ChannelGeometry(cs.h), cfg, alpha);
}

inline RMatrix sinr_eavesdrop(const ChannelSet& cs, const SystemConfig& cfg, double alpha)
{
    return sinr_eavesdrop(ChannelGeometry(cs.h), cfg, alpha);
}

inline SinrSample compute_sinrs(const CMatrix& h, const SystemConfig& cfg, double alpha)
{
    const ChannelGeometry geo(h);
    return {sinr_common(geo, cfg, alpha), sinr_private(geo, cfg, alpha),
            sinr_eavesdrop(geo, cfg, alpha)};
}

}  // namespace rsma

#endif  // RSMA_SINR_HPP
