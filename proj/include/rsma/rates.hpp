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

#ifndef RSMA_RATES_HPP
#define RSMA_RATES_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "rsma/linalg.hpp"
#include "rsma/moments.hpp"
#include "rsma/params.hpp"

namespace rsma {

/// Closed-form ergodic rates in bits/s/Hz. r_eav(i, k) approximates the rate
/// at which user i decodes user k's private message (diagonal zero, empty for K = 1).
struct ClosedFormRates {
    std::vector<double> r_c;
    std::vector<double> r_p;
    RMatrix r_eav;
    std::vector<double> r_s;
    double r_sum = 0.0;
};

/// Common-message rate at each user (MRT common precoder).
inline std::vector<double> rate_common_cf(const SystemConfig& cfg, const MomentTable& mt,
                                          double alpha)
{
    const int K = cfg.n_users;
    const double N = cfg.n_antennas;
    double sum_err = 0.0;
    for (double e : cfg.sigma_e2) sum_err += e;

    std::vector<double> out(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        const double a = mt.element(k).a;
        double useful = mt.d(k) + N * a * sum_err;
        double interf = mt.d(k) + sum_err * N * a;
        for (int i = 0; i < K; ++i) {
            if (i == k) continue;
            useful += 2.0 * mt.f(i, k) + mt.e(k, i);
            interf += mt.e(k, i);
            for (int j = 0; j < K; ++j)
                if (j != k && j != i) useful += mt.g(i, k, j);
        }
        const double sinr =
            alpha * cfg.rho * useful / (cfg.sigma2[k] + alpha * cfg.rho_bar() * interf);
        out[k] = std::log2(1.0 + sinr);
    }
    return out;
}

/// Private-message rate at the intended user after SIC of the common message.
inline std::vector<double> rate_private_cf(const SystemConfig& cfg, const MomentTable& mt,
                                           double alpha)
{
    const int K = cfg.n_users;
    const double N = cfg.n_antennas;
    const double arb = alpha * cfg.rho_bar();
    std::vector<double> out(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        const double a = mt.element(k).a;
        double interf = 0.0;
        for (int i = 0; i < K; ++i)
            if (i != k) interf += mt.e(k, i) + cfg.sigma_e2[i] * N * a;
        const double num = arb * mt.d(k) + arb * cfg.sigma_e2[k] * N * a;
        out[k] = std::log2(1.0 + num / (cfg.sigma2[k] + arb * interf));
    }
    return out;
}

/// Low-SNR approximation of log2(1 + E{gamma_{i->k}}). Valid as alpha -> 0;
/// evaluated as written at any SNR.
inline RMatrix rate_eavesdrop_cf(const SystemConfig& cfg, const MomentTable& mt, double alpha)
{
    const int K = cfg.n_users;
    if (K < 2) return {};
    const double N = cfg.n_antennas;
    const double arb = alpha * cfg.rho_bar();
    RMatrix out(static_cast<std::size_t>(K), static_cast<std::size_t>(K), 0.0);
    for (int i = 0; i < K; ++i) {
        const double ai = mt.element(i).a;
        for (int k = 0; k < K; ++k) {
            if (k == i) continue;
            double interf = 0.0;
            for (int j = 0; j < K; ++j)
                if (j != k && j != i) interf += mt.e(i, j) + cfg.sigma_e2[j] * N * ai;
            const double num = arb * (mt.e(i, k) + cfg.sigma_e2[k] * N * ai);
            out(i, k) = std::log2(1.0 + num / (cfg.sigma2[i] + arb * interf));
        }
    }
    return out;
}

/// [r_p[k] - max_{i != k} r_eav(i, k)]^+. With no other users the max is 0.
inline std::vector<double> secrecy_rates(std::span<const double> r_p, const RMatrix& r_eav)
{
    std::vector<double> out(r_p.size());
    for (std::size_t k = 0; k < r_p.size(); ++k) {
        double worst = 0.0;
        bool any = false;
        for (std::size_t i = 0; i < r_eav.rows(); ++i) {
            if (i == k) continue;
            worst = any ? std::max(worst, r_eav(i, k)) : r_eav(i, k);
            any = true;
        }
        out[k] = std::max(r_p[k] - (any ? worst : 0.0), 0.0);
    }
    return out;
}

inline std::vector<double> rate_secrecy_cf(const SystemConfig& cfg, const MomentTable& mt,
                                           double alpha)
{
    const auto r_p = rate_private_cf(cfg, mt, alpha);
    return secrecy_rates(r_p, rate_eavesdrop_cf(cfg, mt, alpha));
}

/// Common rate limited by the weakest user plus all private rates.
inline double rate_sum_cf(std::span<const double> r_c, std::span<const double> r_p)
{
    if (r_c.empty() || r_p.empty()) throw std::invalid_argument("rate_sum_cf: empty rate vector");
    if (r_c.size() != r_p.size()) throw std::invalid_argument("rate_sum_cf: length mismatch");
    double total = *std::min_element(r_c.begin(), r_c.end());
    for (double r : r_p) total += r;
    return total;
}

inline ClosedFormRates closed_form_rates(const SystemConfig& cfg)
{
    const auto mt = moment_table(cfg);
    const double a = alpha(cfg);
    ClosedFormRates out;
    out.r_c = rate_common_cf(cfg, mt, a);
    out.r_p = rate_private_cf(cfg, mt, a);
    out.r_eav = rate_eavesdrop_cf(cfg, mt, a);
    out.r_s = secrecy_rates(out.r_p, out.r_eav);
    out.r_sum = rate_sum_cf(out.r_c, out.r_p);
    return out;
}

}  // namespace rsma

#endif  // RSMA_RATES_HPP
