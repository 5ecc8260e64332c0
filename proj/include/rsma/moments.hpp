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

#ifndef RSMA_MOMENTS_HPP
#define RSMA_MOMENTS_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "rsma/params.hpp"

namespace rsma {

/// Gamma(m + 1/2) / Gamma(m). Direct ratio for moderate m, asymptotic series
/// beyond that (tgamma overflows near 171).
inline double gamma_half_ratio(double m)
{
    if (!(m > 0.0)) throw std::domain_error(fmt::format("gamma_half_ratio: m must be > 0 (got {})", m));
    if (m < 150.0) return std::tgamma(m + 0.5) / std::tgamma(m);
    static constexpr double c[] = {1.0,          -1.0 / 8.0,         1.0 / 128.0,        5.0 / 1024.0,
                                   -21.0 / 32768.0, -399.0 / 262144.0, 869.0 / 4194304.0};
    const double x = 1.0 / m;
    double s = 0.0;
    for (int i = 6; i >= 0; --i) s = s * x + c[i];
    return std::sqrt(m) * s;
}

/// Gamma(m + 3/2) / Gamma(m).
inline double gamma_three_half_ratio(double m)
{
    if (!(m > 0.0))
        throw std::domain_error(fmt::format("gamma_three_half_ratio: m must be > 0 (got {})", m));
    return (m + 0.5) * gamma_half_ratio(m);
}

/// Per-element moments of one user's channel.
struct ElementMoments {
    double a = 0.0;      ///< E|h|^2 = 2b + omega
    double b_hat = 0.0;  ///< E|h_hat|^2 = 2b + sigma_e^2 + omega
    double c = 0.0;      ///< E h (real: the LOS phase is zero)
};

inline ElementMoments element_moments(const ScenarioParams& sc, double sigma_e2)
{
    ElementMoments em;
    em.a = 2.0 * sc.b + sc.omega;
    em.b_hat = em.a + sigma_e2;
    em.c = gamma_half_ratio(sc.m) * std::sqrt(sc.omega / sc.m);
    return em;
}

/// E{h* |h|^2} for one element, h = Z + X + jY with Z ~ Nakagami(m, omega) and
/// X, Y ~ N(0, b):  E{Z^3} + 3b E{Z} + b E{Z}.
inline double third_moment_identity(const ScenarioParams& sc)
{
    const double c = gamma_half_ratio(sc.m) * std::sqrt(sc.omega / sc.m);
    const double z3 = gamma_three_half_ratio(sc.m) * std::pow(sc.omega / sc.m, 1.5);
    return z3 + 4.0 * sc.b * c;
}

/// Cross-user channel moments for every user index.
///
///   d(k)      = E ||h_k||^4
///   e(k,i)    = E |h_k^T h_i^*|^2                 k != i
///   f(i,k)    = E{h_i^T h_k^* ||h_k||^2}           i != k
///   g(i,k,j)  = E{h_i^T h_k^* h_k^T h_j^*}         i, k, j distinct
///
/// Entries that are not defined (repeated indices) are rejected on access.
class MomentTable {
public:
    MomentTable() = default;
    explicit MomentTable(int n_users)
        : k_(static_cast<std::size_t>(n_users)),
          elements_(k_),
          d_(k_, 0.0),
          e_(k_ * k_, 0.0),
          f_(k_ * k_, 0.0),
          g_(k_ * k_ * k_, 0.0)
    {
    }

    int n_users() const { return static_cast<int>(k_); }

    const ElementMoments& element(int k) const { return elements_.at(idx(k)); }
    ElementMoments& element(int k) { return elements_.at(idx(k)); }

    double d(int k) const { return d_.at(idx(k)); }
    double& d(int k) { return d_.at(idx(k)); }

    double e(int k, int i) const { return e_[pair(k, i, "E")]; }
    double& e(int k, int i) { return e_[pair(k, i, "E")]; }

    double f(int i, int k) const { return f_[pair(i, k, "F")]; }
    double& f(int i, int k) { return f_[pair(i, k, "F")]; }

    double g(int i, int k, int j) const { return g_[triple(i, k, j)]; }
    double& g(int i, int k, int j) { return g_[triple(i, k, j)]; }

private:
    std::size_t idx(int k) const
    {
        if (k < 0 || static_cast<std::size_t>(k) >= k_)
            throw std::out_of_range(fmt::format("user index {} out of range", k));
        return static_cast<std::size_t>(k);
    }
    std::size_t pair(int a, int b, const char* name) const
    {
        if (a == b) throw std::out_of_range(fmt::format("{}({},{}) requires distinct users", name, a, b));
        return idx(a) * k_ + idx(b);
    }
    std::size_t triple(int i, int k, int j) const
    {
        if (i == k || k == j || i == j)
            throw std::out_of_range(fmt::format("G({},{},{}) requires distinct users", i, k, j));
        return (idx(i) * k_ + idx(k)) * k_ + idx(j);
    }

    std::size_t k_ = 0;
    std::vector<ElementMoments> elements_;
    std::vector<double> d_, e_, f_, g_;
};

inline MomentTable moment_table(const SystemConfig& cfg)
{
    require_valid(cfg);
    const int K = cfg.n_users;
    const double N = cfg.n_antennas;
    MomentTable mt(K);
    for (int k = 0; k < K; ++k) mt.element(k) = element_moments(cfg.scenarios[k], cfg.sigma_e2[k]);

    for (int k = 0; k < K; ++k) {
        const auto& sc = cfg.scenarios[k];
        const double a = mt.element(k).a;
        mt.d(k) = N * (4.0 * sc.b * sc.b + 4.0 * sc.b * sc.omega + sc.omega * sc.omega / sc.m) +
                  N * N * a * a;
    }
    for (int k = 0; k < K; ++k) {
        const auto& ek = mt.element(k);
        const double t3 = third_moment_identity(cfg.scenarios[k]);
        for (int i = 0; i < K; ++i) {
            if (i == k) continue;
            const auto& ei = mt.element(i);
            mt.e(k, i) = N * ek.a * ei.a + N * (N - 1.0) * ek.c * ek.c * ei.c * ei.c;
            mt.f(i, k) = N * ei.c * (t3 + ek.c * (N - 1.0) * ek.a);
            for (int j = 0; j < K; ++j) {
                if (j == k || j == i) continue;
                mt.g(i, k, j) = N * ei.c * mt.element(j).c * (ek.a + (N - 1.0) * ek.c * ek.c);
            }
        }
    }
    return mt;
}

/// Expected precoder powers: E||w_c||^2 and E sum_i ||h_hat_i||^2.
struct PrecoderPower {
    double common = 0.0;
    double privates = 0.0;
};

inline PrecoderPower expected_precoder_power(const SystemConfig& cfg)
{
    require_valid(cfg);
    const double N = cfg.n_antennas;
    double sum_b = 0.0, cross = 0.0;
    std::vector<double> c(cfg.scenarios.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto em = element_moments(cfg.scenarios[i], cfg.sigma_e2[i]);
        sum_b += em.b_hat;
        c[i] = em.c;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if (i != j) cross += c[i] * c[j];
    return {N * sum_b + N * cross, N * sum_b};
}

/// Power normalisation: alpha = P_t / E Tr{W^H W P^2}.
inline double alpha(const SystemConfig& cfg)
{
    const auto pw = expected_precoder_power(cfg);
    const double denom = cfg.rho * pw.common + cfg.rho_bar() * pw.privates;
    if (!(denom > 0.0)) throw std::domain_error("alpha: precoder power is zero (degenerate config)");
    return cfg.p_t / denom;
}

}  // namespace rsma

#endif  // RSMA_MOMENTS_HPP
