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

#ifndef RSMA_MONTECARLO_HPP
#define RSMA_MONTECARLO_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rsma/channel.hpp"
#include "rsma/linalg.hpp"
#include "rsma/moments.hpp"
#include "rsma/params.hpp"
#include "rsma/rng.hpp"
#include "rsma/sinr.hpp"
#include "rsma/stats.hpp"

namespace rsma {

struct McOptions {
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    unsigned workers = 0;  ///< 0: one per hardware thread
    std::uint64_t block_size = 4096;
};

inline unsigned resolve_workers(unsigned requested)
{
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Splits `trials` into fixed-size blocks, runs `body(acc, rng, count)` for each
/// block on its own substream, and merges the block accumulators in block order.
/// The result is identical for any worker count.
template <class Acc, class Make, class Body>
Acc run_blocks(const McOptions& opt, StreamTag tag, Make make, Body body)
{
    if (opt.block_size == 0) throw std::invalid_argument("block_size must be > 0");
    const std::uint64_t n_blocks = (opt.trials + opt.block_size - 1) / opt.block_size;
    std::vector<std::optional<Acc>> blocks(n_blocks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            try {
                const std::uint64_t begin = b * opt.block_size;
                const std::uint64_t count = std::min(opt.block_size, opt.trials - begin);
                RandomStream rng(opt.seed, tag, b);
                Acc acc = make();
                body(acc, rng, count);
                blocks[b] = std::move(acc);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n_blocks;
                return;
            }
        }
    };

    const unsigned n_workers =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(opt.workers), n_blocks));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    Acc total = make();
    for (auto& b : blocks) total.merge(*b);
    return total;
}

inline void require_trials(std::uint64_t trials)
{
    if (trials < 2) throw std::invalid_argument("Monte-Carlo runs need at least 2 trials");
}

// ---------------------------------------------------------------------------
// Channel moments
// ---------------------------------------------------------------------------

struct ComplexStats {
    RunningStats re, im;
    void push(cplx z)
    {
        re.push(z.real());
        im.push(z.imag());
    }
    void merge(const ComplexStats& o)
    {
        re.merge(o.re);
        im.merge(o.im);
    }
};

struct ComplexEstimate {
    McEstimate re, im;
    static ComplexEstimate from(const ComplexStats& s, std::uint64_t seed)
    {
        return {McEstimate::from(s.re, seed), McEstimate::from(s.im, seed)};
    }
};

/// Empirical counterparts of ElementMoments and MomentTable. Element-level
/// quantities pool every antenna element (N samples per draw); the rest have
/// one sample per draw. Undefined index combinations stay empty.
struct EmpiricalMoments {
    int n_users = 0;
    std::uint64_t trials = 0;
    std::vector<McEstimate> a, b_hat, d;
    std::vector<ComplexEstimate> c, t3;
    Matrix<McEstimate> e;        ///< e(k, i)
    Matrix<ComplexEstimate> f;   ///< f(i, k)
    std::vector<ComplexEstimate> g_flat;

    const ComplexEstimate& g(int i, int k, int j) const
    {
        const auto K = static_cast<std::size_t>(n_users);
        return g_flat[(static_cast<std::size_t>(i) * K + static_cast<std::size_t>(k)) * K +
                      static_cast<std::size_t>(j)];
    }
};

namespace detail {

struct MomentAcc {
    std::size_t K = 0;
    std::vector<RunningStats> a, b_hat, d, e;
    std::vector<ComplexStats> c, t3, f, g;

    explicit MomentAcc(std::size_t k)
        : K(k), a(k), b_hat(k), d(k), e(k * k), c(k), t3(k), f(k * k), g(k * k * k)
    {
    }

    void merge(const MomentAcc& o)
    {
        auto m = [](auto& dst, const auto& src) {
            for (std::size_t i = 0; i < dst.size(); ++i) dst[i].merge(src[i]);
        };
        m(a, o.a);
        m(b_hat, o.b_hat);
        m(d, o.d);
        m(e, o.e);
        m(c, o.c);
        m(t3, o.t3);
        m(f, o.f);
        m(g, o.g);
    }
};

}  // namespace detail

inline EmpiricalMoments estimate_moments(const SystemConfig& cfg, const McOptions& opt)
{
    require_valid(cfg);
    require_trials(opt.trials);
    const auto K = static_cast<std::size_t>(cfg.n_users);

    auto acc = run_blocks<detail::MomentAcc>(
        opt, StreamTag::moments, [K] { return detail::MomentAcc(K); },
        [&](detail::MomentAcc& m, RandomStream& rng, std::uint64_t count) {
            for (std::uint64_t t = 0; t < count; ++t) {
                const auto cs = sample_channels(cfg, rng);
                const auto gm = gram(cs.h);
                for (std::size_t k = 0; k < K; ++k) {
                    for (std::size_t n = 0; n < cs.h.cols(); ++n) {
                        const cplx x = cs.h(k, n);
                        const cplx xh = cs.h_hat(k, n);
                        m.a[k].push(std::norm(x));
                        m.b_hat[k].push(std::norm(xh));
                        m.c[k].push(xh);
                        m.t3[k].push(std::conj(x) * std::norm(x));
                    }
                    const double nk = gm(k, k).real();
                    m.d[k].push(nk * nk);
                }
                for (std::size_t k = 0; k < K; ++k)
                    for (std::size_t i = 0; i < K; ++i) {
                        if (i == k) continue;
                        m.e[k * K + i].push(std::norm(gm(k, i)));
                        // f(i,k) = h_i^T h_k^* ||h_k||^2, g(i,k,j) = h_i^T h_k^* h_k^T h_j^*
                        m.f[i * K + k].push(gm(i, k) * gm(k, k).real());
                        for (std::size_t j = 0; j < K; ++j)
                            if (j != i && j != k) m.g[(i * K + k) * K + j].push(gm(i, k) * gm(k, j));
                    }
            }
        });

    EmpiricalMoments em;
    em.n_users = cfg.n_users;
    em.trials = opt.trials;
    const auto s = opt.seed;
    for (std::size_t k = 0; k < K; ++k) {
        em.a.push_back(McEstimate::from(acc.a[k], s));
        em.b_hat.push_back(McEstimate::from(acc.b_hat[k], s));
        em.d.push_back(McEstimate::from(acc.d[k], s));
        em.c.push_back(ComplexEstimate::from(acc.c[k], s));
        em.t3.push_back(ComplexEstimate::from(acc.t3[k], s));
    }
    em.e = Matrix<McEstimate>(K, K);
    em.f = Matrix<ComplexEstimate>(K, K);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < K; ++i) {
            em.e(k, i) = McEstimate::from(acc.e[k * K + i], s);
            em.f(k, i) = ComplexEstimate::from(acc.f[k * K + i], s);
        }
    em.g_flat.reserve(acc.g.size());
    for (const auto& gs : acc.g) em.g_flat.push_back(ComplexEstimate::from(gs, s));
    return em;
}

// ---------------------------------------------------------------------------
// Power normalisation
// ---------------------------------------------------------------------------

struct PowerCheck {
    double alpha = 0.0;
    double p_t = 0.0;
    McEstimate total;         ///< alpha * Tr{W^H W P^2}
    McEstimate term_common;   ///< rho * ||w_c||^2
    McEstimate term_private;  ///< rho_bar * sum_i ||h_hat_i||^2
    double expected_common = 0.0;
    double expected_private = 0.0;
};

namespace detail {
struct PowerAcc {
    RunningStats total, common, privates;
    void merge(const PowerAcc& o)
    {
        total.merge(o.total);
        common.merge(o.common);
        privates.merge(o.privates);
    }
};
}  // namespace detail

/// Averages the precoder power over explicit channel and estimation-error draws.
inline PowerCheck power_check(const SystemConfig& cfg, const McOptions& opt)
{
    require_valid(cfg);
    require_trials(opt.trials);
    const double a = alpha(cfg);
    const double rho = cfg.rho, rho_bar = cfg.rho_bar();

    auto acc = run_blocks<detail::PowerAcc>(
        opt, StreamTag::power, [] { return detail::PowerAcc{}; },
        [&](detail::PowerAcc& p, RandomStream& rng, std::uint64_t count) {
            for (std::uint64_t t = 0; t < count; ++t) {
                const auto cs = sample_channels(cfg, rng);
                const auto pre = build_precoders(cs);
                const double wc = norm_sq(pre.w_c);
                const double wp = norm_sq(pre.w_p.data());
                p.common.push(rho * wc);
                p.privates.push(rho_bar * wp);
                p.total.push(a * (rho * wc + rho_bar * wp));
            }
        });

    const auto pw = expected_precoder_power(cfg);
    PowerCheck out;
    out.alpha = a;
    out.p_t = cfg.p_t;
    out.total = McEstimate::from(acc.total, opt.seed);
    out.term_common = McEstimate::from(acc.common, opt.seed);
    out.term_private = McEstimate::from(acc.privates, opt.seed);
    out.expected_common = rho * pw.common;
    out.expected_private = rho_bar * pw.privates;
    return out;
}

// ---------------------------------------------------------------------------
// Ergodic rates
// ---------------------------------------------------------------------------

/// Monte-Carlo ergodic rates over actual-channel draws. r_eav_jensen(i, k) is
/// log2(1 + mean gamma_{i->k}); r_s_exact averages the per-draw clamped secrecy rate.
struct McRateReport {
    std::vector<McEstimate> r_c, r_p, r_s_exact;
    Matrix<McEstimate> r_eav, gamma_eav;
    RMatrix r_eav_jensen;
    McEstimate r_sum;
    McEstimate r_p_avg, r_s_avg;  ///< per-draw averages over users
    std::uint64_t jensen_checks = 0;
    std::uint64_t jensen_violations = 0;
    std::uint64_t n_trials = 0;
    std::uint64_t seed = 0;
};

namespace detail {

struct RateAcc {
    std::size_t K = 0;
    std::vector<RunningStats> r_c, r_p, r_s, r_eav, g_eav;
    RunningStats sum_p, avg_p, avg_s;
    std::uint64_t jensen_checks = 0, jensen_violations = 0;

    explicit RateAcc(std::size_t k)
        : K(k), r_c(k), r_p(k), r_s(k), r_eav(k * k), g_eav(k * k)
    {
    }

    void merge(const RateAcc& o)
    {
        auto m = [](auto& dst, const auto& src) {
            for (std::size_t i = 0; i < dst.size(); ++i) dst[i].merge(src[i]);
        };
        m(r_c, o.r_c);
        m(r_p, o.r_p);
        m(r_s, o.r_s);
        m(r_eav, o.r_eav);
        m(g_eav, o.g_eav);
        sum_p.merge(o.sum_p);
        avg_p.merge(o.avg_p);
        avg_s.merge(o.avg_s);
        jensen_checks += o.jensen_checks;
        jensen_violations += o.jensen_violations;
    }

    void check_jensen()
    {
        for (std::size_t i = 0; i < K; ++i)
            for (std::size_t k = 0; k < K; ++k) {
                if (i == k) continue;
                ++jensen_checks;
                if (std::log2(1.0 + g_eav[i * K + k].mean()) < r_eav[i * K + k].mean())
                    ++jensen_violations;
            }
    }
};

}  // namespace detail

inline McRateReport ergodic_rates(const SystemConfig& cfg, const McOptions& opt)
{
    require_valid(cfg);
    require_trials(opt.trials);
    const auto K = static_cast<std::size_t>(cfg.n_users);
    const double a = alpha(cfg);

    auto acc = run_blocks<detail::RateAcc>(
        opt, StreamTag::rates, [K] { return detail::RateAcc(K); },
        [&](detail::RateAcc& r, RandomStream& rng, std::uint64_t count) {
            std::vector<double> rp(K);
            for (std::uint64_t t = 0; t < count; ++t) {
                const auto h = sample_actual_channels(cfg, rng);
                const auto s = compute_sinrs(h, cfg, a);
                double sum_p = 0.0, sum_s = 0.0;
                for (std::size_t k = 0; k < K; ++k) {
                    r.r_c[k].push(std::log2(1.0 + s.gamma_c[k]));
                    rp[k] = std::log2(1.0 + s.gamma_p[k]);
                    r.r_p[k].push(rp[k]);
                    sum_p += rp[k];
                }
                for (std::size_t k = 0; k < K; ++k) {
                    double worst = 0.0;
                    for (std::size_t i = 0; i < K; ++i) {
                        if (i == k) continue;
                        const double g = s.gamma_eav(i, k);
                        const double re = std::log2(1.0 + g);
                        r.g_eav[i * K + k].push(g);
                        r.r_eav[i * K + k].push(re);
                        worst = std::max(worst, re);
                    }
                    const double sec = std::max(rp[k] - worst, 0.0);
                    r.r_s[k].push(sec);
                    sum_s += sec;
                }
                r.sum_p.push(sum_p);
                r.avg_p.push(sum_p / static_cast<double>(K));
                r.avg_s.push(sum_s / static_cast<double>(K));
            }
            r.check_jensen();
        });

    const auto seed = opt.seed;
    McRateReport rep;
    rep.n_trials = opt.trials;
    rep.seed = seed;
    rep.jensen_checks = acc.jensen_checks;
    rep.jensen_violations = acc.jensen_violations;
    for (std::size_t k = 0; k < K; ++k) {
        rep.r_c.push_back(McEstimate::from(acc.r_c[k], seed));
        rep.r_p.push_back(McEstimate::from(acc.r_p[k], seed));
        rep.r_s_exact.push_back(McEstimate::from(acc.r_s[k], seed));
    }
    if (K >= 2) {
        rep.r_eav = Matrix<McEstimate>(K, K);
        rep.gamma_eav = Matrix<McEstimate>(K, K);
        rep.r_eav_jensen = RMatrix(K, K, 0.0);
        for (std::size_t i = 0; i < K; ++i)
            for (std::size_t k = 0; k < K; ++k) {
                if (i == k) continue;
                rep.r_eav(i, k) = McEstimate::from(acc.r_eav[i * K + k], seed);
                rep.gamma_eav(i, k) = McEstimate::from(acc.g_eav[i * K + k], seed);
                rep.r_eav_jensen(i, k) = std::log2(1.0 + acc.g_eav[i * K + k].mean());
            }
    }
    // Common rate is set by the weakest user; its error is combined with the
    // private-sum error as if independent.
    const auto weakest = std::min_element(rep.r_c.begin(), rep.r_c.end(),
                                          [](const auto& x, const auto& y) { return x.mean < y.mean; });
    const auto sum_p = McEstimate::from(acc.sum_p, seed);
    rep.r_sum = {weakest->mean + sum_p.mean,
                 std::sqrt(weakest->std_err * weakest->std_err + sum_p.std_err * sum_p.std_err),
                 opt.trials, seed};
    rep.r_p_avg = McEstimate::from(acc.avg_p, seed);
    rep.r_s_avg = McEstimate::from(acc.avg_s, seed);
    return rep;
}

}  // namespace rsma

#endif  // RSMA_MONTECARLO_HPP
