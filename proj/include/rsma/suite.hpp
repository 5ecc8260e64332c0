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

#ifndef RSMA_SUITE_HPP
#define RSMA_SUITE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "rsma/moments.hpp"
#include "rsma/montecarlo.hpp"
#include "rsma/params.hpp"
#include "rsma/rates.hpp"
#include "rsma/stats.hpp"

namespace rsma {

enum class Verdict { pass, fail, info };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::info: return "info";
    }
    return "?";
}

inline constexpr double no_limit = std::numeric_limits<double>::quiet_NaN();

/// One closed-form versus Monte-Carlo comparison.
struct Check {
    std::string name;
    double closed_form = 0.0;
    double mc_mean = 0.0;
    double std_err = 0.0;
    double z = 0.0;
    double rel_err = 0.0;
    Verdict verdict = Verdict::info;
    std::string note;
};

/// Builds a check. A NaN limit disables that criterion; report_only turns
/// the verdict into `info` regardless of the outcome.
inline Check make_check(std::string name, double closed_form, const McEstimate& mc, double z_max,
                        double rel_max, bool report_only = false, std::string note = {})
{
    Check c;
    c.name = std::move(name);
    c.closed_form = closed_form;
    c.mc_mean = mc.mean;
    c.std_err = mc.std_err;
    c.z = z_score(closed_form, mc);
    c.rel_err = std::isnan(rel_max) && closed_form == 0.0
                    ? std::numeric_limits<double>::quiet_NaN()
                    : relative_error(closed_form, mc.mean);
    bool ok = true;
    if (!std::isnan(z_max)) ok = ok && c.z <= z_max;
    if (!std::isnan(rel_max)) ok = ok && c.rel_err <= rel_max;
    c.verdict = report_only ? Verdict::info : (ok ? Verdict::pass : Verdict::fail);
    c.note = std::move(note);
    return c;
}

struct Tolerances {
    double z_max = 4.0;
    double moment_rel = 0.02;
    double power_rel = 0.01;
};

struct MomentCase {
    std::string label;
    SystemConfig cfg;
    std::uint64_t trials = 0;
};

struct PowerCase {
    std::string label;
    SystemConfig cfg;
    std::uint64_t trials = 0;
};

/// Closed-form rate tightness. cp_rel_cap bounds the common/private rate error,
/// eav_rel_cap the eavesdropping approximation error; NaN disables a group.
struct RateCase {
    std::string label;
    SystemConfig cfg;
    double snr_db = 0.0;
    std::uint64_t trials = 0;
    double cp_rel_cap = no_limit;
    double eav_rel_cap = no_limit;
    bool cp_report_only = false;
};

/// Above this SNR the low-SNR eavesdropping approximation is out of regime;
/// such comparisons are reported, never failed.
inline constexpr double low_snr_limit_db = 10.0;

struct SuiteGrid {
    std::vector<MomentCase> moments;
    std::vector<PowerCase> power;
    std::vector<RateCase> rates;
    Tolerances tol;
};

struct SuiteReport {
    std::vector<Check> checks;

    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.verdict == Verdict::fail;
        return n;
    }
    bool passed() const { return failures() == 0; }
};

/// Default validation grid. Moment cases use 50x the base trial count.
inline SuiteGrid default_suite_grid(std::uint64_t trials)
{
    SuiteGrid grid;
    for (const char* name : {"ORs", "AS"})
        for (int n : {1, 8})
            for (double se : {0.0, 0.1})
                grid.moments.push_back(
                    {fmt::format("{}/N={}/se2={}", name, n, se),
                     SystemConfig::symmetric(preset(name), n, 3, 0.5, 1.0, 1.0, se), 50 * trials});

    for (double rho : {0.0, 0.5, 1.0}) {
        auto cfg = apply_snr(SystemConfig::symmetric(preset("ORs"), 8, 4, rho, 1.0), {0.0, 10});
        grid.power.push_back({fmt::format("ORs/N=8/K=4/rho={}", rho), cfg, trials});
    }

    auto rate_cfg = [](const char* name, int n, int k, double rho, double snr) {
        return apply_snr(SystemConfig::symmetric(preset(name), n, k, rho, 1.0), {snr, 10});
    };
    grid.rates.push_back({"AS/N=64/K=8/snr=0", rate_cfg("AS", 64, 8, 0.5, 0.0), 0.0, trials, 0.05});
    grid.rates.push_back({"AS/N=8/K=2/snr=0", rate_cfg("AS", 8, 2, 0.5, 0.0), 0.0, trials, 0.15});
    grid.rates.push_back(
        {"FHS/N=128/K=4/snr=-10", rate_cfg("FHS", 128, 4, 0.5, -10.0), -10.0, trials, no_limit, 0.10});
    grid.rates.push_back(
        {"FHS/N=128/K=4/snr=20", rate_cfg("FHS", 128, 4, 0.5, 20.0), 20.0, trials, no_limit, 0.10});
    return grid;
}

namespace detail {

inline std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(seed ^ splitmix64(index + 0x5851f42d4c957f2dULL));
}

inline void moment_checks(const MomentCase& mc, const Tolerances& tol, std::uint64_t seed,
                          unsigned workers, std::vector<Check>& out)
{
    const auto table = moment_table(mc.cfg);
    const auto emp = estimate_moments(mc.cfg, {mc.trials, seed, workers});
    const int K = mc.cfg.n_users;
    const auto& L = mc.label;
    auto add = [&](const std::string& what, double cf, const McEstimate& est) {
        out.push_back(make_check(fmt::format("moments/{}/{}", L, what), cf, est, tol.z_max, tol.moment_rel));
    };
    auto add_zero = [&](const std::string& what, const McEstimate& est) {
        out.push_back(make_check(fmt::format("moments/{}/{}", L, what), 0.0, est, tol.z_max, no_limit));
    };
    for (int k = 0; k < K; ++k) {
        const auto& el = table.element(k);
        add(fmt::format("A[{}]", k + 1), el.a, emp.a[k]);
        add(fmt::format("B[{}]", k + 1), el.b_hat, emp.b_hat[k]);
        add(fmt::format("C[{}]", k + 1), el.c, emp.c[k].re);
        add_zero(fmt::format("Im C[{}]", k + 1), emp.c[k].im);
        add(fmt::format("T3[{}]", k + 1), third_moment_identity(mc.cfg.scenarios[k]), emp.t3[k].re);
        add_zero(fmt::format("Im T3[{}]", k + 1), emp.t3[k].im);
        add(fmt::format("D[{}]", k + 1), table.d(k), emp.d[k]);
    }
    for (int k = 0; k < K; ++k)
        for (int i = 0; i < K; ++i) {
            if (i == k) continue;
            add(fmt::format("E[{},{}]", k + 1, i + 1), table.e(k, i), emp.e(k, i));
            add(fmt::format("F[{},{}]", i + 1, k + 1), table.f(i, k), emp.f(i, k).re);
            add_zero(fmt::format("Im F[{},{}]", i + 1, k + 1), emp.f(i, k).im);
        }
    for (int i = 0; i < K; ++i)
        for (int k = 0; k < K; ++k)
            for (int j = 0; j < K; ++j) {
                if (i == k || k == j || i == j) continue;
                add(fmt::format("G[{},{},{}]", i + 1, k + 1, j + 1), table.g(i, k, j), emp.g(i, k, j).re);
                add_zero(fmt::format("Im G[{},{},{}]", i + 1, k + 1, j + 1), emp.g(i, k, j).im);
            }
}

inline void power_checks(const PowerCase& pc, const Tolerances& tol, std::uint64_t seed,
                         unsigned workers, std::vector<Check>& out)
{
    const auto res = power_check(pc.cfg, {pc.trials, seed, workers});
    out.push_back(make_check(fmt::format("power/{}/total", pc.label), res.p_t, res.total, no_limit,
                             tol.power_rel));
    out.push_back(make_check(fmt::format("power/{}/common_term", pc.label), res.expected_common,
                             res.term_common, tol.z_max, no_limit));
    out.push_back(make_check(fmt::format("power/{}/private_term", pc.label), res.expected_private,
                             res.term_private, tol.z_max, no_limit));
}

inline void rate_checks(const RateCase& rc, std::uint64_t seed, unsigned workers,
                        std::vector<Check>& out)
{
    const auto cf = closed_form_rates(rc.cfg);
    const auto mc = ergodic_rates(rc.cfg, {rc.trials, seed, workers});
    const int K = rc.cfg.n_users;
    const auto& L = rc.label;
    if (!std::isnan(rc.cp_rel_cap)) {
        for (int k = 0; k < K; ++k) {
            out.push_back(make_check(fmt::format("rates/{}/r_c[{}]", L, k + 1), cf.r_c[k], mc.r_c[k],
                                     no_limit, rc.cp_rel_cap, rc.cp_report_only));
            out.push_back(make_check(fmt::format("rates/{}/r_p[{}]", L, k + 1), cf.r_p[k], mc.r_p[k],
                                     no_limit, rc.cp_rel_cap, rc.cp_report_only));
        }
        out.push_back(make_check(fmt::format("rates/{}/r_sum", L), cf.r_sum, mc.r_sum, no_limit,
                                 rc.cp_rel_cap, rc.cp_report_only));
    }
    if (!std::isnan(rc.eav_rel_cap) && K >= 2) {
        const bool out_of_regime = rc.snr_db > low_snr_limit_db;
        for (int i = 0; i < K; ++i)
            for (int k = 0; k < K; ++k) {
                if (i == k) continue;
                // log2(1 + E gamma): standard error by the delta method
                const auto& g = mc.gamma_eav(i, k);
                const McEstimate jensen{mc.r_eav_jensen(i, k),
                                        g.std_err / ((1.0 + g.mean) * std::log(2.0)), g.n_trials,
                                        g.seed};
                out.push_back(make_check(fmt::format("rates/{}/r_eav[{}->{}]", L, i + 1, k + 1),
                                         cf.r_eav(i, k), jensen, no_limit, rc.eav_rel_cap,
                                         out_of_regime, out_of_regime ? "out-of-regime" : ""));
            }
    }
    for (int k = 0; k < K; ++k)
        out.push_back(make_check(fmt::format("rates/{}/r_s[{}]", L, k + 1), cf.r_s[k],
                                 mc.r_s_exact[k], no_limit, no_limit, true, "exact-definition MC"));
    Check j;
    j.name = fmt::format("rates/{}/jensen", L);
    j.closed_form = 0.0;
    j.mc_mean = static_cast<double>(mc.jensen_violations);
    j.z = std::numeric_limits<double>::quiet_NaN();
    j.rel_err = std::numeric_limits<double>::quiet_NaN();
    j.verdict = mc.jensen_violations == 0 ? Verdict::pass : Verdict::fail;
    j.note = fmt::format("{} block checks", mc.jensen_checks);
    if (K >= 2) out.push_back(std::move(j));
}

}  // namespace detail

/// Runs every comparison in the grid. Failures are reported, never thrown.
inline SuiteReport run_suite(const SuiteGrid& grid, std::uint64_t seed, unsigned workers = 0)
{
    SuiteReport rep;
    std::uint64_t index = 0;
    for (const auto& c : grid.moments)
        detail::moment_checks(c, grid.tol, detail::case_seed(seed, index++), workers, rep.checks);
    for (const auto& c : grid.power)
        detail::power_checks(c, grid.tol, detail::case_seed(seed, index++), workers, rep.checks);
    for (const auto& c : grid.rates)
        detail::rate_checks(c, detail::case_seed(seed, index++), workers, rep.checks);
    return rep;
}

inline std::string fmt_num(double x) { return fmt::format("{:.10g}", x); }

inline std::string to_csv(const SuiteReport& rep)
{
    std::string out = "check,closed_form,mc_mean,std_err,z,rel_err,verdict,note\n";
    for (const auto& c : rep.checks)
        out += fmt::format("{},{},{},{},{},{},{},{}\n", c.name, fmt_num(c.closed_form),
                           fmt_num(c.mc_mean), fmt_num(c.std_err), fmt_num(c.z), fmt_num(c.rel_err),
                           to_string(c.verdict), c.note);
    return out;
}

inline std::string to_text(const SuiteReport& rep)
{
    std::string out = fmt::format("{:<44} {:>14} {:>14} {:>11} {:>8} {:>10} {:>7}  {}\n", "check",
                                  "closed_form", "mc_mean", "std_err", "z", "rel_err", "verdict",
                                  "note");
    for (const auto& c : rep.checks)
        out += fmt::format("{:<44} {:>14.8g} {:>14.8g} {:>11.4g} {:>8.3g} {:>10.3g} {:>7}  {}\n",
                           c.name, c.closed_form, c.mc_mean, c.std_err, c.z, c.rel_err,
                           to_string(c.verdict), c.note);
    out += fmt::format("{} checks, {} failed\n", rep.checks.size(), rep.failures());
    return out;
}

}  // namespace rsma

#endif  // RSMA_SUITE_HPP
