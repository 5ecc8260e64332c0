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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "rsma/experiment.hpp"
#include "rsma/suite.hpp"

using namespace rsma;

namespace {

constexpr std::uint64_t master_seed = 20260101;

struct Outcome {
    int id;
    std::string title;
    bool pass;
    std::vector<std::string> details;
};

SystemConfig at_snr(const ScenarioParams& sc, int N, int K, double rho, double snr_db, int L)
{
    return apply_snr(SystemConfig::symmetric(sc, N, K, rho, 1.0), {snr_db, L});
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void add_failures(const SuiteReport& rep, Outcome& o, std::size_t limit = 12)
{
    std::size_t shown = 0;
    for (const auto& c : rep.checks) {
        if (c.verdict != Verdict::fail) continue;
        if (shown++ == limit) {
            o.details.push_back(fmt::format("... {} more", rep.failures() - limit));
            break;
        }
        o.details.push_back(fmt::format("fail {}: cf={} mc={} se={} z={:.2f} rel={:.4f}", c.name,
                                        fmt_num(c.closed_form), fmt_num(c.mc_mean), fmt_num(c.std_err),
                                        c.z, c.rel_err));
    }
}

Outcome moments_criterion()
{
    const auto t0 = std::chrono::steady_clock::now();
    SuiteGrid grid;
    for (auto name : preset_names)
        for (int n : {1, 2, 8})
            for (double se : {0.0, 0.1})
                grid.moments.push_back({fmt::format("{}/N={}/se2={}", name, n, se),
                                        SystemConfig::symmetric(preset(name), n, 3, 0.5, 1.0, 1.0, se),
                                        1'000'000});
    grid.tol.z_max = 4.0;
    grid.tol.moment_rel = 0.02;
    const auto rep = run_suite(grid, master_seed + 1);
    const double secs = seconds_since(t0);

    Outcome o{1, "moment closed forms vs 1e6-draw Monte Carlo (4 SE and 2%)", rep.passed() && secs < 120.0, {}};
    o.details.push_back(fmt::format("{} checks, {} failed, {:.1f} s (limit 120 s)", rep.checks.size(),
                                    rep.failures(), secs));
    for (auto name : preset_names) {
        std::size_t n = 0, bad = 0;
        for (const auto& c : rep.checks)
            if (c.name.starts_with(fmt::format("moments/{}/", name))) {
                ++n;
                bad += c.verdict == Verdict::fail;
            }
        o.details.push_back(fmt::format("{}: {}/{} failed", name, bad, n));
    }
    add_failures(rep, o);
    return o;
}

Outcome power_criterion()
{
    SuiteGrid grid;
    for (double rho : {0.0, 0.5, 1.0})
        grid.power.push_back({fmt::format("ORs/N=8/K=4/rho={}", rho),
                              at_snr(preset("ORs"), 8, 4, rho, 0.0, 10), 100'000});
    grid.tol.power_rel = 0.01;
    grid.tol.z_max = 4.0;
    const auto rep = run_suite(grid, master_seed + 2);
    Outcome o{2, "transmit power normalisation (total within 1%, terms within 4 SE)", rep.passed(), {}};
    for (const auto& c : rep.checks)
        o.details.push_back(fmt::format("{} {}: target={} mc={} z={:.2f} rel={:.5f}", to_string(c.verdict),
                                        c.name, fmt_num(c.closed_form), fmt_num(c.mc_mean), c.z, c.rel_err));
    return o;
}

Outcome tightness_criterion()
{
    SuiteGrid grid;
    grid.rates.push_back(
        {"AS/N=64/K=8", at_snr(preset("AS"), 64, 8, 0.5, 0.0, 10), 0.0, 100'000, 0.05});
    grid.rates.push_back({"AS/N=8/K=2", at_snr(preset("AS"), 8, 2, 0.5, 0.0, 10), 0.0, 100'000, 0.15});
    const auto rep = run_suite(grid, master_seed + 3);
    bool ok = true;
    Outcome o{3, "common/private closed-form rates vs MC (5% at N=64 K=8, 15% at N=8 K=2)", true, {}};
    double worst64 = 0.0, worst8 = 0.0;
    for (const auto& c : rep.checks) {
        const bool cp = c.name.find("/r_c[") != std::string::npos || c.name.find("/r_p[") != std::string::npos;
        if (!cp) continue;
        ok = ok && c.verdict == Verdict::pass;
        double& worst = c.name.find("N=64") != std::string::npos ? worst64 : worst8;
        worst = std::max(worst, c.rel_err);
    }
    o.pass = ok;
    o.details.push_back(fmt::format("worst relative error N=64 K=8: {:.4f}", worst64));
    o.details.push_back(fmt::format("worst relative error N=8 K=2: {:.4f}", worst8));
    add_failures(rep, o);
    return o;
}

Outcome low_snr_criterion()
{
    const auto cfg = at_snr(preset("FHS"), 128, 4, 0.5, -10.0, 10);
    const auto cf = closed_form_rates(cfg);
    const auto mc = ergodic_rates(cfg, {100'000, master_seed + 4, 0});
    double worst = 0.0;
    bool jensen_exact = true;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (i == k) continue;
            worst = std::max(worst, relative_error(mc.r_eav_jensen(i, k), cf.r_eav(i, k)));
            jensen_exact = jensen_exact && mc.r_eav_jensen(i, k) >= mc.r_eav(i, k).mean;
        }
    const bool ok = worst <= 0.10 && mc.jensen_violations == 0 && jensen_exact;
    Outcome o{4, "low-SNR eavesdropping approximation within 10%, Jensen bound on every batch", ok, {}};
    o.details.push_back(fmt::format("cf={} log2(1+E gamma)={} worst rel={:.4f}", fmt_num(cf.r_eav(1, 0)),
                                    fmt_num(mc.r_eav_jensen(1, 0)), worst));
    o.details.push_back(
        fmt::format("Jensen: {} violations in {} batch checks", mc.jensen_violations, mc.jensen_checks));
    return o;
}

Outcome training_criterion()
{
    auto sum = [](int L, double snr) {
        return closed_form_rates(at_snr(preset("AS"), 8, 2, 0.5, snr, L)).r_sum;
    };
    const double r1 = sum(1, 0.0), r10 = sum(10, 0.0), r100 = sum(100, 0.0);
    const double h1 = sum(1, 30.0), h10 = sum(10, 30.0), h100 = sum(100, 30.0);
    const double hi = std::max({h1, h10, h100}), lo = std::min({h1, h10, h100});
    const double spread = (hi - lo) / hi;
    Outcome o{5, "sum rate increases with training length at 0 dB and converges at 30 dB",
              r1 < r10 && r10 < r100 && spread < 0.01, {}};
    o.details.push_back(fmt::format("0 dB: L=1 {:.5f} < L=10 {:.5f} < L=100 {:.5f}", r1, r10, r100));
    o.details.push_back(fmt::format("30 dB: {:.5f} {:.5f} {:.5f}, spread {:.5f} (limit 0.01)", h1, h10, h100, spread));
    return o;
}

Outcome users_criterion()
{
    const auto grid = default_grid(SweepVar::snr_db);
    const int Ks[] = {2, 4, 8};
    bool cf_ok = true, mc_ok = true;
    std::vector<double> cf_bad, mc_bad;
    double low_ok_until = -1e9;
    bool low_run = true;
    std::uint64_t index = 0;
    Outcome o{6, "secrecy rate strictly decreasing in K at every grid SNR (closed form and MC)", false, {}};
    for (double snr : grid) {
        double cf[3], mc[3];
        for (int j = 0; j < 3; ++j) {
            const auto cfg = at_snr(preset("FHS"), 128, Ks[j], 0.5, snr, 10);
            cf[j] = mean_of(closed_form_rates(cfg).r_s);
            mc[j] = ergodic_rates(cfg, {20'000, detail::case_seed(master_seed + 6, index++), 0}).r_s_avg.mean;
        }
        const bool c = cf[0] > cf[1] && cf[1] > cf[2];
        const bool m = mc[0] > mc[1] && mc[1] > mc[2];
        if (!c) cf_bad.push_back(snr);
        if (!m) mc_bad.push_back(snr);
        cf_ok = cf_ok && c;
        mc_ok = mc_ok && m;
        if (low_run && c && m)
            low_ok_until = snr;
        else
            low_run = false;
        o.details.push_back(fmt::format("{:>4} dB  cf {:.4f} {:.4f} {:.4f}  mc {:.4f} {:.4f} {:.4f}", snr, cf[0],
                                        cf[1], cf[2], mc[0], mc[1], mc[2]));
    }
    o.pass = cf_ok && mc_ok;
    auto list = [](const std::vector<double>& v) {
        std::string s;
        for (double x : v) s += fmt::format("{}{}", s.empty() ? "" : ",", x);
        return s.empty() ? std::string("none") : s;
    };
    o.details.push_back(fmt::format("closed-form ordering broken at: {} dB", list(cf_bad)));
    o.details.push_back(fmt::format("MC ordering broken at: {} dB", list(mc_bad)));
    o.details.push_back(fmt::format("(info) ordering holds for both from -10 dB up to {} dB", low_ok_until));
    return o;
}

Outcome split_criterion()
{
    Outcome o{7, "power split: interior sum-rate peak, nonincreasing secrecy, smaller drop at N=128", true, {}};
    double drop[2];
    int idx = 0;
    for (int N : {64, 128}) {
        std::vector<double> sum, sec;
        for (int i = 0; i <= 20; ++i) {
            const auto cf = closed_form_rates(at_snr(preset("ORs"), N, 6, i / 20.0, 0.0, 10));
            sum.push_back(cf.r_sum);
            sec.push_back(mean_of(cf.r_s));
        }
        const auto peak = std::max_element(sum.begin(), sum.end());
        const bool interior = *peak > sum.front() && *peak > sum.back();
        bool nonincreasing = true;
        for (std::size_t i = 1; i < sec.size(); ++i) nonincreasing = nonincreasing && sec[i] <= sec[i - 1];
        drop[idx++] = (sec[0] - sec[18]) / sec[0];
        o.pass = o.pass && interior && nonincreasing;
        o.details.push_back(fmt::format("N={}: peak {:.4f} at rho={:.2f} (ends {:.4f}, {:.4f}); r_s nonincreasing: {}",
                                        N, *peak, (peak - sum.begin()) / 20.0, sum.front(), sum.back(),
                                        nonincreasing ? "yes" : "no"));
    }
    o.pass = o.pass && drop[1] < drop[0];
    o.details.push_back(fmt::format("secrecy drop rho 0 -> 0.9: N=64 {:.4f}, N=128 {:.4f}", drop[0], drop[1]));
    return o;
}

Outcome saturation_criterion()
{
    const double r30 = closed_form_rates(at_snr(preset("AS"), 8, 2, 0.5, 30.0, 10)).r_sum;
    const double r40 = closed_form_rates(at_snr(preset("AS"), 8, 2, 0.5, 40.0, 10)).r_sum;
    const double frac = (r40 - r30) / r40;
    Outcome o{8, "sum rate saturates: r_sum(40 dB) - r_sum(30 dB) < 1% of r_sum(40 dB)", frac < 0.01, {}};
    o.details.push_back(fmt::format("r_sum 30 dB {:.6f}, 40 dB {:.6f}, fraction {:.6f}", r30, r40, frac));
    return o;
}

Outcome determinism_criterion()
{
    const auto grid = default_suite_grid(2000);
    const auto a = to_csv(run_suite(grid, 77, 1));
    const auto b = to_csv(run_suite(grid, 77, 1));
    const auto c = to_csv(run_suite(grid, 77, 3));
    Outcome o{9, "validation report byte-identical across runs and worker counts", a == b && a == c, {}};
    o.details.push_back(fmt::format("report {} bytes; repeat identical: {}; workers 1 vs 3 identical: {}", a.size(),
                                    a == b ? "yes" : "no", a == c ? "yes" : "no"));
    return o;
}

}  // namespace

int main()
{
    using Fn = Outcome (*)();
    const Fn criteria[] = {moments_criterion,  power_criterion,   tightness_criterion,
                           low_snr_criterion,  training_criterion, users_criterion,
                           split_criterion,    saturation_criterion, determinism_criterion};
    int failed = 0, id = 0;
    for (auto fn : criteria) {
        Outcome o{++id, "", false, {}};
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.title = "aborted";
            o.details.push_back(fmt::format("exception: {}", e.what()));
        }
        std::cout << fmt::format("[{}] criterion {}: {}\n", o.pass ? "PASS" : "FAIL", o.id, o.title);
        for (const auto& d : o.details) std::cout << "       " << d << '\n';
        std::cout.flush();
        failed += !o.pass;
    }
    std::cout << fmt::format("{} of 9 criteria passed\n", 9 - failed);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
