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

#ifndef RSMA_EXPERIMENT_HPP
#define RSMA_EXPERIMENT_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "rsma/moments.hpp"
#include "rsma/montecarlo.hpp"
#include "rsma/params.hpp"
#include "rsma/rates.hpp"
#include "rsma/suite.hpp"

namespace rsma {

/// Rectangular table of preformatted cells.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const
    {
        std::string out;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
            out += '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
        return out;
    }

    std::string to_text() const
    {
        std::vector<std::size_t> width(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
        for (const auto& r : rows)
            for (std::size_t i = 0; i < r.size() && i < width.size(); ++i)
                width[i] = std::max(width[i], r[i].size());
        std::string out;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                out += fmt::format("{}{:<{}}", i ? "  " : "", cells[i], width[i]);
            out += '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
        return out;
    }
};

// ---------------------------------------------------------------------------
// Single-configuration reports
// ---------------------------------------------------------------------------

inline Table presets_table()
{
    Table t{{"scenario", "m", "b", "omega"}, {}};
    for (auto name : preset_names) {
        const auto sc = preset(name);
        t.rows.push_back({std::string(name), fmt::format("{}", sc.m), fmt::format("{}", sc.b),
                          fmt::format("{}", sc.omega)});
    }
    return t;
}

/// Closed-form moment table next to its Monte-Carlo estimate.
/// Columns: users, moment, closed_form, mc_value, mc_se, z.
inline Table moments_table(const SystemConfig& cfg, const McOptions& opt)
{
    const auto table = moment_table(cfg);
    const auto emp = estimate_moments(cfg, opt);
    Table t{{"users", "moment", "closed_form", "mc_value", "mc_se", "z"}, {}};
    auto row = [&](std::string users, const char* name, double cf, const McEstimate& est) {
        t.rows.push_back({std::move(users), name, fmt_num(cf), fmt_num(est.mean), fmt_num(est.std_err),
                          fmt_num(z_score(cf, est))});
    };
    const int K = cfg.n_users;
    for (int k = 0; k < K; ++k) {
        const auto u = fmt::format("{}", k + 1);
        const auto& el = table.element(k);
        row(u, "A", el.a, emp.a[k]);
        row(u, "B", el.b_hat, emp.b_hat[k]);
        row(u, "C", el.c, emp.c[k].re);
        row(u, "T3", third_moment_identity(cfg.scenarios[k]), emp.t3[k].re);
        row(u, "D", table.d(k), emp.d[k]);
    }
    for (int k = 0; k < K; ++k)
        for (int i = 0; i < K; ++i)
            if (i != k) row(fmt::format("{};{}", k + 1, i + 1), "E", table.e(k, i), emp.e(k, i));
    for (int i = 0; i < K; ++i)
        for (int k = 0; k < K; ++k)
            if (i != k) row(fmt::format("{};{}", i + 1, k + 1), "F", table.f(i, k), emp.f(i, k).re);
    for (int i = 0; i < K; ++i)
        for (int k = 0; k < K; ++k)
            for (int j = 0; j < K; ++j)
                if (i != k && k != j && i != j)
                    row(fmt::format("{};{};{}", i + 1, k + 1, j + 1), "G", table.g(i, k, j),
                        emp.g(i, k, j).re);
    return t;
}

/// Power normalisation factor and the Monte-Carlo power check.
/// Columns: quantity, closed_form, mc_mean, mc_se, z.
inline Table alpha_table(const SystemConfig& cfg, const McOptions& opt)
{
    Table t{{"quantity", "closed_form", "mc_mean", "mc_se", "z"}, {}};
    const double a = alpha(cfg);
    t.rows.push_back({"alpha", fmt_num(a), "", "", ""});
    if (opt.trials == 0) return t;
    const auto pc = power_check(cfg, opt);
    auto row = [&](const char* name, double cf, const McEstimate& est) {
        t.rows.push_back({name, fmt_num(cf), fmt_num(est.mean), fmt_num(est.std_err),
                          fmt_num(z_score(cf, est))});
    };
    row("power_total", pc.p_t, pc.total);
    row("term_common", pc.expected_common, pc.term_common);
    row("term_private", pc.expected_private, pc.term_private);
    return t;
}

/// Closed-form rates with Monte-Carlo estimates (omitted when trials is 0).
/// Columns: metric, user, closed_form, mc_mean, mc_se, rel_err. Eavesdropping
/// rows compare against log2(1 + mean gamma); secrecy rows against the
/// exact-definition estimate.
inline Table rates_table(const SystemConfig& cfg, const McOptions& opt)
{
    const auto cf = closed_form_rates(cfg);
    std::optional<McRateReport> mc;
    if (opt.trials > 0) mc = ergodic_rates(cfg, opt);
    Table t{{"metric", "user", "closed_form", "mc_mean", "mc_se", "rel_err"}, {}};
    auto row = [&](const char* metric, std::string user, double value, std::optional<McEstimate> est) {
        if (est)
            t.rows.push_back({metric, std::move(user), fmt_num(value), fmt_num(est->mean),
                              fmt_num(est->std_err), fmt_num(relative_error(value, est->mean))});
        else
            t.rows.push_back({metric, std::move(user), fmt_num(value), "", "", ""});
    };
    const int K = cfg.n_users;
    for (int k = 0; k < K; ++k)
        row("r_c", fmt::format("{}", k + 1), cf.r_c[k], mc ? std::optional(mc->r_c[k]) : std::nullopt);
    for (int k = 0; k < K; ++k)
        row("r_p", fmt::format("{}", k + 1), cf.r_p[k], mc ? std::optional(mc->r_p[k]) : std::nullopt);
    for (int i = 0; i < K; ++i)
        for (int k = 0; k < K; ++k) {
            if (i == k) continue;
            std::optional<McEstimate> est;
            if (mc) {
                const auto& g = mc->gamma_eav(i, k);
                est = McEstimate{mc->r_eav_jensen(i, k), g.std_err / ((1.0 + g.mean) * std::log(2.0)),
                                 g.n_trials, g.seed};
            }
            row("r_eav", fmt::format("{}->{}", i + 1, k + 1), cf.r_eav(i, k), est);
        }
    for (int k = 0; k < K; ++k)
        row("r_s", fmt::format("{}", k + 1), cf.r_s[k],
            mc ? std::optional(mc->r_s_exact[k]) : std::nullopt);
    row("r_sum", "all", cf.r_sum, mc ? std::optional(mc->r_sum) : std::nullopt);
    return t;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

enum class SweepVar { snr_db, rho, K, N, L };

inline SweepVar parse_sweep_var(std::string_view s)
{
    if (s == "snr_db") return SweepVar::snr_db;
    if (s == "rho") return SweepVar::rho;
    if (s == "K") return SweepVar::K;
    if (s == "N") return SweepVar::N;
    if (s == "L") return SweepVar::L;
    throw ConfigError(fmt::format("unknown sweep variable '{}' (snr_db, rho, K, N, L)", s));
}

inline const char* to_string(SweepVar v)
{
    switch (v) {
    case SweepVar::snr_db: return "snr_db";
    case SweepVar::rho: return "rho";
    case SweepVar::K: return "K";
    case SweepVar::N: return "N";
    case SweepVar::L: return "L";
    }
    return "?";
}

/// Default grids: 21 points on [0, 1] for rho, 5 dB steps on [-10, 40] for SNR.
inline std::vector<double> default_grid(SweepVar v)
{
    std::vector<double> g;
    if (v == SweepVar::rho)
        for (int i = 0; i <= 20; ++i) g.push_back(i / 20.0);
    else if (v == SweepVar::snr_db)
        for (int s = -10; s <= 40; s += 5) g.push_back(s);
    return g;
}

/// Parses "a,b,c" or "start:step:stop" (inclusive, tolerant to rounding).
inline std::vector<double> parse_grid(std::string_view text)
{
    if (text.find(':') != std::string_view::npos) {
        std::vector<double> parts;
        std::size_t pos = 0;
        for (;;) {
            const auto colon = text.find(':', pos);
            parts.push_back(detail::parse_number<double>(
                text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos),
                "grid"));
            if (colon == std::string_view::npos) break;
            pos = colon + 1;
        }
        if (parts.size() != 3 || !(parts[1] > 0.0))
            throw ConfigError("grid range must be start:step:stop with step > 0");
        std::vector<double> g;
        const auto n = static_cast<long>(std::floor((parts[2] - parts[0]) / parts[1] + 1e-9));
        for (long i = 0; i <= n; ++i) g.push_back(parts[0] + static_cast<double>(i) * parts[1]);
        return g;
    }
    return detail::parse_list(text, "grid");
}

struct SweepSpec {
    SweepVar variable = SweepVar::snr_db;
    std::vector<double> grid;
    RunConfig base;
    std::vector<std::string> outputs;  ///< empty: every column
};

struct SweepPoint {
    double x = 0.0;
    SystemConfig cfg;
    double alpha = 0.0;
    ClosedFormRates cf;
    std::optional<McRateReport> mc;
};

inline std::vector<std::string> sweep_columns(bool with_mc)
{
    std::vector<std::string> cols{"alpha", "r_c", "r_p", "r_eav", "r_s", "r_sum"};
    if (with_mc)
        for (const char* c : {"mc_r_c", "mc_r_c_se", "mc_r_p", "mc_r_p_se", "mc_r_s", "mc_r_s_se",
                              "mc_r_sum", "mc_r_sum_se"})
            cols.emplace_back(c);
    return cols;
}

inline void validate_sweep(const SweepSpec& spec)
{
    if (spec.grid.empty()) throw ConfigError("sweep grid is empty");
    if (!std::is_sorted(spec.grid.begin(), spec.grid.end()))
        throw ConfigError("sweep grid must be sorted ascending");
    const bool integral = spec.variable == SweepVar::K || spec.variable == SweepVar::N ||
                          spec.variable == SweepVar::L;
    if (integral)
        for (double x : spec.grid)
            if (x != std::floor(x) || x < 1.0)
                throw ConfigError(fmt::format("{} grid values must be positive integers", to_string(spec.variable)));
    const auto allowed = sweep_columns(true);
    for (const auto& o : spec.outputs)
        if (std::find(allowed.begin(), allowed.end(), o) == allowed.end())
            throw ConfigError(fmt::format("unknown sweep output '{}'", o));
}

/// The system configuration at one grid point.
inline SystemConfig sweep_point_config(const SweepSpec& spec, double x)
{
    RunConfig rc = spec.base;
    double snr = rc.snr_db.empty() ? 0.0 : rc.snr_db.front();
    switch (spec.variable) {
    case SweepVar::snr_db: snr = x; break;
    case SweepVar::rho: rc.rho = x; break;
    case SweepVar::K: rc.n_users = static_cast<int>(x); break;
    case SweepVar::N: rc.n_antennas = static_cast<int>(x); break;
    case SweepVar::L: rc.l_train = static_cast<int>(x); break;
    }
    auto cfg = rc.system(snr);
    auto rep = validate(cfg);
    if (!rep.ok()) throw ConfigError("invalid sweep point:\n" + rep.to_string());
    return cfg;
}

inline std::vector<SweepPoint> evaluate_sweep(const SweepSpec& spec, unsigned workers = 0)
{
    validate_sweep(spec);
    std::vector<SweepPoint> out;
    std::uint64_t index = 0;
    for (double x : spec.grid) {
        SweepPoint p;
        p.x = x;
        p.cfg = sweep_point_config(spec, x);
        p.alpha = alpha(p.cfg);
        p.cf = closed_form_rates(p.cfg);
        if (spec.base.trials > 0)
            p.mc = ergodic_rates(p.cfg, {spec.base.trials, detail::case_seed(spec.base.seed, index), workers});
        ++index;
        out.push_back(std::move(p));
    }
    return out;
}

inline double mean_of(const std::vector<double>& v)
{
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

/// Sweep CSV. r_c is the common rate of the weakest user, r_p and r_s are
/// averages over users, r_eav the largest eavesdropping rate.
inline Table sweep_table(const SweepSpec& spec, const std::vector<SweepPoint>& points)
{
    const bool with_mc = spec.base.trials > 0;
    auto cols = sweep_columns(with_mc);
    if (!spec.outputs.empty()) {
        std::vector<std::string> keep;
        for (const auto& c : cols)
            if (std::find(spec.outputs.begin(), spec.outputs.end(), c) != spec.outputs.end())
                keep.push_back(c);
        cols = keep;
    }
    Table t;
    t.header.push_back(to_string(spec.variable));
    t.header.insert(t.header.end(), cols.begin(), cols.end());
    for (const auto& p : points) {
        double r_eav_max = 0.0;
        for (double v : p.cf.r_eav.data()) r_eav_max = std::max(r_eav_max, v);
        auto value = [&](const std::string& c) -> double {
            if (c == "alpha") return p.alpha;
            if (c == "r_c") return *std::min_element(p.cf.r_c.begin(), p.cf.r_c.end());
            if (c == "r_p") return mean_of(p.cf.r_p);
            if (c == "r_eav") return r_eav_max;
            if (c == "r_s") return mean_of(p.cf.r_s);
            if (c == "r_sum") return p.cf.r_sum;
            const auto& mc = *p.mc;
            const auto weakest = std::min_element(
                mc.r_c.begin(), mc.r_c.end(), [](const auto& a, const auto& b) { return a.mean < b.mean; });
            if (c == "mc_r_c") return weakest->mean;
            if (c == "mc_r_c_se") return weakest->std_err;
            if (c == "mc_r_p") return mc.r_p_avg.mean;
            if (c == "mc_r_p_se") return mc.r_p_avg.std_err;
            if (c == "mc_r_s") return mc.r_s_avg.mean;
            if (c == "mc_r_s_se") return mc.r_s_avg.std_err;
            if (c == "mc_r_sum") return mc.r_sum.mean;
            return mc.r_sum.std_err;
        };
        std::vector<std::string> row{fmt_num(p.x)};
        for (const auto& c : cols) row.push_back(fmt_num(value(c)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace rsma

#endif  // RSMA_EXPERIMENT_HPP
