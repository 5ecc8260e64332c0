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

#ifndef RSMA_PARAMS_HPP
#define RSMA_PARAMS_HPP

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <fmt/format.h>

namespace rsma {

/// Shadowed-Rician element statistics. The LOS amplitude is Nakagami(m, omega);
/// the scatter is zero-mean complex Gaussian with variance b per real dimension.
struct ScenarioParams {
    double m = 1.0;
    double b = 0.0;
    double omega = 0.0;

    friend bool operator==(const ScenarioParams&, const ScenarioParams&) = default;
};

inline constexpr std::array<std::string_view, 3> preset_names{"FHS", "ORs", "AS"};

/// Named land-mobile-satellite shadowing scenarios (frequent heavy shadowing,
/// overall results, average shadowing).
inline ScenarioParams preset(std::string_view name)
{
    if (name == "FHS") return {0.739, 0.063, 8.97e-4};
    if (name == "ORs") return {5.21, 0.251, 0.278};
    if (name == "AS") return {10.1, 0.126, 0.835};
    throw std::invalid_argument(
        fmt::format("unknown scenario '{}'; valid names: FHS, ORs, AS", name));
}

/// Downlink configuration. Per-user vectors all have length n_users.
struct SystemConfig {
    int n_antennas = 1;
    int n_users = 1;
    double rho = 0.0;
    double p_t = 1.0;
    std::vector<double> sigma2;
    std::vector<double> sigma_e2;
    std::vector<ScenarioParams> scenarios;

    double rho_bar() const { return 1.0 - rho; }

    /// All users share one scenario, one noise power and one CSI error variance.
    static SystemConfig symmetric(const ScenarioParams& sc, int n_antennas, int n_users,
                                  double rho, double p_t, double sigma2 = 1.0,
                                  double sigma_e2 = 0.0)
    {
        SystemConfig cfg;
        cfg.n_antennas = n_antennas;
        cfg.n_users = n_users;
        cfg.rho = rho;
        cfg.p_t = p_t;
        const auto k = static_cast<std::size_t>(n_users > 0 ? n_users : 0);
        cfg.sigma2.assign(k, sigma2);
        cfg.sigma_e2.assign(k, sigma_e2);
        cfg.scenarios.assign(k, sc);
        return cfg;
    }
};

struct SnrSpec {
    double snr_db = 0.0;
    int l_train = 1;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Scales transmit power and CSI quality with SNR: P_t = SNR * sigma^2 and
/// sigma_e^2 = 1 / (SNR * L). The reference noise power is the mean of the
/// per-user noise powers (1 under the usual normalisation).
inline SystemConfig apply_snr(SystemConfig cfg, const SnrSpec& spec)
{
    if (!std::isfinite(spec.snr_db)) throw std::invalid_argument("snr_db must be finite");
    if (spec.l_train < 1) throw std::invalid_argument("l_train must be >= 1");
    const double snr = db_to_linear(spec.snr_db);
    double noise_ref = 1.0;
    if (!cfg.sigma2.empty()) {
        double acc = 0.0;
        for (double s : cfg.sigma2) acc += s;
        noise_ref = acc / static_cast<double>(cfg.sigma2.size());
    }
    cfg.p_t = snr * noise_ref;
    const double err = 1.0 / (snr * static_cast<double>(spec.l_train));
    for (double& e : cfg.sigma_e2) e = err;
    return cfg;
}

struct Violation {
    std::string field;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    std::string to_string() const
    {
        std::string out;
        for (const auto& v : violations) out += fmt::format("{}: {}\n", v.field, v.message);
        return out;
    }
};

inline void validate_scenario(const ScenarioParams& sc, const std::string& path,
                              std::vector<Violation>& out)
{
    if (!(sc.m > 0.0) || !std::isfinite(sc.m))
        out.push_back({path + ".m", fmt::format("m must be > 0 (got {})", sc.m)});
    if (!(sc.b >= 0.0) || !std::isfinite(sc.b))
        out.push_back({path + ".b", fmt::format("b must be >= 0 (got {})", sc.b)});
    if (!(sc.omega >= 0.0) || !std::isfinite(sc.omega))
        out.push_back({path + ".omega", fmt::format("omega must be >= 0 (got {})", sc.omega)});
    if (sc.b == 0.0 && sc.omega == 0.0)
        out.push_back({path, "at least one of b, omega must be > 0"});
}

inline ValidationReport validate(const SystemConfig& cfg)
{
    ValidationReport rep;
    auto& v = rep.violations;
    if (cfg.n_antennas < 1)
        v.push_back({"n_antennas", fmt::format("N must be >= 1 (got {})", cfg.n_antennas)});
    if (cfg.n_users < 1)
        v.push_back({"n_users", fmt::format("K must be >= 1 (got {})", cfg.n_users)});
    if (!(cfg.rho >= 0.0 && cfg.rho <= 1.0))
        v.push_back({"rho", fmt::format("rho outside [0,1] (got {})", cfg.rho)});
    if (!(cfg.p_t > 0.0) || !std::isfinite(cfg.p_t))
        v.push_back({"p_t", fmt::format("p_t must be > 0 (got {})", cfg.p_t)});

    const auto k = static_cast<std::size_t>(cfg.n_users > 0 ? cfg.n_users : 0);
    auto check_len = [&](std::size_t len, const char* name) {
        if (len != k)
            v.push_back({name, fmt::format("{} length {} != K ({})", name, len, cfg.n_users)});
    };
    check_len(cfg.sigma2.size(), "sigma2");
    check_len(cfg.sigma_e2.size(), "sigma_e2");
    check_len(cfg.scenarios.size(), "scenarios");

    for (std::size_t i = 0; i < cfg.sigma2.size(); ++i)
        if (!(cfg.sigma2[i] > 0.0) || !std::isfinite(cfg.sigma2[i]))
            v.push_back({fmt::format("sigma2[{}]", i), "noise power must be > 0"});
    for (std::size_t i = 0; i < cfg.sigma_e2.size(); ++i)
        if (!(cfg.sigma_e2[i] >= 0.0) || !std::isfinite(cfg.sigma_e2[i]))
            v.push_back({fmt::format("sigma_e2[{}]", i), "CSI error variance must be >= 0"});
    for (std::size_t i = 0; i < cfg.scenarios.size(); ++i)
        validate_scenario(cfg.scenarios[i], fmt::format("scenarios[{}]", i), v);
    return rep;
}

inline void require_valid(const SystemConfig& cfg)
{
    auto rep = validate(cfg);
    if (!rep.ok()) throw std::invalid_argument("invalid SystemConfig:\n" + rep.to_string());
}

// ---------------------------------------------------------------------------
// Run configuration file
//
// Line-oriented `key = value` text; `#` starts a comment. Keys:
//   scenario   FHS | ORs | AS | custom   (custom requires m, b, omega)
//   m, b, omega                          explicit scenario triple (overrides)
//   N, K, rho, L, trials, seed, sigma2
//   snr_db     scalar or comma separated grid
// ---------------------------------------------------------------------------

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string scenario_name = "AS";
    ScenarioParams scenario = preset("AS");
    int n_antennas = 8;
    int n_users = 2;
    double rho = 0.5;
    std::vector<double> snr_db{0.0};
    int l_train = 10;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    double sigma2 = 1.0;

    /// Symmetric SystemConfig at the given SNR point.
    SystemConfig system(double snr) const
    {
        auto cfg = SystemConfig::symmetric(scenario, n_antennas, n_users, rho, 1.0, sigma2);
        return apply_snr(std::move(cfg), {snr, l_train});
    }
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view text, std::string_view key)
{
    text = trim(text);
    T value{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError(fmt::format("invalid value '{}' for key '{}'", text, key));
    return value;
}

inline std::vector<double> parse_list(std::string_view text, std::string_view key)
{
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto item =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        out.push_back(parse_number<double>(item, key));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

/// Applies one `key = value` assignment. Used by the file parser and for CLI overrides.
inline void set_run_value(RunConfig& rc, std::string_view key, std::string_view value)
{
    using detail::parse_number;
    value = detail::trim(value);
    if (key == "scenario") {
        if (value == "custom") {
            rc.scenario_name = "custom";
            return;
        }
        try {
            rc.scenario = preset(value);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        rc.scenario_name = std::string(value);
    } else if (key == "m") {
        rc.scenario.m = parse_number<double>(value, key);
        rc.scenario_name = "custom";
    } else if (key == "b") {
        rc.scenario.b = parse_number<double>(value, key);
        rc.scenario_name = "custom";
    } else if (key == "omega") {
        rc.scenario.omega = parse_number<double>(value, key);
        rc.scenario_name = "custom";
    } else if (key == "N") {
        rc.n_antennas = parse_number<int>(value, key);
    } else if (key == "K") {
        rc.n_users = parse_number<int>(value, key);
    } else if (key == "rho") {
        rc.rho = parse_number<double>(value, key);
    } else if (key == "snr_db") {
        rc.snr_db = detail::parse_list(value, key);
    } else if (key == "L") {
        rc.l_train = parse_number<int>(value, key);
    } else if (key == "trials") {
        rc.trials = parse_number<std::uint64_t>(value, key);
    } else if (key == "seed") {
        rc.seed = parse_number<std::uint64_t>(value, key);
    } else if (key == "sigma2") {
        rc.sigma2 = parse_number<double>(value, key);
    } else {
        throw ConfigError(fmt::format("unknown config key '{}'", key));
    }
}

inline RunConfig parse_run_config(std::istream& in, RunConfig rc = {})
{
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        if (const auto hash = sv.find('#'); hash != std::string_view::npos) sv = sv.substr(0, hash);
        sv = detail::trim(sv);
        if (sv.empty()) continue;
        const auto eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(fmt::format("line {}: expected key = value", lineno));
        set_run_value(rc, detail::trim(sv.substr(0, eq)), sv.substr(eq + 1));
    }
    return rc;
}

inline RunConfig parse_run_config(std::string_view text, RunConfig rc = {})
{
    std::istringstream in{std::string(text)};
    return parse_run_config(in, std::move(rc));
}

/// Writes a config that parses back to an identical RunConfig (shortest
/// round-trip formatting keeps doubles bit-exact).
inline std::string serialize(const RunConfig& rc)
{
    std::string out;
    if (rc.scenario_name == "custom") {
        out += fmt::format("scenario = custom\nm = {}\nb = {}\nomega = {}\n", rc.scenario.m,
                           rc.scenario.b, rc.scenario.omega);
    } else {
        out += fmt::format("scenario = {}\n", rc.scenario_name);
    }
    out += fmt::format("N = {}\nK = {}\nrho = {}\n", rc.n_antennas, rc.n_users, rc.rho);
    out += "snr_db = ";
    for (std::size_t i = 0; i < rc.snr_db.size(); ++i)
        out += fmt::format("{}{}", i ? "," : "", rc.snr_db[i]);
    out += fmt::format("\nL = {}\ntrials = {}\nseed = {}\nsigma2 = {}\n", rc.l_train, rc.trials,
                       rc.seed, rc.sigma2);
    return out;
}

}  // namespace rsma

#endif  // RSMA_PARAMS_HPP
