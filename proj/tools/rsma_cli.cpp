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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "rsma/experiment.hpp"
#include "rsma/suite.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation_failed = 1;
constexpr int exit_config_error = 2;

struct CliOptions {
    std::string config_path;
    std::optional<std::string> scenario, n, k, rho, snr_db, l_train, trials, seed, sigma2;
    std::string var = "snr_db";
    std::string grid;
    std::string outputs;
    std::string out_path;
    std::string format = "csv";
    unsigned workers = 0;
};

void add_common(CLI::App* cmd, CliOptions& o)
{
    cmd->add_option("--config", o.config_path, "key = value config file");
    cmd->add_option("--scenario", o.scenario, "FHS | ORs | AS");
    cmd->add_option("--N", o.n, "satellite antennas");
    cmd->add_option("--K", o.k, "users");
    cmd->add_option("--rho", o.rho, "common-stream power fraction in [0,1]");
    cmd->add_option("--snr-db", o.snr_db, "SNR in dB (P_t / sigma^2)");
    cmd->add_option("--L", o.l_train, "training symbols; sigma_e^2 = 1/(SNR L)");
    cmd->add_option("--trials", o.trials, "Monte-Carlo trials (0 disables MC where optional)");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--sigma2", o.sigma2, "noise power");
    cmd->add_option("--workers", o.workers, "worker threads (0 = hardware)");
    cmd->add_option("--out", o.out_path, "write output to PATH instead of stdout");
    cmd->add_option("--format", o.format, "csv | text")->check(CLI::IsMember({"csv", "text"}));
}

rsma::RunConfig load_run_config(const CliOptions& o)
{
    rsma::RunConfig rc;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw rsma::ConfigError(fmt::format("cannot open config '{}'", o.config_path));
        rc = rsma::parse_run_config(in);
    }
    auto apply = [&](const char* key, const std::optional<std::string>& v) {
        if (v) rsma::set_run_value(rc, key, *v);
    };
    apply("scenario", o.scenario);
    apply("N", o.n);
    apply("K", o.k);
    apply("rho", o.rho);
    apply("snr_db", o.snr_db);
    apply("L", o.l_train);
    apply("trials", o.trials);
    apply("seed", o.seed);
    apply("sigma2", o.sigma2);
    return rc;
}

rsma::SystemConfig single_config(const rsma::RunConfig& rc)
{
    auto cfg = rc.system(rc.snr_db.empty() ? 0.0 : rc.snr_db.front());
    const auto rep = rsma::validate(cfg);
    if (!rep.ok()) throw rsma::ConfigError("invalid configuration:\n" + rep.to_string());
    return cfg;
}

void emit(const CliOptions& o, const std::string& text)
{
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out) throw rsma::ConfigError(fmt::format("cannot write '{}'", o.out_path));
    out << text;
}

void emit(const CliOptions& o, const rsma::Table& t)
{
    emit(o, o.format == "text" ? t.to_text() : t.to_csv());
}

std::vector<std::string> split_csv(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

constexpr const char* help_footer = R"(CSV columns
  presets   scenario,m,b,omega
  moments   users,moment,closed_form,mc_value,mc_se,z
  alpha     quantity,closed_form,mc_mean,mc_se,z
  rates     metric,user,closed_form,mc_mean,mc_se,rel_err
  sweep     <var>,alpha,r_c,r_p,r_eav,r_s,r_sum[,mc_r_c,mc_r_c_se,mc_r_p,mc_r_p_se,
            mc_r_s,mc_r_s_se,mc_r_sum,mc_r_sum_se]
  validate  check,closed_form,mc_mean,std_err,z,rel_err,verdict,note
Exit codes: 0 success, 1 validation failure, 2 configuration error.)";

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Closed-form and Monte-Carlo analysis of secure RSMA over shadowed-Rician LMS channels"};
    app.footer(help_footer);
    app.require_subcommand(1);

    CliOptions o;
    auto* presets = app.add_subcommand("presets", "list the shadowing scenario presets");
    auto* moments = app.add_subcommand("moments", "channel moment table with Monte-Carlo check");
    auto* alpha = app.add_subcommand("alpha", "power normalisation factor and power check");
    auto* rates = app.add_subcommand("rates", "closed-form and Monte-Carlo ergodic rates");
    auto* sweep = app.add_subcommand("sweep", "sweep one variable over a grid");
    auto* validate = app.add_subcommand("validate", "run the closed-form vs Monte-Carlo suite");
    for (auto* cmd : {presets, moments, alpha, rates, sweep, validate}) add_common(cmd, o);
    sweep->add_option("--var", o.var, "snr_db | rho | K | N | L");
    sweep->add_option("--grid", o.grid, "a,b,c or start:step:stop (default per variable)");
    sweep->add_option("--outputs", o.outputs, "comma separated subset of output columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config_error;
    }

    try {
        if (presets->parsed()) {
            emit(o, rsma::presets_table());
            return exit_ok;
        }
        const auto rc = load_run_config(o);
        const rsma::McOptions mc{rc.trials, rc.seed, o.workers};

        if (moments->parsed()) {
            emit(o, rsma::moments_table(single_config(rc), mc));
        } else if (alpha->parsed()) {
            emit(o, rsma::alpha_table(single_config(rc), mc));
        } else if (rates->parsed()) {
            emit(o, rsma::rates_table(single_config(rc), mc));
        } else if (sweep->parsed()) {
            rsma::SweepSpec spec;
            spec.variable = rsma::parse_sweep_var(o.var);
            spec.grid = o.grid.empty() ? rsma::default_grid(spec.variable) : rsma::parse_grid(o.grid);
            spec.base = rc;
            spec.outputs = split_csv(o.outputs);
            const auto points = rsma::evaluate_sweep(spec, o.workers);
            emit(o, rsma::sweep_table(spec, points));
        } else if (validate->parsed()) {
            const auto report =
                rsma::run_suite(rsma::default_suite_grid(rc.trials), rc.seed, o.workers);
            emit(o, o.format == "text" ? rsma::to_text(report) : rsma::to_csv(report));
            if (!report.passed()) {
                std::cerr << report.failures() << " check(s) failed\n";
                return exit_validation_failed;
            }
        }
    } catch (const rsma::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config_error;
    }
    return exit_ok;
}
