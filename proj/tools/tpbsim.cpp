// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The tpbsim Authors
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

// Command-line front end. Exit codes: 0 success, 1 configuration error,
// 2 at least one row failed to solve, 3 I/O error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tpb/config.hpp"
#include "tpb/errors.hpp"
#include "tpb/recipes.hpp"
#include "tpb/sweep.hpp"

namespace {

enum Exit { kOk = 0, kConfig = 1, kSolver = 2, kIo = 3 };

struct Options {
    std::string config;
    std::string out;
    std::vector<std::string> sets;
    int workers = 0;
};

using Runner = tpb::cli::RunOutput (*)(tpb::Config&, int);

int run(const std::string& name, const Options& o, Runner fn) {
    tpb::Config cfg;
    int workers = 1;
    try {
        cfg = o.config.empty() ? tpb::Config{} : tpb::Config::load(o.config);
        for (const auto& s : o.sets) cfg.set(s);
        workers = o.workers > 0 ? o.workers : tpb::default_workers();
    } catch (const tpb::IoError& e) {
        std::cerr << "tpbsim " << name << ": " << e.what() << '\n';
        return kIo;
    } catch (const tpb::Error& e) {
        std::cerr << "tpbsim " << name << ": " << e.what() << '\n';
        return kConfig;
    }

    tpb::cli::RunOutput result;
    try {
        result = fn(cfg, workers);
    } catch (const tpb::ConfigError& e) {
        std::cerr << "tpbsim " << name << ": config error: " << e.what() << '\n';
        return kConfig;
    } catch (const tpb::InvalidParameter& e) {
        std::cerr << "tpbsim " << name << ": config error: " << e.what() << '\n';
        return kConfig;
    } catch (const tpb::IoError& e) {
        std::cerr << "tpbsim " << name << ": " << e.what() << '\n';
        return kIo;
    }

    for (const auto& m : result.messages) std::cerr << "tpbsim " << name << ": warning: " << m << '\n';
    try {
        if (o.out.empty() || o.out == "-")
            result.table.write(std::cout);
        else
            result.table.write_file(o.out);
    } catch (const tpb::IoError& e) {
        std::cerr << "tpbsim " << name << ": " << e.what() << '\n';
        return kIo;
    }
    if (result.failed_rows > 0) {
        std::cerr << "tpbsim " << name << ": " << result.failed_rows
                  << " row(s) failed; see the status column\n";
        return kSolver;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon blockade simulator: steady states, correlations and coupling estimates"};
    app.set_version_flag("--version", std::string("tpbsim ") + tpb::cli::version());
    app.require_subcommand(1);

    struct Cmd {
        const char* name;
        const char* help;
        Runner fn;
    };
    const Cmd cmds[] = {
        {"sweep", "grid sweep over up to two parameters", tpb::cli::run_sweep},
        {"compare", "TPB / CPB / UPB brightness and g2 versus kappa/J", tpb::cli::run_compare},
        {"g2tau", "delayed second-order correlation traces", tpb::cli::run_g2tau},
        {"thermal", "g2(0) versus thermal occupation and crossing points", tpb::cli::run_thermal},
        {"circuit", "three-body and residual couplings versus flux", tpb::cli::run_circuit},
    };

    std::vector<Options> opts(std::size(cmds));
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < std::size(cmds); ++i) {
        CLI::App* s = app.add_subcommand(cmds[i].name, cmds[i].help);
        s->add_option("--config", opts[i].config, "configuration file (key = value)");
        s->add_option("--out", opts[i].out, "output CSV path ('-' or omitted: stdout)");
        s->add_option("--set", opts[i].sets, "override a configuration key, k=v (repeatable)")
            ->take_all()
            ->allow_extra_args(false);
        s->add_option("--workers", opts[i].workers, "worker threads (default: TPBSIM_WORKERS or 1)")
            ->check(CLI::Range(1, 1024));
        subs.push_back(s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i]->parsed()) return run(cmds[i].name, opts[i], cmds[i].fn);
    return kConfig;
}
