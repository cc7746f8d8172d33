// Copyright 2026 The bellcoh Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <CLI11.hpp>

#include <iostream>

#include "bellcoh/cli.hpp"

namespace {

void add_state_options(CLI::App &cmd, bellcoh::cli::RunConfig &cfg, bool with_slice) {
    cmd.add_option("--c1", cfg.c1, "correlation <sigma1 (x) sigma1>")->capture_default_str();
    cmd.add_option("--c2", cfg.c2, "correlation <sigma2 (x) sigma2>")->capture_default_str();
    cmd.add_option("--c3", cfg.c3, "correlation <sigma3 (x) sigma3>")->capture_default_str();
    if (with_slice) {
        cmd.add_option("--r", cfg.r, "z Bloch component of qubit A (X states)");
        cmd.add_option("--s", cfg.s, "z Bloch component of qubit B (X states)");
    }
}

} // namespace

int main(int argc, char **argv) {
    using bellcoh::cli::RunConfig;
    RunConfig cfg;

    CLI::App app{"Coherence, discord and level-surface geometry of two-qubit Bell-diagonal and X states"};
    app.require_subcommand(1);
    app.add_option("--threads", cfg.threads, "worker threads (0 = hardware concurrency)");
    app.add_flag("-v,--verbose", cfg.verbosity, "more diagnostics on stderr");

    auto *measure = app.add_subcommand("measure", "coherence measures and discord of one state (JSON)");
    add_state_options(*measure, cfg, true);
    measure->add_option("--out", cfg.out, "output path (default stdout)");

    auto *surface = app.add_subcommand("surface", "constant-measure level surface as OBJ, stats as JSON");
    surface->add_option("--measure", cfg.measure, "l1, trace, rel-ent or discord")->capture_default_str();
    surface->add_option("--level", cfg.level, "iso level in (0, 1]")->capture_default_str();
    surface->add_option("--resolution", cfg.resolution, "grid points per axis")->capture_default_str();
    surface->add_option("--r", cfg.r, "X-state slice: z Bloch component of qubit A");
    surface->add_option("--s", cfg.s, "X-state slice: z Bloch component of qubit B");
    surface->add_option("--channel", cfg.channel, "map states through bf, pf, bpf or gad before measuring");
    surface->add_option("--p", cfg.p, "channel strength in [0, 1]");
    surface->add_flag("--discord-equal", cfg.discord_equal,
                      "keep only the part of the surface where discord equals C_r");
    surface->add_option("--out", cfg.out, "OBJ mesh path")->required();
    surface->add_option("--stats-out", cfg.stats_out, "stats JSON path (default stdout)");

    auto *dynamics = app.add_subcommand("dynamics", "C_r versus channel strength p (CSV)");
    add_state_options(*dynamics, cfg, false);
    dynamics->add_option("--channel", cfg.channel, "bf, pf, bpf, gad or all")->default_str("all");
    dynamics->add_option("--steps", cfg.steps, "number of p values on [0, 1]")->capture_default_str();
    dynamics->add_option("--out", cfg.out, "CSV path (default stdout)");

    auto *verify = app.add_subcommand("verify", "cross-check closed forms against numeric oracles");
    verify->add_option("--samples", cfg.samples, "random states per suite")->capture_default_str();
    verify->add_flag("--negative-control", cfg.negative_control,
                     "substitute a sign-flipped closed form; the run must fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : bellcoh::cli::kExitInvalidInput;
    }

    for (const auto *sub : app.get_subcommands()) {
        cfg.subcommand = sub->get_name();
    }
    try {
        return bellcoh::cli::dispatch(cfg, std::cout, std::cerr);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return bellcoh::cli::kExitInvalidInput;
    }
}
