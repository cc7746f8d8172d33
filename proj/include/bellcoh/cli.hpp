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
#pragma once

// Subcommand implementations for the bellcoh command-line tool. Each takes a
// parsed RunConfig plus output/diagnostic streams and returns the exit code,
// so they can be driven directly from tests.

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bellcoh/channels.hpp"
#include "bellcoh/geometry.hpp"
#include "bellcoh/measures.hpp"
#include "bellcoh/states.hpp"
#include "bellcoh/verify.hpp"

namespace bellcoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidInput = 2;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    std::optional<double> r;
    std::optional<double> s;
    std::string measure = "rel-ent";
    double level = 0.1;
    int resolution = 64;
    std::string channel;
    std::optional<double> p;
    std::size_t steps = 101;
    std::string out;
    std::string stats_out;
    unsigned threads = 0;
    std::size_t samples = 10000;
    bool discord_equal = false;
    bool negative_control = false;
    int verbosity = 0;

    XParams state() const { return {r.value_or(0.0), s.value_or(0.0), c1, c2, c3}; }
    bool has_slice() const { return r.has_value() || s.has_value(); }
};

namespace detail {

struct LabeledEigenvalue {
    std::string label;
    double value;
};

inline std::vector<LabeledEigenvalue> labeled_eigenvalues(const XParams &x) {
    if (x.is_bell_diagonal()) {
        return {{"(1-c1-c2-c3)/4", (1.0 - x.c1 - x.c2 - x.c3) / 4.0},
                {"(1-c1+c2+c3)/4", (1.0 - x.c1 + x.c2 + x.c3) / 4.0},
                {"(1+c1-c2+c3)/4", (1.0 + x.c1 - x.c2 + x.c3) / 4.0},
                {"(1+c1+c2-c3)/4", (1.0 + x.c1 + x.c2 - x.c3) / 4.0}};
    }
    const double outer = std::hypot(x.r + x.s, x.c1 - x.c2);
    const double inner = std::hypot(x.r - x.s, x.c1 + x.c2);
    return {{"(1+c3+sqrt((r+s)^2+(c1-c2)^2))/4", (1.0 + x.c3 + outer) / 4.0},
            {"(1+c3-sqrt((r+s)^2+(c1-c2)^2))/4", (1.0 + x.c3 - outer) / 4.0},
            {"(1-c3+sqrt((r-s)^2+(c1+c2)^2))/4", (1.0 - x.c3 + inner) / 4.0},
            {"(1-c3-sqrt((r-s)^2+(c1+c2)^2))/4", (1.0 - x.c3 - inner) / 4.0}};
}

/// Range and positivity check; on failure writes a diagnostic and returns
/// false.
inline bool check_state(const XParams &x, std::ostream &err) {
    try {
        validate(x);
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return false;
    }
    if (is_physical(x)) {
        return true;
    }
    err << "error: state not positive semidefinite\n";
    for (const auto &ev : labeled_eigenvalues(x)) {
        if (ev.value < -kTolPsd) {
            err << "  eigenvalue " << ev.label << " = " << format_number(ev.value) << '\n';
        }
    }
    return false;
}

/// Writes to `path`, or to `fallback` when path is empty.
template <typename WriteFn> void emit(const std::string &path, std::ostream &fallback, WriteFn &&write) {
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    write(file);
    if (!file) {
        throw std::runtime_error("failed writing " + path);
    }
}

inline void write_json(std::ostream &out, const nlohmann::ordered_json &doc) { out << doc.dump(2) << '\n'; }

} // namespace detail

/// All measures of one state as a JSON document.
inline int cmd_measure(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const XParams x = cfg.state();
    if (!detail::check_state(x, err)) {
        return kExitInvalidInput;
    }
    const DensityMatrix rho = x_density(x);
    const Spectrum spec = x_spectrum(x);

    nlohmann::ordered_json doc;
    doc["input"] = {{"c1", x.c1}, {"c2", x.c2}, {"c3", x.c3}, {"r", x.r}, {"s", x.s}};
    doc["state"] = x.is_bell_diagonal() ? "bell-diagonal" : "x";
    doc["eigenvalues"] = spec.values;
    doc["l1"] = l1_coherence(rho).value();
    doc["trace_norm"] = trace_norm_coherence_x(rho).value();
    doc["relative_entropy"] = evaluate(MeasureKind::RelativeEntropy, x).value();
    if (x.is_bell_diagonal()) {
        const BellParams b = x.correlations();
        doc["discord"] = discord_bell(b).value();
        doc["discord_equals_coherence"] = discord_equals_coherence(b);
        doc["region"] = std::string(to_string(classify_point(b)));
    }
    detail::emit(cfg.out, out, [&](std::ostream &o) { detail::write_json(o, doc); });
    return kExitOk;
}

/// Resolves the surface flags into a field description; throws UsageError on
/// inconsistent combinations.
inline FieldSpec surface_field_spec(const RunConfig &cfg) {
    FieldSpec spec;
    const auto measure = parse_measure(cfg.measure);
    if (!measure) {
        throw UsageError("unknown measure '" + cfg.measure + "' (expected l1, trace, rel-ent, discord)");
    }
    spec.measure = *measure;
    if (!(cfg.level > 0.0 && cfg.level <= 1.0)) {
        throw UsageError("--level must lie in (0, 1]");
    }
    if (cfg.resolution < ScalarGrid::kMinResolution) {
        throw UsageError("--resolution must be at least " + std::to_string(ScalarGrid::kMinResolution));
    }
    if (cfg.has_slice()) {
        if (spec.measure == MeasureKind::Discord) {
            throw UsageError("discord is only defined for Bell-diagonal states; drop --r/--s");
        }
        const double r = cfg.r.value_or(0.0);
        const double s = cfg.s.value_or(0.0);
        if (!(std::abs(r) <= 1.0 && std::abs(s) <= 1.0)) {
            throw UsageError("--r and --s must lie in [-1, 1]");
        }
        spec.slice = Slice{r, s};
    }
    if (!cfg.channel.empty()) {
        const auto kind = parse_channel(cfg.channel);
        if (!kind) {
            throw UsageError("unknown channel '" + cfg.channel + "' (expected bf, pf, bpf, gad)");
        }
        if (!cfg.p) {
            throw UsageError("--channel requires --p");
        }
        if (!(*cfg.p >= 0.0 && *cfg.p <= 1.0)) {
            throw UsageError("--p must lie in [0, 1]");
        }
        if (spec.slice) {
            throw UsageError("--channel applies to Bell-diagonal states only; drop --r/--s");
        }
        spec.channel = ChannelPremap{*kind, *cfg.p};
    } else if (cfg.p) {
        throw UsageError("--p requires --channel");
    }
    if (cfg.discord_equal && (spec.slice || spec.measure == MeasureKind::L1 || spec.measure == MeasureKind::TraceNorm)) {
        throw UsageError("--discord-equal needs --measure rel-ent or discord on Bell-diagonal states");
    }
    return spec;
}

inline nlohmann::ordered_json stats_document(const SurfaceStats &stats, const RunConfig &cfg, const FieldSpec &spec) {
    nlohmann::ordered_json doc;
    doc["total_area"] = stats.total_area;
    doc["entangled_area_fraction"] = stats.entangled_area_fraction;
    doc["vertex_count"] = stats.vertex_count;
    doc["triangle_count"] = stats.triangle_count;
    doc["measure"] = std::string(to_string(spec.measure));
    doc["level"] = cfg.level;
    doc["resolution"] = cfg.resolution;
    doc["r"] = spec.slice ? spec.slice->r : 0.0;
    doc["s"] = spec.slice ? spec.slice->s : 0.0;
    if (spec.channel) {
        doc["channel"] = std::string(to_string(spec.channel->kind));
        doc["p"] = spec.channel->p;
    }
    if (cfg.discord_equal) {
        doc["discord_equal"] = true;
    }
    return doc;
}

/// Level surface to OBJ plus statistics JSON.
inline int cmd_surface(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    FieldSpec spec;
    try {
        spec = surface_field_spec(cfg);
        if (cfg.out.empty()) {
            throw UsageError("surface requires --out <mesh.obj>");
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    if (cfg.level < 2.0 / cfg.resolution) {
        err << "warning: level " << format_number(cfg.level) << " is below 2/N = "
            << format_number(2.0 / cfg.resolution) << "; the surface is poorly resolved, consider --resolution "
            << static_cast<int>(std::ceil(2.0 / cfg.level)) + 1 << " or higher\n";
    }

    const ScalarGrid grid = sample_field(spec, cfg.resolution, cfg.threads);
    TriangleMesh mesh = extract_isosurface(grid, cfg.level, cfg.threads);
    if (cfg.discord_equal) {
        mesh = restrict_to_discord_equality(mesh);
    }

    ObjHeader header{std::string(to_string(spec.measure)), cfg.level, cfg.resolution, spec.slice, spec.channel};
    export_obj(mesh, cfg.out, header);
    const auto doc = stats_document(surface_stats(mesh), cfg, spec);
    detail::emit(cfg.stats_out, out, [&](std::ostream &o) { detail::write_json(o, doc); });
    if (cfg.verbosity > 0) {
        err << "wrote " << mesh.triangles.size() << " triangles to " << cfg.out << '\n';
    }
    return kExitOk;
}

/// C_r versus p for the requested channels, as CSV.
inline int cmd_dynamics(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.has_slice()) {
        err << "error: dynamics is defined for Bell-diagonal states only\n";
        return kExitInvalidInput;
    }
    const XParams x = cfg.state();
    if (!detail::check_state(x, err)) {
        return kExitInvalidInput;
    }
    std::vector<ChannelKind> kinds;
    if (cfg.channel.empty() || cfg.channel == "all") {
        kinds.assign(kAllChannels.begin(), kAllChannels.end());
    } else if (const auto kind = parse_channel(cfg.channel)) {
        kinds.push_back(*kind);
    } else {
        err << "error: unknown channel '" << cfg.channel << "' (expected bf, pf, bpf, gad, all)\n";
        return kExitInvalidInput;
    }
    if (cfg.steps < 2) {
        err << "error: --steps must be at least 2\n";
        return kExitInvalidInput;
    }

    const auto grid = uniform_p_grid(cfg.steps);
    std::vector<std::vector<TrajectoryPoint>> columns;
    for (const auto kind : kinds) {
        columns.push_back(dynamics_trajectory(x.correlations(), kind, grid));
    }

    detail::emit(cfg.out, out, [&](std::ostream &o) {
        o << 'p';
        for (const auto kind : kinds) {
            o << ",C_" << to_string(kind);
        }
        o << '\n';
        for (std::size_t i = 0; i < grid.size(); ++i) {
            o << format_number(grid[i]);
            for (const auto &col : columns) {
                o << ',' << format_number(col[i].coherence);
            }
            o << '\n';
        }
    });
    return kExitOk;
}

/// Runs the oracle suites; exit 1 names every failing suite.
inline int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    VerifyOptions opts;
    opts.samples = cfg.samples;
    opts.negative_control = cfg.negative_control;
    const auto results = run_verification(opts);

    bool ok = true;
    for (const auto &r : results) {
        out << r.name << " max_dev=" << format_number(r.max_dev, 6) << (r.passed() ? " <= " : " > ")
            << "tol=" << format_number(r.tol) << " cases=" << r.cases << (r.passed() ? " PASS" : " FAIL") << '\n';
        if (!r.passed()) {
            err << "verification failed: " << r.name << '\n';
            ok = false;
        }
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

inline int dispatch(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        if (cfg.subcommand == "measure") {
            return cmd_measure(cfg, out, err);
        }
        if (cfg.subcommand == "surface") {
            return cmd_surface(cfg, out, err);
        }
        if (cfg.subcommand == "dynamics") {
            return cmd_dynamics(cfg, out, err);
        }
        if (cfg.subcommand == "verify") {
            return cmd_verify(cfg, out, err);
        }
        err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
        return kExitInvalidInput;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}

} // namespace bellcoh::cli
