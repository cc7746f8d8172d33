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

// Level surfaces of coherence fields over the cube [-1, 1]^3 of correlation
// triples (c1, c2, c3): sampling, marching cubes, region statistics and
// Wavefront OBJ export.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "bellcoh/channels.hpp"
#include "bellcoh/errors.hpp"
#include "bellcoh/marching_cubes_tables.hpp"
#include "bellcoh/measures.hpp"
#include "bellcoh/parallel.hpp"
#include "bellcoh/states.hpp"

namespace bellcoh {

using Vec3 = std::array<double, 3>;

enum class RegionTag { Invalid, Separable, Entangled };

inline std::string_view to_string(RegionTag tag) {
    switch (tag) {
    case RegionTag::Invalid:
        return "Invalid";
    case RegionTag::Separable:
        return "Separable";
    case RegionTag::Entangled:
        return "Entangled";
    }
    return "?";
}

/// Invalid outside the state tetrahedron; Separable inside the octahedron
/// |c1| + |c2| + |c3| <= 1; Entangled otherwise.
inline RegionTag classify_point(const BellParams &p) {
    const auto in_range = [](double v) { return v >= -1.0 && v <= 1.0; };
    if (!in_range(p.c1) || !in_range(p.c2) || !in_range(p.c3) || !is_physical(p)) {
        return RegionTag::Invalid;
    }
    const double l1 = std::abs(p.c1) + std::abs(p.c2) + std::abs(p.c3);
    return l1 <= 1.0 + kTolPsd ? RegionTag::Separable : RegionTag::Entangled;
}

inline RegionTag classify_point(const Vec3 &v) { return classify_point(BellParams{v[0], v[1], v[2]}); }

/// Fixed local Bloch components (r, s) selecting a slice of X states.
struct Slice {
    double r = 0.0;
    double s = 0.0;
};

/// Product channel applied to every sample point before the measure is
/// evaluated.
struct ChannelPremap {
    ChannelKind kind;
    double p;
};

struct FieldSpec {
    MeasureKind measure = MeasureKind::RelativeEntropy;
    std::optional<Slice> slice;
    std::optional<ChannelPremap> channel;
};

/// Values on an N^3 lattice spanning [-1, 1]^3, c1 fastest. Unphysical nodes
/// hold NaN.
class ScalarGrid {
  public:
    static constexpr int kMinResolution = 8;

    ScalarGrid(int resolution, std::vector<double> values)
        : n_(resolution), values_(std::move(values)) {
        if (n_ < kMinResolution) {
            throw DomainError("grid resolution " + std::to_string(n_) + " below minimum " +
                              std::to_string(kMinResolution));
        }
        if (values_.size() != node_count(n_)) {
            throw DomainError("grid value count does not match resolution");
        }
    }

    static std::size_t node_count(int n) {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    }

    /// Samples f at every node; f returns NaN to mask a node.
    template <typename Fn> static ScalarGrid from_function(int n, Fn &&f, unsigned threads = 0) {
        if (n < kMinResolution) {
            throw DomainError("grid resolution " + std::to_string(n) + " below minimum " +
                              std::to_string(kMinResolution));
        }
        std::vector<double> values(node_count(n));
        const auto un = static_cast<std::size_t>(n);
        parallel_chunks(un, un, resolve_threads(threads), [&](std::size_t, std::size_t k0, std::size_t k1) {
            for (std::size_t k = k0; k < k1; ++k) {
                for (std::size_t j = 0; j < un; ++j) {
                    for (std::size_t i = 0; i < un; ++i) {
                        const Vec3 c{coordinate(n, static_cast<int>(i)), coordinate(n, static_cast<int>(j)),
                                     coordinate(n, static_cast<int>(k))};
                        values[(k * un + j) * un + i] = f(c);
                    }
                }
            }
        });
        return ScalarGrid(n, std::move(values));
    }

    /// Exactly antisymmetric: coordinate(n, n-1-i) == -coordinate(n, i).
    static double coordinate(int n, int i) {
        return static_cast<double>(2 * i - (n - 1)) / static_cast<double>(n - 1);
    }

    int resolution() const { return n_; }
    double spacing() const { return 2.0 / static_cast<double>(n_ - 1); }
    double coordinate(int i) const { return coordinate(n_, i); }

    std::size_t index(int i, int j, int k) const {
        const auto un = static_cast<std::size_t>(n_);
        return (static_cast<std::size_t>(k) * un + static_cast<std::size_t>(j)) * un +
               static_cast<std::size_t>(i);
    }
    double at(int i, int j, int k) const { return values_[index(i, j, k)]; }
    bool masked(int i, int j, int k) const { return std::isnan(at(i, j, k)); }
    const std::vector<double> &values() const { return values_; }

    /// Largest unmasked value, or NaN when every node is masked.
    double max_value() const {
        double best = std::numeric_limits<double>::quiet_NaN();
        for (const double v : values_) {
            if (!std::isnan(v) && !(v <= best)) {
                best = v;
            }
        }
        return best;
    }

  private:
    int n_;
    std::vector<double> values_;
};

/// Measure value at a correlation triple, NaN where the (sliced) state is
/// unphysical. Nodes on the PSD boundary count as physical.
inline double field_value(const FieldSpec &spec, const Vec3 &c) {
    if (spec.slice) {
        const XParams x{spec.slice->r, spec.slice->s, c[0], c[1], c[2]};
        if (!is_physical(x)) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return evaluate(spec.measure, x).value();
    }
    BellParams b{c[0], c[1], c[2]};
    if (!is_physical(b)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    if (spec.channel) {
        b = bell_param_map(spec.channel->kind, spec.channel->p, b);
    }
    return evaluate(spec.measure, XParams{0.0, 0.0, b.c1, b.c2, b.c3}).value();
}

inline void validate(const FieldSpec &spec) {
    if (spec.slice) {
        if (spec.measure == MeasureKind::Discord) {
            throw DomainError("discord is undefined off the Bell-diagonal slice");
        }
        if (spec.channel) {
            throw DomainError("channel maps apply to Bell-diagonal states only");
        }
        validate(XParams{spec.slice->r, spec.slice->s, 0.0, 0.0, 0.0});
    }
    if (spec.channel) {
        detail::require_probability(spec.channel->p);
    }
}

inline ScalarGrid sample_field(const FieldSpec &spec, int resolution, unsigned threads = 0) {
    validate(spec);
    return ScalarGrid::from_function(
        resolution, [&spec](const Vec3 &c) { return field_value(spec, c); }, threads);
}

inline ScalarGrid sample_field(MeasureKind measure, int resolution,
                               std::optional<Slice> slice = std::nullopt, unsigned threads = 0) {
    return sample_field(FieldSpec{measure, slice, std::nullopt}, resolution, threads);
}

struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<std::uint32_t, 3>> triangles;
    std::vector<RegionTag> tags; ///< one per vertex

    bool empty() const { return triangles.empty(); }
};

inline Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3 &a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

inline double triangle_area(const Vec3 &a, const Vec3 &b, const Vec3 &c) {
    return 0.5 * norm(cross(b - a, c - a));
}

inline Vec3 centroid(const Vec3 &a, const Vec3 &b, const Vec3 &c) {
    return {(a[0] + b[0] + c[0]) / 3.0, (a[1] + b[1] + c[1]) / 3.0, (a[2] + b[2] + c[2]) / 3.0};
}

/// Triangles at or below this area are dropped.
inline constexpr double kDegenerateArea = 1e-14;

namespace detail {

/// Builds a mesh from triangles given as opaque vertex keys, deduplicating
/// keys in first-seen order and dropping degenerate triangles. The result
/// depends only on the order of `keyed`.
template <typename PositionFn>
TriangleMesh assemble_mesh(const std::vector<std::array<std::uint64_t, 3>> &keyed, PositionFn &&position) {
    TriangleMesh mesh;
    std::unordered_map<std::uint64_t, std::uint32_t> ids;
    for (const auto &tri : keyed) {
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
            continue;
        }
        const Vec3 a = position(tri[0]);
        const Vec3 b = position(tri[1]);
        const Vec3 c = position(tri[2]);
        if (!(triangle_area(a, b, c) > kDegenerateArea)) {
            continue;
        }
        std::array<std::uint32_t, 3> out{};
        const std::array<Vec3, 3> pos{a, b, c};
        for (int v = 0; v < 3; ++v) {
            auto [it, inserted] = ids.try_emplace(tri[v], static_cast<std::uint32_t>(mesh.vertices.size()));
            if (inserted) {
                mesh.vertices.push_back(pos[v]);
                mesh.tags.push_back(classify_point(pos[v]));
            }
            out[v] = it->second;
        }
        mesh.triangles.push_back(out);
    }
    return mesh;
}

} // namespace detail

/// Marching cubes with linear interpolation along cell edges. Cells with any
/// masked corner emit nothing. Levels outside the open range of the field
/// give an empty mesh. Output is independent of `threads`.
inline TriangleMesh extract_isosurface(const ScalarGrid &grid, double level, unsigned threads = 0) {
    if (!std::isfinite(level)) {
        throw DomainError("iso level must be finite");
    }
    const int n = grid.resolution();
    const int cells = n - 1;
    const auto ucells = static_cast<std::size_t>(cells);

    // vertex key = 3 * (index of the lower lattice node of the edge) + axis
    auto edge_key = [&](int i, int j, int k, int corner_a, int corner_b) {
        const auto &oa = mc::kCornerOffset[corner_a];
        const auto &ob = mc::kCornerOffset[corner_b];
        int axis = 0;
        while (oa[axis] == ob[axis]) {
            ++axis;
        }
        const int lo[3] = {i + std::min(oa[0], ob[0]), j + std::min(oa[1], ob[1]), k + std::min(oa[2], ob[2])};
        return static_cast<std::uint64_t>(grid.index(lo[0], lo[1], lo[2])) * 3 + static_cast<std::uint64_t>(axis);
    };

    std::vector<std::vector<std::array<std::uint64_t, 3>>> slabs(ucells);
    parallel_chunks(ucells, ucells, resolve_threads(threads), [&](std::size_t, std::size_t k0, std::size_t k1) {
        for (std::size_t uk = k0; uk < k1; ++uk) {
            const int k = static_cast<int>(uk);
            auto &out = slabs[uk];
            for (int j = 0; j < cells; ++j) {
                for (int i = 0; i < cells; ++i) {
                    std::array<double, 8> v{};
                    bool skip = false;
                    int cube = 0;
                    for (int c = 0; c < 8; ++c) {
                        const auto &o = mc::kCornerOffset[c];
                        v[c] = grid.at(i + o[0], j + o[1], k + o[2]);
                        if (std::isnan(v[c])) {
                            skip = true;
                            break;
                        }
                        if (v[c] < level) {
                            cube |= 1 << c;
                        }
                    }
                    if (skip || mc::kEdgeTable[cube] == 0) {
                        continue;
                    }
                    const auto &row = mc::kTriTable[cube];
                    for (int t = 0; row[t] != -1; t += 3) {
                        std::array<std::uint64_t, 3> tri{};
                        for (int e = 0; e < 3; ++e) {
                            const auto &ec = mc::kEdgeCorners[row[t + e]];
                            tri[e] = edge_key(i, j, k, ec[0], ec[1]);
                        }
                        out.push_back(tri);
                    }
                }
            }
        }
    });

    std::vector<std::array<std::uint64_t, 3>> keyed;
    for (auto &slab : slabs) {
        keyed.insert(keyed.end(), slab.begin(), slab.end());
    }

    const auto un = static_cast<std::uint64_t>(n);
    auto position = [&](std::uint64_t key) -> Vec3 {
        const int axis = static_cast<int>(key % 3);
        const std::uint64_t node = key / 3;
        int idx[3] = {static_cast<int>(node % un), static_cast<int>((node / un) % un),
                      static_cast<int>(node / (un * un))};
        const double v0 = grid.at(idx[0], idx[1], idx[2]);
        int nxt[3] = {idx[0], idx[1], idx[2]};
        nxt[axis] += 1;
        const double v1 = grid.at(nxt[0], nxt[1], nxt[2]);
        const double dv = v1 - v0;
        const double t = dv != 0.0 ? std::clamp((level - v0) / dv, 0.0, 1.0) : 0.5;
        Vec3 p{grid.coordinate(idx[0]), grid.coordinate(idx[1]), grid.coordinate(idx[2])};
        p[axis] += t * (grid.coordinate(nxt[axis]) - grid.coordinate(idx[axis]));
        return p;
    };
    return detail::assemble_mesh(keyed, position);
}

/// Keeps the triangles whose centroid satisfies keep(centroid), dropping
/// vertices that are no longer referenced.
template <typename Pred> TriangleMesh filter_triangles(const TriangleMesh &mesh, Pred &&keep) {
    std::vector<std::array<std::uint64_t, 3>> keyed;
    for (const auto &t : mesh.triangles) {
        if (keep(centroid(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]))) {
            keyed.push_back({t[0], t[1], t[2]});
        }
    }
    return detail::assemble_mesh(keyed, [&](std::uint64_t id) { return mesh.vertices[id]; });
}

/// The part of a Bell-diagonal C_r surface on which discord equals C_r.
inline TriangleMesh restrict_to_discord_equality(const TriangleMesh &mesh) {
    return filter_triangles(mesh, [](const Vec3 &c) {
        const BellParams p{c[0], c[1], c[2]};
        return is_physical(p) && discord_equals_coherence(p);
    });
}

struct SurfaceStats {
    double total_area = 0.0;
    double entangled_area_fraction = 0.0;
    std::size_t vertex_count = 0;
    std::size_t triangle_count = 0;
};

/// Area totals; a triangle counts as entangled when its centroid does.
inline SurfaceStats surface_stats(const TriangleMesh &mesh) {
    SurfaceStats s;
    s.vertex_count = mesh.vertices.size();
    s.triangle_count = mesh.triangles.size();
    double entangled = 0.0;
    for (const auto &t : mesh.triangles) {
        const Vec3 &a = mesh.vertices[t[0]];
        const Vec3 &b = mesh.vertices[t[1]];
        const Vec3 &c = mesh.vertices[t[2]];
        const double area = triangle_area(a, b, c);
        s.total_area += area;
        if (classify_point(centroid(a, b, c)) == RegionTag::Entangled) {
            entangled += area;
        }
    }
    s.entangled_area_fraction = s.total_area > 0.0 ? entangled / s.total_area : 0.0;
    return s;
}

/// Mean of triangle centroids (unweighted); zero vector for an empty mesh.
inline Vec3 mean_centroid(const TriangleMesh &mesh) {
    Vec3 sum{0.0, 0.0, 0.0};
    for (const auto &t : mesh.triangles) {
        const Vec3 c = centroid(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]);
        for (int a = 0; a < 3; ++a) {
            sum[a] += c[a];
        }
    }
    if (!mesh.triangles.empty()) {
        for (auto &x : sum) {
            x /= static_cast<double>(mesh.triangles.size());
        }
    }
    return sum;
}

/// Recorded in the OBJ comment header.
struct ObjHeader {
    std::string measure;
    double level = 0.0;
    int resolution = 0;
    std::optional<Slice> slice;
    std::optional<ChannelPremap> channel;
};

/// Locale-independent decimal text with `digits` significant digits, or the
/// shortest round-trip form when digits == 0.
inline std::string format_number(double v, int digits = 0) {
    std::array<char, 64> buf{};
    const auto res = digits > 0 ? std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, digits)
                                : std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

inline void export_obj(const TriangleMesh &mesh, std::ostream &out, const ObjHeader &header) {
    out << "# bellcoh isosurface\n";
    out << "# measure " << header.measure << '\n';
    out << "# level " << format_number(header.level) << '\n';
    out << "# resolution " << header.resolution << '\n';
    if (header.slice) {
        out << "# slice r " << format_number(header.slice->r) << " s " << format_number(header.slice->s) << '\n';
    } else {
        out << "# slice none\n";
    }
    if (header.channel) {
        out << "# channel " << to_string(header.channel->kind) << " p " << format_number(header.channel->p)
            << '\n';
    }
    for (const auto &v : mesh.vertices) {
        out << "v " << format_number(v[0], 9) << ' ' << format_number(v[1], 9) << ' ' << format_number(v[2], 9)
            << '\n';
    }
    for (const auto &t : mesh.triangles) {
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    }
    if (!out) {
        throw std::runtime_error("failed to write OBJ output");
    }
}

inline void export_obj(const TriangleMesh &mesh, const std::string &path, const ObjHeader &header) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    export_obj(mesh, file, header);
}

/// Reads the "v" and "f" records written by export_obj. Tags are recomputed.
inline TriangleMesh parse_obj(std::istream &in) {
    TriangleMesh mesh;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string kind;
        fields >> kind;
        if (kind == "v") {
            Vec3 v{};
            std::string tok;
            for (auto &x : v) {
                fields >> tok;
                const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), x);
                if (res.ec != std::errc{}) {
                    throw DomainError("malformed OBJ vertex: " + line);
                }
            }
            mesh.vertices.push_back(v);
            mesh.tags.push_back(classify_point(v));
        } else if (kind == "f") {
            std::array<std::uint32_t, 3> t{};
            for (auto &idx : t) {
                long long one_based = 0;
                if (!(fields >> one_based) || one_based < 1) {
                    throw DomainError("malformed OBJ face: " + line);
                }
                idx = static_cast<std::uint32_t>(one_based - 1);
            }
            mesh.triangles.push_back(t);
        }
    }
    for (const auto &t : mesh.triangles) {
        for (const auto idx : t) {
            if (idx >= mesh.vertices.size()) {
                throw DomainError("OBJ face index out of range");
            }
        }
    }
    return mesh;
}

} // namespace bellcoh
