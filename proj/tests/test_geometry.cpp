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
#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "bellcoh/geometry.hpp"

using namespace bellcoh;

namespace {

double l1_field(const Vec3 &c) { return std::max(std::abs(c[0]), std::abs(c[1])); }

std::string obj_text(const TriangleMesh &mesh, const ObjHeader &header = {"test", 0.5, 8, std::nullopt, std::nullopt}) {
    std::ostringstream out;
    export_obj(mesh, out, header);
    return out.str();
}

// Every vertex has a partner within `tol` in the image of the mesh under `map`.
template <typename Map> bool point_set_invariant(const TriangleMesh &mesh, Map &&map, double tol) {
    const double q = 1e-6;
    auto key = [q](const Vec3 &v) {
        return std::array<long long, 3>{std::llround(v[0] / q), std::llround(v[1] / q), std::llround(v[2] / q)};
    };
    std::map<std::array<long long, 3>, std::vector<Vec3>> buckets;
    for (const auto &v : mesh.vertices) {
        buckets[key(v)].push_back(v);
    }
    for (const auto &v : mesh.vertices) {
        const Vec3 m = map(v);
        const auto k = key(m);
        bool found = false;
        for (long long dx = -1; dx <= 1 && !found; ++dx) {
            for (long long dy = -1; dy <= 1 && !found; ++dy) {
                for (long long dz = -1; dz <= 1 && !found; ++dz) {
                    const auto it = buckets.find({k[0] + dx, k[1] + dy, k[2] + dz});
                    if (it == buckets.end()) {
                        continue;
                    }
                    for (const auto &w : it->second) {
                        found = found || norm(w - m) <= tol;
                    }
                }
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST(ClassifyPoint, Examples) {
    EXPECT_EQ(classify_point(BellParams{0, 0, 0}), RegionTag::Separable);
    EXPECT_EQ(classify_point(BellParams{1, -1, 1}), RegionTag::Entangled);
    EXPECT_EQ(classify_point(BellParams{0.9, 0.9, 0}), RegionTag::Invalid);
    EXPECT_EQ(classify_point(BellParams{1, 0, 0}), RegionTag::Separable); // octahedron vertex
    EXPECT_EQ(classify_point(BellParams{1.5, 0, 0}), RegionTag::Invalid);
}

TEST(ScalarGrid, CoordinatesSpanCubeAntisymmetrically) {
    for (int n : {8, 16, 17, 64}) {
        EXPECT_EQ(ScalarGrid::coordinate(n, 0), -1.0);
        EXPECT_EQ(ScalarGrid::coordinate(n, n - 1), 1.0);
        for (int i = 0; i < n; ++i) {
            EXPECT_EQ(ScalarGrid::coordinate(n, n - 1 - i), -ScalarGrid::coordinate(n, i));
        }
    }
}

TEST(ScalarGrid, RejectsMalformed) {
    EXPECT_THROW(ScalarGrid(7, std::vector<double>(343)), DomainError);
    EXPECT_THROW(ScalarGrid(8, std::vector<double>(100)), DomainError);
    EXPECT_THROW(sample_field(MeasureKind::L1, 4), DomainError);
}

TEST(SampleField, L1VanishesAtCentre) {
    // odd resolution puts a node at the origin
    const ScalarGrid g = sample_field(MeasureKind::L1, 17);
    EXPECT_EQ(g.at(8, 8, 8), 0.0);
}

TEST(SampleField, RelativeEntropyAtBellVertexNode) {
    const ScalarGrid g = sample_field(MeasureKind::RelativeEntropy, 16);
    EXPECT_LE(g.at(15, 0, 15), 1.0 + 1e-12);
    EXPECT_NEAR(g.at(15, 0, 15), 1.0, 1e-12);
    for (const double v : g.values()) {
        if (!std::isnan(v)) {
            EXPECT_LE(v, 1.0 + 1e-12);
        }
    }
}

TEST(SampleField, SliceMasksUnphysicalNodes) {
    const ScalarGrid g = sample_field(MeasureKind::RelativeEntropy, 16, Slice{0.5, 0.5});
    int masked = 0;
    for (int k = 0; k < 16; ++k) {
        for (int j = 0; j < 16; ++j) {
            for (int i = 0; i < 16; ++i) {
                const XParams x{0.5, 0.5, g.coordinate(i), g.coordinate(j), g.coordinate(k)};
                EXPECT_EQ(g.masked(i, j, k), !is_physical(x));
                masked += g.masked(i, j, k);
            }
        }
    }
    EXPECT_GT(masked, 0);
}

TEST(SampleField, DiscordWithSliceIsRejected) {
    EXPECT_THROW(sample_field(MeasureKind::Discord, 16, Slice{0.1, 0.1}), DomainError);
    FieldSpec spec{MeasureKind::RelativeEntropy, Slice{0.1, 0.1}, ChannelPremap{ChannelKind::BitFlip, 0.5}};
    EXPECT_THROW(sample_field(spec, 16), DomainError);
}

TEST(SampleField, ChannelPremapEvaluatesMappedState) {
    FieldSpec spec{MeasureKind::RelativeEntropy, std::nullopt, ChannelPremap{ChannelKind::PhaseFlip, 0.5}};
    const ScalarGrid g = sample_field(spec, 16);
    const BellParams c{g.coordinate(9), g.coordinate(5), g.coordinate(7)};
    const BellParams mapped = bell_param_map(ChannelKind::PhaseFlip, 0.5, c);
    EXPECT_EQ(g.at(9, 5, 7), relative_entropy_coherence(mapped).value());
}

TEST(SampleField, IndependentOfThreadCount) {
    const ScalarGrid a = sample_field(MeasureKind::RelativeEntropy, 24, std::nullopt, 1);
    const ScalarGrid b = sample_field(MeasureKind::RelativeEntropy, 24, std::nullopt, 7);
    ASSERT_EQ(a.values().size(), b.values().size());
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        const double x = a.values()[i];
        const double y = b.values()[i];
        EXPECT_TRUE((std::isnan(x) && std::isnan(y)) || x == y);
    }
}

TEST(ExtractIsosurface, SphereOracle) {
    const ScalarGrid g = ScalarGrid::from_function(32, [](const Vec3 &c) { return norm(c); });
    const TriangleMesh mesh = extract_isosurface(g, 0.5);
    ASSERT_GT(mesh.triangles.size(), 100u);
    for (const auto &v : mesh.vertices) {
        EXPECT_NEAR(norm(v), 0.5, 0.02);
    }
    // area of the sphere, 4 pi r^2 = pi
    EXPECT_NEAR(surface_stats(mesh).total_area, M_PI, 0.05);
}

TEST(ExtractIsosurface, SphereIsClosed) {
    const ScalarGrid g = ScalarGrid::from_function(20, [](const Vec3 &c) { return norm(c); });
    const TriangleMesh mesh = extract_isosurface(g, 0.6);
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> edges;
    for (const auto &t : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            const auto a = t[k];
            const auto b = t[(k + 1) % 3];
            ++edges[{std::min(a, b), std::max(a, b)}];
        }
    }
    for (const auto &[e, count] : edges) {
        EXPECT_EQ(count, 2);
    }
}

TEST(ExtractIsosurface, L1TubeAroundC3Axis) {
    const ScalarGrid g = sample_field(MeasureKind::L1, 65);
    const TriangleMesh mesh = extract_isosurface(g, 0.001);
    ASSERT_FALSE(mesh.empty());
    for (const auto &v : mesh.vertices) {
        EXPECT_NEAR(l1_field(v), 0.001, 1e-9);
    }
    const SurfaceStats s = surface_stats(mesh);
    // the tube hugs the c3 axis, where every physical point is separable
    EXPECT_EQ(s.entangled_area_fraction, 0.0);

    const TriangleMesh high = extract_isosurface(g, 0.6);
    ASSERT_FALSE(high.empty());
    EXPECT_GT(surface_stats(high).entangled_area_fraction, s.entangled_area_fraction);
}

TEST(ExtractIsosurface, L1FidelityAndContainment) {
    const ScalarGrid g = sample_field(MeasureKind::L1, 64);
    const TriangleMesh mesh = extract_isosurface(g, 0.5);
    ASSERT_FALSE(mesh.empty());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        EXPECT_LE(std::abs(l1_field(mesh.vertices[i]) - 0.5), 0.01);
        EXPECT_NE(mesh.tags[i], RegionTag::Invalid);
    }
}

TEST(ExtractIsosurface, LevelOutsideRangeGivesEmptyMesh) {
    const ScalarGrid g = sample_field(MeasureKind::L1, 16);
    EXPECT_TRUE(extract_isosurface(g, 1.2).empty());
    EXPECT_TRUE(extract_isosurface(g, -0.5).empty());
    EXPECT_THROW(extract_isosurface(g, std::nan("")), DomainError);
}

TEST(ExtractIsosurface, MaskedCellsEmitNothing) {
    const ScalarGrid g = sample_field(MeasureKind::RelativeEntropy, 32);
    const TriangleMesh mesh = extract_isosurface(g, 0.2);
    ASSERT_FALSE(mesh.empty());
    for (const auto &v : mesh.vertices) {
        EXPECT_TRUE(is_physical(BellParams{v[0], v[1], v[2]}, 1e-9));
    }
    for (const auto &t : mesh.triangles) {
        EXPECT_GT(triangle_area(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]), kDegenerateArea);
        for (const auto idx : t) {
            EXPECT_LT(idx, mesh.vertices.size());
        }
    }
}

TEST(ExtractIsosurface, MirrorSymmetryOfBellMeshes) {
    const auto mirror = [](const Vec3 &v) { return Vec3{-v[0], -v[1], v[2]}; };
    for (const auto measure : {MeasureKind::L1, MeasureKind::RelativeEntropy}) {
        const TriangleMesh mesh = extract_isosurface(sample_field(measure, 40), 0.3);
        ASSERT_FALSE(mesh.empty());
        EXPECT_TRUE(point_set_invariant(mesh, mirror, 1e-9)) << to_string(measure);
    }
}

TEST(ExtractIsosurface, IndependentOfThreadCount) {
    const ScalarGrid g = sample_field(MeasureKind::RelativeEntropy, 40);
    EXPECT_EQ(obj_text(extract_isosurface(g, 0.2, 1)), obj_text(extract_isosurface(g, 0.2, 8)));
}

TEST(SurfaceStats, EmptyAndSingleTriangle) {
    const SurfaceStats empty = surface_stats(TriangleMesh{});
    EXPECT_EQ(empty.total_area, 0.0);
    EXPECT_EQ(empty.entangled_area_fraction, 0.0);
    EXPECT_EQ(empty.vertex_count, 0u);
    EXPECT_EQ(empty.triangle_count, 0u);

    TriangleMesh tri;
    tri.vertices = {{0.9, -0.9, 0.9}, {1.0, -1.0, 0.9}, {0.9, -1.0, 1.0}};
    tri.triangles = {{0, 1, 2}};
    const SurfaceStats s = surface_stats(tri);
    EXPECT_NEAR(s.total_area, 0.5 * std::sqrt(3.0) * 0.01, 1e-15);
    EXPECT_EQ(s.entangled_area_fraction, 1.0);
}

TEST(RestrictToDiscordEquality, KeepsOnlyEqualityRegion) {
    const TriangleMesh full = extract_isosurface(sample_field(MeasureKind::RelativeEntropy, 48), 0.05);
    const TriangleMesh part = restrict_to_discord_equality(full);
    ASSERT_FALSE(part.empty());
    EXPECT_LT(part.triangles.size(), full.triangles.size());
    for (const auto &t : part.triangles) {
        const Vec3 c = centroid(part.vertices[t[0]], part.vertices[t[1]], part.vertices[t[2]]);
        EXPECT_TRUE(discord_equals_coherence({c[0], c[1], c[2]}));
    }
}

TEST(ExportObj, EmptyMeshHasHeaderOnly) {
    const std::string text = obj_text(TriangleMesh{});
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        EXPECT_EQ(line[0], '#');
    }
    EXPECT_NE(text.find("# measure test"), std::string::npos);
    EXPECT_NE(text.find("# resolution 8"), std::string::npos);
}

TEST(ExportObj, SingleTriangleFormat) {
    TriangleMesh tri;
    tri.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    tri.triangles = {{0, 1, 2}};
    const std::string text = obj_text(tri, {"l1", 0.5, 64, Slice{0.5, 0.25}, std::nullopt});
    EXPECT_EQ(text, "# bellcoh isosurface\n# measure l1\n# level 0.5\n# resolution 64\n# slice r 0.5 s 0.25\n"
                    "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n");
}

TEST(ExportObj, RoundTripWithinNineDigits) {
    const TriangleMesh mesh = extract_isosurface(sample_field(MeasureKind::RelativeEntropy, 32), 0.3);
    std::istringstream in(obj_text(mesh));
    const TriangleMesh back = parse_obj(in);
    ASSERT_EQ(back.vertices.size(), mesh.vertices.size());
    ASSERT_EQ(back.triangles, mesh.triangles);
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        EXPECT_LE(norm(back.vertices[i] - mesh.vertices[i]), 1e-9);
    }
}

TEST(ExportObj, UnwritablePathThrows) {
    EXPECT_THROW(export_obj(TriangleMesh{}, "/nonexistent-dir/x.obj", ObjHeader{}), std::runtime_error);
}

TEST(FormatNumber, LocaleIndependentShortest) {
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(-0.125, 9), "-0.125");
    EXPECT_EQ(format_number(1.0 / 3.0, 9), "0.333333333");
}
