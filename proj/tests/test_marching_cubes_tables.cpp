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

#include "bellcoh/marching_cubes_tables.hpp"

using namespace bellcoh::mc;

TEST(MarchingCubesTables, EdgeMaskIsExactlyTheSignChangingEdges) {
    for (int cube = 0; cube < 256; ++cube) {
        unsigned expected = 0;
        for (int e = 0; e < 12; ++e) {
            const bool a = (cube >> kEdgeCorners[e][0]) & 1;
            const bool b = (cube >> kEdgeCorners[e][1]) & 1;
            if (a != b) {
                expected |= 1u << e;
            }
        }
        EXPECT_EQ(kEdgeTable[cube], expected) << "case " << cube;
    }
}

TEST(MarchingCubesTables, TrianglesUseOnlyCrossedEdgesAndCoverThem) {
    for (int cube = 0; cube < 256; ++cube) {
        const auto &row = kTriTable[cube];
        int t = 0;
        unsigned used = 0;
        while (t < 16 && row[t] != -1) {
            ASSERT_GE(row[t], 0);
            ASSERT_LT(row[t], 12);
            EXPECT_TRUE(kEdgeTable[cube] & (1u << row[t])) << "case " << cube;
            used |= 1u << row[t];
            ++t;
        }
        EXPECT_EQ(t % 3, 0) << "case " << cube;
        EXPECT_LE(t, 15);
        EXPECT_EQ(used, kEdgeTable[cube]) << "case " << cube;
    }
}

TEST(MarchingCubesTables, EdgeCornersAreUnitSteps) {
    for (const auto &e : kEdgeCorners) {
        int diff = 0;
        for (int a = 0; a < 3; ++a) {
            diff += std::abs(kCornerOffset[e[0]][a] - kCornerOffset[e[1]][a]);
        }
        EXPECT_EQ(diff, 1);
    }
}

// Every edge of the triangulated patch inside one cell is either shared by
// two triangles or lies on a cell face, so patches close up across cells.
TEST(MarchingCubesTables, InteriorSegmentsArePaired) {
    auto on_common_face = [](int e1, int e2) {
        for (int axis = 0; axis < 3; ++axis) {
            for (int side = 0; side < 2; ++side) {
                bool all = true;
                for (int e : {e1, e2}) {
                    for (int c : kEdgeCorners[e]) {
                        all = all && kCornerOffset[c][axis] == side;
                    }
                }
                if (all) {
                    return true;
                }
            }
        }
        return false;
    };
    for (int cube = 0; cube < 256; ++cube) {
        int count[12][12] = {};
        const auto &row = kTriTable[cube];
        for (int t = 0; row[t] != -1; t += 3) {
            for (int k = 0; k < 3; ++k) {
                const int a = row[t + k];
                const int b = row[t + (k + 1) % 3];
                ++count[std::min(a, b)][std::max(a, b)];
            }
        }
        for (int a = 0; a < 12; ++a) {
            for (int b = a + 1; b < 12; ++b) {
                if (count[a][b] == 0) {
                    continue;
                }
                EXPECT_TRUE(count[a][b] == 2 || (count[a][b] == 1 && on_common_face(a, b)))
                    << "case " << cube << " segment " << a << "-" << b;
            }
        }
    }
}
