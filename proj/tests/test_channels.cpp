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

#include <random>

#include "bellcoh/channels.hpp"
#include "bellcoh/sampling.hpp"

using namespace bellcoh;

namespace {

constexpr double kCrHalfC1 = 0.188721875540867; // numpy, bell (0.5, 0, 0) and (-0.5, 0, 0)

void expect_params_near(const BellParams &got, const BellParams &want, double tol) {
    EXPECT_NEAR(got.c1, want.c1, tol);
    EXPECT_NEAR(got.c2, want.c2, tol);
    EXPECT_NEAR(got.c3, want.c3, tol);
}

} // namespace

TEST(KrausOps, BitFlipAtZeroIsIdentity) {
    const KrausSet ops = kraus_ops(ChannelKind::BitFlip, 0.0);
    ASSERT_EQ(ops.size(), 2u);
    EXPECT_EQ(ops[0], Matrix2::identity());
    EXPECT_EQ(max_abs(ops[1]), 0.0);
}

TEST(KrausOps, PhaseFlipRow) {
    const double p = 0.3;
    const KrausSet ops = kraus_ops(ChannelKind::PhaseFlip, p);
    ASSERT_EQ(ops.size(), 2u);
    EXPECT_LT(max_abs(ops[0] - Complex(std::sqrt(1 - p / 2)) * pauli::identity), 1e-16);
    EXPECT_LT(max_abs(ops[1] - Complex(std::sqrt(p / 2)) * pauli::z), 1e-16);
}

TEST(KrausOps, GeneralizedAmplitudeDampingRowAtHalfMixing) {
    const double g = 0.36;
    const KrausSet ops = kraus_ops(ChannelKind::GeneralizedAmplitudeDamping, g);
    ASSERT_EQ(ops.size(), 4u);
    const double m = std::sqrt(0.5);
    EXPECT_NEAR(ops[0](0, 0).real(), m, 1e-16);
    EXPECT_NEAR(ops[0](1, 1).real(), m * 0.8, 1e-16);
    EXPECT_NEAR(ops[1](0, 1).real(), m * 0.6, 1e-16);
    EXPECT_NEAR(ops[2](0, 0).real(), m * 0.8, 1e-16);
    EXPECT_NEAR(ops[2](1, 1).real(), m, 1e-16);
    EXPECT_NEAR(ops[3](1, 0).real(), m * 0.6, 1e-16);
}

TEST(KrausOps, CompleteOnGrid) {
    for (const auto kind : kAllChannels) {
        for (const double p : uniform_p_grid(101)) {
            EXPECT_LE(max_abs(completeness(kraus_ops(kind, p)) - Matrix2::identity()), 1e-12)
                << to_string(kind) << " p=" << p;
        }
    }
}

TEST(KrausOps, RejectsOutOfRange) {
    EXPECT_THROW(kraus_ops(ChannelKind::BitFlip, -0.01), DomainError);
    EXPECT_THROW(kraus_ops(ChannelKind::GeneralizedAmplitudeDamping, 1.01), DomainError);
}

TEST(ApplyProductChannel, ZeroStrengthIsIdentity) {
    std::mt19937_64 rng(1);
    for (const auto kind : kAllChannels) {
        const DensityMatrix rho = x_density(random_physical_x(rng));
        EXPECT_LE(max_abs(apply_product_channel(rho, kind, 0.0).matrix() - rho.matrix()), 1e-14);
    }
}

TEST(ApplyProductChannel, BitFlipHalfOnTableExample) {
    // (0.6, 0.4, 0.2) is outside the state tetrahedron, so only the raw
    // linear map accepts it
    const DensityMatrix in = bell_density({0.6, 0.4, 0.2});
    EXPECT_THROW(apply_product_channel(in, ChannelKind::BitFlip, 0.5), DomainError);
    const Matrix4 out = apply_kraus_product(in.matrix(), kraus_ops(ChannelKind::BitFlip, 0.5));
    EXPECT_LE(max_abs(out - bell_density({0.6, 0.1, 0.05}).matrix()), 1e-15);
    expect_params_near(correlations_of(DensityMatrix{out}), {0.6, 0.1, 0.05}, 1e-12);

    const DensityMatrix phys = apply_product_channel(bell_density({0.4, 0.2, 0.2}), ChannelKind::BitFlip, 0.5);
    EXPECT_LE(max_abs(phys.matrix() - bell_density({0.4, 0.05, 0.05}).matrix()), 1e-15);
}

TEST(ApplyProductChannel, FullPhaseFlipDephases) {
    const BellParams c{-0.1, 0.4, 0.4};
    const DensityMatrix out = apply_product_channel(bell_density(c), ChannelKind::PhaseFlip, 1.0);
    EXPECT_LE(max_abs(out.matrix() - bell_density({0, 0, 0.4}).matrix()), 1e-15);
}

TEST(ApplyProductChannel, OutputIsPhysical) {
    std::mt19937_64 rng(2);
    for (int n = 0; n < 200; ++n) {
        const DensityMatrix rho = x_density(random_physical_x(rng));
        for (const auto kind : kAllChannels) {
            for (const double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
                const DensityMatrix out = apply_product_channel(rho, kind, p);
                EXPECT_NEAR(trace(out.matrix()).real(), 1.0, 1e-12);
                EXPECT_TRUE(is_physical(out));
            }
        }
    }
}

TEST(BellParamMap, Examples) {
    expect_params_near(bell_param_map(ChannelKind::GeneralizedAmplitudeDamping, 0.5, {0.8, 0.4, 0.4}), {0.4, 0.2, 0.1},
                       1e-16);
    expect_params_near(bell_param_map(ChannelKind::BitPhaseFlip, 1.0, {0.3, -0.2, 0.1}), {0.0, -0.2, 0.0}, 0.0);
    EXPECT_EQ(bell_param_map(ChannelKind::PhaseFlip, 0.0, {0.3, -0.2, 0.1}), (BellParams{0.3, -0.2, 0.1}));
    EXPECT_THROW(bell_param_map(ChannelKind::PhaseFlip, 1.5, {0, 0, 0}), DomainError);
}

TEST(BellParamMap, MatchesKrausRoute) {
    std::mt19937_64 rng(3);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const BellParams c = random_physical_bell(rng);
        const DensityMatrix rho = bell_density(c);
        for (const auto kind : kAllChannels) {
            for (const double p : uniform_p_grid(101)) {
                const BellParams closed = bell_param_map(kind, p, c);
                const DensityMatrix out = apply_product_channel(rho, kind, p);
                const BellParams numeric = correlations_of(out);
                worst = std::max({worst, std::abs(closed.c1 - numeric.c1), std::abs(closed.c2 - numeric.c2),
                                  std::abs(closed.c3 - numeric.c3)});
                // stays Bell-diagonal
                EXPECT_LE(max_abs(out.matrix() - bell_density(closed).matrix()), 1e-12);
            }
        }
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(DynamicsTrajectory, Endpoints) {
    const auto grid = uniform_p_grid();
    EXPECT_EQ(dynamics_trajectory({-0.1, 0.4, 0.4}, ChannelKind::PhaseFlip, grid).back().coherence, 0.0);
    EXPECT_EQ(dynamics_trajectory({-0.1, 0.4, 0.4}, ChannelKind::GeneralizedAmplitudeDamping, grid).back().coherence,
              0.0);
    const auto bf = dynamics_trajectory({-0.5, 0.1, 0.1}, ChannelKind::BitFlip, grid);
    EXPECT_EQ(bf.size(), 101u);
    EXPECT_EQ(bf.back().p, 1.0);
    EXPECT_NEAR(bf.back().coherence, kCrHalfC1, 1e-12);
    const auto bpf = dynamics_trajectory({-0.5, 0.1, 0.1}, ChannelKind::BitPhaseFlip, grid);
    EXPECT_NEAR(bpf.back().coherence, relative_entropy_coherence(BellParams{0, 0.1, 0}).value(), 1e-15);
}

TEST(DynamicsTrajectory, RejectsBadInput) {
    const std::vector<double> decreasing{0.5, 0.4};
    EXPECT_THROW(dynamics_trajectory({0, 0, 0}, ChannelKind::BitFlip, decreasing), DomainError);
    const std::vector<double> outside{0.5, 1.5};
    EXPECT_THROW(dynamics_trajectory({0, 0, 0}, ChannelKind::BitFlip, outside), DomainError);
    EXPECT_THROW(dynamics_trajectory({0.9, 0.9, 0}, ChannelKind::BitFlip, uniform_p_grid()), DomainError);
}

TEST(DynamicsTrajectory, NonIncreasingForRandomStates) {
    std::mt19937_64 rng(4);
    const auto grid = uniform_p_grid();
    double worst_rise = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const BellParams c = random_physical_bell(rng);
        for (const auto kind : kAllChannels) {
            const auto traj = dynamics_trajectory(c, kind, grid);
            for (std::size_t i = 1; i < traj.size(); ++i) {
                worst_rise = std::max(worst_rise, traj[i].coherence - traj[i - 1].coherence);
            }
            const double end = traj.back().coherence;
            switch (kind) {
            case ChannelKind::BitFlip:
                EXPECT_NEAR(end, relative_entropy_coherence(BellParams{c.c1, 0, 0}).value(), 1e-15);
                break;
            case ChannelKind::BitPhaseFlip:
                EXPECT_NEAR(end, relative_entropy_coherence(BellParams{0, c.c2, 0}).value(), 1e-15);
                break;
            default:
                EXPECT_EQ(end, 0.0);
            }
        }
    }
    EXPECT_LE(worst_rise, 1e-9);
}

TEST(ChannelKind, NamesRoundTrip) {
    for (const auto kind : kAllChannels) {
        EXPECT_EQ(parse_channel(to_string(kind)), kind);
    }
    EXPECT_FALSE(parse_channel("all").has_value());
}
