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

// Single-qubit decoherence channels applied identically to both qubits,
// and their closed-form action on the Bell correlation triple.

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bellcoh/errors.hpp"
#include "bellcoh/measures.hpp"
#include "bellcoh/states.hpp"

namespace bellcoh {

enum class ChannelKind { BitFlip, PhaseFlip, BitPhaseFlip, GeneralizedAmplitudeDamping };

/// Table order; also the CSV column order of dynamics output.
inline constexpr std::array<ChannelKind, 4> kAllChannels{
    ChannelKind::BitFlip, ChannelKind::PhaseFlip, ChannelKind::BitPhaseFlip,
    ChannelKind::GeneralizedAmplitudeDamping};

inline std::string_view to_string(ChannelKind kind) {
    switch (kind) {
    case ChannelKind::BitFlip:
        return "bf";
    case ChannelKind::PhaseFlip:
        return "pf";
    case ChannelKind::BitPhaseFlip:
        return "bpf";
    case ChannelKind::GeneralizedAmplitudeDamping:
        return "gad";
    }
    return "?";
}

inline std::optional<ChannelKind> parse_channel(std::string_view name) {
    for (auto kind : kAllChannels) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

using KrausSet = std::vector<Matrix2>;

namespace detail {
inline void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("channel parameter p = " + std::to_string(p) + " outside [0, 1]");
    }
}
} // namespace detail

/// Kraus operators of a single-qubit channel. GAD uses mixing probability 1/2
/// with damping strength p, the only setting that keeps Bell-diagonal states
/// Bell-diagonal.
inline KrausSet kraus_ops(ChannelKind kind, double p) {
    detail::require_probability(p);
    const double keep = std::sqrt(1.0 - p / 2.0);
    const double flip = std::sqrt(p / 2.0);
    switch (kind) {
    case ChannelKind::BitFlip:
        return {keep * pauli::identity, flip * pauli::x};
    case ChannelKind::PhaseFlip:
        return {keep * pauli::identity, flip * pauli::z};
    case ChannelKind::BitPhaseFlip:
        return {keep * pauli::identity, flip * pauli::y};
    case ChannelKind::GeneralizedAmplitudeDamping: {
        const double mix = std::sqrt(0.5);
        const double gamma = p;
        Matrix2 e0, e1, e2, e3;
        e0(0, 0) = mix;
        e0(1, 1) = mix * std::sqrt(1.0 - gamma);
        e1(0, 1) = mix * std::sqrt(gamma);
        e2(0, 0) = mix * std::sqrt(1.0 - gamma);
        e2(1, 1) = mix;
        e3(1, 0) = mix * std::sqrt(gamma);
        return {e0, e1, e2, e3};
    }
    }
    throw DomainError("unknown channel");
}

/// sum_k E_k^dagger E_k; the identity for a trace-preserving set.
inline Matrix2 completeness(const KrausSet &ops) {
    Matrix2 sum;
    for (const auto &e : ops) {
        sum = sum + adjoint(e) * e;
    }
    return sum;
}

/// sum_{i,j} (E_i (x) E_j) m (E_i (x) E_j)^dagger with no validation of m.
/// The map is linear, so it is meaningful on any 4x4 matrix.
inline Matrix4 apply_kraus_product(const Matrix4 &m, const KrausSet &ops) {
    Matrix4 out;
    for (const auto &ei : ops) {
        for (const auto &ej : ops) {
            const Matrix4 k = kron(ei, ej);
            out = out + k * m * adjoint(k);
        }
    }
    return out;
}

/// Product channel on a physical two-qubit state.
inline DensityMatrix apply_product_channel(const DensityMatrix &m, ChannelKind kind, double p) {
    const KrausSet ops = kraus_ops(kind, p);
    if (!is_physical(m)) {
        throw DomainError("apply_product_channel: input state is not positive semidefinite");
    }
    return DensityMatrix(apply_kraus_product(m.matrix(), ops));
}

/// Closed-form action of the product channel on (c1, c2, c3).
inline BellParams bell_param_map(ChannelKind kind, double p, const BellParams &c) {
    detail::require_probability(p);
    validate(c);
    const double q = 1.0 - p;
    const double q2 = q * q;
    switch (kind) {
    case ChannelKind::BitFlip:
        return {c.c1, c.c2 * q2, c.c3 * q2};
    case ChannelKind::PhaseFlip:
        return {c.c1 * q2, c.c2 * q2, c.c3};
    case ChannelKind::BitPhaseFlip:
        return {c.c1 * q2, c.c2, c.c3 * q2};
    case ChannelKind::GeneralizedAmplitudeDamping:
        return {c.c1 * q, c.c2 * q, c.c3 * q2};
    }
    throw DomainError("unknown channel");
}

/// n points evenly spaced on [0, 1], endpoints exact.
inline std::vector<double> uniform_p_grid(std::size_t n = 101) {
    if (n < 2) {
        throw DomainError("p grid needs at least 2 points");
    }
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return grid;
}

struct TrajectoryPoint {
    double p;
    double coherence;
};

/// Relative entropy of coherence of the mapped state at each p. Every point
/// is computed from the initial state, not by iterating the channel.
inline std::vector<TrajectoryPoint> dynamics_trajectory(const BellParams &params, ChannelKind kind,
                                                        std::span<const double> p_grid) {
    if (!is_physical(params)) {
        throw DomainError("dynamics_trajectory: initial state is not positive semidefinite");
    }
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        detail::require_probability(p_grid[i]);
        if (i > 0 && !(p_grid[i] > p_grid[i - 1])) {
            throw DomainError("p grid must be strictly increasing");
        }
    }
    std::vector<TrajectoryPoint> out;
    out.reserve(p_grid.size());
    for (const double p : p_grid) {
        const BellParams mapped = bell_param_map(kind, p, params);
        // these channels map physical states to physical states
        if (!is_physical(mapped)) {
            throw NumericError("channel produced an unphysical state");
        }
        out.push_back({p, relative_entropy_coherence(mapped).value()});
    }
    return out;
}

} // namespace bellcoh
