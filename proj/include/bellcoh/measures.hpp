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

// Coherence quantifiers in the computational basis and the closed-form discord of
// Bell-diagonal states. Entropies are in bits.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "bellcoh/errors.hpp"
#include "bellcoh/states.hpp"

namespace bellcoh {

enum class MeasureKind { L1, TraceNorm, RelativeEntropy, Discord };

inline std::string_view to_string(MeasureKind kind) {
    switch (kind) {
    case MeasureKind::L1:
        return "l1";
    case MeasureKind::TraceNorm:
        return "trace";
    case MeasureKind::RelativeEntropy:
        return "rel-ent";
    case MeasureKind::Discord:
        return "discord";
    }
    return "?";
}

inline std::optional<MeasureKind> parse_measure(std::string_view name) {
    for (auto kind : {MeasureKind::L1, MeasureKind::TraceNorm, MeasureKind::RelativeEntropy,
                      MeasureKind::Discord}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

/// Non-negative measure value. Round-off in [-kClampTol, 0) is reported as 0.
class MeasureValue {
  public:
    static constexpr double kClampTol = 1e-12;

    explicit MeasureValue(double raw) : value_(raw) {
        if (raw < -kClampTol) {
            throw NumericError("measure evaluated to " + std::to_string(raw));
        }
        value_ = std::max(raw, 0.0);
    }

    double value() const { return value_; }

  private:
    double value_;
};

/// Tolerance of the discord == coherence predicate.
inline constexpr double kTolEqual = 1e-9;

namespace detail {
/// x log2 x with 0 log 0 = 0; round-off negatives within kTolPsd count as 0.
inline double xlog2x(double x) {
    if (x < -kTolPsd) {
        throw DomainError("log of negative argument " + std::to_string(x));
    }
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

/// (1+x)/2 log2(1+x) + (1-x)/2 log2(1-x); even in x, increasing in |x|.
inline double binary_term(double x) {
    return 0.5 * (xlog2x(1.0 + x) + xlog2x(1.0 - x));
}

inline void require_physical(const Spectrum &s, const char *what) {
    if (!is_physical(s)) {
        throw DomainError(std::string(what) + ": state is not positive semidefinite (eigenvalue " +
                          std::to_string(s.min()) + ")");
    }
}
} // namespace detail

inline MeasureValue l1_coherence(const DensityMatrix &m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i != j) {
                sum += std::abs(m(i, j));
            }
        }
    }
    return MeasureValue(sum);
}

/// Nonzero entries only on the diagonal and anti-diagonal.
inline bool is_x_shaped(const DensityMatrix &m, double tol = 1e-12) {
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i != j && i + j != 3 && std::abs(m(i, j)) > tol) {
                return false;
            }
        }
    }
    return true;
}

/// Trace-norm coherence, available only for X-shaped states where it equals
/// the l1 norm.
inline MeasureValue trace_norm_coherence_x(const DensityMatrix &m) {
    if (!is_x_shaped(m)) {
        throw DomainError("trace-norm coherence is only available for X-shaped states");
    }
    return l1_coherence(m);
}

/// S(diag rho) - S(rho) from the numeric spectrum of an arbitrary density
/// matrix.
inline MeasureValue relative_entropy_coherence(const DensityMatrix &m) {
    const Spectrum spec = hermitian_spectrum(m);
    detail::require_physical(spec, "relative entropy of coherence");
    return MeasureValue(shannon_entropy_bits(m.diagonal()) - von_neumann_entropy(spec));
}

/// Closed form for Bell-diagonal states:
///   sum_k l_k log2 l_k + 2 - (1+c3)/2 log2(1+c3) - (1-c3)/2 log2(1-c3)
/// with l_k the Bell spectrum. Evaluated per 2x2 block on unnormalized
/// entries so that a block without coherence contributes exactly zero.
inline MeasureValue relative_entropy_coherence(const BellParams &p) {
    detail::require_physical(bell_spectrum(p), "relative entropy of coherence");
    auto block = [](double d, double x) {
        return detail::xlog2x(d + x) + detail::xlog2x(d - x) - 2.0 * detail::xlog2x(d);
    };
    return MeasureValue((block(1.0 + p.c3, p.c1 - p.c2) + block(1.0 - p.c3, p.c1 + p.c2)) / 4.0);
}

/// Closed form for X states, written on the unnormalized block eigenvalues
/// 1 +- c3 +- sqrt(...) and diagonal entries 1 +- r +- s +- c3 (the factors of
/// 1/4 inside the logarithms cancel between the two sums).
inline MeasureValue relative_entropy_coherence(const XParams &p) {
    const Spectrum spec = x_spectrum(p);
    detail::require_physical(spec, "relative entropy of coherence");
    const double outer = std::hypot(p.r + p.s, p.c1 - p.c2);
    const double inner = std::hypot(p.r - p.s, p.c1 + p.c2);
    const std::array<double, 4> eig{1.0 - p.c3 + inner, 1.0 - p.c3 - inner, 1.0 + p.c3 + outer,
                                    1.0 + p.c3 - outer};
    const std::array<double, 4> diag{1.0 + p.r + p.s + p.c3, 1.0 + p.r - p.s - p.c3,
                                     1.0 - p.r + p.s - p.c3, 1.0 - p.r - p.s + p.c3};
    double sum = 0.0;
    for (const double a : eig) {
        sum += a > 0.0 ? a * std::log2(a) : 0.0;
    }
    for (const double d : diag) {
        sum -= d > 0.0 ? d * std::log2(d) : 0.0;
    }
    return MeasureValue(sum / 4.0);
}

/// Closed-form discord of Bell-diagonal states,
///   sum_k l_k log2 l_k + 2 - (1+c)/2 log2(1+c) - (1-c)/2 log2(1-c),
/// with c = max(|c1|, |c2|, |c3|); computed as C_r + binary_term(c3) -
/// binary_term(c), which is exactly C_r when |c3| is the maximum.
inline MeasureValue discord_bell(const BellParams &p) {
    const double c = std::max({std::abs(p.c1), std::abs(p.c2), std::abs(p.c3)});
    const double cr = relative_entropy_coherence(p).value();
    return MeasureValue(cr + detail::binary_term(p.c3) - detail::binary_term(c));
}

/// True iff discord equals the relative entropy of coherence. The two
/// expressions differ only through binary_term(c3) vs binary_term(c), which
/// is even and increasing in |x|, so equality holds iff |c3| attains
/// max(|c1|, |c2|, |c3|).
inline bool discord_equals_coherence(const BellParams &p) {
    detail::require_physical(bell_spectrum(p), "discord_equals_coherence");
    const double a3 = std::abs(p.c3);
    return a3 >= std::abs(p.c1) - kTolEqual && a3 >= std::abs(p.c2) - kTolEqual;
}

/// Closed-form evaluation of any measure on an X state; the fast path used
/// for field sampling. Discord requires r = s = 0.
inline MeasureValue evaluate(MeasureKind kind, const XParams &p) {
    switch (kind) {
    case MeasureKind::L1:
    case MeasureKind::TraceNorm:
        validate(p);
        return MeasureValue(0.5 * (std::abs(p.c1 - p.c2) + std::abs(p.c1 + p.c2)));
    case MeasureKind::RelativeEntropy:
        return p.is_bell_diagonal() ? relative_entropy_coherence(p.correlations())
                                    : relative_entropy_coherence(p);
    case MeasureKind::Discord:
        if (!p.is_bell_diagonal()) {
            throw DomainError("discord is only defined for Bell-diagonal states");
        }
        return discord_bell(p.correlations());
    }
    throw DomainError("unknown measure");
}

} // namespace bellcoh
