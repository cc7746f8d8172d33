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

// Two-qubit Bell-diagonal and X states in the computational basis
// |00>, |01>, |10>, |11>, together with the spectral machinery that every
// entropy computation rests on.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "bellcoh/errors.hpp"
#include "bellcoh/linalg.hpp"

namespace bellcoh {

/// Slack below zero tolerated for eigenvalues when deciding physicality.
inline constexpr double kTolPsd = 1e-12;

namespace pauli {
inline constexpr Matrix2 identity{{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}}};
inline constexpr Matrix2 x{{Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}}};
inline constexpr Matrix2 y{{Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}}};
inline constexpr Matrix2 z{{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}}};

/// sigma_i (x) sigma_i for i = 1, 2, 3.
inline const std::array<Matrix4, 3> &correlators() {
    static const std::array<Matrix4, 3> ops{kron(x, x), kron(y, y), kron(z, z)};
    return ops;
}
} // namespace pauli

/// Correlation triple (c1, c2, c3) of a Bell-diagonal state.
struct BellParams {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    friend constexpr bool operator==(const BellParams &, const BellParams &) = default;
};

/// X state with z-aligned local Bloch vectors r, s.
struct XParams {
    double r = 0.0;
    double s = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    constexpr BellParams correlations() const { return {c1, c2, c3}; }
    constexpr bool is_bell_diagonal() const { return r == 0.0 && s == 0.0; }

    friend constexpr bool operator==(const XParams &, const XParams &) = default;
};

namespace detail {
inline void require_unit_range(double v, const char *name) {
    if (!(v >= -1.0 && v <= 1.0)) {
        throw DomainError(std::string("parameter ") + name + " = " + std::to_string(v) +
                          " outside [-1, 1]");
    }
}
} // namespace detail

inline void validate(const BellParams &p) {
    detail::require_unit_range(p.c1, "c1");
    detail::require_unit_range(p.c2, "c2");
    detail::require_unit_range(p.c3, "c3");
}

inline void validate(const XParams &p) {
    detail::require_unit_range(p.r, "r");
    detail::require_unit_range(p.s, "s");
    detail::require_unit_range(p.c1, "c1");
    detail::require_unit_range(p.c2, "c2");
    detail::require_unit_range(p.c3, "c3");
}

/// Hermitian, unit-trace 4x4 matrix. Positivity is not enforced here:
/// in-range parameters may describe unphysical matrices, which
/// is_physical() reports.
class DensityMatrix {
  public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;

    explicit DensityMatrix(const Matrix4 &m) : m_(m) {
        if (const double d = hermiticity_defect(m); d > kHermitianTol) {
            throw DomainError("matrix is not Hermitian (defect " + std::to_string(d) + ")");
        }
        if (const Complex t = trace(m); std::abs(t - 1.0) > kTraceTol) {
            throw DomainError("matrix trace " + std::to_string(t.real()) + " is not 1");
        }
    }

    const Matrix4 &matrix() const { return m_; }
    const Complex &operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

    std::array<double, 4> diagonal() const {
        return {m_(0, 0).real(), m_(1, 1).real(), m_(2, 2).real(), m_(3, 3).real()};
    }

  private:
    Matrix4 m_;
};

/// Four eigenvalues sorted descending. Unphysical inputs may yield negative
/// entries; see is_physical().
struct Spectrum {
    std::array<double, 4> values{};

    static Spectrum sorted(std::array<double, 4> v) {
        std::sort(v.begin(), v.end(), std::greater<>());
        return Spectrum{v};
    }

    double sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }
    double min() const { return values.back(); }
};

inline bool is_physical(const Spectrum &s, double tol = kTolPsd) { return s.min() >= -tol; }

/// rho = (I(x)I + sum_i c_i sigma_i(x)sigma_i) / 4.
inline DensityMatrix bell_density(const BellParams &p) {
    validate(p);
    Matrix4 m;
    m(0, 0) = m(3, 3) = (1.0 + p.c3) / 4.0;
    m(1, 1) = m(2, 2) = (1.0 - p.c3) / 4.0;
    m(0, 3) = m(3, 0) = (p.c1 - p.c2) / 4.0;
    m(1, 2) = m(2, 1) = (p.c1 + p.c2) / 4.0;
    return DensityMatrix(m);
}

/// Bell-diagonal state plus r sigma_3(x)I + s I(x)sigma_3, all over 4.
inline DensityMatrix x_density(const XParams &p) {
    validate(p);
    Matrix4 m;
    m(0, 0) = (1.0 + p.r + p.s + p.c3) / 4.0;
    m(1, 1) = (1.0 + p.r - p.s - p.c3) / 4.0;
    m(2, 2) = (1.0 - p.r + p.s - p.c3) / 4.0;
    m(3, 3) = (1.0 - p.r - p.s + p.c3) / 4.0;
    m(0, 3) = m(3, 0) = (p.c1 - p.c2) / 4.0;
    m(1, 2) = m(2, 1) = (p.c1 + p.c2) / 4.0;
    return DensityMatrix(m);
}

/// Closed-form eigenvalues of a Bell-diagonal state: the outer block
/// {|00>,|11>} gives (1 + c3 +- (c1 - c2))/4, the inner block {|01>,|10>}
/// gives (1 - c3 +- (c1 + c2))/4.
inline Spectrum bell_spectrum(const BellParams &p) {
    validate(p);
    return Spectrum::sorted({
        (1.0 - p.c1 - p.c2 - p.c3) / 4.0,
        (1.0 - p.c1 + p.c2 + p.c3) / 4.0,
        (1.0 + p.c1 - p.c2 + p.c3) / 4.0,
        (1.0 + p.c1 + p.c2 - p.c3) / 4.0,
    });
}

/// Closed-form eigenvalues of an X state, block by block.
inline Spectrum x_spectrum(const XParams &p) {
    validate(p);
    const double outer = std::hypot(p.r + p.s, p.c1 - p.c2);
    const double inner = std::hypot(p.r - p.s, p.c1 + p.c2);
    return Spectrum::sorted({
        (1.0 + p.c3 + outer) / 4.0,
        (1.0 + p.c3 - outer) / 4.0,
        (1.0 - p.c3 + inner) / 4.0,
        (1.0 - p.c3 - inner) / 4.0,
    });
}

/// Numeric spectrum by Jacobi iteration; the reference every closed form is
/// checked against.
inline Spectrum hermitian_spectrum(const Matrix4 &m) {
    if (const double d = hermiticity_defect(m); d > 1e-10) {
        throw DomainError("hermitian_spectrum: matrix is not Hermitian (defect " +
                          std::to_string(d) + ")");
    }
    return Spectrum{hermitian_eigenvalues(m)};
}

inline Spectrum hermitian_spectrum(const DensityMatrix &m) { return hermitian_spectrum(m.matrix()); }

inline bool is_physical(const BellParams &p, double tol = kTolPsd) {
    return is_physical(bell_spectrum(p), tol);
}

inline bool is_physical(const XParams &p, double tol = kTolPsd) {
    return is_physical(x_spectrum(p), tol);
}

inline bool is_physical(const DensityMatrix &m, double tol = kTolPsd) {
    return is_physical(hermitian_spectrum(m), tol);
}

/// -sum(v log2 v), bits, with 0 log 0 = 0. Eigenvalues in [-kTolPsd, 0) are
/// treated as zero; anything more negative is a DomainError.
template <std::size_t N> double shannon_entropy_bits(const std::array<double, N> &probs) {
    double h = 0.0;
    for (const double v : probs) {
        if (v < -kTolPsd) {
            throw DomainError("negative eigenvalue " + std::to_string(v) + " in entropy");
        }
        if (v > 0.0) {
            h -= v * std::log2(v);
        }
    }
    return h;
}

inline double von_neumann_entropy(const Spectrum &s) { return shannon_entropy_bits(s.values); }

/// c_i = Tr(m sigma_i (x) sigma_i). For a non-Bell-diagonal m this is the
/// triple of its Bell-diagonal projection.
inline BellParams correlations_of(const DensityMatrix &m) {
    const auto &ops = pauli::correlators();
    return {trace(m.matrix() * ops[0]).real(), trace(m.matrix() * ops[1]).real(),
            trace(m.matrix() * ops[2]).real()};
}

} // namespace bellcoh
