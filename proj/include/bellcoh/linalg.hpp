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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>

#include "bellcoh/errors.hpp"

namespace bellcoh {

using Complex = std::complex<double>;

/// Dense N x N complex matrix stored row-major. Small fixed sizes only (2, 4).
template <std::size_t N> struct SquareMatrix {
    std::array<Complex, N * N> data{};

    static constexpr std::size_t size = N;

    constexpr Complex &operator()(std::size_t row, std::size_t col) { return data[row * N + col]; }
    constexpr const Complex &operator()(std::size_t row, std::size_t col) const {
        return data[row * N + col];
    }

    static constexpr SquareMatrix identity() {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static constexpr SquareMatrix diagonal(const std::array<double, N> &d) {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = d[i];
        }
        return m;
    }

    friend constexpr bool operator==(const SquareMatrix &, const SquareMatrix &) = default;
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;

template <std::size_t N>
constexpr SquareMatrix<N> operator+(const SquareMatrix<N> &a, const SquareMatrix<N> &b) {
    SquareMatrix<N> out;
    for (std::size_t i = 0; i < N * N; ++i) {
        out.data[i] = a.data[i] + b.data[i];
    }
    return out;
}

template <std::size_t N>
constexpr SquareMatrix<N> operator-(const SquareMatrix<N> &a, const SquareMatrix<N> &b) {
    SquareMatrix<N> out;
    for (std::size_t i = 0; i < N * N; ++i) {
        out.data[i] = a.data[i] - b.data[i];
    }
    return out;
}

template <std::size_t N>
constexpr SquareMatrix<N> operator*(Complex scale, const SquareMatrix<N> &a) {
    SquareMatrix<N> out;
    for (std::size_t i = 0; i < N * N; ++i) {
        out.data[i] = scale * a.data[i];
    }
    return out;
}

template <std::size_t N>
constexpr SquareMatrix<N> operator*(const SquareMatrix<N> &a, const SquareMatrix<N> &b) {
    SquareMatrix<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t k = 0; k < N; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < N; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

template <std::size_t N> constexpr SquareMatrix<N> adjoint(const SquareMatrix<N> &a) {
    SquareMatrix<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            out(i, j) = std::conj(a(j, i));
        }
    }
    return out;
}

template <std::size_t N> constexpr Complex trace(const SquareMatrix<N> &a) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        t += a(i, i);
    }
    return t;
}

/// Kronecker product; the first factor acts on the most significant qubit.
constexpr Matrix4 kron(const Matrix2 &a, const Matrix2 &b) {
    Matrix4 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

/// Largest |a(i,j) - conj(a(j,i))| over all entries.
template <std::size_t N> double hermiticity_defect(const SquareMatrix<N> &a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i; j < N; ++j) {
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return worst;
}

/// Largest absolute entry; used for elementwise comparisons in tests.
template <std::size_t N> double max_abs(const SquareMatrix<N> &a) {
    double worst = 0.0;
    for (const auto &z : a.data) {
        worst = std::max(worst, std::abs(z));
    }
    return worst;
}

struct JacobiOptions {
    int max_sweeps = 100;
    double off_diagonal_tol = 1e-13;
};

/// Cyclic Jacobi on a real symmetric M x M matrix (row-major). Returns the
/// diagonal after convergence, unsorted. Throws NumericError if the
/// off-diagonal Frobenius norm is still above tolerance after the sweep budget.
template <std::size_t M>
std::array<double, M> symmetric_eigenvalues(std::array<double, M * M> a,
                                            const JacobiOptions &opts = {}) {
    auto at = [&a](std::size_t i, std::size_t j) -> double & { return a[i * M + j]; };
    auto off_norm = [&] {
        double sum = 0.0;
        for (std::size_t i = 0; i < M; ++i) {
            for (std::size_t j = i + 1; j < M; ++j) {
                sum += 2.0 * at(i, j) * at(i, j);
            }
        }
        return std::sqrt(sum);
    };

    int sweep = 0;
    while (off_norm() > opts.off_diagonal_tol) {
        if (sweep++ >= opts.max_sweeps) {
            throw NumericError("Jacobi eigensolver did not converge in " +
                               std::to_string(opts.max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p < M; ++p) {
            for (std::size_t q = p + 1; q < M; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (std::size_t r = 0; r < M; ++r) {
                    if (r == p || r == q) {
                        continue;
                    }
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    at(r, p) = at(p, r) = c * arp - s * arq;
                    at(r, q) = at(q, r) = s * arp + c * arq;
                }
            }
        }
    }

    std::array<double, M> diag{};
    for (std::size_t i = 0; i < M; ++i) {
        diag[i] = at(i, i);
    }
    return diag;
}

/// Eigenvalues of a complex Hermitian matrix, sorted descending.
///
/// The matrix H = A + iB is embedded as the real symmetric [[A, -B], [B, A]],
/// whose spectrum is that of H with every eigenvalue doubled; Jacobi is run on
/// the embedding and consecutive pairs of the sorted result are averaged.
/// The caller is responsible for checking hermiticity.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const SquareMatrix<N> &h, const JacobiOptions &opts = {}) {
    constexpr std::size_t M = 2 * N;
    std::array<double, M * M> embed{};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            // symmetrize so that tiny hermiticity defects don't break Jacobi
            const Complex z = 0.5 * (h(i, j) + std::conj(h(j, i)));
            embed[i * M + j] = z.real();
            embed[(i + N) * M + (j + N)] = z.real();
            embed[i * M + (j + N)] = -z.imag();
            embed[(i + N) * M + j] = z.imag();
        }
    }
    auto doubled = symmetric_eigenvalues<M>(embed, opts);
    std::sort(doubled.begin(), doubled.end(), std::greater<>());

    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return out;
}

} // namespace bellcoh
