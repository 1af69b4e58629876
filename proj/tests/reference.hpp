// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference material, written independently of the library code
// paths it is used to check. The n = 2 states are spelled out amplitude by
// amplitude with hardcoded index arithmetic so the documented basis order
// (K bits, then X bits, then V) is pinned by the tests themselves. The
// brute-force movement enumerator hardcodes the bundled truth tables.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qsearch/quantum.hpp"

namespace reference {

inline constexpr double kInvFourRootTwo = 0.17677669529663688; // 1/(4*sqrt(2))
inline constexpr double kInvTwoRootTwo = 0.35355339059327373;  // 1/(2*sqrt(2))
inline constexpr double kInvRootTwo = 0.7071067811865476;      // 1/sqrt(2)

inline std::size_t index_n2(std::uint64_t k, std::uint64_t x, int v) {
    return static_cast<std::size_t>((k << 3) | (x << 1) | static_cast<std::uint64_t>(v));
}

/// Uniform K and X, V in (|0> - |1>)/sqrt(2).
inline qsearch::StateVector input_state_n2() {
    qsearch::StateVector state{qsearch::RegisterLayout(2)};
    for (std::uint64_t k = 0; k < 4; ++k) {
        for (std::uint64_t x = 0; x < 4; ++x) {
            state.amplitudes[index_n2(k, x, 0)] = kInvFourRootTwo;
            state.amplitudes[index_n2(k, x, 1)] = -kInvFourRootTwo;
        }
    }
    return state;
}

/// Input state after one oracle query: the k = x components change sign.
inline qsearch::StateVector secondstage_state_n2() {
    qsearch::StateVector state{qsearch::RegisterLayout(2)};
    for (std::uint64_t k = 0; k < 4; ++k) {
        for (std::uint64_t x = 0; x < 4; ++x) {
            const double sign = (k == x) ? -1.0 : 1.0;
            state.amplitudes[index_n2(k, x, 0)] = sign * kInvFourRootTwo;
            state.amplitudes[index_n2(k, x, 1)] = -sign * kInvFourRootTwo;
        }
    }
    return state;
}

/// Fully correlated K and X: (1/(2*sqrt(2))) sum_k |k>|k>(|0> - |1>).
inline qsearch::StateVector output_state_n2() {
    qsearch::StateVector state{qsearch::RegisterLayout(2)};
    for (std::uint64_t k = 0; k < 4; ++k) {
        state.amplitudes[index_n2(k, k, 0)] = kInvTwoRootTwo;
        state.amplitudes[index_n2(k, k, 1)] = -kInvTwoRootTwo;
    }
    return state;
}

/// Output state collapsed on K = 01.
inline qsearch::StateVector am_state_n2() {
    qsearch::StateVector state{qsearch::RegisterLayout(2)};
    state.amplitudes[index_n2(1, 1, 0)] = kInvRootTwo;
    state.amplitudes[index_n2(1, 1, 1)] = -kInvRootTwo;
    return state;
}

inline double max_amplitude_difference(const qsearch::StateVector &a,
                                       const qsearch::StateVector &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
        worst = std::max(worst, std::abs(a.amplitudes[i] - b.amplitudes[i]));
    }
    return worst;
}

// --- brute force over the bundled network's 4 x 4 x 4 row selections ---

struct Row {
    int a;
    int b;
    int out;
};

// XNOR feeds tables 0 and 1, AND feeds table 2; row order (0,0),(0,1),(1,0),(1,1)
inline constexpr std::array<Row, 4> kXnorRows{{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}};
inline constexpr std::array<Row, 4> kAndRows{{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}};

struct BruteMovement {
    std::array<std::size_t, 3> rows;
    int k0, k1, x0, x1, y0, y1, delta;
};

/// Every jointly consistent row triple, optionally restricted to selections
/// through one fixed row. Consistency is only on the shared y0/y1 lines.
inline std::vector<BruteMovement> brute_force_movements(int push_table = -1,
                                                        std::size_t push_row = 0) {
    std::vector<BruteMovement> results;
    for (std::size_t r0 = 0; r0 < 4; ++r0) {
        for (std::size_t r1 = 0; r1 < 4; ++r1) {
            for (std::size_t r2 = 0; r2 < 4; ++r2) {
                if (push_table == 0 && r0 != push_row) continue;
                if (push_table == 1 && r1 != push_row) continue;
                if (push_table == 2 && r2 != push_row) continue;
                const Row &row0 = kXnorRows[r0];
                const Row &row1 = kXnorRows[r1];
                const Row &row2 = kAndRows[r2];
                if (row0.out != row2.a || row1.out != row2.b) {
                    continue;
                }
                results.push_back(BruteMovement{{r0, r1, r2}, row0.a, row1.a, row0.b, row1.b,
                                                row0.out, row1.out, row2.out});
            }
        }
    }
    return results;
}

/// sin^2((2r+1) asin(1/sqrt(N))): the closed-form amplification probability.
inline double closed_form_success(std::uint64_t database_size, int rounds) {
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(database_size)));
    return std::pow(std::sin((2.0 * rounds + 1.0) * theta), 2.0);
}

} // namespace reference
