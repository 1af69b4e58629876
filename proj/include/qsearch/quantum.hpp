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

/**
 * @file
 * State-vector simulator for database search over three registers:
 *
 *   K  (n qubits)  the oracle's choice of the marked entry,
 *   X  (n qubits)  the query argument,
 *   V  (1 qubit)   the query result, kept in (|0> - |1>)/sqrt(2).
 *
 * Basis order is fixed: K bits are most significant, then X bits, then V,
 * so index = (k << (n+1)) | (x << 1) | v. Within a register, bit 0 of the
 * label (k0, x0) is the most significant bit of the printed string.
 *
 * All operations are pure: they take a state by const reference and return
 * a fresh one. The oracle-call count travels with the state.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qsearch/errors.hpp"
#include "qsearch/populations.hpp"
#include "qsearch/rng.hpp"

namespace qsearch {

using Amplitude = std::complex<double>;

/// Tolerance for exact amplitude-level claims.
inline constexpr double kNormTolerance = 1e-12;

/// Tolerance for closed-form probability comparisons.
inline constexpr double kProbabilityTolerance = 1e-4;

struct RegisterLayout {
    int n_bits;

    explicit RegisterLayout(int bits) : n_bits(bits) {
        if (bits < 2) {
            throw DomainError("layout: search registers need at least 2 bits, got " +
                              std::to_string(bits));
        }
        if (bits > 10) {
            throw DomainError("layout: desk-scale limit is 10 bits, got " + std::to_string(bits));
        }
    }

    std::uint64_t database_size() const { return std::uint64_t(1) << n_bits; }
    int total_qubits() const { return 2 * n_bits + 1; }
    std::size_t dimension() const { return std::size_t(1) << total_qubits(); }

    std::size_t index_of(std::uint64_t k, std::uint64_t x, int v) const {
        return (k << (n_bits + 1)) | (x << 1) | static_cast<std::uint64_t>(v);
    }
    std::uint64_t k_of(std::size_t index) const { return index >> (n_bits + 1); }
    std::uint64_t x_of(std::size_t index) const {
        return (index >> 1) & (database_size() - 1);
    }
    int v_of(std::size_t index) const { return static_cast<int>(index & 1); }

    /// Register value rendered MSB first, e.g. 1 -> "01" for n_bits = 2.
    std::string bit_string(std::uint64_t value) const {
        std::string s(static_cast<std::size_t>(n_bits), '0');
        for (int i = 0; i < n_bits; ++i) {
            if ((value >> (n_bits - 1 - i)) & 1) {
                s[static_cast<std::size_t>(i)] = '1';
            }
        }
        return s;
    }

    bool operator==(const RegisterLayout &other) const = default;
};

enum class SearchRegister { K, X };

inline const char *register_name(SearchRegister reg) {
    return reg == SearchRegister::K ? "K" : "X";
}

namespace detail {

/// Kahan-compensated accumulator. Plain summation over 2^(2n+1) amplitudes
/// drifts past the 1e-12 normalization tolerance near the desk-scale limit.
class CompensatedSum {
  public:
    void add(double value) {
        const double y = value - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

} // namespace detail

struct StateVector {
    RegisterLayout layout;
    std::vector<Amplitude> amplitudes;
    int oracle_calls = 0;

    explicit StateVector(RegisterLayout l)
        : layout(l), amplitudes(l.dimension(), Amplitude{0.0, 0.0}) {}

    Amplitude amp(std::uint64_t k, std::uint64_t x, int v) const {
        return amplitudes[layout.index_of(k, x, v)];
    }

    double norm() const {
        detail::CompensatedSum sum;
        for (const auto &a : amplitudes) {
            sum.add(std::norm(a));
        }
        return std::sqrt(sum.value());
    }
};

inline bool is_normalized(const StateVector &state, double tol = kNormTolerance) {
    return std::abs(state.norm() - 1.0) <= tol;
}

inline void require_normalized(const StateVector &state, const char *op) {
    if (!is_normalized(state)) {
        throw DomainError(std::string(op) + ": state is not normalized");
    }
}

/// True while V still factors out as (|0> - |1>)/sqrt(2), i.e.
/// amp(k, x, 1) == -amp(k, x, 0) for every (k, x).
inline bool v_register_intact(const StateVector &state, double tol = kNormTolerance) {
    const auto &layout = state.layout;
    for (std::uint64_t k = 0; k < layout.database_size(); ++k) {
        for (std::uint64_t x = 0; x < layout.database_size(); ++x) {
            if (std::abs(state.amp(k, x, 1) + state.amp(k, x, 0)) > tol) {
                return false;
            }
        }
    }
    return true;
}

/// Uniform superposition over K and X with V in (|0> - |1>)/sqrt(2).
/// Every nonzero amplitude has magnitude 1/(2^n * sqrt(2)); the sign is
/// negative exactly on the v = 1 components.
inline StateVector prepare_input(const RegisterLayout &layout) {
    StateVector state(layout);
    const double magnitude =
        1.0 / (static_cast<double>(layout.database_size()) * std::sqrt(2.0));
    for (std::uint64_t k = 0; k < layout.database_size(); ++k) {
        for (std::uint64_t x = 0; x < layout.database_size(); ++x) {
            state.amplitudes[layout.index_of(k, x, 0)] = Amplitude{magnitude, 0.0};
            state.amplitudes[layout.index_of(k, x, 1)] = Amplitude{-magnitude, 0.0};
        }
    }
    return state;
}

/// One oracle query, as the reversible map |k>|x>|v> -> |k>|x>|v ^ d(k,x)>
/// with d the Kronecker delta. On V = (|0> - |1>)/sqrt(2) this flips the
/// phase of the k = x components and is the identity elsewhere.
inline StateVector apply_oracle(const StateVector &state) {
    require_normalized(state, "apply_oracle");
    StateVector out = state;
    const auto &layout = state.layout;
    for (std::uint64_t k = 0; k < layout.database_size(); ++k) {
        const std::size_t i0 = layout.index_of(k, k, 0);
        std::swap(out.amplitudes[i0], out.amplitudes[i0 + 1]);
    }
    out.oracle_calls = state.oracle_calls + 1;
    return out;
}

/// Inversion about the mean on register X, applied within each fixed (k, v)
/// component: a_x -> 2*mean(a) - a_x.
inline StateVector apply_diffusion(const StateVector &state) {
    require_normalized(state, "apply_diffusion");
    StateVector out = state;
    const auto &layout = state.layout;
    const std::uint64_t size = layout.database_size();
    for (std::uint64_t k = 0; k < size; ++k) {
        for (int v = 0; v < 2; ++v) {
            Amplitude mean{0.0, 0.0};
            for (std::uint64_t x = 0; x < size; ++x) {
                mean += state.amplitudes[layout.index_of(k, x, v)];
            }
            mean /= static_cast<double>(size);
            for (std::uint64_t x = 0; x < size; ++x) {
                const std::size_t i = layout.index_of(k, x, v);
                out.amplitudes[i] = 2.0 * mean - state.amplitudes[i];
            }
        }
    }
    return out;
}

/// floor((pi/4) * sqrt(N)) amplification rounds; 1 for N = 4.
inline int grover_iterations(std::uint64_t database_size) {
    const double pi = 3.14159265358979323846;
    return static_cast<int>(std::floor((pi / 4.0) * std::sqrt(static_cast<double>(database_size))));
}

inline StateVector grover_iterate(StateVector state, int rounds) {
    for (int i = 0; i < rounds; ++i) {
        state = apply_diffusion(apply_oracle(state));
    }
    return state;
}

/// Full run: prepare the input state, then the standard number of
/// oracle + diffusion rounds. The result's oracle_calls equals the rounds.
inline StateVector grover_run(const RegisterLayout &layout) {
    return grover_iterate(prepare_input(layout), grover_iterations(layout.database_size()));
}

/// Probability of each outcome when measuring the given register,
/// marginalized over the other registers.
inline std::vector<double> marginal_distribution(const StateVector &state, SearchRegister reg) {
    const auto &layout = state.layout;
    std::vector<detail::CompensatedSum> sums(layout.database_size());
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
        const std::uint64_t value = reg == SearchRegister::K ? layout.k_of(i) : layout.x_of(i);
        sums[value].add(std::norm(state.amplitudes[i]));
    }
    std::vector<double> probs(layout.database_size(), 0.0);
    for (std::size_t v = 0; v < probs.size(); ++v) {
        probs[v] = sums[v].value();
    }
    return probs;
}

struct MeasurementRecord {
    SearchRegister reg;
    std::uint64_t outcome;
    double probability;
    StateVector collapsed;
};

/// Projects the register onto a fixed outcome and renormalizes. V is never
/// measured. Errors if the outcome has (numerically) zero probability.
inline MeasurementRecord collapse(const StateVector &state, SearchRegister reg,
                                  std::uint64_t outcome) {
    require_normalized(state, "measure");
    const auto &layout = state.layout;
    if (outcome >= layout.database_size()) {
        throw DomainError("measure: outcome out of range");
    }
    const double probability = marginal_distribution(state, reg)[outcome];
    if (probability <= kNormTolerance) {
        throw DomainError("measure: outcome " + layout.bit_string(outcome) + " of register " +
                          register_name(reg) + " has zero probability");
    }
    StateVector collapsed(layout);
    const double scale = 1.0 / std::sqrt(probability);
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
        const std::uint64_t value = reg == SearchRegister::K ? layout.k_of(i) : layout.x_of(i);
        if (value == outcome) {
            collapsed.amplitudes[i] = state.amplitudes[i] * scale;
        }
    }
    collapsed.oracle_calls = state.oracle_calls;
    return MeasurementRecord{reg, outcome, probability, std::move(collapsed)};
}

/// Samples an outcome with Born probabilities, then collapses onto it.
inline MeasurementRecord measure(const StateVector &state, SearchRegister reg,
                                 RandomStream &rng) {
    require_normalized(state, "measure");
    const std::vector<double> probs = marginal_distribution(state, reg);
    double total = 0.0;
    for (const double p : probs) {
        total += p;
    }
    if (total <= kNormTolerance) {
        throw DomainError(std::string("measure: register ") + register_name(reg) +
                          " carries zero total probability");
    }
    const double r = rng.next_double() * total;
    double cumulative = 0.0;
    std::uint64_t last_possible = 0;
    for (std::uint64_t value = 0; value < probs.size(); ++value) {
        if (probs[value] > 0.0) {
            last_possible = value;
        }
        cumulative += probs[value];
        if (r < cumulative && probs[value] > 0.0) {
            return collapse(state, reg, value);
        }
    }
    return collapse(state, reg, last_possible); // r landed on the rounding edge
}

/// Per-qubit diagonal populations, summed directly from the amplitudes.
/// Labels run k0..k{n-1}, x0..x{n-1}, v; bit 0 is the most significant.
inline PopulationVector qubit_populations(const StateVector &state) {
    require_normalized(state, "qubit_populations");
    const auto &layout = state.layout;
    const int n = layout.n_bits;
    PopulationVector populations;

    auto accumulate = [&](const std::string &label, int bit_position) {
        detail::CompensatedSum zero_sum;
        detail::CompensatedSum one_sum;
        for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
            const double p = std::norm(state.amplitudes[i]);
            if ((i >> bit_position) & 1) {
                one_sum.add(p);
            } else {
                zero_sum.add(p);
            }
        }
        QubitPopulation entry;
        entry.label = label;
        entry.p_zero = zero_sum.value();
        entry.p_one = one_sum.value();
        populations.entries.push_back(std::move(entry));
    };

    for (int i = 0; i < n; ++i) {
        accumulate("k" + std::to_string(i), 2 * n - i);
    }
    for (int i = 0; i < n; ++i) {
        accumulate("x" + std::to_string(i), n - i);
    }
    accumulate("v", 0);
    return populations;
}

/// P(measuring X yields k | measuring K yields k) for one fixed k.
inline double conditional_success_probability(const StateVector &state, std::uint64_t k) {
    const auto &layout = state.layout;
    double p_k = 0.0;
    double p_kk = 0.0;
    for (std::uint64_t x = 0; x < layout.database_size(); ++x) {
        for (int v = 0; v < 2; ++v) {
            const double p = std::norm(state.amp(k, x, v));
            p_k += p;
            if (x == k) {
                p_kk += p;
            }
        }
    }
    if (p_k <= kNormTolerance) {
        throw DomainError("success_probability: oracle choice " + layout.bit_string(k) +
                          " has zero probability");
    }
    return p_kk / p_k;
}

/// Worst case over oracle choices of the conditional solution probability.
inline double success_probability(const StateVector &state) {
    require_normalized(state, "success_probability");
    double worst = 1.0;
    for (std::uint64_t k = 0; k < state.layout.database_size(); ++k) {
        worst = std::min(worst, conditional_success_probability(state, k));
    }
    return worst;
}

} // namespace qsearch
