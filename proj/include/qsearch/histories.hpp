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
 * Causal/local history decomposition of the quantum search run: each history
 * knows half of the solution's bits in advance and searches classically
 * among the 2^(n/2) = sqrt(N) candidates matching them. One history per
 * (choice of known half, residual probe order); every history ends on the
 * correct answer, so the (k, answer) statistics sit on the diagonal.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qsearch/baseline.hpp"
#include "qsearch/errors.hpp"

namespace qsearch {

struct History {
    std::uint64_t hidden_k = 0;
    std::vector<int> known_bits;   // bit indices, 0 = most significant
    std::vector<int> known_values; // matching bits of hidden_k
    std::vector<std::uint64_t> probe_order;
    QueryTranscript transcript;
};

namespace detail {

inline std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

inline std::uint64_t binomial(int n, int k) {
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

} // namespace detail

inline void require_even_bits(int n_bits, const char *op) {
    if (n_bits < 2 || n_bits % 2 != 0) {
        throw DomainError(std::string(op) +
                          ": the half-information split needs an even bit count, got " +
                          std::to_string(n_bits));
    }
}

/// Histories per hidden entry: C(n, n/2) known halves times (sqrt(N))!
/// residual orders.
inline std::uint64_t history_count(int n_bits) {
    require_even_bits(n_bits, "enumerate_histories");
    const std::uint64_t residual = std::uint64_t(1) << (n_bits / 2);
    if (residual > 8) {
        throw DomainError("enumerate_histories: " + std::to_string(residual) +
                          "! residual orders per known half is beyond desk scale");
    }
    return detail::binomial(n_bits, n_bits / 2) * detail::factorial(residual);
}

/// Visits every history of the given hidden entry in a fixed order:
/// known-bit subsets ascending by bitmask, then residual orders in
/// lexicographic order.
template <typename Visitor>
void for_each_history(int n_bits, std::uint64_t hidden_k, Visitor &&visit) {
    history_count(n_bits); // validates n_bits and scale
    const std::uint64_t size = std::uint64_t(1) << n_bits;
    if (hidden_k >= size) {
        throw DomainError("enumerate_histories: hidden entry out of range");
    }
    const int half = n_bits / 2;

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n_bits); ++mask) {
        if (std::popcount(mask) != half) {
            continue;
        }
        // mask bit b set means bit index b (MSB first) is known in advance
        std::vector<int> known_bits;
        std::vector<int> known_values;
        for (int b = 0; b < n_bits; ++b) {
            if ((mask >> b) & 1) {
                known_bits.push_back(b);
                known_values.push_back(static_cast<int>((hidden_k >> (n_bits - 1 - b)) & 1));
            }
        }
        std::vector<std::uint64_t> candidates;
        for (std::uint64_t x = 0; x < size; ++x) {
            bool matches = true;
            for (std::size_t i = 0; i < known_bits.size(); ++i) {
                if (static_cast<int>((x >> (n_bits - 1 - known_bits[i])) & 1) !=
                    known_values[i]) {
                    matches = false;
                    break;
                }
            }
            if (matches) {
                candidates.push_back(x);
            }
        }

        std::vector<std::uint64_t> order = candidates;
        do {
            History history;
            history.hidden_k = hidden_k;
            history.known_bits = known_bits;
            history.known_values = known_values;
            history.probe_order = order;
            history.transcript = search_with_order(hidden_k, order);
            visit(history);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

inline std::vector<History> enumerate_histories(int n_bits, std::uint64_t hidden_k) {
    std::vector<History> histories;
    histories.reserve(history_count(n_bits));
    for_each_history(n_bits, hidden_k, [&](const History &h) { histories.push_back(h); });
    return histories;
}

/// Residual classical worst case: sqrt(N) - 1 queries.
inline std::uint64_t residual_worst_case_queries(int n_bits) {
    require_even_bits(n_bits, "residual_worst_case_queries");
    return (std::uint64_t(1) << (n_bits / 2)) - 1;
}

/// (k, answer) distribution with k uniform and histories uniform given k.
/// Every history answers correctly, so the mass sits on the diagonal; the
/// distribution is still accumulated from the transcripts rather than
/// asserted.
inline std::map<std::pair<std::uint64_t, std::uint64_t>, double>
history_outcome_distribution(int n_bits) {
    const std::uint64_t size = std::uint64_t(1) << n_bits;
    const double per_k = 1.0 / static_cast<double>(size);
    std::map<std::pair<std::uint64_t, std::uint64_t>, double> distribution;
    for (std::uint64_t k = 0; k < size; ++k) {
        const double per_history = per_k / static_cast<double>(history_count(n_bits));
        for_each_history(n_bits, k, [&](const History &h) {
            distribution[{k, h.transcript.answer}] += per_history;
        });
    }
    return distribution;
}

} // namespace qsearch
