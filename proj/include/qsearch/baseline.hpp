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
 * Classical query baselines for database search, plus a small reversible
 * gate-network evaluator (Toffoli / Fredkin) whose point is the metric:
 * no single gate event ever touches more than 3 bits.
 *
 * The search strategy probes drawers in some order and stops on a hit;
 * after N-1 misses the last drawer is inferred without a query. Over a
 * uniform hidden entry and uniform probe orders the mean query count is
 * (N-1)(N+2)/(2N), i.e. 2.25 at N = 4, with worst case N-1 = 3.
 */

#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qsearch/errors.hpp"
#include "qsearch/rng.hpp"

namespace qsearch {

struct QueryRecord {
    std::uint64_t x = 0;
    int result = 0; // delta(k, x)
};

struct QueryTranscript {
    std::uint64_t hidden_k = 0;
    std::vector<QueryRecord> queries;
    std::uint64_t answer = 0;

    std::size_t query_count() const { return queries.size(); }
};

/// Probe-until-found over an explicit candidate order that must contain the
/// hidden entry; the final candidate is inferred rather than queried.
inline QueryTranscript search_with_order(std::uint64_t hidden_k,
                                         const std::vector<std::uint64_t> &order) {
    QueryTranscript transcript;
    transcript.hidden_k = hidden_k;
    bool found = false;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i + 1 == order.size()) {
            // every other candidate missed, no query needed
            transcript.answer = order[i];
            found = true;
            break;
        }
        const int result = order[i] == hidden_k ? 1 : 0;
        transcript.queries.push_back(QueryRecord{order[i], result});
        if (result == 1) {
            transcript.answer = order[i];
            found = true;
            break;
        }
    }
    if (!found || transcript.answer != hidden_k) {
        throw DomainError("classical_search: probe order does not contain the hidden entry");
    }
    return transcript;
}

namespace detail {

inline void require_permutation(std::uint64_t size, const std::vector<std::uint64_t> &order) {
    if (order.size() != size) {
        throw DomainError("classical_search: probe order must cover all " +
                          std::to_string(size) + " drawers");
    }
    std::vector<bool> seen(size, false);
    for (const std::uint64_t x : order) {
        if (x >= size || seen[x]) {
            throw DomainError("classical_search: probe order is not a permutation");
        }
        seen[x] = true;
    }
}

} // namespace detail

inline QueryTranscript classical_search(int n_bits, std::uint64_t hidden_k,
                                        const std::vector<std::uint64_t> &order) {
    const std::uint64_t size = std::uint64_t(1) << n_bits;
    if (hidden_k >= size) {
        throw DomainError("classical_search: hidden entry out of range");
    }
    detail::require_permutation(size, order);
    return search_with_order(hidden_k, order);
}

inline QueryTranscript classical_search(int n_bits, std::uint64_t hidden_k, RandomStream &rng) {
    const std::uint64_t size = std::uint64_t(1) << n_bits;
    std::vector<std::uint64_t> order(size);
    std::iota(order.begin(), order.end(), std::uint64_t(0));
    shuffle(order, rng);
    return classical_search(n_bits, hidden_k, order);
}

/// Exact fraction with the usual normalized representation.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) {
            throw DomainError("rational: zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Rational operator+(const Rational &o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator*(const Rational &o) const { return {num * o.num, den * o.den}; }
    Rational operator/(const Rational &o) const { return {num * o.den, den * o.num}; }
    bool operator==(const Rational &) const = default;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

/// Queries spent when the hidden entry sits at this position of the order.
inline std::uint64_t queries_at_position(std::uint64_t position, std::uint64_t size) {
    return position + 1 < size ? position + 1 : size - 1;
}

/// Exact mean query count over uniform hidden entry and uniform probe order.
/// The count depends on the order only through the hidden entry's position,
/// which is uniform, so averaging the per-position costs is exhaustive.
/// Equals (N-1)(N+2)/(2N).
inline Rational exact_mean_queries(int n_bits) {
    const long long size = 1ll << n_bits;
    Rational mean{0};
    for (long long position = 0; position < size; ++position) {
        mean = mean + Rational(static_cast<long long>(queries_at_position(
                                   static_cast<std::uint64_t>(position),
                                   static_cast<std::uint64_t>(size))),
                               size);
    }
    return mean;
}

inline std::uint64_t worst_case_queries(int n_bits) {
    return (std::uint64_t(1) << n_bits) - 1;
}

// --- reversible gate networks ---

enum class GateKind { Toffoli, Fredkin };

/// Toffoli: lines = {control, control, target}. Fredkin: {control, a, b}.
struct ReversibleGate {
    GateKind kind = GateKind::Toffoli;
    std::array<std::size_t, 3> lines{};
};

struct ReversibleGateNetwork {
    std::size_t line_count = 0;
    std::vector<ReversibleGate> gates;
};

struct GateEvaluation {
    std::vector<int> output;
    int simultaneity = 0; // most bits any single gate event processed
};

inline void require_well_formed(const ReversibleGateNetwork &net, const char *op) {
    for (std::size_t g = 0; g < net.gates.size(); ++g) {
        const auto &lines = net.gates[g].lines;
        if (lines[0] >= net.line_count || lines[1] >= net.line_count ||
            lines[2] >= net.line_count) {
            throw DomainError(std::string(op) + ": gate " + std::to_string(g) +
                              " touches a line out of range");
        }
        if (lines[0] == lines[1] || lines[0] == lines[2] || lines[1] == lines[2]) {
            throw DomainError(std::string(op) + ": gate " + std::to_string(g) +
                              " needs 3 distinct lines");
        }
    }
}

inline GateEvaluation evaluate_gate_network(const ReversibleGateNetwork &net,
                                            const std::vector<int> &input) {
    require_well_formed(net, "evaluate_gate_network");
    if (input.size() != net.line_count) {
        throw DomainError("evaluate_gate_network: input length must equal the line count");
    }
    GateEvaluation eval;
    eval.output = input;
    eval.simultaneity = net.gates.empty() ? 0 : 3;
    for (const auto &gate : net.gates) {
        auto &bits = eval.output;
        if (gate.kind == GateKind::Toffoli) {
            if (bits[gate.lines[0]] && bits[gate.lines[1]]) {
                bits[gate.lines[2]] ^= 1;
            }
        } else {
            if (bits[gate.lines[0]]) {
                std::swap(bits[gate.lines[1]], bits[gate.lines[2]]);
            }
        }
    }
    return eval;
}

/// Both gate kinds are self-inverse, so reversing the gate order inverts the
/// network.
inline ReversibleGateNetwork reversed(ReversibleGateNetwork net) {
    std::reverse(net.gates.begin(), net.gates.end());
    return net;
}

} // namespace qsearch
