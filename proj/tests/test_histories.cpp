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

#include <doctest.h>

#include <set>

#include "qsearch/distribution.hpp"
#include "qsearch/histories.hpp"
#include "qsearch/quantum.hpp"

using namespace qsearch;

TEST_CASE("odd register widths are unsupported") {
    CHECK_THROWS_AS(enumerate_histories(3, 0), DomainError);
    CHECK_THROWS_AS(history_count(5), DomainError);
    CHECK_THROWS_AS(residual_worst_case_queries(3), DomainError);
}

TEST_CASE("history enumeration beyond desk scale is refused") {
    CHECK_THROWS_AS(history_count(8), DomainError);
    CHECK(history_count(2) == 4);
    CHECK(history_count(4) == 144); // C(4,2) halves times 4! orders
    CHECK(history_count(6) == 20 * 40320);
}

TEST_CASE("n = 2 histories know one bit and query once") {
    const std::vector<History> histories = enumerate_histories(2, 1); // k = 01
    REQUIRE(histories.size() == 4);

    std::set<std::vector<int>> known_sets;
    for (const History &h : histories) {
        REQUIRE(h.known_bits.size() == 1);
        known_sets.insert(h.known_bits);
        CHECK(h.transcript.query_count() == 1);
        CHECK(h.transcript.answer == 1);
        CHECK(h.probe_order.size() == 2);

        if (h.known_bits[0] == 0) {
            // knowing k0 = 0 restricts the candidates to {00, 01}
            CHECK(h.known_values == std::vector<int>{0});
            CHECK(std::set<std::uint64_t>(h.probe_order.begin(), h.probe_order.end()) ==
                  std::set<std::uint64_t>{0, 1});
        } else {
            // knowing k1 = 1 restricts the candidates to {01, 11}
            CHECK(h.known_values == std::vector<int>{1});
            CHECK(std::set<std::uint64_t>(h.probe_order.begin(), h.probe_order.end()) ==
                  std::set<std::uint64_t>{1, 3});
        }
    }
    CHECK(known_sets == std::set<std::vector<int>>{{0}, {1}});
}

TEST_CASE("the worst n = 2 history matches the single quantum query") {
    for (std::uint64_t k = 0; k < 4; ++k) {
        std::size_t worst = 0;
        for (const History &h : enumerate_histories(2, k)) {
            worst = std::max(worst, h.transcript.query_count());
        }
        CHECK(worst == 1);
    }
    CHECK(grover_iterations(4) == 1);
}

TEST_CASE("n = 4 histories search the 4-candidate residual space") {
    const std::vector<History> histories = enumerate_histories(4, 9); // k = 1001
    REQUIRE(histories.size() == 144);
    std::size_t worst = 0;
    for (const History &h : histories) {
        CHECK(h.known_bits.size() == 2);
        CHECK(h.probe_order.size() == 4);
        CHECK(h.transcript.answer == 9);
        worst = std::max(worst, h.transcript.query_count());
        for (std::size_t i = 0; i < h.known_bits.size(); ++i) {
            CHECK(((9 >> (3 - h.known_bits[i])) & 1) == h.known_values[i]);
        }
    }
    CHECK(worst == 3);
    CHECK(residual_worst_case_queries(4) == 3);
    CHECK(grover_iterations(16) == 3);
}

TEST_CASE("every n = 4 hidden entry hits the residual worst case") {
    for (std::uint64_t k = 0; k < 16; ++k) {
        std::size_t worst = 0;
        for_each_history(4, k, [&](const History &h) {
            CHECK(h.transcript.answer == k);
            worst = std::max(worst, h.transcript.query_count());
        });
        CHECK(worst == 3);
    }
}

TEST_CASE("each history replays as a plain candidate search") {
    for (const History &h : enumerate_histories(4, 5)) {
        const QueryTranscript replay = search_with_order(h.hidden_k, h.probe_order);
        CHECK(replay.answer == h.transcript.answer);
        REQUIRE(replay.query_count() == h.transcript.query_count());
        for (std::size_t i = 0; i < replay.queries.size(); ++i) {
            CHECK(replay.queries[i].x == h.transcript.queries[i].x);
            CHECK(replay.queries[i].result == h.transcript.queries[i].result);
        }
    }
}

TEST_CASE("the outcome distribution is uniform on the diagonal") {
    SUBCASE("n = 2") {
        const auto distribution = history_outcome_distribution(2);
        REQUIRE(distribution.size() == 4);
        for (std::uint64_t k = 0; k < 4; ++k) {
            CHECK(distribution.at({k, k}) == doctest::Approx(0.25).epsilon(1e-12));
        }

        // matches the exact measurement statistics of the amplified state
        JointDistribution quantum;
        for (std::uint64_t k = 0; k < 4; ++k) {
            quantum[{k, k}] = 0.25;
        }
        CHECK(total_variation_distance(distribution, quantum) <= 1e-12);
    }
    SUBCASE("n = 4") {
        const auto distribution = history_outcome_distribution(4);
        REQUIRE(distribution.size() == 16);
        for (std::uint64_t k = 0; k < 16; ++k) {
            CHECK(distribution.at({k, k}) == doctest::Approx(1.0 / 16).epsilon(1e-12));
        }
    }
}

TEST_CASE("quantum rounds and residual searches scale together") {
    for (const int n_bits : {2, 4, 6, 8}) {
        const std::uint64_t size = std::uint64_t(1) << n_bits;
        const double ratio = static_cast<double>(grover_iterations(size)) /
                             static_cast<double>(residual_worst_case_queries(n_bits));
        CHECK(ratio >= 0.5);
        CHECK(ratio <= 1.5);
    }
}

TEST_CASE("hidden entries outside the register are rejected") {
    CHECK_THROWS_AS(enumerate_histories(2, 4), DomainError);
}
