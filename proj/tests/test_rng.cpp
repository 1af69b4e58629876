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

#include <vector>

#include "qsearch/rng.hpp"

using qsearch::RandomStream;

TEST_CASE("identical seeds give identical sequences") {
    RandomStream a(42);
    RandomStream b(42);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("next_double stays in [0, 1)") {
    RandomStream rng(7);
    for (int i = 0; i < 10000; ++i) {
        const double d = rng.next_double();
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
    }
}

TEST_CASE("next_below covers the range and respects the bound") {
    RandomStream rng(3);
    std::vector<int> hits(5, 0);
    for (int i = 0; i < 5000; ++i) {
        const std::uint64_t v = rng.next_below(5);
        REQUIRE(v < 5);
        ++hits[static_cast<std::size_t>(v)];
    }
    for (const int h : hits) {
        CHECK(h > 800); // each of 5 values expected ~1000 times
    }
    CHECK(rng.next_below(1) == 0);
}

TEST_CASE("forking is pure and name-sensitive") {
    const RandomStream parent(11);
    RandomStream a1 = parent.fork("quantum");
    RandomStream a2 = parent.fork("quantum");
    RandomStream b = parent.fork("machine");
    CHECK(a1.next_u64() == a2.next_u64());
    RandomStream a3 = parent.fork("quantum");
    CHECK(a3.next_u64() != b.next_u64());
}

TEST_CASE("shuffle is deterministic under a fixed seed") {
    std::vector<int> first{0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<int> second = first;
    RandomStream r1(5);
    RandomStream r2(5);
    qsearch::shuffle(first, r1);
    qsearch::shuffle(second, r2);
    CHECK(first == second);
}
