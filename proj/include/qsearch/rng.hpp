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
 * Seeded, splittable pseudorandom stream used by every sampling operation.
 *
 * The generator is SplitMix64, so identical seeds give identical sequences
 * on every platform and standard library. The std:: distributions are
 * implementation defined and are deliberately not used here.
 */

#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace qsearch {

class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Rejection sampling keeps it unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) {
            return 0;
        }
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    /// Independent substream identified by name. Forking does not advance
    /// this stream; distinct names give unrelated sequences.
    RandomStream fork(std::string_view name) const {
        std::uint64_t h = 0xcbf29ce484222325ull; // FNV-1a
        for (const char c : name) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        RandomStream child(state_ ^ h);
        child.next_u64();
        return child;
    }

  private:
    std::uint64_t state_;
};

/// Fisher-Yates shuffle driven by an explicit stream.
template <typename T>
void shuffle(std::vector<T> &values, RandomStream &rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(values[i - 1], values[j]);
    }
}

} // namespace qsearch
