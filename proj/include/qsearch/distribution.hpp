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

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>

namespace qsearch {

/// Joint distribution over (oracle choice, answer) pairs.
using JointDistribution = std::map<std::pair<std::uint64_t, std::uint64_t>, double>;

inline JointDistribution
normalized_counts(const std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> &counts,
                  std::uint64_t total) {
    JointDistribution distribution;
    for (const auto &[key, count] : counts) {
        distribution[key] = static_cast<double>(count) / static_cast<double>(total);
    }
    return distribution;
}

inline double total_variation_distance(const JointDistribution &a, const JointDistribution &b) {
    double sum = 0.0;
    for (const auto &[key, p] : a) {
        const auto it = b.find(key);
        sum += std::abs(p - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto &[key, p] : b) {
        if (a.find(key) == a.end()) {
            sum += p;
        }
    }
    return 0.5 * sum;
}

} // namespace qsearch
