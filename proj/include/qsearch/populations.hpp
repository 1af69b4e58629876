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

#include <string>
#include <string_view>
#include <vector>

#include "qsearch/errors.hpp"

namespace qsearch {

/// Diagonal of one qubit's reduced density operator. The indeterminate flag
/// marks the 0/0 case of the disassembled machine, where the symmetric
/// default (1/2, 1/2) is reported.
struct QubitPopulation {
    std::string label;
    double p_zero = 0.0;
    double p_one = 0.0;
    bool indeterminate = false;
};

struct PopulationVector {
    std::vector<QubitPopulation> entries;

    const QubitPopulation &at(std::string_view label) const {
        for (const auto &entry : entries) {
            if (entry.label == label) {
                return entry;
            }
        }
        throw DomainError("populations: no qubit labeled '" + std::string(label) + "'");
    }

    bool contains(std::string_view label) const {
        for (const auto &entry : entries) {
            if (entry.label == label) {
                return true;
            }
        }
        return false;
    }
};

} // namespace qsearch
