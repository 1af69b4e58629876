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
 * The constraint machine built over a Boolean network. Each truth-table row
 * carries a nonnegative coordinate C_ij; Q is a shared auxiliary coordinate.
 * The machine imposes, per table i,
 *
 *   Q    = sum_j C_ij            (sum equation)
 *   Q^x  = sum_j C_ij^x, x > 1   (power equation)
 *
 * plus one linking equation per variable flowing from a table's output into
 * another table's input. With chi > 1 the power equation forces at most one
 * positive coordinate per table, so a "machine movement" selects exactly one
 * row per table, globally consistent on shared variables: the classical
 * analog of a measurement outcome.
 */

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsearch/errors.hpp"
#include "qsearch/network.hpp"
#include "qsearch/populations.hpp"
#include "qsearch/rng.hpp"

namespace qsearch {

/// Residual tolerance when checking sum/power equations on real assignments.
inline constexpr double kEquationTolerance = 1e-9;

struct CoordinateId {
    std::size_t table_index = 0;
    std::size_t row_index = 0;

    bool operator==(const CoordinateId &) const = default;
    auto operator<=>(const CoordinateId &) const = default;
};

/// What gets pushed to operate the machine: the auxiliary coordinate Q or a
/// specific row coordinate C_ij.
struct PushTarget {
    std::optional<CoordinateId> coordinate; // empty means Q

    static PushTarget q() { return PushTarget{}; }
    static PushTarget at(std::size_t table_index, std::size_t row_index) {
        return PushTarget{CoordinateId{table_index, row_index}};
    }
    bool is_q() const { return !coordinate.has_value(); }
};

/// Accepts "Q" or a row label like "C23" (or "C2_13" for indices above 9).
inline PushTarget parse_push(std::string_view text) {
    if (text == "Q" || text == "q") {
        return PushTarget::q();
    }
    if (text.size() < 3 || (text[0] != 'C' && text[0] != 'c')) {
        throw ParseError("parse_push: expected 'Q' or 'Cij', got '" + std::string(text) + "'");
    }
    const std::string_view body = text.substr(1);
    std::string table_part;
    std::string row_part;
    if (const auto underscore = body.find('_'); underscore != std::string_view::npos) {
        table_part = std::string(body.substr(0, underscore));
        row_part = std::string(body.substr(underscore + 1));
    } else {
        table_part = std::string(body.substr(0, 1));
        row_part = std::string(body.substr(1));
    }
    const bool digits_only =
        !table_part.empty() && !row_part.empty() &&
        std::all_of(table_part.begin(), table_part.end(),
                    [](unsigned char c) { return std::isdigit(c); }) &&
        std::all_of(row_part.begin(), row_part.end(),
                    [](unsigned char c) { return std::isdigit(c); });
    if (!digits_only || table_part.size() > 6 || row_part.size() > 6) {
        throw ParseError("parse_push: expected 'Q' or 'Cij', got '" + std::string(text) + "'");
    }
    return PushTarget::at(std::stoull(table_part), std::stoull(row_part));
}

/// Equality of coordinate sums forced by a variable flowing from the output
/// of one table into the input of another: sum over the producer's rows with
/// the variable 0 equals the sum over the consumer's rows with it 0. The
/// value-1 equations are implied by the per-table sum equations.
struct LinkingEquation {
    std::string variable;
    std::vector<CoordinateId> lhs;
    std::vector<CoordinateId> rhs;

    bool operator==(const LinkingEquation &) const = default;
};

inline std::vector<LinkingEquation> derive_linking_equations(const BooleanNetwork &net) {
    std::vector<LinkingEquation> equations;
    for (std::size_t producer = 0; producer < net.tables.size(); ++producer) {
        const std::string &variable = net.tables[producer].output_name;
        for (std::size_t consumer = 0; consumer < net.tables.size(); ++consumer) {
            if (consumer == producer) {
                continue;
            }
            const auto &inputs = net.tables[consumer].input_names;
            if (std::find(inputs.begin(), inputs.end(), variable) == inputs.end()) {
                continue;
            }
            LinkingEquation eq;
            eq.variable = variable;
            for (std::size_t j = 0; j < net.tables[producer].rows.size(); ++j) {
                if (net.tables[producer].row_value(j, variable) == 0) {
                    eq.lhs.push_back(CoordinateId{producer, j});
                }
            }
            for (std::size_t j = 0; j < net.tables[consumer].rows.size(); ++j) {
                if (net.tables[consumer].row_value(j, variable) == 0) {
                    eq.rhs.push_back(CoordinateId{consumer, j});
                }
            }
            equations.push_back(std::move(eq));
        }
    }
    return equations;
}

struct ConstraintMachine {
    BooleanNetwork network;
    double chi = 2.0;
    std::vector<LinkingEquation> linking_equations;

    std::size_t sum_equation_count() const { return network.tables.size(); }
    std::size_t power_equation_count() const { return network.tables.size(); }

    void require_coordinate(const CoordinateId &id, const char *op) const {
        if (id.table_index >= network.tables.size() ||
            id.row_index >= network.tables[id.table_index].rows.size()) {
            throw DomainError(std::string(op) + ": coordinate " +
                              coordinate_label(id.table_index, id.row_index) +
                              " does not exist");
        }
    }
};

inline ConstraintMachine build_machine(BooleanNetwork network, double chi = 2.0) {
    if (!(chi > 1.0)) {
        throw DomainError("build_machine: exponent chi must be > 1, got " +
                          std::to_string(chi));
    }
    ConstraintMachine machine;
    machine.linking_equations = derive_linking_equations(network);
    machine.network = std::move(network);
    machine.chi = chi;
    return machine;
}

/// One selected row per table, normalized so the movers and Q equal 1.
struct MachineMovement {
    std::vector<std::size_t> selected_rows;
    std::map<std::string, int> assignment;

    bool operator==(const MachineMovement &) const = default;

    std::vector<std::string> row_labels() const {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < selected_rows.size(); ++i) {
            labels.push_back(coordinate_label(i, selected_rows[i]));
        }
        return labels;
    }
};

/// The unique variable assignment induced by a row selection, or a
/// consistency error when two selected rows disagree on a shared variable.
inline std::map<std::string, int>
movement_to_assignment(const BooleanNetwork &net, const std::vector<std::size_t> &selected_rows) {
    if (selected_rows.size() != net.tables.size()) {
        throw DomainError("movement_to_assignment: expected one row per table");
    }
    std::map<std::string, int> assignment;
    for (std::size_t i = 0; i < net.tables.size(); ++i) {
        const TruthTable &table = net.tables[i];
        if (selected_rows[i] >= table.rows.size()) {
            throw DomainError("movement_to_assignment: table " + std::to_string(i) +
                              " has no row " + std::to_string(selected_rows[i]));
        }
        auto bind = [&](const std::string &name, int value) {
            if (auto [it, inserted] = assignment.emplace(name, value);
                !inserted && it->second != value) {
                throw DomainError("movement_to_assignment: selection is inconsistent on '" +
                                  name + "'");
            }
        };
        const TruthTableRow &row = table.rows[selected_rows[i]];
        for (std::size_t j = 0; j < table.input_names.size(); ++j) {
            bind(table.input_names[j], row.inputs[j]);
        }
        bind(table.output_name, row.output);
    }
    return assignment;
}

inline std::map<std::string, int> movement_to_assignment(const ConstraintMachine &machine,
                                                         const MachineMovement &movement) {
    return movement_to_assignment(machine.network, movement.selected_rows);
}

/// All selections of one row per table whose induced assignments agree on
/// shared variables; with a C_ij push only the movements through that row.
/// Movements come back in lexicographic row order. A push through a row
/// that no consistent selection contains yields an empty list.
inline std::vector<MachineMovement> enumerate_movements(const ConstraintMachine &machine,
                                                        const PushTarget &push) {
    if (!push.is_q()) {
        machine.require_coordinate(*push.coordinate, "enumerate_movements");
    }
    const BooleanNetwork &net = machine.network;
    std::vector<MachineMovement> movements;
    std::vector<std::size_t> selection(net.tables.size(), 0);
    std::map<std::string, int> assignment;

    auto descend = [&](auto &&self, std::size_t table_index) -> void {
        if (table_index == net.tables.size()) {
            MachineMovement movement;
            movement.selected_rows = selection;
            movement.assignment = assignment;
            movements.push_back(std::move(movement));
            return;
        }
        const TruthTable &table = net.tables[table_index];
        for (std::size_t row = 0; row < table.rows.size(); ++row) {
            if (!push.is_q() && push.coordinate->table_index == table_index &&
                push.coordinate->row_index != row) {
                continue;
            }
            std::vector<std::string> bound;
            bool consistent = true;
            auto bind = [&](const std::string &name, int value) {
                const auto [it, inserted] = assignment.emplace(name, value);
                if (inserted) {
                    bound.push_back(name);
                } else if (it->second != value) {
                    consistent = false;
                }
            };
            for (std::size_t j = 0; j < table.input_names.size() && consistent; ++j) {
                bind(table.input_names[j], table.rows[row].inputs[j]);
            }
            if (consistent) {
                bind(table.output_name, table.rows[row].output);
            }
            if (consistent) {
                selection[table_index] = row;
                self(self, table_index + 1);
            }
            for (const auto &name : bound) {
                assignment.erase(name);
            }
        }
    };
    descend(descend, 0);
    return movements;
}

/// Uniform draw over the enumerated movements: the one distribution
/// symmetric under exchange of any two coordinates.
inline const MachineMovement &sample_movement(const std::vector<MachineMovement> &movements,
                                              RandomStream &rng) {
    if (movements.empty()) {
        throw DomainError("sample_movement: no movement satisfies the push");
    }
    return movements[static_cast<std::size_t>(rng.next_below(movements.size()))];
}

inline MachineMovement sample_movement(const ConstraintMachine &machine, const PushTarget &push,
                                       RandomStream &rng) {
    return sample_movement(enumerate_movements(machine, push), rng);
}

/// Nonnegative value per coordinate plus Q, as fed to check_exclusivity.
struct CoordinateAssignment {
    std::vector<std::vector<double>> coordinates;
    double q = 0.0;
};

inline CoordinateAssignment zero_assignment(const ConstraintMachine &machine) {
    CoordinateAssignment values;
    for (const auto &table : machine.network.tables) {
        values.coordinates.emplace_back(table.rows.size(), 0.0);
    }
    return values;
}

/// Coordinate vector of a movement: 1 on the selected rows, 0 elsewhere, Q = 1.
inline CoordinateAssignment coordinate_values(const ConstraintMachine &machine,
                                              const MachineMovement &movement) {
    CoordinateAssignment values = zero_assignment(machine);
    for (std::size_t i = 0; i < movement.selected_rows.size(); ++i) {
        values.coordinates[i][movement.selected_rows[i]] = 1.0;
    }
    values.q = 1.0;
    return values;
}

struct TableExclusivity {
    std::size_t table_index = 0;
    double sum_residual = 0.0;
    double power_residual = 0.0;
    bool sum_ok = false;
    bool power_ok = false;
};

struct ExclusivityReport {
    std::vector<TableExclusivity> tables;

    bool all_satisfied() const {
        for (const auto &t : tables) {
            if (!t.sum_ok || !t.power_ok) {
                return false;
            }
        }
        return true;
    }
};

/// Checks the sum and power equations per table. With chi > 1 and the sum
/// equation holding at Q > 0, any table with two or more strictly positive
/// coordinates must fail the power equation (strict power-mean inequality),
/// which is what makes movements mutually exclusive.
inline ExclusivityReport check_exclusivity(const ConstraintMachine &machine,
                                           const CoordinateAssignment &values) {
    if (values.coordinates.size() != machine.network.tables.size()) {
        throw DomainError("check_exclusivity: expected one value list per table");
    }
    if (values.q < 0.0) {
        throw DomainError("check_exclusivity: Q must be nonnegative");
    }
    ExclusivityReport report;
    for (std::size_t i = 0; i < values.coordinates.size(); ++i) {
        if (values.coordinates[i].size() != machine.network.tables[i].rows.size()) {
            throw DomainError("check_exclusivity: table " + std::to_string(i) +
                              " expects " +
                              std::to_string(machine.network.tables[i].rows.size()) +
                              " coordinates");
        }
        double sum = 0.0;
        double power_sum = 0.0;
        for (const double c : values.coordinates[i]) {
            if (c < 0.0) {
                throw DomainError("check_exclusivity: coordinates must be nonnegative");
            }
            sum += c;
            power_sum += std::pow(c, machine.chi);
        }
        TableExclusivity check;
        check.table_index = i;
        check.sum_residual = std::abs(values.q - sum);
        check.power_residual = std::abs(std::pow(values.q, machine.chi) - power_sum);
        check.sum_ok = check.sum_residual <= kEquationTolerance;
        check.power_ok = check.power_residual <= kEquationTolerance;
        report.tables.push_back(check);
    }
    return report;
}

/// Exact (integer) satisfaction of sum, power and linking equations by a
/// movement's 0/1 coordinate vector. 1^chi is 1 for any chi, so no floating
/// point is involved.
inline bool movement_satisfies_equations(const ConstraintMachine &machine,
                                         const MachineMovement &movement) {
    if (movement.selected_rows.size() != machine.network.tables.size()) {
        return false;
    }
    for (std::size_t i = 0; i < movement.selected_rows.size(); ++i) {
        if (movement.selected_rows[i] >= machine.network.tables[i].rows.size()) {
            return false;
        }
        // one selected row per table: sum = 1 = Q and sum of chi-powers = 1 = Q^chi
    }
    auto selected = [&](const CoordinateId &id) {
        return movement.selected_rows[id.table_index] == id.row_index ? 1 : 0;
    };
    for (const auto &eq : machine.linking_equations) {
        int lhs = 0;
        int rhs = 0;
        for (const auto &id : eq.lhs) {
            lhs += selected(id);
        }
        for (const auto &id : eq.rhs) {
            rhs += selected(id);
        }
        if (lhs != rhs) {
            return false;
        }
    }
    return true;
}

/// Populations from coordinate ratios: for a variable mentioned by table i,
/// p_zero = (sum of C_ij over rows with the variable 0) / Q. A movement gives
/// exact 0/1 values; the all-zero (disassembled) configuration is 0/0 and is
/// reported as the flagged symmetric default (1/2, 1/2).
inline PopulationVector
movement_populations(const ConstraintMachine &machine,
                     const std::optional<MachineMovement> &movement) {
    const BooleanNetwork &net = machine.network;
    if (movement.has_value() && movement->selected_rows.size() != net.tables.size()) {
        throw DomainError("movement_populations: expected one selected row per table");
    }
    PopulationVector populations;
    for (const auto &variable : net.variables) {
        const TruthTable *table = nullptr;
        std::size_t table_index = 0;
        for (std::size_t i = 0; i < net.tables.size(); ++i) {
            if (net.tables[i].mentions(variable)) {
                table = &net.tables[i];
                table_index = i;
                break;
            }
        }
        if (table == nullptr) {
            throw DomainError("movement_populations: variable '" + variable +
                              "' is not mentioned in any table");
        }
        QubitPopulation entry;
        entry.label = variable;
        if (!movement.has_value()) {
            entry.p_zero = 0.5;
            entry.p_one = 0.5;
            entry.indeterminate = true;
        } else {
            const std::size_t mover = movement->selected_rows.at(table_index);
            double zero_sum = 0.0;
            double one_sum = 0.0;
            for (std::size_t j = 0; j < table->rows.size(); ++j) {
                const double coordinate = (j == mover) ? 1.0 : 0.0;
                if (table->row_value(j, variable) == 0) {
                    zero_sum += coordinate;
                } else {
                    one_sum += coordinate;
                }
            }
            entry.p_zero = zero_sum; // Q = 1
            entry.p_one = one_sum;
        }
        populations.entries.push_back(std::move(entry));
    }
    return populations;
}

/// Reads an n-bit value from assignment entries prefix0..prefix{n-1},
/// prefix0 being the most significant bit.
inline std::uint64_t assignment_bits(const std::map<std::string, int> &assignment,
                                     const std::string &prefix, int n_bits) {
    std::uint64_t value = 0;
    for (int i = 0; i < n_bits; ++i) {
        const std::string name = prefix + std::to_string(i);
        const auto it = assignment.find(name);
        if (it == assignment.end()) {
            throw DomainError("assignment_bits: variable '" + name + "' is not assigned");
        }
        value = (value << 1) | static_cast<std::uint64_t>(it->second);
    }
    return value;
}

} // namespace qsearch
