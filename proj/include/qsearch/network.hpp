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
 * Boolean networks given as truth tables whose rows carry coordinate
 * labels C_ij (table i, row j). The network file format is JSON:
 *
 *   {
 *     "variables": ["k0", ...],
 *     "tables": [
 *       {"inputs": ["k0", "x0"], "output": "y0",
 *        "rows": [{"in": [0, 0], "out": 1}, ...]},
 *       ...
 *     ]
 *   }
 *
 * serialize_network() emits the canonical form; parsing it back gives an
 * identical network and identical text.
 */

#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qsearch/errors.hpp"

namespace qsearch {

struct TruthTableRow {
    std::vector<int> inputs;
    int output = 0;

    bool operator==(const TruthTableRow &) const = default;
};

struct TruthTable {
    std::vector<std::string> input_names;
    std::string output_name;
    std::vector<TruthTableRow> rows;

    bool operator==(const TruthTable &) const = default;

    bool mentions(std::string_view variable) const {
        if (output_name == variable) {
            return true;
        }
        for (const auto &name : input_names) {
            if (name == variable) {
                return true;
            }
        }
        return false;
    }

    /// Value the row assigns to a variable it mentions.
    int row_value(std::size_t row_index, std::string_view variable) const {
        const TruthTableRow &row = rows[row_index];
        for (std::size_t i = 0; i < input_names.size(); ++i) {
            if (input_names[i] == variable) {
                return row.inputs[i];
            }
        }
        if (output_name == variable) {
            return row.output;
        }
        throw DomainError("truth table does not mention variable '" + std::string(variable) +
                          "'");
    }
};

struct BooleanNetwork {
    std::vector<std::string> variables;
    std::vector<TruthTable> tables;

    bool operator==(const BooleanNetwork &) const = default;

    bool has_variable(std::string_view name) const {
        for (const auto &v : variables) {
            if (v == name) {
                return true;
            }
        }
        return false;
    }
};

/// Row label in the style C23 = table 2, row 3. Indices above 9 are
/// separated by underscores to stay unambiguous.
inline std::string coordinate_label(std::size_t table_index, std::size_t row_index) {
    if (table_index < 10 && row_index < 10) {
        return "C" + std::to_string(table_index) + std::to_string(row_index);
    }
    return "C" + std::to_string(table_index) + "_" + std::to_string(row_index);
}

namespace detail {

inline std::string row_key(const std::vector<int> &bits) {
    std::string key;
    for (const int b : bits) {
        key += b ? '1' : '0';
    }
    return key;
}

} // namespace detail

/// Parses and validates a network file. Errors name the offending element.
inline BooleanNetwork parse_network(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("parse_network: invalid syntax: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("variables") || !doc.contains("tables")) {
        throw ParseError("parse_network: expected an object with 'variables' and 'tables'");
    }
    if (!doc["variables"].is_array() || !doc["tables"].is_array()) {
        throw ParseError("parse_network: 'variables' and 'tables' must be arrays");
    }

    BooleanNetwork net;
    for (const auto &v : doc["variables"]) {
        if (!v.is_string()) {
            throw ParseError("parse_network: variable names must be strings");
        }
        const std::string name = v.get<std::string>();
        if (net.has_variable(name)) {
            throw ParseError("parse_network: duplicate variable '" + name + "'");
        }
        net.variables.push_back(name);
    }

    std::map<std::string, std::size_t> output_owner;
    std::size_t table_index = 0;
    for (const auto &jt : doc["tables"]) {
        const std::string where = "table " + std::to_string(table_index);
        if (!jt.is_object() || !jt.contains("inputs") || !jt.contains("output") ||
            !jt.contains("rows")) {
            throw ParseError("parse_network: " + where +
                             " needs 'inputs', 'output' and 'rows'");
        }
        TruthTable table;
        for (const auto &jin : jt["inputs"]) {
            if (!jin.is_string()) {
                throw ParseError("parse_network: " + where + " has a non-string input name");
            }
            const std::string name = jin.get<std::string>();
            if (!net.has_variable(name)) {
                throw ParseError("parse_network: " + where + " references unknown variable '" +
                                 name + "'");
            }
            table.input_names.push_back(name);
        }
        if (!jt["output"].is_string()) {
            throw ParseError("parse_network: " + where + " has a non-string output name");
        }
        table.output_name = jt["output"].get<std::string>();
        if (!net.has_variable(table.output_name)) {
            throw ParseError("parse_network: " + where + " references unknown variable '" +
                             table.output_name + "'");
        }
        if (auto [it, inserted] = output_owner.emplace(table.output_name, table_index);
            !inserted) {
            throw ParseError("parse_network: variable '" + table.output_name +
                             "' is the output of tables " + std::to_string(it->second) +
                             " and " + std::to_string(table_index));
        }

        std::map<std::string, std::size_t> seen_inputs;
        std::size_t row_index = 0;
        for (const auto &jrow : jt["rows"]) {
            if (!jrow.is_object() || !jrow.contains("in") || !jrow.contains("out") ||
                !jrow["in"].is_array()) {
                throw ParseError("parse_network: " + where + " row " +
                                 std::to_string(row_index) + " needs 'in' and 'out'");
            }
            TruthTableRow row;
            for (const auto &jbit : jrow["in"]) {
                if (!jbit.is_number_integer() ||
                    (jbit.get<int>() != 0 && jbit.get<int>() != 1)) {
                    throw ParseError("parse_network: " + where + " row " +
                                     std::to_string(row_index) + " has a non-bit input");
                }
                row.inputs.push_back(jbit.get<int>());
            }
            if (row.inputs.size() != table.input_names.size()) {
                throw ParseError("parse_network: " + where + " row " +
                                 std::to_string(row_index) + " has " +
                                 std::to_string(row.inputs.size()) + " inputs, expected " +
                                 std::to_string(table.input_names.size()));
            }
            if (!jrow["out"].is_number_integer() ||
                (jrow["out"].get<int>() != 0 && jrow["out"].get<int>() != 1)) {
                throw ParseError("parse_network: " + where + " row " +
                                 std::to_string(row_index) + " has a non-bit output");
            }
            row.output = jrow["out"].get<int>();

            const std::string key = detail::row_key(row.inputs);
            if (auto [it, inserted] = seen_inputs.emplace(key, row_index); !inserted) {
                throw ParseError("parse_network: " + where + " rows " +
                                 std::to_string(it->second) + " and " +
                                 std::to_string(row_index) + " share input tuple (" + key +
                                 ")");
            }
            table.rows.push_back(std::move(row));
            ++row_index;
        }
        net.tables.push_back(std::move(table));
        ++table_index;
    }
    return net;
}

/// Canonical form: parse_network(serialize_network(net)) == net, and
/// serializing a parsed canonical file reproduces it byte for byte.
inline std::string serialize_network(const BooleanNetwork &net) {
    nlohmann::ordered_json doc;
    doc["variables"] = net.variables;
    doc["tables"] = nlohmann::ordered_json::array();
    for (const auto &table : net.tables) {
        nlohmann::ordered_json jt;
        jt["inputs"] = table.input_names;
        jt["output"] = table.output_name;
        jt["rows"] = nlohmann::ordered_json::array();
        for (const auto &row : table.rows) {
            nlohmann::ordered_json jrow;
            jrow["in"] = row.inputs;
            jrow["out"] = row.output;
            jt["rows"].push_back(std::move(jrow));
        }
        doc["tables"].push_back(std::move(jt));
    }
    return doc.dump(2) + "\n";
}

inline BooleanNetwork load_network_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("parse_network: cannot open network file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_network(buffer.str());
}

/// True when every table has a row matching the assignment on its inputs
/// and that row's output agrees as well.
inline bool satisfies_network(const BooleanNetwork &net,
                              const std::map<std::string, int> &assignment) {
    for (const auto &table : net.tables) {
        bool satisfied = false;
        for (const auto &row : table.rows) {
            bool matches = true;
            for (std::size_t i = 0; i < table.input_names.size(); ++i) {
                const auto it = assignment.find(table.input_names[i]);
                if (it == assignment.end() || it->second != row.inputs[i]) {
                    matches = false;
                    break;
                }
            }
            if (!matches) {
                continue;
            }
            const auto out = assignment.find(table.output_name);
            if (out != assignment.end() && out->second == row.output) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) {
            return false;
        }
    }
    return true;
}

} // namespace qsearch
