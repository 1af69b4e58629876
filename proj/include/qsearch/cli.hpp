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
 * Command-line front end. Every subcommand emits a single report: an
 * ordered JSON object in --format json (byte-identical for identical
 * arguments and seed) or an indented key/value rendering in --format text.
 * Expected values and tolerances are part of the report itself, as
 * pass/fail check entries.
 *
 * Exit codes: 0 success, 1 domain error, 2 argument error.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsearch/baseline.hpp"
#include "qsearch/distribution.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/histories.hpp"
#include "qsearch/machine.hpp"
#include "qsearch/network.hpp"
#include "qsearch/quantum.hpp"
#include "qsearch/rng.hpp"

namespace qsearch {
namespace cli {

using Json = nlohmann::ordered_json;

namespace detail {

inline double closed_form_success(std::uint64_t database_size, int rounds) {
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(database_size)));
    const double s = std::sin(static_cast<double>(2 * rounds + 1) * theta);
    return s * s;
}

inline std::string bit_string(std::uint64_t value, int n_bits) {
    std::string s(static_cast<std::size_t>(n_bits), '0');
    for (int i = 0; i < n_bits; ++i) {
        if ((value >> (n_bits - 1 - i)) & 1) {
            s[static_cast<std::size_t>(i)] = '1';
        }
    }
    return s;
}

inline void add_check(Json &report, const std::string &name, const Json &observed,
                      const Json &expected, double tolerance, bool pass) {
    Json check;
    check["name"] = name;
    check["observed"] = observed;
    check["expected"] = expected;
    if (tolerance > 0.0) {
        check["tolerance"] = tolerance;
    }
    check["pass"] = pass;
    report["checks"].push_back(std::move(check));
}

inline void finalize_checks(Json &report) {
    bool all = true;
    if (report.contains("checks")) {
        for (const auto &check : report["checks"]) {
            all = all && check["pass"].get<bool>();
        }
    }
    report["all_checks_pass"] = all;
}

inline Json distribution_entries(const JointDistribution &distribution, int n_bits) {
    const RegisterLayout layout(n_bits);
    Json entries = Json::array();
    for (const auto &[kx, p] : distribution) {
        Json entry;
        entry["k"] = layout.bit_string(kx.first);
        entry["x"] = layout.bit_string(kx.second);
        entry["p"] = p;
        entries.push_back(std::move(entry));
    }
    return entries;
}

inline void render_text(const Json &value, std::ostream &out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (value.is_object()) {
        for (const auto &[key, item] : value.items()) {
            if (item.is_object() || item.is_array()) {
                out << pad << key << ":\n";
                render_text(item, out, indent + 1);
            } else {
                out << pad << key << ": " << item.dump() << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const auto &item : value) {
            if (item.is_object() || item.is_array()) {
                out << pad << "-\n";
                render_text(item, out, indent + 1);
            } else {
                out << pad << "- " << item.dump() << "\n";
            }
        }
    } else {
        out << pad << value.dump() << "\n";
    }
}

inline void emit(const Json &report, const std::string &format, std::ostream &out) {
    if (format == "json") {
        out << report.dump(2) << "\n";
    } else {
        render_text(report, out, 0);
    }
}

/// Transcript rows for the per-item tables in baseline reports.
inline Json transcript_json(const QueryTranscript &transcript, int n_bits) {
    Json item;
    item["k"] = bit_string(transcript.hidden_k, n_bits);
    Json queries = Json::array();
    for (const auto &q : transcript.queries) {
        Json query;
        query["x"] = bit_string(q.x, n_bits);
        query["result"] = q.result;
        queries.push_back(std::move(query));
    }
    item["queries"] = std::move(queries);
    item["answer"] = bit_string(transcript.answer, n_bits);
    item["query_count"] = transcript.query_count();
    return item;
}

} // namespace detail

struct GroverOptions {
    int n_bits = 2;
    std::uint64_t seed = 0;
    std::string measure_k = "last";
};

inline Json run_grover(const GroverOptions &options) {
    const RegisterLayout layout(options.n_bits);
    const int rounds = grover_iterations(layout.database_size());
    RandomStream root(options.seed);

    Json report;
    report["command"] = "grover";
    report["config"] = {{"n", options.n_bits},
                        {"seed", options.seed},
                        {"measure_k", options.measure_k}};
    report["iterations"] = rounds;

    StateVector state = prepare_input(layout);
    MeasurementRecord k_record{SearchRegister::K, 0, 0.0, state};
    double success = 0.0;

    if (options.measure_k == "first") {
        RandomStream k_rng = root.fork("measure-k");
        k_record = measure(state, SearchRegister::K, k_rng);
        state = grover_iterate(k_record.collapsed, rounds);
        success = conditional_success_probability(state, k_record.outcome);
    } else {
        state = grover_iterate(state, rounds);
        success = success_probability(state);
        RandomStream k_rng = root.fork("measure-k");
        k_record = measure(state, SearchRegister::K, k_rng);
        state = k_record.collapsed;
    }
    RandomStream x_rng = root.fork("measure-x");
    const MeasurementRecord x_record = measure(state, SearchRegister::X, x_rng);

    report["oracle_calls"] = x_record.collapsed.oracle_calls;
    report["success_probability"] = success;
    report["measured_k"] = layout.bit_string(k_record.outcome);
    report["measured_x"] = layout.bit_string(x_record.outcome);

    if (options.n_bits <= 3) {
        Json amplitudes = Json::array();
        const StateVector &final_state = x_record.collapsed;
        for (std::size_t i = 0; i < final_state.amplitudes.size(); ++i) {
            const Amplitude a = final_state.amplitudes[i];
            if (std::norm(a) > kNormTolerance) {
                Json entry;
                entry["k"] = layout.bit_string(layout.k_of(i));
                entry["x"] = layout.bit_string(layout.x_of(i));
                entry["v"] = layout.v_of(i);
                entry["re"] = a.real();
                entry["im"] = a.imag();
                amplitudes.push_back(std::move(entry));
            }
        }
        report["final_amplitudes"] = std::move(amplitudes);
    }

    const double expected = detail::closed_form_success(layout.database_size(), rounds);
    detail::add_check(report, "success_probability_matches_closed_form", success, expected,
                      kProbabilityTolerance, std::abs(success - expected) <= kProbabilityTolerance);
    detail::add_check(report, "oracle_calls_equal_iterations", x_record.collapsed.oracle_calls,
                      rounds, 0.0, x_record.collapsed.oracle_calls == rounds);
    detail::add_check(report, "solution_matches_oracle_choice",
                      layout.bit_string(x_record.outcome), layout.bit_string(k_record.outcome),
                      0.0, x_record.outcome == k_record.outcome);
    detail::add_check(report, "v_register_intact", v_register_intact(x_record.collapsed), true,
                      0.0, v_register_intact(x_record.collapsed));
    detail::finalize_checks(report);
    return report;
}

struct MachineOptions {
    std::string network_path;
    std::string push = "Q";
    double chi = 2.0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

inline Json movement_json(const MachineMovement &movement) {
    Json item;
    item["rows"] = movement.row_labels();
    Json assignment;
    for (const auto &[name, value] : movement.assignment) {
        assignment[name] = value;
    }
    item["assignment"] = std::move(assignment);
    return item;
}

inline Json run_machine_enumerate(const MachineOptions &options) {
    const BooleanNetwork network = load_network_file(options.network_path);
    const ConstraintMachine machine = build_machine(network, options.chi);
    const PushTarget push = parse_push(options.push);
    const std::vector<MachineMovement> movements = enumerate_movements(machine, push);

    Json report;
    report["command"] = "machine enumerate";
    report["config"] = {{"network", options.network_path},
                        {"push", options.push},
                        {"chi", options.chi}};
    report["equations"] = {{"sum", machine.sum_equation_count()},
                           {"power", machine.power_equation_count()},
                           {"linking", machine.linking_equations.size()}};
    report["movement_count"] = movements.size();
    Json items = Json::array();
    bool equations_hold = true;
    for (const auto &movement : movements) {
        equations_hold = equations_hold && movement_satisfies_equations(machine, movement);
        items.push_back(movement_json(movement));
    }
    report["movements"] = std::move(items);
    detail::add_check(report, "movements_satisfy_all_equations", equations_hold, true, 0.0,
                      equations_hold);
    detail::finalize_checks(report);
    return report;
}

inline Json run_machine_sample(const MachineOptions &options) {
    const BooleanNetwork network = load_network_file(options.network_path);
    const ConstraintMachine machine = build_machine(network, options.chi);
    const PushTarget push = parse_push(options.push);
    const std::vector<MachineMovement> movements = enumerate_movements(machine, push);
    if (movements.empty()) {
        throw DomainError("sample_movement: no movement satisfies the push");
    }

    RandomStream rng = RandomStream(options.seed).fork("machine-sample");
    std::vector<std::uint64_t> counts(movements.size(), 0);
    for (std::uint64_t t = 0; t < options.trials; ++t) {
        ++counts[static_cast<std::size_t>(rng.next_below(movements.size()))];
    }

    Json report;
    report["command"] = "machine sample";
    report["config"] = {{"network", options.network_path},
                        {"push", options.push},
                        {"chi", options.chi},
                        {"trials", options.trials},
                        {"seed", options.seed}};
    report["movement_count"] = movements.size();

    const double expected_frequency = 1.0 / static_cast<double>(movements.size());
    double max_deviation = 0.0;
    Json items = Json::array();
    for (std::size_t i = 0; i < movements.size(); ++i) {
        Json item = movement_json(movements[i]);
        const double frequency =
            static_cast<double>(counts[i]) / static_cast<double>(options.trials);
        item["count"] = counts[i];
        item["frequency"] = frequency;
        max_deviation = std::max(max_deviation, std::abs(frequency - expected_frequency));
        items.push_back(std::move(item));
    }
    report["movements"] = std::move(items);
    report["expected_frequency"] = expected_frequency;

    // 5 sigma of a binomial frequency, floored at the documented 0.01
    const double sigma = std::sqrt(expected_frequency * (1.0 - expected_frequency) /
                                   static_cast<double>(options.trials));
    const double tolerance = std::max(0.01, 5.0 * sigma);
    detail::add_check(report, "frequencies_uniform", max_deviation, 0.0, tolerance,
                      max_deviation <= tolerance);
    detail::finalize_checks(report);
    return report;
}

struct BaselineOptions {
    int n_bits = 2;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

inline Json run_baseline(const BaselineOptions &options) {
    if (options.n_bits < 1 || options.n_bits > 10) {
        throw DomainError("classical_search: register size must be between 1 and 10 bits");
    }
    const std::uint64_t size = std::uint64_t(1) << options.n_bits;
    RandomStream rng = RandomStream(options.seed).fork("baseline");

    std::uint64_t total_queries = 0;
    std::uint64_t observed_worst = 0;
    Json samples = Json::array();
    for (std::uint64_t t = 0; t < options.trials; ++t) {
        const std::uint64_t hidden_k = rng.next_below(size);
        const QueryTranscript transcript = classical_search(options.n_bits, hidden_k, rng);
        total_queries += transcript.query_count();
        observed_worst = std::max<std::uint64_t>(observed_worst, transcript.query_count());
        if (samples.size() < 3) {
            samples.push_back(detail::transcript_json(transcript, options.n_bits));
        }
    }
    const double mc_mean =
        static_cast<double>(total_queries) / static_cast<double>(options.trials);
    const Rational exact = exact_mean_queries(options.n_bits);

    Json report;
    report["command"] = "baseline";
    report["config"] = {{"n", options.n_bits}, {"trials", options.trials}, {"seed", options.seed}};
    report["mean_queries"] = mc_mean;
    report["exact_mean_queries"] = exact.to_string();
    report["exact_mean_value"] = exact.to_double();
    report["worst_case_queries"] = worst_case_queries(options.n_bits);
    report["observed_worst_queries"] = observed_worst;
    report["grover_oracle_calls"] = grover_iterations(size);
    report["example_transcripts"] = std::move(samples);

    // per-trial variance from the exact position costs
    double second_moment = 0.0;
    for (std::uint64_t position = 0; position < size; ++position) {
        const double c = static_cast<double>(queries_at_position(position, size));
        second_moment += c * c / static_cast<double>(size);
    }
    const double variance = second_moment - exact.to_double() * exact.to_double();
    const double tolerance =
        std::max(0.02, 5.0 * std::sqrt(variance / static_cast<double>(options.trials)));
    detail::add_check(report, "mean_queries_matches_exact", mc_mean, exact.to_double(), tolerance,
                      std::abs(mc_mean - exact.to_double()) <= tolerance);
    if (size >= 4) {
        detail::add_check(report, "quantum_uses_fewer_queries", grover_iterations(size),
                          exact.to_double(), 0.0,
                          static_cast<double>(grover_iterations(size)) < exact.to_double());
    }
    detail::finalize_checks(report);
    return report;
}

struct HistoriesOptions {
    int n_bits = 2;
};

inline Json run_histories(const HistoriesOptions &options) {
    const std::uint64_t per_k = history_count(options.n_bits);
    const std::uint64_t size = std::uint64_t(1) << options.n_bits;

    std::uint64_t min_queries = ~std::uint64_t(0);
    std::uint64_t max_queries = 0;
    std::uint64_t total_queries = 0;
    std::uint64_t correct = 0;
    std::uint64_t total = 0;
    for (std::uint64_t k = 0; k < size; ++k) {
        for_each_history(options.n_bits, k, [&](const History &h) {
            const std::uint64_t queries = h.transcript.query_count();
            min_queries = std::min(min_queries, queries);
            max_queries = std::max(max_queries, queries);
            total_queries += queries;
            correct += h.transcript.answer == k ? 1 : 0;
            ++total;
        });
    }

    Json report;
    report["command"] = "histories";
    report["config"] = {{"n", options.n_bits}};
    report["histories_per_k"] = per_k;
    report["history_total"] = total;
    report["known_bits_per_history"] = options.n_bits / 2;
    report["residual_candidates"] = std::uint64_t(1) << (options.n_bits / 2);
    report["min_queries"] = min_queries;
    report["mean_queries"] = static_cast<double>(total_queries) / static_cast<double>(total);
    report["max_queries"] = max_queries;
    report["grover_oracle_calls"] = grover_iterations(size);

    const std::uint64_t residual_worst = residual_worst_case_queries(options.n_bits);
    const double ratio = static_cast<double>(grover_iterations(size)) /
                         static_cast<double>(residual_worst);
    report["residual_worst_case"] = residual_worst;
    report["grover_to_residual_ratio"] = ratio;

    detail::add_check(report, "all_histories_answer_correctly", correct, total, 0.0,
                      correct == total);
    detail::add_check(report, "worst_history_matches_residual_bound", max_queries, residual_worst,
                      0.0, max_queries == residual_worst);
    detail::add_check(report, "grover_to_residual_ratio_in_band", ratio, 1.0, 0.5,
                      ratio >= 0.5 && ratio <= 1.5);
    detail::finalize_checks(report);
    return report;
}

struct CompareOptions {
    int n_bits = 2;
    std::string network_path;
    std::string push = "C23";
    double chi = 2.0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

inline Json run_compare(const CompareOptions &options) {
    const RegisterLayout layout(options.n_bits);
    require_even_bits(options.n_bits, "compare");
    RandomStream root(options.seed);

    // quantum side: sampled joint (K, X) outcomes on the amplified state
    const StateVector amplified = grover_run(layout);
    RandomStream q_rng = root.fork("quantum");
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> quantum_counts;
    for (std::uint64_t t = 0; t < options.trials; ++t) {
        const MeasurementRecord k_record = measure(amplified, SearchRegister::K, q_rng);
        const MeasurementRecord x_record =
            measure(k_record.collapsed, SearchRegister::X, q_rng);
        ++quantum_counts[{k_record.outcome, x_record.outcome}];
    }
    const JointDistribution quantum = normalized_counts(quantum_counts, options.trials);

    // machine side: sampled movements through the pushed coordinate
    const BooleanNetwork network = load_network_file(options.network_path);
    const ConstraintMachine machine = build_machine(network, options.chi);
    const std::vector<MachineMovement> movements =
        enumerate_movements(machine, parse_push(options.push));
    if (movements.empty()) {
        throw DomainError("sample_movement: no movement satisfies the push");
    }
    RandomStream m_rng = root.fork("machine");
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> machine_counts;
    for (std::uint64_t t = 0; t < options.trials; ++t) {
        const MachineMovement &movement = sample_movement(movements, m_rng);
        ++machine_counts[{assignment_bits(movement.assignment, "k", options.n_bits),
                          assignment_bits(movement.assignment, "x", options.n_bits)}];
    }
    const JointDistribution machine_distribution =
        normalized_counts(machine_counts, options.trials);

    // history side: exact outcome distribution
    const JointDistribution histories = history_outcome_distribution(options.n_bits);

    const double tv_qm = total_variation_distance(quantum, machine_distribution);
    const double tv_qh = total_variation_distance(quantum, histories);
    const double tv_mh = total_variation_distance(machine_distribution, histories);

    Json report;
    report["command"] = "compare";
    report["config"] = {{"n", options.n_bits},     {"network", options.network_path},
                        {"push", options.push},    {"chi", options.chi},
                        {"trials", options.trials}, {"seed", options.seed}};
    report["quantum"] = detail::distribution_entries(quantum, options.n_bits);
    report["machine"] = detail::distribution_entries(machine_distribution, options.n_bits);
    report["histories"] = detail::distribution_entries(histories, options.n_bits);
    report["tv_quantum_machine"] = tv_qm;
    report["tv_quantum_histories"] = tv_qh;
    report["tv_machine_histories"] = tv_mh;

    const double threshold = 0.02;
    detail::add_check(report, "tv_quantum_machine_small", tv_qm, 0.0, threshold,
                      tv_qm < threshold);
    detail::add_check(report, "tv_quantum_histories_small", tv_qh, 0.0, threshold,
                      tv_qh < threshold);
    detail::add_check(report, "tv_machine_histories_small", tv_mh, 0.0, threshold,
                      tv_mh < threshold);
    detail::finalize_checks(report);
    return report;
}

/// Parses argv (without the program name), runs the subcommand and writes
/// the report to `out`. Diagnostics go to `err`.
inline int run_command(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Grover search simulator with a constraint-machine measurement model"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));

    GroverOptions grover_options;
    CLI::App *grover_cmd = app.add_subcommand("grover", "Run the quantum search");
    grover_cmd->fallthrough();
    grover_cmd->add_option("--n", grover_options.n_bits, "Bits per search register")->required();
    grover_cmd->add_option("--seed", grover_options.seed, "RNG seed")->required();
    grover_cmd->add_option("--measure-k", grover_options.measure_k,
                           "When to measure the oracle register")
        ->check(CLI::IsMember({"first", "last"}));

    CLI::App *machine_cmd = app.add_subcommand("machine", "Constraint machine operations");
    machine_cmd->fallthrough();
    machine_cmd->require_subcommand(1);
    MachineOptions machine_options;
    CLI::App *enumerate_cmd =
        machine_cmd->add_subcommand("enumerate", "List all movements for a push");
    enumerate_cmd->fallthrough();
    enumerate_cmd->add_option("--network", machine_options.network_path, "Network file")
        ->required();
    enumerate_cmd->add_option("--push", machine_options.push, "Q or a row coordinate like C23")
        ->required();
    enumerate_cmd->add_option("--chi", machine_options.chi, "Power-equation exponent");
    CLI::App *sample_cmd = machine_cmd->add_subcommand("sample", "Sample movements for a push");
    sample_cmd->fallthrough();
    sample_cmd->add_option("--network", machine_options.network_path, "Network file")->required();
    sample_cmd->add_option("--push", machine_options.push, "Row coordinate like C23")->required();
    sample_cmd->add_option("--trials", machine_options.trials, "Sample count")
        ->required()
        ->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", machine_options.seed, "RNG seed")->required();
    sample_cmd->add_option("--chi", machine_options.chi, "Power-equation exponent");

    BaselineOptions baseline_options;
    CLI::App *baseline_cmd = app.add_subcommand("baseline", "Classical query baseline");
    baseline_cmd->fallthrough();
    baseline_cmd->add_option("--n", baseline_options.n_bits, "Bits per register")->required();
    baseline_cmd->add_option("--trials", baseline_options.trials, "Trial count")
        ->required()
        ->check(CLI::PositiveNumber);
    baseline_cmd->add_option("--seed", baseline_options.seed, "RNG seed")->required();

    HistoriesOptions histories_options;
    CLI::App *histories_cmd =
        app.add_subcommand("histories", "Half-information history decomposition");
    histories_cmd->fallthrough();
    histories_cmd->add_option("--n", histories_options.n_bits, "Bits per register")->required();

    CompareOptions compare_options;
    CLI::App *compare_cmd =
        app.add_subcommand("compare", "Quantum vs machine vs histories statistics");
    compare_cmd->fallthrough();
    compare_cmd->add_option("--n", compare_options.n_bits, "Bits per register")->required();
    compare_cmd->add_option("--network", compare_options.network_path, "Network file")
        ->required();
    compare_cmd->add_option("--push", compare_options.push, "Row coordinate like C23");
    compare_cmd->add_option("--chi", compare_options.chi, "Power-equation exponent");
    compare_cmd->add_option("--trials", compare_options.trials, "Sample count")
        ->required()
        ->check(CLI::PositiveNumber);
    compare_cmd->add_option("--seed", compare_options.seed, "RNG seed")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "argument error: " << e.what() << "\n";
        return 2;
    }

    try {
        Json report;
        if (grover_cmd->parsed()) {
            report = run_grover(grover_options);
        } else if (machine_cmd->parsed()) {
            report = enumerate_cmd->parsed() ? run_machine_enumerate(machine_options)
                                             : run_machine_sample(machine_options);
        } else if (baseline_cmd->parsed()) {
            report = run_baseline(baseline_options);
        } else if (histories_cmd->parsed()) {
            report = run_histories(histories_options);
        } else {
            report = run_compare(compare_options);
        }
        detail::emit(report, format, out);
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace cli
} // namespace qsearch
