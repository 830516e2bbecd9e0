/*
 * Copyright 2026 the ivbfwn authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// ivbfwn — rank decision matrices of interval-valued bipolar fuzzy weighted
// neutrosophic evaluations, and work with the underlying sets and numbers.
//
// Subcommands: validate, rank, aggregate, score, setop.
// Exit codes: 0 success, 1 validation/schema failure, 2 I/O failure,
// 3 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ivbfwn/engine.hpp"
#include "ivbfwn/io.hpp"
#include "ivbfwn/scoring.hpp"
#include "ivbfwn/set_algebra.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ivbfwn::IoError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw ivbfwn::IoError("cannot read '" + path + "'");
    }
    return buffer.str();
}

// --precision wins over IVBFWN_PRECISION, which wins over the default.
int resolve_precision(const CLI::Option* option, int flag_value) {
    if (option->count() > 0) return flag_value;
    if (const char* env = std::getenv("IVBFWN_PRECISION")) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
            return value;
        } catch (const std::exception&) {
            throw UsageError("IVBFWN_PRECISION is not an integer: '" + std::string(env) + "'");
        }
    }
    return ivbfwn::io::kDefaultPrecision;
}

void require_precision_range(int precision) {
    if (precision < ivbfwn::io::kMinPrecision || precision > ivbfwn::io::kMaxPrecision) {
        throw UsageError("precision must lie in [0, 12], got " + std::to_string(precision));
    }
}

ivbfwn::io::Format parse_format(const std::string& name) {
    if (name == "json") return ivbfwn::io::Format::Json;
    if (name == "table") return ivbfwn::io::Format::Table;
    throw UsageError("unknown format '" + name + "' (expected json or table)");
}

ivbfwn::OperatorChoice parse_operator(const std::string& name) {
    if (name == "average") return ivbfwn::OperatorChoice::Average;
    if (name == "geometric") return ivbfwn::OperatorChoice::Geometric;
    throw UsageError("unknown operator '" + name + "' (expected average or geometric)");
}

int run(int argc, char** argv) {
    CLI::App app{"decision analysis with interval-valued bipolar fuzzy weighted "
                 "neutrosophic numbers"};
    app.require_subcommand(1);

    std::string file_a;
    std::string file_b;
    std::string op_name = "average";
    std::string format_name = "table";
    std::string row_label;
    std::string element_label;
    std::string setop_name;
    int precision = ivbfwn::io::kDefaultPrecision;
    bool with_trace = false;

    CLI::App* validate = app.add_subcommand("validate", "check a matrix document");
    validate->add_option("file", file_a, "matrix document")->required();

    CLI::App* rank = app.add_subcommand("rank", "rank the alternatives of a matrix document");
    rank->add_option("file", file_a, "matrix document")->required();
    rank->add_option("--operator", op_name, "average or geometric");
    rank->add_option("--format", format_name, "json or table");
    CLI::Option* rank_precision = rank->add_option("--precision", precision, "display decimals");
    rank->add_flag("--trace", with_trace, "emit every intermediate value");

    CLI::App* aggregate = app.add_subcommand("aggregate", "aggregate one row of a matrix");
    aggregate->add_option("file", file_a, "matrix document")->required();
    aggregate->add_option("--row", row_label, "alternative label")->required();
    aggregate->add_option("--operator", op_name, "average or geometric");
    aggregate->add_option("--format", format_name, "json or table");
    CLI::Option* aggregate_precision =
        aggregate->add_option("--precision", precision, "display decimals");

    CLI::App* score_cmd = app.add_subcommand("score", "score one element of a set document");
    score_cmd->add_option("file", file_a, "set document")->required();
    score_cmd->add_option("--element", element_label, "element label")->required();
    score_cmd->add_option("--format", format_name, "json or table");
    CLI::Option* score_precision =
        score_cmd->add_option("--precision", precision, "display decimals");

    CLI::App* setop = app.add_subcommand("setop", "union, intersection or complement of sets");
    setop->add_option("operation", setop_name, "union, intersection or complement")->required();
    setop->add_option("fileA", file_a, "set document")->required();
    setop->add_option("fileB", file_b, "second set document (union/intersection)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (validate->parsed()) {
        const ivbfwn::MatrixData data = ivbfwn::io::parse_matrix_data(read_file(file_a));
        const auto violations = ivbfwn::validate_matrix(data);
        if (!violations.empty()) {
            std::cerr << ivbfwn::io::emit_violations(violations);
            return kExitInvalid;
        }
        std::cout << "ok\n";
        return kExitOk;
    }

    if (rank->parsed()) {
        const int p = resolve_precision(rank_precision, precision);
        require_precision_range(p);
        const auto format = parse_format(format_name);
        const auto op = parse_operator(op_name);
        const ivbfwn::DecisionMatrix m = ivbfwn::io::parse_matrix(read_file(file_a));
        if (with_trace) {
            std::cout << ivbfwn::io::emit_trace(ivbfwn::trace(m, op), format, p);
        } else {
            std::cout << ivbfwn::io::emit_report(ivbfwn::rank_alternatives(m, op), format, p);
        }
        return kExitOk;
    }

    if (aggregate->parsed()) {
        const int p = resolve_precision(aggregate_precision, precision);
        require_precision_range(p);
        const auto format = parse_format(format_name);
        const auto op = parse_operator(op_name);
        const ivbfwn::DecisionMatrix m = ivbfwn::io::parse_matrix(read_file(file_a));
        const std::ptrdiff_t index = m.row_index(row_label);
        if (index < 0) {
            throw UsageError("no alternative labelled '" + row_label + "'");
        }
        const auto& row = m.row(static_cast<std::size_t>(index));
        std::vector<double> weights;
        for (const auto& cell : row) weights.push_back(cell.weight());
        const ivbfwn::WeightVector w(std::move(weights));
        const ivbfwn::IvbfwnNumber result = op == ivbfwn::OperatorChoice::Average
                                                ? ivbfwn::aggregate_average(row, w)
                                                : ivbfwn::aggregate_geometric(row, w);
        std::cout << ivbfwn::io::emit_number(result, format, p);
        return kExitOk;
    }

    if (score_cmd->parsed()) {
        const int p = resolve_precision(score_precision, precision);
        require_precision_range(p);
        const auto format = parse_format(format_name);
        const ivbfwn::IvbfwnSet s = ivbfwn::io::parse_set(read_file(file_a));
        if (!s.has(element_label)) {
            throw UsageError("no element labelled '" + element_label + "'");
        }
        std::cout << ivbfwn::io::emit_score(element_label, s.at(element_label), format, p);
        return kExitOk;
    }

    if (setop->parsed()) {
        const bool binary = setop_name == "union" || setop_name == "intersection";
        if (!binary && setop_name != "complement") {
            throw UsageError("unknown set operation '" + setop_name +
                             "' (expected union, intersection or complement)");
        }
        if (binary && file_b.empty()) {
            throw UsageError(setop_name + " needs two set documents");
        }
        if (!binary && !file_b.empty()) {
            throw UsageError("complement takes a single set document");
        }
        const ivbfwn::IvbfwnSet a = ivbfwn::io::parse_set(read_file(file_a));
        if (setop_name == "complement") {
            std::cout << ivbfwn::io::serialize_set(ivbfwn::complement(a));
        } else {
            const ivbfwn::IvbfwnSet b = ivbfwn::io::parse_set(read_file(file_b));
            std::cout << ivbfwn::io::serialize_set(setop_name == "union"
                                                       ? ivbfwn::set_union(a, b)
                                                       : ivbfwn::set_intersection(a, b));
        }
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ivbfwn::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ivbfwn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
