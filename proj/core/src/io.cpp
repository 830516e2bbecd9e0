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

#include "ivbfwn/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace ivbfwn::io {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kIntervalFields[] = {"truth_pos", "ind_pos",  "fals_pos",
                                           "truth_neg", "ind_neg", "fals_neg"};

void require_precision(int precision) {
    if (precision < kMinPrecision || precision > kMaxPrecision) {
        throw Error("precision must lie in [" + std::to_string(kMinPrecision) + ", " +
                    std::to_string(kMaxPrecision) + "], got " + std::to_string(precision));
    }
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("not valid JSON: ") + e.what());
    }
}

void require_exact_keys(const Json& obj, std::initializer_list<const char*> keys,
                        const std::string& where) {
    if (!obj.is_object()) {
        throw SchemaError(where + ": expected an object");
    }
    for (const char* key : keys) {
        if (!obj.contains(key)) {
            throw SchemaError(where + ": missing field '" + key + "'");
        }
    }
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : keys) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw SchemaError(where + ": unknown field '" + item.key() + "'");
        }
    }
}

double get_number(const Json& j, const std::string& where) {
    if (!j.is_number()) {
        throw SchemaError(where + ": expected a number");
    }
    return j.get<double>();
}

IntervalData get_interval(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) {
        throw SchemaError(where + ": expected a [lo, hi] pair");
    }
    return {get_number(j[0], where + "[0]"), get_number(j[1], where + "[1]")};
}

CellData get_cell(const Json& j, const std::string& where) {
    require_exact_keys(
        j, {"truth_pos", "ind_pos", "fals_pos", "truth_neg", "ind_neg", "fals_neg", "weight"},
        where);
    CellData c;
    c.truth_pos = get_interval(j["truth_pos"], where + ".truth_pos");
    c.ind_pos = get_interval(j["ind_pos"], where + ".ind_pos");
    c.fals_pos = get_interval(j["fals_pos"], where + ".fals_pos");
    c.truth_neg = get_interval(j["truth_neg"], where + ".truth_neg");
    c.ind_neg = get_interval(j["ind_neg"], where + ".ind_neg");
    c.fals_neg = get_interval(j["fals_neg"], where + ".fals_neg");
    c.weight = get_number(j["weight"], where + ".weight");
    return c;
}

std::vector<std::string> get_labels(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) {
        throw SchemaError(where + ": expected a non-empty array of strings");
    }
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) {
            throw SchemaError(where + ": expected a non-empty array of strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

Json cell_to_json(const CellData& c) {
    Json j = Json::object();
    const IntervalData* intervals[] = {&c.truth_pos, &c.ind_pos,  &c.fals_pos,
                                       &c.truth_neg, &c.ind_neg, &c.fals_neg};
    for (std::size_t k = 0; k < 6; ++k) {
        j[kIntervalFields[k]] = Json::array({intervals[k]->lo, intervals[k]->hi});
    }
    j["weight"] = c.weight;
    return j;
}

Json number_to_json(const IvbfwnNumber& n) { return cell_to_json(to_data(n)); }

IvbfwnNumber number_from_json(const Json& j, const std::string& where) {
    const CellData cell = get_cell(j, where);
    if (auto violations = validate_cell(cell); !violations.empty()) {
        for (auto& v : violations) v.field = where + (v.field.empty() ? "" : "." + v.field);
        throw ValidationError(std::move(violations));
    }
    return number_from_data(cell);
}

std::string render_interval(double lo, double hi, int precision) {
    return "[" + format_fixed(lo, precision) + ", " + format_fixed(hi, precision) + "]";
}

// Rows of label/value pairs aligned into two columns.
std::string render_field_table(const std::vector<std::pair<std::string, std::string>>& rows,
                               const std::string& indent) {
    std::size_t width = 0;
    for (const auto& [label, value] : rows) width = std::max(width, label.size());
    std::ostringstream os;
    for (const auto& [label, value] : rows) {
        os << indent << label << std::string(width - label.size() + 2, ' ') << value << "\n";
    }
    return os.str();
}

std::vector<std::pair<std::string, std::string>> number_rows(const IvbfwnNumber& n,
                                                             int precision) {
    const CellData c = to_data(n);
    const IntervalData* intervals[] = {&c.truth_pos, &c.ind_pos,  &c.fals_pos,
                                       &c.truth_neg, &c.ind_neg, &c.fals_neg};
    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t k = 0; k < 6; ++k) {
        rows.emplace_back(kIntervalFields[k],
                          render_interval(intervals[k]->lo, intervals[k]->hi, precision));
    }
    rows.emplace_back("weight", format_fixed(c.weight, precision));
    return rows;
}

// "A_1 > A_2 ~ A_3 > A_4" with the tied groups joined by "~".
std::string render_order_line(const RankingReport& r) {
    auto tied = [&](const std::string& a, const std::string& b) {
        for (const auto& group : r.ties) {
            bool has_a = false, has_b = false;
            for (const auto& label : group) {
                has_a = has_a || label == a;
                has_b = has_b || label == b;
            }
            if (has_a && has_b) return true;
        }
        return false;
    };
    std::ostringstream os;
    for (std::size_t i = 0; i < r.order.size(); ++i) {
        if (i > 0) os << (tied(r.order[i - 1], r.order[i]) ? " ≈ " : " ≻ ");
        os << r.order[i];
    }
    return os.str();
}

Json report_to_json(const RankingReport& r) {
    Json alternatives = Json::array();
    for (std::size_t i = 0; i < r.alternatives.size(); ++i) {
        Json entry = Json::object();
        entry["label"] = r.alternatives[i];
        entry["aggregate"] = number_to_json(r.aggregates[i]);
        entry["score"] = r.scores[i];
        entry["accuracy"] = r.accuracies[i];
        entry["certainty"] = r.certainties[i];
        alternatives.push_back(std::move(entry));
    }
    Json j = Json::object();
    j["alternatives"] = std::move(alternatives);
    j["order"] = r.order;
    j["ties"] = r.ties;
    return j;
}

std::string report_table(const RankingReport& r, int precision) {
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"rank", "alternative", "score", "accuracy", "certainty"});

    // Ranked order; look up row data by label.
    for (std::size_t pos = 0; pos < r.order.size(); ++pos) {
        std::size_t i = 0;
        while (i < r.alternatives.size() && r.alternatives[i] != r.order[pos]) ++i;
        if (i == r.alternatives.size()) {
            throw Error("order label '" + r.order[pos] + "' is not an alternative");
        }
        grid.push_back({std::to_string(pos + 1), r.order[pos],
                        format_fixed(r.scores[i], precision),
                        format_fixed(r.accuracies[i], precision),
                        format_fixed(r.certainties[i], precision)});
    }

    std::vector<std::size_t> widths(grid[0].size(), 0);
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::ostringstream os;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size()) os << std::string(widths[c] - row[c].size() + 2, ' ');
        }
        os << "\n";
    }
    os << "\nranking: " << render_order_line(r) << "\n";
    return os.str();
}

}  // namespace

std::string format_fixed(double value, int precision) {
    require_precision(precision);
    const double factor = std::pow(10.0, precision);
    double rounded = std::round(value * factor);  // halves go away from zero
    if (rounded == 0.0) rounded = 0.0;            // drop any sign off zero
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", precision, rounded / factor);
    return buffer;
}

MatrixData parse_matrix_data(const std::string& text) {
    const Json root = parse_json(text);
    require_exact_keys(root, {"alternatives", "criteria", "cells"}, "document");

    MatrixData data;
    data.alternatives = get_labels(root["alternatives"], "alternatives");
    data.criteria = get_labels(root["criteria"], "criteria");

    const Json& cells = root["cells"];
    if (!cells.is_array()) {
        throw SchemaError("cells: expected an array of rows");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Json& row = cells[i];
        if (!row.is_array()) {
            throw SchemaError("cells[" + std::to_string(i) + "]: expected an array of cells");
        }
        auto& out_row = data.cells.emplace_back();
        for (std::size_t j = 0; j < row.size(); ++j) {
            out_row.push_back(get_cell(
                row[j], "cells[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
        }
    }
    return data;
}

DecisionMatrix parse_matrix(const std::string& text) {
    return DecisionMatrix::from_data(parse_matrix_data(text));
}

std::string serialize_matrix(const DecisionMatrix& m) {
    const MatrixData data = m.to_data();
    Json j = Json::object();
    j["alternatives"] = data.alternatives;
    j["criteria"] = data.criteria;
    Json rows = Json::array();
    for (const auto& row : data.cells) {
        Json out_row = Json::array();
        for (const CellData& cell : row) out_row.push_back(cell_to_json(cell));
        rows.push_back(std::move(out_row));
    }
    j["cells"] = std::move(rows);
    return j.dump(2) + "\n";
}

IvbfwnSet parse_set(const std::string& text) {
    const Json root = parse_json(text);
    require_exact_keys(root, {"elements"}, "document");
    const Json& elements = root["elements"];
    if (!elements.is_object() || elements.empty()) {
        throw SchemaError("elements: expected a non-empty object of label/value pairs");
    }
    IvbfwnSet out;
    for (const auto& item : elements.items()) {
        out.insert(item.key(), number_from_json(item.value(), "elements." + item.key()));
    }
    return out;
}

std::string serialize_set(const IvbfwnSet& s) {
    Json elements = Json::object();
    for (const auto& e : s.entries()) elements[e.label] = number_to_json(e.value);
    Json j = Json::object();
    j["elements"] = std::move(elements);
    return j.dump(2) + "\n";
}

std::string emit_report(const RankingReport& r, Format format, int precision) {
    require_precision(precision);
    if (format == Format::Json) {
        return report_to_json(r).dump(2) + "\n";
    }
    return report_table(r, precision);
}

RankingReport parse_report(const std::string& text) {
    const Json root = parse_json(text);
    require_exact_keys(root, {"alternatives", "order", "ties"}, "report");

    RankingReport r;
    const Json& alternatives = root["alternatives"];
    if (!alternatives.is_array()) {
        throw SchemaError("alternatives: expected an array");
    }
    for (std::size_t i = 0; i < alternatives.size(); ++i) {
        const std::string where = "alternatives[" + std::to_string(i) + "]";
        const Json& entry = alternatives[i];
        require_exact_keys(entry, {"label", "aggregate", "score", "accuracy", "certainty"}, where);
        if (!entry["label"].is_string()) {
            throw SchemaError(where + ".label: expected a string");
        }
        r.alternatives.push_back(entry["label"].get<std::string>());
        r.aggregates.push_back(number_from_json(entry["aggregate"], where + ".aggregate"));
        r.scores.push_back(get_number(entry["score"], where + ".score"));
        r.accuracies.push_back(get_number(entry["accuracy"], where + ".accuracy"));
        r.certainties.push_back(get_number(entry["certainty"], where + ".certainty"));
    }
    const Json& order = root["order"];
    if (!order.is_array()) {
        throw SchemaError("order: expected an array of strings");
    }
    for (const auto& label : order) {
        if (!label.is_string()) throw SchemaError("order: expected an array of strings");
        r.order.push_back(label.get<std::string>());
    }
    const Json& ties = root["ties"];
    if (!ties.is_array()) {
        throw SchemaError("ties: expected an array of groups");
    }
    for (const auto& group : ties) {
        if (!group.is_array()) throw SchemaError("ties: expected an array of groups");
        auto& out_group = r.ties.emplace_back();
        for (const auto& label : group) {
            if (!label.is_string()) throw SchemaError("ties: expected arrays of strings");
            out_group.push_back(label.get<std::string>());
        }
    }
    return r;
}

std::string emit_trace(const TraceRecord& t, Format format, int precision) {
    require_precision(precision);
    if (format == Format::Json) {
        Json j = Json::object();
        j["operator"] = to_string(t.op);
        j["matrix"] = parse_json(serialize_matrix(t.matrix));
        Json aggregates = Json::array();
        for (const IvbfwnNumber& n : t.aggregates) aggregates.push_back(number_to_json(n));
        j["aggregates"] = std::move(aggregates);
        j["scores"] = t.scores;
        j["accuracies"] = t.accuracies;
        j["certainties"] = t.certainties;
        Json comparisons = Json::array();
        for (const PairwiseComparison& c : t.comparisons) {
            Json entry = Json::object();
            entry["left"] = c.left;
            entry["right"] = c.right;
            entry["result"] = to_string(c.result);
            comparisons.push_back(std::move(entry));
        }
        j["comparisons"] = std::move(comparisons);
        j["report"] = report_to_json(t.report);
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "matrix: " << t.matrix.alternative_count() << " alternatives x "
       << t.matrix.criterion_count() << " criteria\n";
    os << "operator: " << to_string(t.op) << "\n";
    for (std::size_t i = 0; i < t.aggregates.size(); ++i) {
        os << "\naggregate " << t.matrix.alternatives()[i] << "\n";
        auto rows = number_rows(t.aggregates[i], precision);
        rows.emplace_back("score", format_fixed(t.scores[i], precision));
        rows.emplace_back("accuracy", format_fixed(t.accuracies[i], precision));
        rows.emplace_back("certainty", format_fixed(t.certainties[i], precision));
        os << render_field_table(rows, "  ");
    }
    os << "\ncomparisons\n";
    for (const PairwiseComparison& c : t.comparisons) {
        os << "  " << c.left << " vs " << c.right << ": " << to_string(c.result) << "\n";
    }
    os << "\n" << report_table(t.report, precision);
    return os.str();
}

std::string emit_number(const IvbfwnNumber& n, Format format, int precision) {
    require_precision(precision);
    if (format == Format::Json) {
        return number_to_json(n).dump(2) + "\n";
    }
    return render_field_table(number_rows(n, precision), "");
}

std::string emit_score(const std::string& label, const IvbfwnNumber& n, Format format,
                       int precision) {
    require_precision(precision);
    const double s = ivbfwn::score(n);
    const double a = ivbfwn::accuracy(n);
    const double c = ivbfwn::certainty(n);
    if (format == Format::Json) {
        Json j = Json::object();
        j["label"] = label;
        j["score"] = s;
        j["accuracy"] = a;
        j["certainty"] = c;
        return j.dump(2) + "\n";
    }
    return render_field_table({{"element", label},
                               {"score", format_fixed(s, precision)},
                               {"accuracy", format_fixed(a, precision)},
                               {"certainty", format_fixed(c, precision)}},
                              "");
}

std::string emit_violations(std::span<const Violation> violations) {
    std::ostringstream os;
    for (const Violation& v : violations) os << to_string(v) << "\n";
    return os.str();
}

}  // namespace ivbfwn::io
