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

#include "ivbfwn/model.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ivbfwn {

namespace {

// Written so that NaN fails the inside test.
bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }
bool in_neg_unit(double x) { return x >= -1.0 && x <= 0.0; }

std::string num(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

PosInterval::PosInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!in_unit(lo) || !in_unit(hi)) {
        throw RangeError("interval endpoint outside [0, 1]: [" + num(lo) + ", " + num(hi) + "]");
    }
    if (!(lo <= hi)) {
        throw OrderError("reversed interval: [" + num(lo) + ", " + num(hi) + "]");
    }
}

NegInterval::NegInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!in_neg_unit(lo) || !in_neg_unit(hi)) {
        throw RangeError("interval endpoint outside [-1, 0]: [" + num(lo) + ", " + num(hi) + "]");
    }
    if (!(lo <= hi)) {
        throw OrderError("reversed interval: [" + num(lo) + ", " + num(hi) + "]");
    }
}

IvbfwnNumber::IvbfwnNumber(PosInterval truth_pos, PosInterval ind_pos, PosInterval fals_pos,
                           NegInterval truth_neg, NegInterval ind_neg, NegInterval fals_neg,
                           double weight)
    : truth_pos_(truth_pos),
      ind_pos_(ind_pos),
      fals_pos_(fals_pos),
      truth_neg_(truth_neg),
      ind_neg_(ind_neg),
      fals_neg_(fals_neg),
      weight_(weight) {
    if (!in_unit(weight)) {
        throw WeightError("weight outside [0, 1]: " + num(weight));
    }
    // Membership-sum condition: 0 <= sum(positive) - sum(negative) <= 12.
    // Implied by the interval ranges; asserted on every construction anyway.
    const double spread = truth_pos_.lo() + truth_pos_.hi() + ind_pos_.lo() + ind_pos_.hi() +
                          fals_pos_.lo() + fals_pos_.hi() - truth_neg_.lo() - truth_neg_.hi() -
                          ind_neg_.lo() - ind_neg_.hi() - fals_neg_.lo() - fals_neg_.hi();
    if (!(spread >= 0.0 && spread <= 12.0)) {
        throw RangeError("membership sum condition violated: " + num(spread));
    }
}

BnNumber::BnNumber(double truth_pos, double ind_pos, double fals_pos,
                   double truth_neg, double ind_neg, double fals_neg)
    : truth_pos_(truth_pos),
      ind_pos_(ind_pos),
      fals_pos_(fals_pos),
      truth_neg_(truth_neg),
      ind_neg_(ind_neg),
      fals_neg_(fals_neg) {
    if (!in_unit(truth_pos) || !in_unit(ind_pos) || !in_unit(fals_pos)) {
        throw RangeError("positive membership outside [0, 1]");
    }
    if (!in_neg_unit(truth_neg) || !in_neg_unit(ind_neg) || !in_neg_unit(fals_neg)) {
        throw RangeError("negative membership outside [-1, 0]");
    }
}

void IvbfwnSet::insert(std::string label, IvbfwnNumber value) {
    if (has(label)) {
        throw DuplicateLabel("duplicate element label: " + label);
    }
    entries_.push_back(Entry{std::move(label), value});
}

bool IvbfwnSet::has(std::string_view label) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return e.label == label; });
}

const IvbfwnNumber& IvbfwnSet::at(std::string_view label) const {
    for (const Entry& e : entries_) {
        if (e.label == label) return e.value;
    }
    throw std::out_of_range("no element labelled '" + std::string(label) + "'");
}

std::vector<std::string> IvbfwnSet::labels() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.label);
    return out;
}

bool IvbfwnSet::same_universe(const IvbfwnSet& other) const {
    if (size() != other.size()) return false;
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return other.has(e.label); });
}

std::string to_string(const Violation& v) {
    std::ostringstream os;
    if (v.row > 0 && v.col > 0) {
        os << "cell (" << v.row << "," << v.col << ") ";
    }
    if (!v.field.empty()) os << v.field << ": ";
    os << v.reason;
    return os.str();
}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
    std::ostringstream os;
    os << "matrix validation failed (" << violations.size() << " violation"
       << (violations.size() == 1 ? "" : "s") << ")";
    for (const Violation& v : violations) os << "\n  " << to_string(v);
    return os.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

CellData to_data(const IvbfwnNumber& n) {
    CellData c;
    c.truth_pos = {n.truth_pos().lo(), n.truth_pos().hi()};
    c.ind_pos = {n.ind_pos().lo(), n.ind_pos().hi()};
    c.fals_pos = {n.fals_pos().lo(), n.fals_pos().hi()};
    c.truth_neg = {n.truth_neg().lo(), n.truth_neg().hi()};
    c.ind_neg = {n.ind_neg().lo(), n.ind_neg().hi()};
    c.fals_neg = {n.fals_neg().lo(), n.fals_neg().hi()};
    c.weight = n.weight();
    return c;
}

IvbfwnNumber number_from_data(const CellData& cell) {
    return IvbfwnNumber(PosInterval(cell.truth_pos.lo, cell.truth_pos.hi),
                        PosInterval(cell.ind_pos.lo, cell.ind_pos.hi),
                        PosInterval(cell.fals_pos.lo, cell.fals_pos.hi),
                        NegInterval(cell.truth_neg.lo, cell.truth_neg.hi),
                        NegInterval(cell.ind_neg.lo, cell.ind_neg.hi),
                        NegInterval(cell.fals_neg.lo, cell.fals_neg.hi), cell.weight);
}

namespace {

void check_interval(const IntervalData& iv, bool positive, const std::string& field,
                    std::vector<Violation>& out) {
    const double min = positive ? 0.0 : -1.0;
    const double max = positive ? 1.0 : 0.0;
    const char* range = positive ? "[0, 1]" : "[-1, 0]";
    if (!(iv.lo >= min && iv.lo <= max)) {
        out.push_back({0, 0, field + ".lo", num(iv.lo) + " outside " + range});
    }
    if (!(iv.hi >= min && iv.hi <= max)) {
        out.push_back({0, 0, field + ".hi", num(iv.hi) + " outside " + range});
    }
    if (!(iv.lo <= iv.hi)) {
        out.push_back({0, 0, field, "reversed interval [" + num(iv.lo) + ", " + num(iv.hi) + "]"});
    }
}

}  // namespace

std::vector<Violation> validate_cell(const CellData& cell) {
    std::vector<Violation> out;
    check_interval(cell.truth_pos, true, "truth_pos", out);
    check_interval(cell.ind_pos, true, "ind_pos", out);
    check_interval(cell.fals_pos, true, "fals_pos", out);
    check_interval(cell.truth_neg, false, "truth_neg", out);
    check_interval(cell.ind_neg, false, "ind_neg", out);
    check_interval(cell.fals_neg, false, "fals_neg", out);
    if (!(cell.weight >= 0.0 && cell.weight <= 1.0)) {
        out.push_back({0, 0, "weight", num(cell.weight) + " outside [0, 1]"});
    }
    if (out.empty()) {
        const double spread = cell.truth_pos.lo + cell.truth_pos.hi + cell.ind_pos.lo +
                              cell.ind_pos.hi + cell.fals_pos.lo + cell.fals_pos.hi -
                              cell.truth_neg.lo - cell.truth_neg.hi - cell.ind_neg.lo -
                              cell.ind_neg.hi - cell.fals_neg.lo - cell.fals_neg.hi;
        if (!(spread >= 0.0 && spread <= 12.0)) {
            out.push_back({0, 0, "", "membership sum condition violated: " + num(spread)});
        }
    }
    return out;
}

std::vector<Violation> validate_matrix(const MatrixData& data) {
    std::vector<Violation> out;
    if (data.alternatives.empty()) out.push_back({0, 0, "alternatives", "empty alternatives"});
    if (data.criteria.empty()) out.push_back({0, 0, "criteria", "empty criteria"});

    auto check_unique = [&out](const std::vector<std::string>& labels, const char* field) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            for (std::size_t j = i + 1; j < labels.size(); ++j) {
                if (labels[i] == labels[j]) {
                    out.push_back({0, 0, field, "duplicate label '" + labels[i] + "'"});
                }
            }
        }
    };
    check_unique(data.alternatives, "alternatives");
    check_unique(data.criteria, "criteria");

    if (data.cells.size() != data.alternatives.size()) {
        out.push_back({0, 0, "cells",
                       "row count " + std::to_string(data.cells.size()) + " does not match " +
                           std::to_string(data.alternatives.size()) + " alternatives"});
    }
    for (std::size_t i = 0; i < data.cells.size(); ++i) {
        const auto& row = data.cells[i];
        if (row.size() != data.criteria.size()) {
            out.push_back({i + 1, 0, "cells",
                           "row length " + std::to_string(row.size()) + " does not match " +
                               std::to_string(data.criteria.size()) + " criteria"});
        }
        bool any_positive_weight = false;
        for (std::size_t j = 0; j < row.size(); ++j) {
            for (Violation v : validate_cell(row[j])) {
                v.row = i + 1;
                v.col = j + 1;
                out.push_back(std::move(v));
            }
            if (row[j].weight > 0.0) any_positive_weight = true;
        }
        if (!row.empty() && !any_positive_weight) {
            out.push_back({i + 1, 0, "weight", "every cell weight in the row is zero"});
        }
    }
    return out;
}

DecisionMatrix::DecisionMatrix(std::vector<std::string> alternatives,
                               std::vector<std::string> criteria,
                               std::vector<std::vector<IvbfwnNumber>> cells)
    : alternatives_(std::move(alternatives)),
      criteria_(std::move(criteria)),
      cells_(std::move(cells)) {
    MatrixData data;
    data.alternatives = alternatives_;
    data.criteria = criteria_;
    for (const auto& row : cells_) {
        auto& raw_row = data.cells.emplace_back();
        raw_row.reserve(row.size());
        for (const IvbfwnNumber& n : row) raw_row.push_back(ivbfwn::to_data(n));
    }
    if (auto violations = validate_matrix(data); !violations.empty()) {
        throw ValidationError(std::move(violations));
    }
}

DecisionMatrix DecisionMatrix::from_data(const MatrixData& data) {
    if (auto violations = validate_matrix(data); !violations.empty()) {
        throw ValidationError(std::move(violations));
    }
    std::vector<std::vector<IvbfwnNumber>> cells;
    cells.reserve(data.cells.size());
    for (const auto& raw_row : data.cells) {
        auto& row = cells.emplace_back();
        row.reserve(raw_row.size());
        for (const CellData& c : raw_row) row.push_back(number_from_data(c));
    }
    return DecisionMatrix(data.alternatives, data.criteria, std::move(cells));
}

const IvbfwnNumber& DecisionMatrix::cell(std::size_t row, std::size_t col) const {
    return cells_.at(row).at(col);
}

const std::vector<IvbfwnNumber>& DecisionMatrix::row(std::size_t index) const {
    return cells_.at(index);
}

std::ptrdiff_t DecisionMatrix::row_index(std::string_view label) const {
    for (std::size_t i = 0; i < alternatives_.size(); ++i) {
        if (alternatives_[i] == label) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
}

MatrixData DecisionMatrix::to_data() const {
    MatrixData data;
    data.alternatives = alternatives_;
    data.criteria = criteria_;
    for (const auto& row : cells_) {
        auto& raw_row = data.cells.emplace_back();
        raw_row.reserve(row.size());
        for (const IvbfwnNumber& n : row) raw_row.push_back(ivbfwn::to_data(n));
    }
    return data;
}

}  // namespace ivbfwn
