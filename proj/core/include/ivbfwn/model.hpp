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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ivbfwn/errors.hpp"

namespace ivbfwn {

/// A closed subinterval of [0, 1]. Construction validates 0 <= lo <= hi <= 1
/// exactly (no epsilon, no clamping); values are immutable afterwards.
class PosInterval {
public:
    constexpr PosInterval() = default;
    PosInterval(double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }

    bool operator==(const PosInterval&) const = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

/// A closed subinterval of [-1, 0]. Construction validates -1 <= lo <= hi <= 0.
class NegInterval {
public:
    constexpr NegInterval() = default;
    NegInterval(double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }

    bool operator==(const NegInterval&) const = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

/// The atomic value of the library: three positive membership intervals
/// (truth, indeterminacy, falsity) over [0, 1], three negative ones over
/// [-1, 0], and a fuzzy weighted index in [0, 1].
///
/// Values are immutable after construction and every operation over them is
/// a pure function, so they may be freely shared across threads.
class IvbfwnNumber {
public:
    IvbfwnNumber(PosInterval truth_pos, PosInterval ind_pos, PosInterval fals_pos,
                 NegInterval truth_neg, NegInterval ind_neg, NegInterval fals_neg,
                 double weight);

    const PosInterval& truth_pos() const { return truth_pos_; }
    const PosInterval& ind_pos() const { return ind_pos_; }
    const PosInterval& fals_pos() const { return fals_pos_; }
    const NegInterval& truth_neg() const { return truth_neg_; }
    const NegInterval& ind_neg() const { return ind_neg_; }
    const NegInterval& fals_neg() const { return fals_neg_; }
    double weight() const { return weight_; }

    bool operator==(const IvbfwnNumber&) const = default;

private:
    PosInterval truth_pos_, ind_pos_, fals_pos_;
    NegInterval truth_neg_, ind_neg_, fals_neg_;
    double weight_ = 0.0;
};

/// A bipolar neutrosophic number: the six memberships of an IvbfwnNumber
/// collapsed to scalars, with no weight index. Serves as the reduction
/// target for the degenerate-interval oracle tests.
class BnNumber {
public:
    BnNumber(double truth_pos, double ind_pos, double fals_pos,
             double truth_neg, double ind_neg, double fals_neg);

    double truth_pos() const { return truth_pos_; }
    double ind_pos() const { return ind_pos_; }
    double fals_pos() const { return fals_pos_; }
    double truth_neg() const { return truth_neg_; }
    double ind_neg() const { return ind_neg_; }
    double fals_neg() const { return fals_neg_; }

    bool operator==(const BnNumber&) const = default;

private:
    double truth_pos_, ind_pos_, fals_pos_;
    double truth_neg_, ind_neg_, fals_neg_;
};

/// A finite mapping from element labels to IvbfwnNumber values. Labels are
/// unique and iteration follows insertion order, which is preserved through
/// serialization.
class IvbfwnSet {
public:
    struct Entry {
        std::string label;
        IvbfwnNumber value;
    };

    IvbfwnSet() = default;

    /// Throws DuplicateLabel if the label is already present.
    void insert(std::string label, IvbfwnNumber value);

    bool has(std::string_view label) const;
    const IvbfwnNumber& at(std::string_view label) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }
    std::vector<std::string> labels() const;

    /// True when both sets carry exactly the same element labels
    /// (insertion order may differ).
    bool same_universe(const IvbfwnSet& other) const;

private:
    std::vector<Entry> entries_;
};

/// One problem found while validating raw matrix data. row/col are 1-based
/// cell coordinates; 0 means the problem is document-level.
struct Violation {
    std::size_t row = 0;
    std::size_t col = 0;
    std::string field;
    std::string reason;

    bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& v);

/// Carries every violation found by a validation pass.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations);

    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Unvalidated numeric mirrors of the domain types. Parsers fill these in,
/// validation scans them and reports violations with coordinates instead of
/// failing at the first bad value.
struct IntervalData {
    double lo = 0.0;
    double hi = 0.0;
};

struct CellData {
    IntervalData truth_pos, ind_pos, fals_pos;
    IntervalData truth_neg, ind_neg, fals_neg;
    double weight = 0.0;
};

struct MatrixData {
    std::vector<std::string> alternatives;
    std::vector<std::string> criteria;
    std::vector<std::vector<CellData>> cells;  // row-major
};

CellData to_data(const IvbfwnNumber& n);
IvbfwnNumber number_from_data(const CellData& cell);

/// Range, order, weight and membership-sum checks for one cell. Returned
/// violations carry the field name; the caller fills in coordinates.
std::vector<Violation> validate_cell(const CellData& cell);

/// Full scan of raw matrix data: dimensions, label uniqueness, per-cell
/// checks, and the positive-row-weight requirement. Collects every
/// violation; never throws on bad data.
std::vector<Violation> validate_matrix(const MatrixData& data);

/// An alternatives x criteria grid of IvbfwnNumber cells. Constructible only
/// from data that passes validate_matrix, so a live DecisionMatrix is always
/// structurally sound.
class DecisionMatrix {
public:
    DecisionMatrix(std::vector<std::string> alternatives,
                   std::vector<std::string> criteria,
                   std::vector<std::vector<IvbfwnNumber>> cells);

    /// Throws ValidationError listing every violation when the data is bad.
    static DecisionMatrix from_data(const MatrixData& data);

    const std::vector<std::string>& alternatives() const { return alternatives_; }
    const std::vector<std::string>& criteria() const { return criteria_; }
    std::size_t alternative_count() const { return alternatives_.size(); }
    std::size_t criterion_count() const { return criteria_.size(); }

    const IvbfwnNumber& cell(std::size_t row, std::size_t col) const;
    const std::vector<IvbfwnNumber>& row(std::size_t index) const;

    /// Index of the alternative with the given label, or -1 if absent.
    std::ptrdiff_t row_index(std::string_view label) const;

    MatrixData to_data() const;

    bool operator==(const DecisionMatrix&) const = default;

private:
    std::vector<std::string> alternatives_;
    std::vector<std::string> criteria_;
    std::vector<std::vector<IvbfwnNumber>> cells_;
};

/// The outcome of ranking a decision matrix: per-alternative aggregates and
/// score/accuracy/certainty values (in matrix row order), the ranking order
/// (best first), and groups of mutually indifferent alternatives.
struct RankingReport {
    std::vector<std::string> alternatives;
    std::vector<IvbfwnNumber> aggregates;
    std::vector<double> scores;
    std::vector<double> accuracies;
    std::vector<double> certainties;
    std::vector<std::string> order;
    std::vector<std::vector<std::string>> ties;

    bool operator==(const RankingReport&) const = default;
};

}  // namespace ivbfwn
