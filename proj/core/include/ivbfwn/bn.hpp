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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivbfwn/arithmetic.hpp"
#include "ivbfwn/model.hpp"

// The scalar (non-interval) bipolar neutrosophic baseline. It exists as the
// degenerate-case oracle for the interval-valued machinery: embedding a
// BnNumber as degenerate intervals must commute with every operation.
//
// Note the subset direction here differs from the interval-valued one on the
// negative truth axis; both follow their own definition and no
// cross-consistency is implied.
namespace ivbfwn::bn {

/// Ordered mapping from element labels to BnNumber values.
class BnSet {
public:
    struct Entry {
        std::string label;
        BnNumber value;
    };

    BnSet() = default;

    void insert(std::string label, BnNumber value);

    bool has(std::string_view label) const;
    const BnNumber& at(std::string_view label) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }
    std::vector<std::string> labels() const;
    bool same_universe(const BnSet& other) const;

private:
    std::vector<Entry> entries_;
};

bool contains(const BnNumber& a, const BnNumber& b);
BnNumber set_union(const BnNumber& a, const BnNumber& b);
BnNumber set_intersection(const BnNumber& a, const BnNumber& b);
BnNumber complement(const BnNumber& a);

bool contains(const BnSet& a, const BnSet& b);
bool equals(const BnSet& a, const BnSet& b);
BnSet set_union(const BnSet& a, const BnSet& b);
BnSet set_intersection(const BnSet& a, const BnSet& b);
BnSet complement(const BnSet& a);

BnNumber scale(Scalar lambda, const BnNumber& a);
BnNumber power(const BnNumber& a, Scalar lambda);
BnNumber add(const BnNumber& a, const BnNumber& b);
BnNumber mul(const BnNumber& a, const BnNumber& b);

double score(const BnNumber& a);     // in [0, 1]
double accuracy(const BnNumber& a);  // in [-2, 2]
double certainty(const BnNumber& a); // in [0, 2]

/// Weighted average over a family of BnNumber values. Weights must lie in
/// [0, 1] and sum to 1 within 1e-9; unlike the interval-valued operators,
/// this baseline does not normalize.
BnNumber aggregate_average(std::span<const BnNumber> items,
                           std::span<const double> weights);

BnNumber aggregate_geometric(std::span<const BnNumber> items,
                             std::span<const double> weights);

/// Degenerate-interval embedding: each scalar membership becomes an interval
/// with equal endpoints; the weight index is supplied by the caller.
IvbfwnNumber embed(const BnNumber& a, double weight);

/// Bipolar fuzzy embedding: a (positive, negative) membership pair becomes
/// truth intervals with all other memberships zero and weight index 1.
IvbfwnNumber embed_bipolar(double mu_pos, double mu_neg);

}  // namespace ivbfwn::bn
