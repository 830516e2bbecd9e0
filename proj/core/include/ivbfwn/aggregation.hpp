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
#include <vector>

#include "ivbfwn/model.hpp"

namespace ivbfwn {

/// One weight per aggregated number, each in [0, 1], with strictly positive
/// total. The weights are normalized to sum 1 before they are used as
/// exponents; a zero weight makes its item drop out of every product.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights);

    std::size_t size() const { return weights_.size(); }
    const std::vector<double>& values() const { return weights_; }
    double sum() const { return sum_; }

    /// Exponents w_j / sum(w), summing to 1.
    std::vector<double> normalized() const;

private:
    std::vector<double> weights_;
    double sum_ = 0.0;
};

/// Weighted average operator: probabilistic-sum style accumulation of truth
/// on the positive side, weighted geometric products elsewhere, mirrored on
/// the negative side. The result's weight index is the max of the items'
/// own weight indices.
///
/// Products accumulate left to right in the log domain (with a zero-base
/// short circuit), so results are deterministic for a fixed item order.
IvbfwnNumber aggregate_average(std::span<const IvbfwnNumber> items,
                               const WeightVector& weights);

/// Weighted geometric operator, the dual of aggregate_average. The result's
/// weight index is the min of the items' own weight indices.
IvbfwnNumber aggregate_geometric(std::span<const IvbfwnNumber> items,
                                 const WeightVector& weights);

}  // namespace ivbfwn
