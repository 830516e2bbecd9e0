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

#include "ivbfwn/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace ivbfwn {

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    for (double w : weights_) {
        if (!(w >= 0.0 && w <= 1.0)) {
            std::ostringstream os;
            os << "aggregation weight outside [0, 1]: " << w;
            throw WeightError(os.str());
        }
        sum_ += w;
    }
    if (!(sum_ > 0.0)) {
        throw ZeroWeightSum("aggregation weights sum to zero");
    }
}

std::vector<double> WeightVector::normalized() const {
    std::vector<double> out;
    out.reserve(weights_.size());
    for (double w : weights_) out.push_back(w / sum_);
    return out;
}

namespace {

double neg(double x) { return x == 0.0 ? 0.0 : -x; }

// Left-to-right product of base_j ^ exponent_j in the log domain. A zero
// exponent drops the factor; a zero base under a positive exponent makes
// the whole product zero.
class WeightedProduct {
public:
    explicit WeightedProduct(std::span<const double> exponents) : exponents_(exponents) {}

    double operator()(const std::function<double(std::size_t)>& base) const {
        double log_sum = 0.0;
        for (std::size_t j = 0; j < exponents_.size(); ++j) {
            if (exponents_[j] == 0.0) continue;
            const double b = base(j);
            if (b == 0.0) return 0.0;
            log_sum += exponents_[j] * std::log(b);
        }
        return std::exp(log_sum);
    }

private:
    std::span<const double> exponents_;
};

void require_aggregable(std::span<const IvbfwnNumber> items, const WeightVector& weights) {
    if (items.empty()) {
        throw LengthMismatch("cannot aggregate an empty family");
    }
    if (items.size() != weights.size()) {
        throw LengthMismatch("item count " + std::to_string(items.size()) +
                             " does not match weight count " + std::to_string(weights.size()));
    }
}

// When all the weight sits on one item its exponent is exactly 1 and the
// memberships pass through unchanged; only the weight slot is recomputed.
const IvbfwnNumber* sole_contributor(std::span<const IvbfwnNumber> items,
                                     std::span<const double> exponents) {
    const IvbfwnNumber* found = nullptr;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        if (exponents[j] == 0.0) continue;
        if (found != nullptr || exponents[j] != 1.0) return nullptr;
        found = &items[j];
    }
    return found;
}

}  // namespace

IvbfwnNumber aggregate_average(std::span<const IvbfwnNumber> items, const WeightVector& weights) {
    require_aggregable(items, weights);
    const std::vector<double> exps = weights.normalized();
    const WeightedProduct prod(exps);

    double max_weight = items[0].weight();
    for (const IvbfwnNumber& n : items) max_weight = std::max(max_weight, n.weight());

    if (const IvbfwnNumber* only = sole_contributor(items, exps)) {
        return IvbfwnNumber(only->truth_pos(), only->ind_pos(), only->fals_pos(),
                            only->truth_neg(), only->ind_neg(), only->fals_neg(), max_weight);
    }

    return IvbfwnNumber(
        {1.0 - prod([&](std::size_t j) { return 1.0 - items[j].truth_pos().lo(); }),
         1.0 - prod([&](std::size_t j) { return 1.0 - items[j].truth_pos().hi(); })},
        {prod([&](std::size_t j) { return items[j].ind_pos().lo(); }),
         prod([&](std::size_t j) { return items[j].ind_pos().hi(); })},
        {prod([&](std::size_t j) { return items[j].fals_pos().lo(); }),
         prod([&](std::size_t j) { return items[j].fals_pos().hi(); })},
        {neg(prod([&](std::size_t j) { return -items[j].truth_neg().lo(); })),
         neg(prod([&](std::size_t j) { return -items[j].truth_neg().hi(); }))},
        {neg(1.0 - prod([&](std::size_t j) { return 1.0 - (-items[j].ind_neg().lo()); })),
         neg(1.0 - prod([&](std::size_t j) { return 1.0 - (-items[j].ind_neg().hi()); }))},
        {neg(1.0 - prod([&](std::size_t j) { return 1.0 - (-items[j].fals_neg().lo()); })),
         neg(1.0 - prod([&](std::size_t j) { return 1.0 - (-items[j].fals_neg().hi()); }))},
        max_weight);
}

IvbfwnNumber aggregate_geometric(std::span<const IvbfwnNumber> items, const WeightVector& weights) {
    require_aggregable(items, weights);
    const std::vector<double> exps = weights.normalized();
    const WeightedProduct prod(exps);

    double min_weight = items[0].weight();
    for (const IvbfwnNumber& n : items) min_weight = std::min(min_weight, n.weight());

    if (const IvbfwnNumber* only = sole_contributor(items, exps)) {
        return IvbfwnNumber(only->truth_pos(), only->ind_pos(), only->fals_pos(),
                            only->truth_neg(), only->ind_neg(), only->fals_neg(), min_weight);
    }

    return IvbfwnNumber(
        {prod([&](std::size_t j) { return items[j].truth_pos().lo(); }),
         prod([&](std::size_t j) { return items[j].truth_pos().hi(); })},
        {1.0 - prod([&](std::size_t j) { return 1.0 - items[j].ind_pos().lo(); }),
         1.0 - prod([&](std::size_t j) { return 1.0 - items[j].ind_pos().hi(); })},
        {1.0 - prod([&](std::size_t j) { return 1.0 - items[j].fals_pos().lo(); }),
         1.0 - prod([&](std::size_t j) { return 1.0 - items[j].fals_pos().hi(); })},
        {neg(1.0 - prod([&](std::size_t j) { return 1.0 - (-items[j].truth_neg().lo()); })),
         neg(1.0 - prod([&](std::size_t j) { return 1.0 - (-items[j].truth_neg().hi()); }))},
        {neg(prod([&](std::size_t j) { return -items[j].ind_neg().lo(); })),
         neg(prod([&](std::size_t j) { return -items[j].ind_neg().hi(); }))},
        {neg(prod([&](std::size_t j) { return -items[j].fals_neg().lo(); })),
         neg(prod([&](std::size_t j) { return -items[j].fals_neg().hi(); }))},
        min_weight);
}

}  // namespace ivbfwn
