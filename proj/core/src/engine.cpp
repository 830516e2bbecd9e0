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

#include "ivbfwn/engine.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace ivbfwn {

const char* to_string(OperatorChoice op) {
    return op == OperatorChoice::Average ? "average" : "geometric";
}

std::vector<double> criterion_weights(const DecisionMatrix& m) {
    std::vector<double> out(m.criterion_count(), 0.0);
    std::vector<double> column(m.alternative_count());
    for (std::size_t j = 0; j < m.criterion_count(); ++j) {
        for (std::size_t i = 0; i < m.alternative_count(); ++i) {
            column[i] = m.cell(i, j).weight();
        }
        // summed in sorted order so the mean is invariant under row permutation
        std::sort(column.begin(), column.end());
        double sum = 0.0;
        for (double w : column) sum += w;
        out[j] = sum / static_cast<double>(m.alternative_count());
    }
    return out;
}

namespace {

TraceRecord run(const DecisionMatrix& m, OperatorChoice op,
                const std::optional<WeightVector>& weights) {
    TraceRecord t{.matrix = m,
                  .op = op,
                  .aggregates = {},
                  .scores = {},
                  .accuracies = {},
                  .certainties = {},
                  .comparisons = {},
                  .report = {}};

    if (weights && weights->size() != m.criterion_count()) {
        throw LengthMismatch("criterion weight count " + std::to_string(weights->size()) +
                             " does not match " + std::to_string(m.criterion_count()) +
                             " criteria");
    }

    const WeightVector w =
        weights ? *weights : WeightVector(ivbfwn::criterion_weights(m));

    const std::size_t n = m.alternative_count();
    t.aggregates.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = m.row(i);
        t.aggregates.push_back(op == OperatorChoice::Average ? aggregate_average(row, w)
                                                             : aggregate_geometric(row, w));
    }

    for (const IvbfwnNumber& agg : t.aggregates) {
        t.scores.push_back(score(agg));
        t.accuracies.push_back(accuracy(agg));
        t.certainties.push_back(certainty(agg));
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            t.comparisons.push_back({m.alternatives()[i], m.alternatives()[j],
                                     compare(t.aggregates[i], t.aggregates[j])});
        }
    }

    // Best first; stable, so mutually indifferent alternatives keep input order.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return compare(t.aggregates[a], t.aggregates[b]) == ComparisonResult::Greater;
    });

    RankingReport& r = t.report;
    r.alternatives = m.alternatives();
    r.aggregates = t.aggregates;
    r.scores = t.scores;
    r.accuracies = t.accuracies;
    r.certainties = t.certainties;
    r.order.reserve(n);
    for (std::size_t i : idx) r.order.push_back(m.alternatives()[i]);

    std::vector<std::string> group;
    auto flush_group = [&] {
        if (group.size() >= 2) r.ties.push_back(group);
        group.clear();
    };
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k > 0 && compare(t.aggregates[idx[k - 1]], t.aggregates[idx[k]]) !=
                         ComparisonResult::Indifferent) {
            flush_group();
        }
        group.push_back(m.alternatives()[idx[k]]);
    }
    flush_group();

    return t;
}

}  // namespace

RankingReport rank_alternatives(const DecisionMatrix& m, OperatorChoice op) {
    return run(m, op, std::nullopt).report;
}

RankingReport rank_alternatives(const DecisionMatrix& m, OperatorChoice op,
                                const WeightVector& criterion_weights) {
    return run(m, op, criterion_weights).report;
}

TraceRecord trace(const DecisionMatrix& m, OperatorChoice op) {
    return run(m, op, std::nullopt);
}

}  // namespace ivbfwn
