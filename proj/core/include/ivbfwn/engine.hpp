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

#include <string>
#include <vector>

#include "ivbfwn/aggregation.hpp"
#include "ivbfwn/model.hpp"
#include "ivbfwn/scoring.hpp"

namespace ivbfwn {

enum class OperatorChoice { Average, Geometric };

const char* to_string(OperatorChoice op);

struct PairwiseComparison {
    std::string left;
    std::string right;
    ComparisonResult result;

    bool operator==(const PairwiseComparison&) const = default;
};

/// Every intermediate value of a ranking run, exposed for audit: the
/// validated matrix, one aggregate per row, the score/accuracy/certainty
/// triples, all pairwise comparisons, and the final report.
struct TraceRecord {
    DecisionMatrix matrix;
    OperatorChoice op;
    std::vector<IvbfwnNumber> aggregates;
    std::vector<double> scores;
    std::vector<double> accuracies;
    std::vector<double> certainties;
    std::vector<PairwiseComparison> comparisons;
    RankingReport report;
};

/// The per-criterion attribute weights of a matrix: the arithmetic mean of
/// each column's cell weight indices. Every alternative is aggregated with
/// this one shared vector, which keeps scores comparable across rows and
/// makes the ranking invariant under row permutation.
std::vector<double> criterion_weights(const DecisionMatrix& m);

/// Runs the four-step ranking: aggregate each alternative's row with the
/// matrix's criterion_weights, score the aggregates, and sort best-first by
/// the lexicographic comparison. Each aggregate's own weight index comes
/// from the row's cells (max for Average, min for Geometric). Mutually
/// indifferent alternatives are grouped as ties and keep their input order.
RankingReport rank_alternatives(const DecisionMatrix& m, OperatorChoice op);

/// Same ranking, but with one weight per criterion broadcast to every row
/// in place of the cells' own weights.
RankingReport rank_alternatives(const DecisionMatrix& m, OperatorChoice op,
                                const WeightVector& criterion_weights);

/// rank_alternatives is a pure projection of this record.
TraceRecord trace(const DecisionMatrix& m, OperatorChoice op);

}  // namespace ivbfwn
