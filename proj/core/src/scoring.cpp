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

#include "ivbfwn/scoring.hpp"

namespace ivbfwn {

const char* to_string(ComparisonResult r) {
    switch (r) {
        case ComparisonResult::Greater: return "greater";
        case ComparisonResult::Less: return "less";
        case ComparisonResult::Indifferent: return "indifferent";
    }
    return "?";
}

double score(const IvbfwnNumber& a) {
    const double sum = a.truth_pos().lo() + a.truth_pos().hi() +
                       (1.0 - a.ind_pos().lo()) + (1.0 - a.ind_pos().hi()) +
                       (1.0 - a.fals_pos().lo()) + (1.0 - a.fals_pos().hi()) +
                       (1.0 + a.truth_neg().lo()) + (1.0 + a.truth_neg().hi()) -
                       a.ind_neg().lo() - a.ind_neg().hi() -
                       a.fals_neg().lo() - a.fals_neg().hi();
    return a.weight() * sum / 12.0;
}

double accuracy(const IvbfwnNumber& a) {
    const double sum = 4.0 + a.truth_pos().lo() + a.truth_pos().hi() -
                       a.fals_pos().lo() - a.fals_pos().hi() +
                       a.truth_neg().lo() + a.truth_neg().hi() -
                       a.fals_neg().lo() - a.fals_neg().hi();
    return a.weight() * sum / 8.0;
}

double certainty(const IvbfwnNumber& a) {
    const double sum = 2.0 + a.truth_pos().lo() + a.truth_pos().hi() -
                       a.fals_neg().lo() - a.fals_neg().hi();
    return a.weight() * sum / 4.0;
}

ComparisonResult compare(const IvbfwnNumber& a, const IvbfwnNumber& b) {
    const double keys_a[] = {score(a), accuracy(a), certainty(a)};
    const double keys_b[] = {score(b), accuracy(b), certainty(b)};
    for (int k = 0; k < 3; ++k) {
        if (keys_a[k] > keys_b[k] + kComparisonEpsilon) return ComparisonResult::Greater;
        if (keys_b[k] > keys_a[k] + kComparisonEpsilon) return ComparisonResult::Less;
    }
    return ComparisonResult::Indifferent;
}

}  // namespace ivbfwn
