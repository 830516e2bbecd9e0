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

#include "ivbfwn/model.hpp"

namespace ivbfwn {

enum class ComparisonResult { Greater, Less, Indifferent };

const char* to_string(ComparisonResult r);

/// Absolute tolerance used when comparing score, accuracy and certainty
/// keys. Aggregation outputs are transcendental, so exact float equality
/// would make Indifferent unreachable.
inline constexpr double kComparisonEpsilon = 1e-9;

/// (p/12) * sum of the twelve membership terms, each oriented so that a
/// better evaluation scores higher. Result lies in [0, p].
double score(const IvbfwnNumber& a);

/// (p/8) * (4 + truth minus falsity sums on both poles). Result lies in [0, p].
double accuracy(const IvbfwnNumber& a);

/// (p/4) * (2 + positive truth sum - negative falsity sum). Note the result
/// lies in [p/2, 3p/2] and may exceed 1; it is only ever used as the final
/// tie-break key, where the affine shift cannot change an outcome.
double certainty(const IvbfwnNumber& a);

/// Lexicographic comparison on (score, accuracy, certainty). Keys within
/// kComparisonEpsilon of each other count as equal and defer to the next
/// key; when all three agree the numbers are Indifferent.
ComparisonResult compare(const IvbfwnNumber& a, const IvbfwnNumber& b);

}  // namespace ivbfwn
