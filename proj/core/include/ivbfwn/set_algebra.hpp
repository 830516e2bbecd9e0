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

// Element-level forms. The subset test orders components as: positive truth
// and both negative truth endpoints ascending, every indeterminacy and
// falsity endpoint descending, and the weight index ascending.
bool contains(const IvbfwnNumber& a, const IvbfwnNumber& b);
IvbfwnNumber set_union(const IvbfwnNumber& a, const IvbfwnNumber& b);
IvbfwnNumber set_intersection(const IvbfwnNumber& a, const IvbfwnNumber& b);
IvbfwnNumber complement(const IvbfwnNumber& a);

/// Tests a as a subset of b. Both sets must share the same universe.
bool contains(const IvbfwnSet& a, const IvbfwnSet& b);

/// Exact per-element equality of all twelve endpoints and the weight index.
bool equals(const IvbfwnSet& a, const IvbfwnSet& b);

/// Per element: truth takes the endpoint-wise max (positive) and min
/// (negative), falsity the dual, indeterminacy the endpoint-wise mean,
/// and the weight index the max.
IvbfwnSet set_union(const IvbfwnSet& a, const IvbfwnSet& b);

/// Dual of set_union; weight index takes the min.
IvbfwnSet set_intersection(const IvbfwnSet& a, const IvbfwnSet& b);

/// Swaps truth and falsity intervals (order preserved), reflects the
/// indeterminacy intervals through 1 - x (positive) and -1 - x (negative),
/// and maps the weight index to 1 - p.
IvbfwnSet complement(const IvbfwnSet& a);

}  // namespace ivbfwn
