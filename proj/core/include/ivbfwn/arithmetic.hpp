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

/// A strictly positive exponent. Construction throws ScalarError otherwise.
class Scalar {
public:
    explicit Scalar(double value);

    double value() const { return value_; }

private:
    double value_;
};

// Endpoint-wise arithmetic over IvbfwnNumber. Each map is applied
// independently to both endpoints of each interval; every map is monotone
// on its domain, so interval order and ranges are preserved.

/// lambda * a: truth combines as 1-(1-t)^lambda on the positive side,
/// powers elsewhere, mirrored through negation on the negative side.
/// The weight index is unchanged.
IvbfwnNumber scale(Scalar lambda, const IvbfwnNumber& a);

/// a^lambda: the dual of scale. The weight index is unchanged.
IvbfwnNumber power(const IvbfwnNumber& a, Scalar lambda);

/// Probabilistic-sum truth, product indeterminacy/falsity on the positive
/// side, mirrored on the negative side; the weight index takes the max.
IvbfwnNumber add(const IvbfwnNumber& a, const IvbfwnNumber& b);

/// Dual of add; the weight index takes the min.
IvbfwnNumber mul(const IvbfwnNumber& a, const IvbfwnNumber& b);

}  // namespace ivbfwn
