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

#include "ivbfwn/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ivbfwn {

namespace {

// a (+) b = a + b - ab, computed as 1 - (1-a)(1-b) which cannot leave [0, 1].
double conorm(double a, double b) { return 1.0 - (1.0 - a) * (1.0 - b); }

// Keeps -0.0 out of results.
double neg(double x) { return x == 0.0 ? 0.0 : -x; }

double pw(double base, double exponent) { return std::pow(base, exponent); }

}  // namespace

Scalar::Scalar(double value) : value_(value) {
    if (!(value > 0.0)) {
        std::ostringstream os;
        os << "scalar must be positive, got " << value;
        throw ScalarError(os.str());
    }
}

IvbfwnNumber scale(Scalar lambda, const IvbfwnNumber& a) {
    const double l = lambda.value();
    if (l == 1.0) return a;
    // The negative indeterminacy map is conorm-type, like the negative
    // falsity one: each map must pair with add's combination on the same
    // component, or scalar distributivity and the aggregation fold break.
    return IvbfwnNumber(
        {1.0 - pw(1.0 - a.truth_pos().lo(), l), 1.0 - pw(1.0 - a.truth_pos().hi(), l)},
        {pw(a.ind_pos().lo(), l), pw(a.ind_pos().hi(), l)},
        {pw(a.fals_pos().lo(), l), pw(a.fals_pos().hi(), l)},
        {neg(pw(-a.truth_neg().lo(), l)), neg(pw(-a.truth_neg().hi(), l))},
        {neg(1.0 - pw(1.0 - (-a.ind_neg().lo()), l)), neg(1.0 - pw(1.0 - (-a.ind_neg().hi()), l))},
        {neg(1.0 - pw(1.0 - (-a.fals_neg().lo()), l)), neg(1.0 - pw(1.0 - (-a.fals_neg().hi()), l))},
        a.weight());
}

IvbfwnNumber power(const IvbfwnNumber& a, Scalar lambda) {
    const double l = lambda.value();
    if (l == 1.0) return a;
    return IvbfwnNumber(
        {pw(a.truth_pos().lo(), l), pw(a.truth_pos().hi(), l)},
        {1.0 - pw(1.0 - a.ind_pos().lo(), l), 1.0 - pw(1.0 - a.ind_pos().hi(), l)},
        {1.0 - pw(1.0 - a.fals_pos().lo(), l), 1.0 - pw(1.0 - a.fals_pos().hi(), l)},
        {neg(1.0 - pw(1.0 - (-a.truth_neg().lo()), l)),
         neg(1.0 - pw(1.0 - (-a.truth_neg().hi()), l))},
        {neg(pw(-a.ind_neg().lo(), l)), neg(pw(-a.ind_neg().hi(), l))},
        {neg(pw(-a.fals_neg().lo(), l)), neg(pw(-a.fals_neg().hi(), l))}, a.weight());
}

IvbfwnNumber add(const IvbfwnNumber& a, const IvbfwnNumber& b) {
    return IvbfwnNumber(
        {conorm(a.truth_pos().lo(), b.truth_pos().lo()),
         conorm(a.truth_pos().hi(), b.truth_pos().hi())},
        {a.ind_pos().lo() * b.ind_pos().lo(), a.ind_pos().hi() * b.ind_pos().hi()},
        {a.fals_pos().lo() * b.fals_pos().lo(), a.fals_pos().hi() * b.fals_pos().hi()},
        {neg((-a.truth_neg().lo()) * (-b.truth_neg().lo())),
         neg((-a.truth_neg().hi()) * (-b.truth_neg().hi()))},
        {neg(conorm(-a.ind_neg().lo(), -b.ind_neg().lo())),
         neg(conorm(-a.ind_neg().hi(), -b.ind_neg().hi()))},
        {neg(conorm(-a.fals_neg().lo(), -b.fals_neg().lo())),
         neg(conorm(-a.fals_neg().hi(), -b.fals_neg().hi()))},
        std::max(a.weight(), b.weight()));
}

IvbfwnNumber mul(const IvbfwnNumber& a, const IvbfwnNumber& b) {
    return IvbfwnNumber(
        {a.truth_pos().lo() * b.truth_pos().lo(), a.truth_pos().hi() * b.truth_pos().hi()},
        {conorm(a.ind_pos().lo(), b.ind_pos().lo()), conorm(a.ind_pos().hi(), b.ind_pos().hi())},
        {conorm(a.fals_pos().lo(), b.fals_pos().lo()),
         conorm(a.fals_pos().hi(), b.fals_pos().hi())},
        {neg(conorm(-a.truth_neg().lo(), -b.truth_neg().lo())),
         neg(conorm(-a.truth_neg().hi(), -b.truth_neg().hi()))},
        {neg((-a.ind_neg().lo()) * (-b.ind_neg().lo())),
         neg((-a.ind_neg().hi()) * (-b.ind_neg().hi()))},
        {neg((-a.fals_neg().lo()) * (-b.fals_neg().lo())),
         neg((-a.fals_neg().hi()) * (-b.fals_neg().hi()))},
        std::min(a.weight(), b.weight()));
}

}  // namespace ivbfwn
