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

#include "ivbfwn/set_algebra.hpp"

#include <algorithm>

namespace ivbfwn {

namespace {

double mean(double a, double b) { return (a + b) / 2.0; }

void require_same_universe(const IvbfwnSet& a, const IvbfwnSet& b) {
    if (!a.same_universe(b)) {
        throw UniverseMismatch("sets are defined on different element sets");
    }
}

template <typename F>
IvbfwnSet zip(const IvbfwnSet& a, const IvbfwnSet& b, F&& combine) {
    require_same_universe(a, b);
    IvbfwnSet out;
    for (const auto& e : a.entries()) {
        out.insert(e.label, combine(e.value, b.at(e.label)));
    }
    return out;
}

}  // namespace

bool contains(const IvbfwnNumber& a, const IvbfwnNumber& b) {
    return a.truth_pos().lo() <= b.truth_pos().lo() && a.truth_pos().hi() <= b.truth_pos().hi() &&
           a.ind_pos().lo() >= b.ind_pos().lo() && a.ind_pos().hi() >= b.ind_pos().hi() &&
           a.fals_pos().lo() >= b.fals_pos().lo() && a.fals_pos().hi() >= b.fals_pos().hi() &&
           a.truth_neg().lo() <= b.truth_neg().lo() && a.truth_neg().hi() <= b.truth_neg().hi() &&
           a.ind_neg().lo() >= b.ind_neg().lo() && a.ind_neg().hi() >= b.ind_neg().hi() &&
           a.fals_neg().lo() >= b.fals_neg().lo() && a.fals_neg().hi() >= b.fals_neg().hi() &&
           a.weight() <= b.weight();
}

IvbfwnNumber set_union(const IvbfwnNumber& a, const IvbfwnNumber& b) {
    return IvbfwnNumber(
        {std::max(a.truth_pos().lo(), b.truth_pos().lo()),
         std::max(a.truth_pos().hi(), b.truth_pos().hi())},
        {mean(a.ind_pos().lo(), b.ind_pos().lo()), mean(a.ind_pos().hi(), b.ind_pos().hi())},
        {std::min(a.fals_pos().lo(), b.fals_pos().lo()),
         std::min(a.fals_pos().hi(), b.fals_pos().hi())},
        {std::min(a.truth_neg().lo(), b.truth_neg().lo()),
         std::min(a.truth_neg().hi(), b.truth_neg().hi())},
        {mean(a.ind_neg().lo(), b.ind_neg().lo()), mean(a.ind_neg().hi(), b.ind_neg().hi())},
        {std::max(a.fals_neg().lo(), b.fals_neg().lo()),
         std::max(a.fals_neg().hi(), b.fals_neg().hi())},
        std::max(a.weight(), b.weight()));
}

IvbfwnNumber set_intersection(const IvbfwnNumber& a, const IvbfwnNumber& b) {
    return IvbfwnNumber(
        {std::min(a.truth_pos().lo(), b.truth_pos().lo()),
         std::min(a.truth_pos().hi(), b.truth_pos().hi())},
        {mean(a.ind_pos().lo(), b.ind_pos().lo()), mean(a.ind_pos().hi(), b.ind_pos().hi())},
        {std::max(a.fals_pos().lo(), b.fals_pos().lo()),
         std::max(a.fals_pos().hi(), b.fals_pos().hi())},
        {std::max(a.truth_neg().lo(), b.truth_neg().lo()),
         std::max(a.truth_neg().hi(), b.truth_neg().hi())},
        {mean(a.ind_neg().lo(), b.ind_neg().lo()), mean(a.ind_neg().hi(), b.ind_neg().hi())},
        {std::min(a.fals_neg().lo(), b.fals_neg().lo()),
         std::min(a.fals_neg().hi(), b.fals_neg().hi())},
        std::min(a.weight(), b.weight()));
}

IvbfwnNumber complement(const IvbfwnNumber& a) {
    // Truth and falsity swap with endpoint order preserved; indeterminacy
    // reflects through 1 - x (positive) and -1 - x (negative), which reverses
    // the endpoints.
    return IvbfwnNumber({a.fals_pos().lo(), a.fals_pos().hi()},
                        {1.0 - a.ind_pos().hi(), 1.0 - a.ind_pos().lo()},
                        {a.truth_pos().lo(), a.truth_pos().hi()},
                        {a.fals_neg().lo(), a.fals_neg().hi()},
                        {-1.0 - a.ind_neg().hi(), -1.0 - a.ind_neg().lo()},
                        {a.truth_neg().lo(), a.truth_neg().hi()}, 1.0 - a.weight());
}

bool contains(const IvbfwnSet& a, const IvbfwnSet& b) {
    require_same_universe(a, b);
    return std::all_of(a.entries().begin(), a.entries().end(),
                       [&](const IvbfwnSet::Entry& e) { return contains(e.value, b.at(e.label)); });
}

bool equals(const IvbfwnSet& a, const IvbfwnSet& b) {
    require_same_universe(a, b);
    return std::all_of(a.entries().begin(), a.entries().end(),
                       [&](const IvbfwnSet::Entry& e) { return e.value == b.at(e.label); });
}

IvbfwnSet set_union(const IvbfwnSet& a, const IvbfwnSet& b) {
    return zip(a, b, [](const IvbfwnNumber& x, const IvbfwnNumber& y) { return set_union(x, y); });
}

IvbfwnSet set_intersection(const IvbfwnSet& a, const IvbfwnSet& b) {
    return zip(a, b,
               [](const IvbfwnNumber& x, const IvbfwnNumber& y) { return set_intersection(x, y); });
}

IvbfwnSet complement(const IvbfwnSet& a) {
    IvbfwnSet out;
    for (const auto& e : a.entries()) out.insert(e.label, complement(e.value));
    return out;
}

}  // namespace ivbfwn
