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

#include "ivbfwn/bn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ivbfwn::bn {

namespace {

double conorm(double a, double b) { return 1.0 - (1.0 - a) * (1.0 - b); }
double neg(double x) { return x == 0.0 ? 0.0 : -x; }
double mean(double a, double b) { return (a + b) / 2.0; }

void require_same_universe(const BnSet& a, const BnSet& b) {
    if (!a.same_universe(b)) {
        throw UniverseMismatch("sets are defined on different element sets");
    }
}

template <typename F>
BnSet zip(const BnSet& a, const BnSet& b, F&& combine) {
    require_same_universe(a, b);
    BnSet out;
    for (const auto& e : a.entries()) out.insert(e.label, combine(e.value, b.at(e.label)));
    return out;
}

}  // namespace

void BnSet::insert(std::string label, BnNumber value) {
    if (has(label)) {
        throw DuplicateLabel("duplicate element label: " + label);
    }
    entries_.push_back(Entry{std::move(label), value});
}

bool BnSet::has(std::string_view label) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return e.label == label; });
}

const BnNumber& BnSet::at(std::string_view label) const {
    for (const Entry& e : entries_) {
        if (e.label == label) return e.value;
    }
    throw std::out_of_range("no element labelled '" + std::string(label) + "'");
}

std::vector<std::string> BnSet::labels() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.label);
    return out;
}

bool BnSet::same_universe(const BnSet& other) const {
    if (size() != other.size()) return false;
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return other.has(e.label); });
}

bool contains(const BnNumber& a, const BnNumber& b) {
    // Baseline subset direction; note the negative truth axis points the
    // other way than in the interval-valued subset test.
    return a.truth_pos() <= b.truth_pos() && a.ind_pos() <= b.ind_pos() &&
           a.fals_pos() >= b.fals_pos() && a.truth_neg() >= b.truth_neg() &&
           a.ind_neg() >= b.ind_neg() && a.fals_neg() <= b.fals_neg();
}

BnNumber set_union(const BnNumber& a, const BnNumber& b) {
    return BnNumber(std::max(a.truth_pos(), b.truth_pos()), mean(a.ind_pos(), b.ind_pos()),
                    std::min(a.fals_pos(), b.fals_pos()), std::min(a.truth_neg(), b.truth_neg()),
                    mean(a.ind_neg(), b.ind_neg()), std::max(a.fals_neg(), b.fals_neg()));
}

BnNumber set_intersection(const BnNumber& a, const BnNumber& b) {
    return BnNumber(std::min(a.truth_pos(), b.truth_pos()), mean(a.ind_pos(), b.ind_pos()),
                    std::max(a.fals_pos(), b.fals_pos()), std::max(a.truth_neg(), b.truth_neg()),
                    mean(a.ind_neg(), b.ind_neg()), std::min(a.fals_neg(), b.fals_neg()));
}

BnNumber complement(const BnNumber& a) {
    return BnNumber(1.0 - a.truth_pos(), 1.0 - a.ind_pos(), 1.0 - a.fals_pos(),
                    -1.0 - a.truth_neg(), -1.0 - a.ind_neg(), -1.0 - a.fals_neg());
}

bool contains(const BnSet& a, const BnSet& b) {
    require_same_universe(a, b);
    return std::all_of(a.entries().begin(), a.entries().end(),
                       [&](const BnSet::Entry& e) { return contains(e.value, b.at(e.label)); });
}

bool equals(const BnSet& a, const BnSet& b) {
    require_same_universe(a, b);
    return std::all_of(a.entries().begin(), a.entries().end(),
                       [&](const BnSet::Entry& e) { return e.value == b.at(e.label); });
}

BnSet set_union(const BnSet& a, const BnSet& b) {
    return zip(a, b, [](const BnNumber& x, const BnNumber& y) { return set_union(x, y); });
}

BnSet set_intersection(const BnSet& a, const BnSet& b) {
    return zip(a, b, [](const BnNumber& x, const BnNumber& y) { return set_intersection(x, y); });
}

BnSet complement(const BnSet& a) {
    BnSet out;
    for (const auto& e : a.entries()) out.insert(e.label, complement(e.value));
    return out;
}

BnNumber scale(Scalar lambda, const BnNumber& a) {
    const double l = lambda.value();
    if (l == 1.0) return a;
    // Conorm-type negative indeterminacy map, matching add (see arithmetic.cpp).
    return BnNumber(1.0 - std::pow(1.0 - a.truth_pos(), l), std::pow(a.ind_pos(), l),
                    std::pow(a.fals_pos(), l), neg(std::pow(-a.truth_neg(), l)),
                    neg(1.0 - std::pow(1.0 - (-a.ind_neg()), l)),
                    neg(1.0 - std::pow(1.0 - (-a.fals_neg()), l)));
}

BnNumber power(const BnNumber& a, Scalar lambda) {
    const double l = lambda.value();
    if (l == 1.0) return a;
    return BnNumber(std::pow(a.truth_pos(), l), 1.0 - std::pow(1.0 - a.ind_pos(), l),
                    1.0 - std::pow(1.0 - a.fals_pos(), l),
                    neg(1.0 - std::pow(1.0 - (-a.truth_neg()), l)), neg(std::pow(-a.ind_neg(), l)),
                    neg(std::pow(-a.fals_neg(), l)));
}

BnNumber add(const BnNumber& a, const BnNumber& b) {
    return BnNumber(conorm(a.truth_pos(), b.truth_pos()), a.ind_pos() * b.ind_pos(),
                    a.fals_pos() * b.fals_pos(), neg((-a.truth_neg()) * (-b.truth_neg())),
                    neg(conorm(-a.ind_neg(), -b.ind_neg())),
                    neg(conorm(-a.fals_neg(), -b.fals_neg())));
}

BnNumber mul(const BnNumber& a, const BnNumber& b) {
    // The negative indeterminacy and falsity products carry a leading minus
    // to stay inside [-1, 0].
    return BnNumber(a.truth_pos() * b.truth_pos(), conorm(a.ind_pos(), b.ind_pos()),
                    conorm(a.fals_pos(), b.fals_pos()),
                    neg(conorm(-a.truth_neg(), -b.truth_neg())),
                    neg((-a.ind_neg()) * (-b.ind_neg())), neg((-a.fals_neg()) * (-b.fals_neg())));
}

double score(const BnNumber& a) {
    return (a.truth_pos() + 1.0 - a.ind_pos() + 1.0 - a.fals_pos() + 1.0 + a.truth_neg() -
            a.ind_neg() - a.fals_neg()) /
           6.0;
}

double accuracy(const BnNumber& a) {
    return a.truth_pos() - a.fals_pos() + a.truth_neg() - a.fals_neg();
}

double certainty(const BnNumber& a) { return a.truth_pos() - a.fals_neg(); }

namespace {

void require_simplex(std::span<const BnNumber> items, std::span<const double> weights) {
    if (items.empty()) {
        throw LengthMismatch("cannot aggregate an empty family");
    }
    if (items.size() != weights.size()) {
        throw LengthMismatch("item count " + std::to_string(items.size()) +
                             " does not match weight count " + std::to_string(weights.size()));
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0 && w <= 1.0)) {
            std::ostringstream os;
            os << "weight outside [0, 1]: " << w;
            throw WeightError(os.str());
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream os;
        os << "weights must sum to 1, got " << sum;
        throw WeightSumError(os.str());
    }
}

double product(std::span<const double> weights, const std::function<double(std::size_t)>& base) {
    double out = 1.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (weights[j] == 0.0) continue;
        out *= std::pow(base(j), weights[j]);
    }
    return out;
}

}  // namespace

BnNumber aggregate_average(std::span<const BnNumber> items, std::span<const double> weights) {
    require_simplex(items, weights);
    return BnNumber(
        1.0 - product(weights, [&](std::size_t j) { return 1.0 - items[j].truth_pos(); }),
        product(weights, [&](std::size_t j) { return items[j].ind_pos(); }),
        product(weights, [&](std::size_t j) { return items[j].fals_pos(); }),
        neg(product(weights, [&](std::size_t j) { return -items[j].truth_neg(); })),
        neg(1.0 - product(weights, [&](std::size_t j) { return 1.0 - (-items[j].ind_neg()); })),
        neg(1.0 - product(weights, [&](std::size_t j) { return 1.0 - (-items[j].fals_neg()); })));
}

BnNumber aggregate_geometric(std::span<const BnNumber> items, std::span<const double> weights) {
    require_simplex(items, weights);
    return BnNumber(
        product(weights, [&](std::size_t j) { return items[j].truth_pos(); }),
        1.0 - product(weights, [&](std::size_t j) { return 1.0 - items[j].ind_pos(); }),
        1.0 - product(weights, [&](std::size_t j) { return 1.0 - items[j].fals_pos(); }),
        neg(1.0 - product(weights, [&](std::size_t j) { return 1.0 - (-items[j].truth_neg()); })),
        neg(product(weights, [&](std::size_t j) { return -items[j].ind_neg(); })),
        neg(product(weights, [&](std::size_t j) { return -items[j].fals_neg(); })));
}

IvbfwnNumber embed(const BnNumber& a, double weight) {
    return IvbfwnNumber({a.truth_pos(), a.truth_pos()}, {a.ind_pos(), a.ind_pos()},
                        {a.fals_pos(), a.fals_pos()}, {a.truth_neg(), a.truth_neg()},
                        {a.ind_neg(), a.ind_neg()}, {a.fals_neg(), a.fals_neg()}, weight);
}

IvbfwnNumber embed_bipolar(double mu_pos, double mu_neg) {
    return IvbfwnNumber({mu_pos, mu_pos}, {0.0, 0.0}, {0.0, 0.0}, {mu_neg, mu_neg}, {0.0, 0.0},
                        {0.0, 0.0}, 1.0);
}

}  // namespace ivbfwn::bn
