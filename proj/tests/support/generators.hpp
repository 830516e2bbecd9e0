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

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ivbfwn/bn.hpp"
#include "ivbfwn/model.hpp"

namespace gen {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng); }

    double in(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng);
    }

    int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(eng); }

    // Multiples of 1/denom: exactly representable, and products of a few of
    // them stay exact, so algebraic laws can be asserted bitwise.
    double dyadic(int denom = 256) { return static_cast<double>(below(denom + 1)) / denom; }
};

inline ivbfwn::PosInterval pos_interval(Rng& rng) {
    double a = rng.unit(), b = rng.unit();
    if (a > b) std::swap(a, b);
    return {a, b};
}

inline ivbfwn::NegInterval neg_interval(Rng& rng) {
    double a = rng.in(-1.0, 0.0), b = rng.in(-1.0, 0.0);
    if (a > b) std::swap(a, b);
    return {a, b};
}

inline ivbfwn::IvbfwnNumber number(Rng& rng) {
    return {pos_interval(rng), pos_interval(rng), pos_interval(rng),
            neg_interval(rng), neg_interval(rng), neg_interval(rng), rng.unit()};
}

inline ivbfwn::PosInterval dyadic_pos_interval(Rng& rng, int denom = 256) {
    double a = rng.dyadic(denom), b = rng.dyadic(denom);
    if (a > b) std::swap(a, b);
    return {a, b};
}

inline ivbfwn::NegInterval dyadic_neg_interval(Rng& rng, int denom = 256) {
    double a = -rng.dyadic(denom), b = -rng.dyadic(denom);
    if (a > b) std::swap(a, b);
    return {a, b};
}

inline ivbfwn::IvbfwnNumber dyadic_number(Rng& rng, int denom = 256) {
    return {dyadic_pos_interval(rng, denom), dyadic_pos_interval(rng, denom),
            dyadic_pos_interval(rng, denom), dyadic_neg_interval(rng, denom),
            dyadic_neg_interval(rng, denom), dyadic_neg_interval(rng, denom), rng.dyadic(denom)};
}

inline ivbfwn::BnNumber bn_number(Rng& rng) {
    return {rng.unit(), rng.unit(), rng.unit(), rng.in(-1.0, 0.0), rng.in(-1.0, 0.0),
            rng.in(-1.0, 0.0)};
}

inline ivbfwn::BnNumber dyadic_bn_number(Rng& rng, int denom = 256) {
    return {rng.dyadic(denom), rng.dyadic(denom), rng.dyadic(denom),
            -rng.dyadic(denom), -rng.dyadic(denom), -rng.dyadic(denom)};
}

inline std::vector<std::string> labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("x_" + std::to_string(i + 1));
    return out;
}

inline ivbfwn::IvbfwnSet set(Rng& rng, std::size_t n, bool dyadic = false) {
    ivbfwn::IvbfwnSet out;
    for (const std::string& label : labels(n)) {
        out.insert(label, dyadic ? dyadic_number(rng) : number(rng));
    }
    return out;
}

inline ivbfwn::bn::BnSet bn_set(Rng& rng, std::size_t n, bool dyadic = false) {
    ivbfwn::bn::BnSet out;
    for (const std::string& label : labels(n)) {
        out.insert(label, dyadic ? dyadic_bn_number(rng) : bn_number(rng));
    }
    return out;
}

inline ivbfwn::DecisionMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    std::vector<std::string> alternatives, criteria;
    for (std::size_t i = 0; i < rows; ++i) alternatives.push_back("A_" + std::to_string(i + 1));
    for (std::size_t j = 0; j < cols; ++j) criteria.push_back("C_" + std::to_string(j + 1));
    std::vector<std::vector<ivbfwn::IvbfwnNumber>> cells;
    for (std::size_t i = 0; i < rows; ++i) {
        auto& row = cells.emplace_back();
        for (std::size_t j = 0; j < cols; ++j) row.push_back(number(rng));
    }
    return {std::move(alternatives), std::move(criteria), std::move(cells)};
}

inline std::vector<double> positive_weights(Rng& rng, std::size_t n) {
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(rng.in(0.05, 1.0));
    return out;
}

inline std::vector<double> simplex_weights(Rng& rng, std::size_t n) {
    std::vector<double> out = positive_weights(rng, n);
    double sum = 0.0;
    for (double w : out) sum += w;
    for (double& w : out) w /= sum;
    return out;
}

namespace detail {

// Interval whose endpoints move toward +bound, staying above `base`.
inline std::pair<double, double> raise(Rng& rng, double lo, double hi, double bound) {
    const double new_hi = hi + rng.unit() * (bound - hi);
    const double new_lo = lo + rng.unit() * (new_hi - lo);
    return {new_lo, new_hi};
}

// Interval whose endpoints move toward `bound` below, staying under `base`.
inline std::pair<double, double> lower(Rng& rng, double lo, double hi, double bound) {
    const double new_lo = bound + rng.unit() * (lo - bound);
    const double new_hi = new_lo + rng.unit() * (hi - new_lo);
    return {new_lo, new_hi};
}

}  // namespace detail

// A number that dominates `base` in the subset-order direction: truth up,
// indeterminacy and falsity down, weight up.
inline ivbfwn::IvbfwnNumber dominating(Rng& rng, const ivbfwn::IvbfwnNumber& base) {
    const auto tp = detail::raise(rng, base.truth_pos().lo(), base.truth_pos().hi(), 1.0);
    const auto ip = detail::lower(rng, base.ind_pos().lo(), base.ind_pos().hi(), 0.0);
    const auto fp = detail::lower(rng, base.fals_pos().lo(), base.fals_pos().hi(), 0.0);
    const auto tn = detail::raise(rng, base.truth_neg().lo(), base.truth_neg().hi(), 0.0);
    const auto in = detail::lower(rng, base.ind_neg().lo(), base.ind_neg().hi(), -1.0);
    const auto fn = detail::lower(rng, base.fals_neg().lo(), base.fals_neg().hi(), -1.0);
    const double w = base.weight() + rng.unit() * (1.0 - base.weight());
    return {{tp.first, tp.second}, {ip.first, ip.second}, {fp.first, fp.second},
            {tn.first, tn.second}, {in.first, in.second}, {fn.first, fn.second}, w};
}

}  // namespace gen
