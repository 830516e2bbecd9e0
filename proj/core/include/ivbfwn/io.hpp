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

#include <span>
#include <string>

#include "ivbfwn/engine.hpp"
#include "ivbfwn/model.hpp"

// JSON wire formats and report emission.
//
// Matrix documents:
//   {"alternatives": [...], "criteria": [...], "cells": [[<cell>, ...], ...]}
// where <cell> is
//   {"truth_pos": [lo, hi], "ind_pos": [...], "fals_pos": [...],
//    "truth_neg": [...], "ind_neg": [...], "fals_neg": [...], "weight": p}
// Set documents:
//   {"elements": {"x1": <cell>, ...}}
//
// Serialization keeps a fixed key order and prints floats in their shortest
// round-trip representation, so parse(serialize(x)) == x field for field and
// identical inputs always produce identical output bytes. Unknown or missing
// fields are schema errors; numerals convert by standard decimal-to-nearest-
// binary parsing.
namespace ivbfwn::io {

enum class Format { Json, Table };

/// Display precision bounds for emit_* functions.
inline constexpr int kMinPrecision = 0;
inline constexpr int kMaxPrecision = 12;
inline constexpr int kDefaultPrecision = 4;

/// Rounds half away from zero at the given number of decimals and renders
/// with exactly that many digits. Only display paths round; stored values
/// and JSON output stay exact.
std::string format_fixed(double value, int precision);

/// Parses a matrix document into raw, unvalidated numerals.
/// Throws SyntaxError (not JSON) or SchemaError (wrong shape).
MatrixData parse_matrix_data(const std::string& text);

/// parse_matrix_data followed by validation; throws ValidationError with
/// cell coordinates when any invariant fails.
DecisionMatrix parse_matrix(const std::string& text);

std::string serialize_matrix(const DecisionMatrix& m);

IvbfwnSet parse_set(const std::string& text);
std::string serialize_set(const IvbfwnSet& s);

/// Json format carries exact values and reparses to an equal report; table
/// format is aligned human-readable text rounded at `precision`.
std::string emit_report(const RankingReport& r, Format format, int precision);
RankingReport parse_report(const std::string& text);

std::string emit_trace(const TraceRecord& t, Format format, int precision);

std::string emit_number(const IvbfwnNumber& n, Format format, int precision);

/// Score, accuracy and certainty of one labelled element.
std::string emit_score(const std::string& label, const IvbfwnNumber& n, Format format,
                       int precision);

std::string emit_violations(std::span<const Violation> violations);

}  // namespace ivbfwn::io
