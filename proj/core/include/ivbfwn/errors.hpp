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

#include <stdexcept>
#include <string>

namespace ivbfwn {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An endpoint or membership value lies outside its admissible range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An interval was given with its endpoints reversed (lo > hi).
class OrderError : public Error {
public:
    using Error::Error;
};

/// A fuzzy weighted index lies outside [0, 1].
class WeightError : public Error {
public:
    using Error::Error;
};

/// Two sets passed to a binary set operation have different element labels.
class UniverseMismatch : public Error {
public:
    using Error::Error;
};

/// A scalar exponent violates the lambda > 0 requirement.
class ScalarError : public Error {
public:
    using Error::Error;
};

/// Item and weight sequences passed to an aggregator differ in length,
/// or an empty family was given.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// A weight vector sums to zero, so no aggregation exponents exist.
class ZeroWeightSum : public Error {
public:
    using Error::Error;
};

/// A weight vector that is required to lie on the simplex does not sum to 1.
class WeightSumError : public Error {
public:
    using Error::Error;
};

/// An element label was inserted twice into the same set.
class DuplicateLabel : public Error {
public:
    using Error::Error;
};

/// A document is not valid JSON.
class SyntaxError : public Error {
public:
    using Error::Error;
};

/// A document is valid JSON but does not follow the expected schema
/// (missing fields, extra fields, or wrong value shapes).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A file could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace ivbfwn
