// Copyright 2026 The sparsecce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPARSECCE_RATIONAL_HPP_
#define SPARSECCE_RATIONAL_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sparsecce {

// Arbitrary-precision rational. All evaluators in the library are exact.
using Rational = mpq_class;

// Accepts "p/q", "p", and plain decimals such as "-0.125" (converted exactly,
// so "0.1" is 1/10). Throws ParseError on anything else.
Rational ParseRational(std::string_view text);

// Canonical "num/den" form; the denominator is always written, "3/1".
std::string FormatRational(const Rational& value);

// Exact conversion: every finite double is a dyadic rational.
Rational FromDouble(double value);

inline double ToDouble(const Rational& value) { return value.get_d(); }

// Square root when the argument is the square of a rational, else nullopt.
std::optional<Rational> ExactSqrt(const Rational& value);

Rational Sum(const std::vector<Rational>& values);

}  // namespace sparsecce

#endif  // SPARSECCE_RATIONAL_HPP_
