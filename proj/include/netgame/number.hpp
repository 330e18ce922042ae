// Copyright 2026 The netgame Authors
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

#ifndef NETGAME_NUMBER_HPP_
#define NETGAME_NUMBER_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace netgame {

// All payoffs, parameters and discount factors are exact rationals, so
// equilibrium and threshold comparisons never depend on rounding.
using Number = boost::multiprecision::cpp_rational;

// Accepts integers ("15"), decimals ("0.6", "-2.5e-1") and fractions
// ("8/15"). Decimals are converted to the rational they denote, so "0.6"
// is exactly 3/5. Throws FormatError on anything else.
Number parse_number(std::string_view text);

// Rational denoted by the shortest decimal representation of `value`
// (0.1 -> 1/10). Use Number(value) for the exact binary value instead.
Number from_double(double value);

// "8/15", "50", "-4".
std::string to_string(const Number& value);

double to_double(const Number& value);

Number pow(const Number& base, unsigned exponent);

bool is_integer(const Number& value);

}  // namespace netgame

#endif  // NETGAME_NUMBER_HPP_
