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

#include "netgame/number.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "netgame/errors.hpp"

namespace netgame {
namespace {

using boost::multiprecision::cpp_int;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

cpp_int pow10(unsigned exponent) {
  cpp_int result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

Number parse_decimal(std::string_view text, std::string_view original) {
  auto fail = [&]() -> Number {
    throw FormatError("not a number: '" + std::string(original) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  cpp_int digits = 0;
  int scale = 0;
  bool any_digit = false;
  while (pos < text.size() && is_digit(text[pos])) {
    digits = digits * 10 + (text[pos] - '0');
    any_digit = true;
    ++pos;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && is_digit(text[pos])) {
      digits = digits * 10 + (text[pos] - '0');
      --scale;
      any_digit = true;
      ++pos;
    }
  }
  if (!any_digit) return fail();
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    int exp_value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), exp_value);
    if (ec != std::errc() || ptr == text.data() + pos) return fail();
    pos = static_cast<std::size_t>(ptr - text.data());
    if (exp_value > 4000 || exp_value < -4000) return fail();
    scale += exp_value;
  }
  if (pos != text.size()) return fail();
  Number result = scale >= 0 ? Number(digits * pow10(static_cast<unsigned>(scale)))
                             : Number(digits, pow10(static_cast<unsigned>(-scale)));
  return negative ? Number(-result) : result;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  return text;
}

}  // namespace

Number parse_number(std::string_view text) {
  const std::string_view trimmed = trim(text);
  const auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) return parse_decimal(trimmed, text);
  const Number numerator = parse_decimal(trim(trimmed.substr(0, slash)), text);
  const Number denominator = parse_decimal(trim(trimmed.substr(slash + 1)), text);
  if (denominator == 0) throw FormatError("zero denominator: '" + std::string(text) + "'");
  return numerator / denominator;
}

Number from_double(double value) {
  if (!std::isfinite(value)) throw FormatError("non-finite value");
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) throw FormatError("cannot format value");
  return parse_decimal(std::string_view(buffer, static_cast<std::size_t>(ptr - buffer)),
                       std::string_view(buffer, static_cast<std::size_t>(ptr - buffer)));
}

std::string to_string(const Number& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Number& value) { return value.convert_to<double>(); }

Number pow(const Number& base, unsigned exponent) {
  Number result = 1;
  Number factor = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

bool is_integer(const Number& value) { return boost::multiprecision::denominator(value) == 1; }

}  // namespace netgame
