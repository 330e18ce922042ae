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

#include <doctest.h>

#include "netgame/errors.hpp"
#include "netgame/number.hpp"

using namespace netgame;

TEST_SUITE("number") {

TEST_CASE("parse_number") {
  CHECK(parse_number("15") == 15);
  CHECK(parse_number("-4") == -4);
  CHECK(parse_number("0.6") == Number(3, 5));
  CHECK(parse_number("-2.5e-1") == Number(-1, 4));
  CHECK(parse_number("8/15") == Number(8, 15));
  CHECK(parse_number(" 1e2 ") == 100);
  CHECK_THROWS_AS(parse_number(""), FormatError);
  CHECK_THROWS_AS(parse_number("abc"), FormatError);
  CHECK_THROWS_AS(parse_number("1/0"), FormatError);
  CHECK_THROWS_AS(parse_number("0.6x"), FormatError);
}

TEST_CASE("conversions") {
  CHECK(from_double(0.1) == Number(1, 10));
  CHECK(from_double(0.6) == Number(3, 5));
  CHECK(to_string(Number(8, 15)) == "8/15");
  CHECK(to_string(Number(50)) == "50");
  CHECK(to_double(Number(1, 4)) == 0.25);
  CHECK(pow(Number(2, 3), 3) == Number(8, 27));
  CHECK(pow(Number(5), 0) == 1);
  CHECK(is_integer(Number(4)));
  CHECK_FALSE(is_integer(Number(1, 2)));
}

}  // TEST_SUITE
