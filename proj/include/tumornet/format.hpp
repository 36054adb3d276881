// Copyright 2026 The tumornet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>

namespace tumornet {

// Locale-independent fixed notation.
std::string format_fixed(double value, int decimals = 6);

// Shortest text that parses back to exactly `value`.
std::string format_shortest(double value);

// Whole-string parses; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_int(std::string_view text);
std::optional<unsigned long long> parse_uint(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace tumornet
