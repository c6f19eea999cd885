// Copyright 2026 The Authors.
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

#ifndef KSUB_TEXT_H_
#define KSUB_TEXT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ksub {

// Shortest decimal form that parses back to the same double.
std::string FormatDouble(double v);

// Splits on runs of whitespace and commas.
std::vector<std::string_view> SplitFields(std::string_view line);

// Strips a '#' comment and surrounding whitespace.
std::string_view StripComment(std::string_view line);

std::optional<double> ParseDouble(std::string_view s);
std::optional<long long> ParseInt(std::string_view s);

}  // namespace ksub

#endif  // KSUB_TEXT_H_
