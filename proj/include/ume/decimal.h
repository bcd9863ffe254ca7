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

#ifndef UME_DECIMAL_H_
#define UME_DECIMAL_H_

#include <optional>
#include <string>
#include <string_view>

namespace ume {

// Shortest decimal string that parses back to exactly `value` (at most 17
// significant digits).
std::string FormatDecimal(double value);

// Strict parse of the whole string; nullopt on any trailing garbage.
std::optional<double> ParseDecimal(std::string_view text);

// Fixed number of significant digits, for human-readable output.
std::string FormatSignificant(double value, int digits);

}  // namespace ume

#endif  // UME_DECIMAL_H_
