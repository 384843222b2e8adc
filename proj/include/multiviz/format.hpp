// Copyright 2026 The Multiviz Authors
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

// Number formatting shared by CSV, JSON and SVG writers. Every writer goes
// through these so that CLI and server output agree digit for digit.

#ifndef MULTIVIZ_FORMAT_HPP_
#define MULTIVIZ_FORMAT_HPP_

#include <optional>
#include <string>

namespace multiviz {

// "%.6f"
std::string format_fixed6(double v);
// "%.10g": at most 10 significant digits.
std::string format_sig10(double v);
// format_sig10, or the empty string for an absent value.
std::string format_sig10(const std::optional<double>& v);
// Round-trip precision ("%.17g").
std::string format_exact(double v);
// SVG coordinates: "%.3f" with negative zero normalised.
std::string format_coord(double v);

// v rounded to 10 significant digits (the value format_sig10 prints).
double round_sig10(double v);

}  // namespace multiviz

#endif  // MULTIVIZ_FORMAT_HPP_
