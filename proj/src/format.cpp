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

#include "multiviz/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace multiviz {

namespace {

std::string printf_double(const char* fmt, double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, fmt, v);
  return std::string(buf, static_cast<std::size_t>(n));
}

}  // namespace

std::string format_fixed6(double v) { return printf_double("%.6f", v); }

std::string format_sig10(double v) { return printf_double("%.10g", v); }

std::string format_sig10(const std::optional<double>& v) {
  return v ? format_sig10(*v) : std::string();
}

std::string format_exact(double v) { return printf_double("%.17g", v); }

std::string format_coord(double v) {
  std::string s = printf_double("%.3f", v);
  if (s == "-0.000") s = "0.000";
  return s;
}

double round_sig10(double v) { return std::strtod(format_sig10(v).c_str(), nullptr); }

}  // namespace multiviz
