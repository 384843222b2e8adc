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


// Command-line front end.
//
//   multiviz stats|metrics|correlate|merge|sweep|layout|render|serve <input>
//   multiviz generate
//
// "-" names standard input/output. Exit status: 0 success, 1 usage error,
// 2 data error.

#ifndef MULTIVIZ_CLI_HPP_
#define MULTIVIZ_CLI_HPP_

#include <iosfwd>
#include <span>
#include <string>

namespace multiviz {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// `args` excludes the program name.
int run_cli(std::span<const std::string> args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace multiviz

#endif  // MULTIVIZ_CLI_HPP_
